#include "nagaolab/amalgam.hpp"

namespace nagaolab {

  namespace {
    void require_structure(AmalgamStructure const& s, NormalForm const& x) {
      if (x.structure != s.id()) {
        throw DomainError("normal form over '" + x.structure
                          + "' used with structure '" + s.id() + "'");
      }
    }

    int tag(Factor f) {
      return static_cast<int>(f);
    }
  }  // namespace

  CosetDecomposition AmalgamStructure::checked_decompose(Factor f, SL2 const& g) const {
    CosetDecomposition dec = decompose(f, g);
    if (!_verify) {
      return dec;
    }
    if (!in_subgroup(dec.subgroup_part)) {
      throw InternalInconsistency(id() + ": transversal A-part "
                                  + to_string(dec.subgroup_part.matrix())
                                  + " is not in the amalgamated subgroup");
    }
    SL2 product = dec.subgroup_part;
    if (dec.representative) {
      if (in_subgroup(*dec.representative)) {
        throw InternalInconsistency(id() + ": coset representative "
                                    + to_string(dec.representative->matrix())
                                    + " lies in the amalgamated subgroup");
      }
      product = product * *dec.representative;
    }
    if (!(product == g)) {
      throw InternalInconsistency(id() + ": transversal decomposition of "
                                  + to_string(g.matrix()) + " is not exact");
    }
    return dec;
  }

  NormalForm identity_normal_form(AmalgamStructure const& s) {
    return NormalForm{s.id(), SL2::identity(s.ring()), {}};
  }

  NormalForm prepend(AmalgamStructure const& s, Letter const& letter, NormalForm x) {
    require_structure(s, x);
    if (letter.element.ring() != s.ring()) {
      throw RingMismatch(s.id() + ": letter over " + letter.element.ring().name());
    }
    if (!s.in_factor(letter.factor, letter.element)) {
      throw InvalidLetter(s.id() + ": " + to_string(letter.element.matrix())
                          + " is not in factor " + std::to_string(tag(letter.factor)));
    }
    // letter * head lies in the letter's factor since the head lies in A;
    // merge with the first tail letter when that comes from the same factor.
    SL2  h     = letter.element * x.head;
    auto first = x.tail.begin();
    if (first != x.tail.end() && first->factor == letter.factor) {
      h = h * first->element;
      ++first;
    }
    CosetDecomposition dec = s.checked_decompose(letter.factor, h);

    NormalForm result{x.structure, std::move(dec.subgroup_part), {}};
    result.tail.reserve(x.tail.end() - first + 1);
    if (dec.representative) {
      result.tail.push_back(Letter{letter.factor, std::move(*dec.representative)});
    }
    result.tail.insert(result.tail.end(), first, x.tail.end());
    return result;
  }

  NormalForm normalize(AmalgamStructure const& s, Word const& w) {
    NormalForm x = identity_normal_form(s);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      x = prepend(s, *it, std::move(x));
    }
    return x;
  }

  NormalForm nf_multiply(AmalgamStructure const& s, NormalForm const& x, NormalForm const& y) {
    require_structure(s, x);
    require_structure(s, y);
    Word const w = word_of(x);
    NormalForm result = y;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result = prepend(s, *it, std::move(result));
    }
    return result;
  }

  NormalForm nf_invert(AmalgamStructure const& s, NormalForm const& x) {
    require_structure(s, x);
    Word w;
    w.reserve(x.tail.size() + 1);
    for (auto it = x.tail.rbegin(); it != x.tail.rend(); ++it) {
      w.push_back(Letter{it->factor, it->element.inverse()});
    }
    w.push_back(Letter{Factor::one, x.head.inverse()});
    return normalize(s, w);
  }

  SL2 nf_evaluate(AmalgamStructure const& s, NormalForm const& x) {
    require_structure(s, x);
    SL2 result = x.head;
    for (auto const& l : x.tail) {
      result = result * l.element;
    }
    return result;
  }

  Word word_of(NormalForm const& x) {
    Word w;
    w.reserve(x.tail.size() + 1);
    if (!x.head.matrix().is_identity()) {
      w.push_back(Letter{Factor::one, x.head});
    }
    w.insert(w.end(), x.tail.begin(), x.tail.end());
    return w;
  }

  SL2 evaluate(Word const& w, Ring ring) {
    SL2 result = SL2::identity(ring);
    for (auto const& l : w) {
      result = result * l.element;
    }
    return result;
  }

  void check_normal_form(AmalgamStructure const& s, NormalForm const& x) {
    require_structure(s, x);
    if (!s.in_subgroup(x.head)) {
      throw InternalInconsistency("normal form head is not in the amalgamated subgroup");
    }
    for (std::size_t j = 0; j < x.tail.size(); ++j) {
      Letter const& l = x.tail[j];
      if (!s.in_factor(l.factor, l.element)) {
        throw InternalInconsistency("tail letter " + std::to_string(j)
                                    + " is not in its factor");
      }
      if (s.in_subgroup(l.element)) {
        throw InternalInconsistency("tail letter " + std::to_string(j)
                                    + " lies in the amalgamated subgroup");
      }
      if (j > 0 && x.tail[j - 1].factor == l.factor) {
        throw InternalInconsistency("tail letters " + std::to_string(j - 1) + " and "
                                    + std::to_string(j) + " come from the same factor");
      }
      CosetDecomposition const dec = s.decompose(l.factor, l.element);
      if (!dec.subgroup_part.matrix().is_identity() || !dec.representative
          || !(*dec.representative == l.element)) {
        throw InternalInconsistency("tail letter " + std::to_string(j)
                                    + " is not a canonical coset representative");
      }
    }
  }

}  // namespace nagaolab
