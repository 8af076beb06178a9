#ifndef NAGAOLAB_AMALGAM_HPP_
#define NAGAOLAB_AMALGAM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gl2.hpp"

namespace nagaolab {

  // Which factor of G1 *_A G2 a letter belongs to.
  enum class Factor : int { one = 1, two = 2 };

  inline Factor other(Factor f) noexcept {
    return f == Factor::one ? Factor::two : Factor::one;
  }

  // g = subgroup_part * representative, with subgroup_part in A and the
  // representative canonical for the right coset A*g. The representative
  // is absent exactly when g lies in A.
  struct CosetDecomposition {
    SL2                subgroup_part;
    std::optional<SL2> representative;
  };

  // Description of an amalgamated free product G1 *_A G2 whose elements are
  // 2x2 matrices. Subclasses supply membership tests and right transversals;
  // the normal form machinery below is generic.
  //
  // The coset convention is fixed to right cosets, g = a*s with a in A.
  class AmalgamStructure {
   public:
    virtual ~AmalgamStructure() = default;

    // Identifies the structure; normal forms carry it.
    virtual std::string id() const = 0;

    virtual Ring ring() const = 0;

    virtual bool in_subgroup(SL2 const& g) const = 0;

    virtual bool in_factor(Factor f, SL2 const& g) const = 0;

    // Precondition: in_factor(f, g).
    virtual CosetDecomposition decompose(Factor f, SL2 const& g) const = 0;

    // decompose(), followed (when enabled) by a check that the subgroup part
    // lies in A, the representative does not, and their product is g.
    // Throws InternalInconsistency if the check fails.
    CosetDecomposition checked_decompose(Factor f, SL2 const& g) const;

    bool verify_transversals() const noexcept {
      return _verify;
    }

    void verify_transversals(bool val) noexcept {
      _verify = val;
    }

   private:
#ifdef NDEBUG
    bool _verify = false;
#else
    bool _verify = true;
#endif
  };

  struct Letter {
    Factor factor;
    SL2    element;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  using Word = std::vector<Letter>;

  // head * tail[0] * ... * tail[n-1] with head in A, each tail letter a
  // canonical coset representative outside A, and consecutive tail letters
  // from different factors. Equality is structural; by uniqueness of normal
  // forms it coincides with equality of the represented group elements.
  struct NormalForm {
    std::string         structure;
    SL2                 head;
    std::vector<Letter> tail;

    std::size_t length() const noexcept {
      return tail.size();
    }

    friend bool operator==(NormalForm const&, NormalForm const&) = default;
  };

  NormalForm identity_normal_form(AmalgamStructure const& s);

  // Normal form of letter * x. Throws InvalidLetter if the letter fails its
  // factor's membership test.
  NormalForm prepend(AmalgamStructure const& s, Letter const& letter, NormalForm x);

  // Rewrites right to left: each letter is multiplied into the normal form
  // of the suffix to its right.
  NormalForm normalize(AmalgamStructure const& s, Word const& w);

  NormalForm nf_multiply(AmalgamStructure const& s, NormalForm const& x, NormalForm const& y);

  NormalForm nf_invert(AmalgamStructure const& s, NormalForm const& x);

  SL2 nf_evaluate(AmalgamStructure const& s, NormalForm const& x);

  inline std::size_t nf_length(NormalForm const& x) noexcept {
    return x.length();
  }

  // The head (tagged with factor one, omitted when trivial) followed by the
  // tail letters.
  Word word_of(NormalForm const& x);

  // Plain product of the letters; the identity over `ring` for the empty word.
  SL2 evaluate(Word const& w, Ring ring);

  // Throws InternalInconsistency naming the first violated normal form
  // invariant.
  void check_normal_form(AmalgamStructure const& s, NormalForm const& x);

}  // namespace nagaolab

#endif  // NAGAOLAB_AMALGAM_HPP_
