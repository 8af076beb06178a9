#include "nagaolab/nagao.hpp"

#include <utility>

namespace nagaolab {

  namespace {
    Poly constant(Ring ring, mpz_class c) {
      return Poly::constant(ring, std::move(c));
    }

    // [[0, -1], [1, e]]
    SL2 swap_representative(Ring ring, mpz_class e) {
      return SL2(Mat2(Poly(ring), constant(ring, -1), Poly::one(ring), constant(ring, std::move(e))));
    }

    SL2 e12(Poly f) {
      return Generator::e12(std::move(f)).element();
    }

    // b = [[u, f], [0, u^-1]] = [[u, f(0)], [0, u^-1]] * E12(u^-1 (f - f(0))).
    CosetDecomposition decompose_upper(SL2 const& b) {
      Mat2 const& m    = b.matrix();
      Ring const  ring = m.ring();
      Poly const  f0   = constant(ring, m.b().constant_term());
      Poly const  rest = m.d() * (m.b() - f0);
      SL2         head(Mat2(m.a(), f0, Poly(ring), m.d()));
      if (rest.is_zero()) {
        return {std::move(head), std::nullopt};
      }
      return {std::move(head), e12(rest)};
    }

    void require_det_one(Mat2 const& m, char const* op) {
      if (!m.det().is_one()) {
        throw NotSpecialLinear(std::string(op) + ": determinant of "
                               + to_string(m) + " is " + to_string(m.det()));
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // NagaoStructureFp
  ////////////////////////////////////////////////////////////////////////

  NagaoStructureFp::NagaoStructureFp(std::uint64_t p) : _ring(Ring::mod(p)) {}

  std::string NagaoStructureFp::id() const {
    return "nagao-" + _ring.name();
  }

  Ring NagaoStructureFp::ring() const {
    return _ring;
  }

  bool NagaoStructureFp::in_subgroup(SL2 const& g) const {
    return g.ring() == _ring && g.matrix().is_constant() && g.matrix().is_upper_triangular();
  }

  bool NagaoStructureFp::in_factor(Factor f, SL2 const& g) const {
    if (g.ring() != _ring) {
      return false;
    }
    return f == Factor::one ? g.matrix().is_constant() : g.matrix().is_upper_triangular();
  }

  CosetDecomposition NagaoStructureFp::decompose(Factor f, SL2 const& g) const {
    if (f == Factor::two) {
      return decompose_upper(g);
    }
    Mat2 const& m = g.matrix();
    if (m.is_upper_triangular()) {
      return {g, std::nullopt};
    }
    // Bottom row (c, d) ~ (1, d/c) under the left action of B(F_p).
    std::uint64_t const p = prime();
    mpz_class const     e = reduce_residue(m.d().constant_term() * inverse_mod(m.c().constant_term(), p), p);
    SL2                 s = swap_representative(_ring, e);
    SL2                 a = g * s.inverse();
    return {std::move(a), std::move(s)};
  }

  ////////////////////////////////////////////////////////////////////////
  // E2ZtStructure
  ////////////////////////////////////////////////////////////////////////

  std::string E2ZtStructure::id() const {
    return "e2zt";
  }

  Ring E2ZtStructure::ring() const {
    return Ring::integers();
  }

  bool E2ZtStructure::in_subgroup(SL2 const& g) const {
    return g.ring().is_integers() && g.matrix().is_constant()
           && g.matrix().is_upper_triangular();
  }

  bool E2ZtStructure::in_factor(Factor f, SL2 const& g) const {
    if (!g.ring().is_integers()) {
      return false;
    }
    // det = 1 and c = 0 force the diagonal to be +-1 constants.
    return f == Factor::one ? g.matrix().is_constant() : g.matrix().is_upper_triangular();
  }

  CosetDecomposition E2ZtStructure::decompose(Factor f, SL2 const& g) const {
    if (f == Factor::two) {
      return decompose_upper(g);
    }
    Mat2 const& m = g.matrix();
    if (m.is_upper_triangular()) {
      return {g, std::nullopt};
    }
    Ring const ring = Ring::integers();
    mpz_class  c    = m.c().constant_term();
    mpz_class  d    = m.d().constant_term();
    if (c < 0) {
      c = -c;
      d = -d;
    }
    // x d - y c = 1 with 0 <= x < c.
    mpz_class x = 0;
    if (c != 1) {
      mpz_invert(x.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    mpz_class y = (x * d - 1);
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), c.get_mpz_t());
    SL2 s(Mat2(constant(ring, x), constant(ring, y), constant(ring, c), constant(ring, d)));
    SL2 a = g * s.inverse();
    return {std::move(a), std::move(s)};
  }

  E2ZtStructure const& e2zt_structure() {
    static E2ZtStructure const s;
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elementary factorizations
  ////////////////////////////////////////////////////////////////////////

  Mat2 product(GeneratorWord const& w, Ring ring) {
    Mat2 result = Mat2::identity(ring);
    for (auto const& g : w) {
      result = result * g.matrix();
    }
    return result;
  }

  namespace {
    void verify_factorization(GeneratorWord const& w, Mat2 const& m, char const* op) {
      if (!(product(w, m.ring()) == m)) {
        throw InternalInconsistency(std::string(op) + ": factorization of "
                                    + to_string(m) + " does not multiply back");
      }
    }
  }  // namespace

  GeneratorWord sl2z_factor(Mat2 const& m) {
    if (!m.ring().is_integers() || !m.is_constant()) {
      throw DomainError("sl2z_factor: expected a constant integer matrix, got "
                        + to_string(m));
    }
    require_det_one(m, "sl2z_factor");
    Ring const ring = Ring::integers();

    // m = (recorded generators) * cur throughout; generators act on the rows
    // of cur from the left.
    GeneratorWord out;
    Mat2          cur = m;
    auto const    val = [](Poly const& f) { return f.constant_term(); };
    auto const    is_unit = [](mpz_class const& v) { return v == 1 || v == -1; };
    while (!cur.c().is_zero()) {
      mpz_class const a = val(cur.a());
      mpz_class const c = val(cur.c());
      if (a == 0) {
        // cur = W * (W^-1 cur), and W^-1 cur is upper triangular.
        out.push_back(Generator::w(ring));
        cur = inverse_sl2(Generator::w(ring).matrix()) * cur;
        break;
      }
      if (is_unit(a)) {
        mpz_class const q = c * a;
        out.push_back(Generator::e21(constant(ring, q)));
        cur = Generator::e21(constant(ring, -q)).matrix() * cur;
        break;
      }
      if (is_unit(c)) {
        mpz_class const q = (a - 1) * c;
        out.push_back(Generator::e12(constant(ring, q)));
        cur = Generator::e12(constant(ring, -q)).matrix() * cur;
        continue;
      }
      mpz_class q;
      if (abs(a) >= abs(c)) {
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        out.push_back(Generator::e12(constant(ring, q)));
        cur = Generator::e12(constant(ring, -q)).matrix() * cur;
      } else {
        mpz_tdiv_q(q.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
        out.push_back(Generator::e21(constant(ring, q)));
        cur = Generator::e21(constant(ring, -q)).matrix() * cur;
      }
    }
    // cur = [[u, b], [0, u]] with u = +-1.
    mpz_class const u = val(cur.a());
    mpz_class const b = val(cur.b());
    if (u == -1) {
      out.push_back(Generator::w(ring));
      out.push_back(Generator::w(ring));
    }
    if (b != 0) {
      out.push_back(Generator::e12(constant(ring, u * b)));
    }
    verify_factorization(out, m, "sl2z_factor");
    return out;
  }

  GeneratorWord sl2fpt_elementary_factor(Mat2 const& m) {
    Ring const ring = m.ring();
    if (!ring.is_field()) {
      throw DomainError("sl2fpt_elementary_factor: expected F_p[t] entries, got "
                        + ring.name());
    }
    require_det_one(m, "sl2fpt_elementary_factor");
    std::uint64_t const p = ring.modulus();

    GeneratorWord out;
    Mat2          cur = m;
    while (!cur.c().is_zero()) {
      Poly const& a = cur.a();
      Poly const& c = cur.c();
      if (a.is_unit()) {
        Poly const q = c.scaled(inverse_mod(a.constant_term(), p));
        out.push_back(Generator::e21(q));
        cur = Generator::e21(-q).matrix() * cur;
        break;
      }
      if (c.is_unit()) {
        Poly const q = (a - Poly::one(ring)).scaled(inverse_mod(c.constant_term(), p));
        out.push_back(Generator::e12(q));
        cur = Generator::e12(-q).matrix() * cur;
        continue;
      }
      if (a.degree() >= c.degree()) {
        Poly const q = divmod(a, c).quotient;
        out.push_back(Generator::e12(q));
        cur = Generator::e12(-q).matrix() * cur;
      } else {
        Poly const q = divmod(c, a).quotient;
        out.push_back(Generator::e21(q));
        cur = Generator::e21(-q).matrix() * cur;
      }
    }
    // cur = [[u, b], [0, u^-1]] = Diag(u) * E12(u^-1 b).
    Coeff const u(ring, cur.a().constant_term());
    if (!cur.a().is_one()) {
      out.push_back(Generator::diag(u));
    }
    if (!cur.b().is_zero()) {
      out.push_back(Generator::e12(cur.d() * cur.b()));
    }
    verify_factorization(out, m, "sl2fpt_elementary_factor");
    return out;
  }

  Word classify(GeneratorWord const& w) {
    Word out;
    out.reserve(w.size());
    for (auto const& g : w) {
      Ring const ring = g.ring();
      switch (g.kind()) {
        case Generator::Kind::e12:
          out.push_back(Letter{Factor::two, g.element()});
          break;
        case Generator::Kind::e21: {
          SL2 const wgen = Generator::w(ring).element();
          out.push_back(Letter{Factor::one, wgen.inverse()});
          out.push_back(Letter{Factor::two, e12(-g.parameter())});
          out.push_back(Letter{Factor::one, wgen});
          break;
        }
        case Generator::Kind::diag:
        case Generator::Kind::w:
          out.push_back(Letter{Factor::one, g.element()});
          break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms in SL2(F_p[t])
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_structure_ring(NagaoStructureFp const& s, Mat2 const& m) {
      if (m.ring() != s.ring()) {
        throw RingMismatch(s.id() + ": matrix over " + m.ring().name());
      }
    }
  }  // namespace

  NormalForm nagao_nf_via_factorization(NagaoStructureFp const& s, Mat2 const& m) {
    require_structure_ring(s, m);
    return normalize(s, classify(sl2fpt_elementary_factor(m)));
  }

  NormalForm nagao_nf_via_degree_reduction(NagaoStructureFp const& s, Mat2 const& m) {
    require_structure_ring(s, m);
    require_det_one(m, "nagao_nf_via_degree_reduction");
    Ring const          ring = s.ring();
    std::uint64_t const p    = s.prime();

    // x * (collected letters, in reverse) = m throughout.
    SL2                 x(m);
    std::vector<Letter> peeled;
    while (true) {
      Poly const& c = x.matrix().c();
      Poly const& d = x.matrix().d();
      if (c.is_zero()) {
        CosetDecomposition dec = s.checked_decompose(Factor::two, x);
        if (dec.representative) {
          peeled.push_back(Letter{Factor::two, *dec.representative});
        }
        x = dec.subgroup_part;
        break;
      }
      if (d.degree() > c.degree()) {
        // Strip the part of d/c without constant term into E12(f).
        Poly const q = divmod(d, c).quotient;
        Poly const f = q - Poly::constant(ring, q.constant_term());
        SL2 const  s_two = e12(f);
        peeled.push_back(Letter{Factor::two, s_two});
        x = x * s_two.inverse();
      } else {
        // Right multiplication by [[0, -1], [1, e]]^-1 sends the bottom row
        // to (c e - d, c); pick e so that deg(c e - d) < deg c.
        mpz_class e = 0;
        if (d.degree() == c.degree()) {
          e = reduce_residue(d.leading() * inverse_mod(c.leading(), p), p);
        }
        SL2 const s_one = swap_representative(ring, e);
        peeled.push_back(Letter{Factor::one, s_one});
        x = x * s_one.inverse();
      }
    }
    return NormalForm{s.id(), std::move(x), {peeled.rbegin(), peeled.rend()}};
  }

  NormalForm nagao_normal_form(NagaoStructureFp const& s, Mat2 const& m) {
    NormalForm via_factor = nagao_nf_via_factorization(s, m);
    NormalForm via_degree = nagao_nf_via_degree_reduction(s, m);
    if (!(via_factor == via_degree)) {
      throw InternalInconsistency(s.id() + ": the two normal form algorithms disagree on "
                                  + to_string(m));
    }
    return via_factor;
  }

  NormalForm nagao_normal_form(std::uint64_t p, Mat2 const& m) {
    return nagao_normal_form(NagaoStructureFp(p), m);
  }

  ////////////////////////////////////////////////////////////////////////
  // E2(Z[t]) and the reductions phi_p
  ////////////////////////////////////////////////////////////////////////

  NormalForm e2zt_normal_form(Word const& w) {
    return normalize(e2zt_structure(), w);
  }

  Word reduce_word_mod(Word const& w, std::uint64_t p) {
    Word out;
    out.reserve(w.size());
    for (auto const& l : w) {
      out.push_back(Letter{l.factor, SL2(reduce_mod(l.element.matrix(), p))});
    }
    return out;
  }

  PhiResult phi_p(Word const& w, std::uint64_t p) {
    E2ZtStructure const& source = e2zt_structure();
    for (auto const& l : w) {
      if (!source.in_factor(l.factor, l.element)) {
        throw InvalidLetter("phi_p: " + to_string(l.element.matrix())
                            + " is not in factor " + std::to_string(static_cast<int>(l.factor))
                            + " of E2(Z[t])");
      }
    }
    NagaoStructureFp const target(p);
    Mat2 reduced = reduce_mod(evaluate(w, Ring::integers()).matrix(), p);
    NormalForm letterwise = normalize(target, reduce_word_mod(w, p));
    if (!(letterwise == nagao_normal_form(target, reduced))) {
      throw InternalInconsistency("phi_p: letterwise image and reduced matrix "
                                  "have different normal forms");
    }
    return {std::move(reduced), std::move(letterwise)};
  }

  Word lift_generator(Generator const& g) {
    Ring const ring = g.ring();
    if (!ring.is_field()) {
      throw DomainError("lift_generator: expected a generator over F_p");
    }
    std::uint64_t const p  = ring.modulus();
    Ring const          zz = Ring::integers();
    Poly const          f(zz, g.parameter().coeffs());
    switch (g.kind()) {
      case Generator::Kind::e12:
        return classify({Generator::e12(f)});
      case Generator::Kind::e21:
        return classify({Generator::e21(f)});
      case Generator::Kind::w:
        return classify({Generator::w(zz)});
      case Generator::Kind::diag: {
        // [[u, p], [p j, v]] with v = u^-1 mod p and u v - p^2 j = 1.
        mpz_class const P = static_cast<unsigned long>(p);
        mpz_class const u = g.parameter().constant_term();
        mpz_class       v = inverse_mod(u, p);
        mpz_class       k = (u * v - 1) / P;
        mpz_class const shift = reduce_residue(-k * inverse_mod(u, p), p);
        v += shift * P;
        k = (u * v - 1) / P;
        mpz_class const j = k / P;
        Mat2 const lifted(constant(zz, u), constant(zz, P), constant(zz, P * j), constant(zz, v));
        return {Letter{Factor::one, SL2(lifted)}};
      }
    }
    throw InternalInconsistency("unknown generator kind");
  }

  Word lift_to_e2zt(Mat2 const& m) {
    Word out;
    for (auto const& g : sl2fpt_elementary_factor(m)) {
      Word const piece = lift_generator(g);
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
  }

}  // namespace nagaolab
