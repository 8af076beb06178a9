#include "nagaolab/witnesses.hpp"

#include <algorithm>

#include "nagaolab/nagao.hpp"

namespace nagaolab {

  std::string to_string(WitnessId const& id) {
    std::string const k = std::to_string(id.index);
    std::string const p = std::to_string(id.prime);
    switch (id.kind) {
      case WitnessId::Kind::h:
        return "h_{" + p + "," + k + "}";
      case WitnessId::Kind::g:
        return "g_{" + p + "," + k + "}";
      case WitnessId::Kind::x:
        return "x_" + k;
      case WitnessId::Kind::n:
        return "n_{" + p + "," + k + "}";
    }
    return "?";
  }

  namespace {
    void validate(WitnessId const& id) {
      if (id.index < 1) {
        throw DomainError(to_string(id) + ": index must be >= 1");
      }
      if (id.kind != WitnessId::Kind::x && id.prime < 2) {
        throw DomainError(to_string(id) + ": p must be >= 2");
      }
    }
  }  // namespace

  Mat2 make_witness(WitnessId const& id) {
    validate(id);
    Ring const        zz = Ring::integers();
    std::size_t const k  = id.index;
    mpz_class const   p  = static_cast<unsigned long>(id.prime);
    Poly const        one = Poly::one(zz);
    Poly const        tk  = Poly::t_power(zz, k);
    switch (id.kind) {
      case WitnessId::Kind::h:
        return Mat2(one + tk.scaled(p),
                    Poly::t_power(zz, 3 * k),
                    Poly::constant(zz, p * p * p),
                    one - tk.scaled(p) + Poly::monomial(zz, p * p, 2 * k));
      case WitnessId::Kind::g:
        return Mat2(one, -tk, Poly::constant(zz, -p), one + tk.scaled(p));
      case WitnessId::Kind::x:
        return Mat2(one, tk, Poly(zz), one);
      case WitnessId::Kind::n:
        return Mat2(Poly(zz), -tk, Poly::constant(zz, -p), tk.scaled(p));
    }
    throw InternalInconsistency("unknown witness kind");
  }

  Word witness_word(WitnessId const& id) {
    validate(id);
    Ring const zz = Ring::integers();
    Poly const tk = Poly::t_power(zz, id.index);
    switch (id.kind) {
      case WitnessId::Kind::g:
        return classify({Generator::e21(Poly::constant(zz, -mpz_class(static_cast<unsigned long>(id.prime)))),
                         Generator::e12(-tk)});
      case WitnessId::Kind::x:
        return classify({Generator::e12(tk)});
      default:
        throw DomainError(to_string(id) + " is not available as an E2(Z[t]) word");
    }
  }

  WedgeClass h1_class_of_translation(Mat2 const& m) {
    Ring const ring = m.ring();
    if (!(m.a().is_one() && m.d().is_one() && m.c().is_zero())
        || m.b().constant_term() != 0) {
      throw DomainError("h1_class_of_translation: " + to_string(m)
                        + " is not E12(f) with f(0) = 0");
    }
    WedgeClass out(ring);
    auto const& coeffs = m.b().coeffs();
    for (unsigned j = 1; j < coeffs.size(); ++j) {
      out.add_term(WedgeMonomial({j}), coeffs[j]);
    }
    return out;
  }

  std::string_view to_string(CheckStatus s) noexcept {
    switch (s) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail";
      case CheckStatus::informational:
        return "informational";
    }
    return "?";
  }

  bool CheckReport::all_asserted_pass() const noexcept {
    return std::none_of(items.begin(), items.end(), [](CheckItem const& c) {
      return c.status == CheckStatus::fail;
    });
  }

  std::size_t CheckReport::count(CheckStatus s) const noexcept {
    return std::count_if(items.begin(), items.end(), [s](CheckItem const& c) {
      return c.status == s;
    });
  }

  namespace {
    CheckStatus asserted(bool ok) {
      return ok ? CheckStatus::pass : CheckStatus::fail;
    }

    WitnessId h(std::uint64_t p, std::size_t k) {
      return {WitnessId::Kind::h, p, k};
    }
    WitnessId g(std::uint64_t p, std::size_t k) {
      return {WitnessId::Kind::g, p, k};
    }
    WitnessId x(std::size_t k) {
      return {WitnessId::Kind::x, 0, k};
    }
    WitnessId n(std::uint64_t p, std::size_t k) {
      return {WitnessId::Kind::n, p, k};
    }

    // Equality in SL2(F_p[t]) decided twice, by matrices and by normal
    // forms; the two must agree.
    bool equal_in_sl2fpt(NagaoStructureFp const& s, Mat2 const& u, Mat2 const& v) {
      bool const by_matrix = u == v;
      bool const by_nf     = nagao_normal_form(s, u) == nagao_normal_form(s, v);
      if (by_matrix != by_nf) {
        throw InternalInconsistency("matrix equality and normal form equality disagree on "
                                    + to_string(u) + " and " + to_string(v));
      }
      return by_matrix;
    }

    void check_determinants(CheckReport& r, std::uint64_t p, std::size_t k) {
      for (WitnessId const& id : {h(p, k), g(p, k), x(k)}) {
        Poly const det = make_witness(id).det();
        r.items.push_back({"det:" + to_string(id),
                           "det " + to_string(id) + " = 1",
                           "witness determinants",
                           asserted(det.is_one()),
                           to_string(det),
                           "1"});
      }
      Poly const det      = make_witness(n(p, k)).det();
      Poly const expected = Poly::monomial(Ring::integers(), -mpz_class(static_cast<unsigned long>(p)), k);
      r.items.push_back({"det:" + to_string(n(p, k)),
                         "det " + to_string(n(p, k)) + " = -p t^k, not 1",
                         "n_{p,k} is not in SL2",
                         asserted(det == expected && !det.is_one()),
                         to_string(det),
                         to_string(expected)});
    }

    void check_unipotence(CheckReport& r, std::uint64_t p, std::size_t k) {
      bool const ug = is_unipotent(make_witness(g(p, k)));
      r.items.push_back({"unipotent:" + to_string(g(p, k)),
                         to_string(g(p, k)) + " is not unipotent",
                         "g_{p,k} not unipotent",
                         asserted(!ug),
                         ug ? "unipotent" : "not unipotent",
                         "not unipotent"});
      bool const ux = is_unipotent(make_witness(x(k)));
      r.items.push_back({"unipotent:" + to_string(x(k)),
                         to_string(x(k)) + " is unipotent",
                         "x_k unipotent",
                         asserted(ux),
                         ux ? "unipotent" : "not unipotent",
                         "unipotent"});
    }

    void check_reductions(CheckReport& r, NagaoStructureFp const& s, std::uint64_t p, std::size_t k) {
      Mat2 const pg     = reduce_mod(make_witness(g(p, k)), p);
      Mat2 const xk_inv = reduce_mod(inverse_sl2(make_witness(x(k))), p);
      r.items.push_back({"reduce:" + to_string(g(p, k)),
                         "pi_p(" + to_string(g(p, k)) + ") = x_" + std::to_string(k) + "^-1",
                         "reduction of g_{p,k}",
                         asserted(equal_in_sl2fpt(s, pg, xk_inv)),
                         to_string(pg),
                         to_string(xk_inv)});

      PhiResult const phi      = phi_p(witness_word(g(p, k)), p);
      NormalForm const expect = normalize(s, {Letter{Factor::two, SL2(xk_inv)}});
      r.items.push_back({"phi:" + to_string(g(p, k)),
                         "phi_p(E21(-p) E12(-t^k)) has normal form x_k^-1",
                         "reduction of g_{p,k}",
                         asserted(phi.matrix == xk_inv && phi.normal_form == expect
                                  && phi.normal_form.length() == 1),
                         to_string(phi.matrix),
                         to_string(xk_inv)});

      Mat2 const ph = reduce_mod(make_witness(h(p, k)), p);
      for (std::size_t target : {k, 3 * k}) {
        Mat2 const px    = reduce_mod(make_witness(x(target)), p);
        bool const equal = equal_in_sl2fpt(s, ph, px);
        r.items.push_back({"reduce:" + to_string(h(p, k)) + "~" + to_string(x(target)),
                           "pi_p(" + to_string(h(p, k)) + ") = pi_p(" + to_string(x(target))
                               + "): " + (equal ? "holds" : "does not hold"),
                           "reduction of h_{p,k}",
                           CheckStatus::informational,
                           to_string(ph),
                           to_string(px)});
      }
    }

    void check_coset_lemma(CheckReport& r, std::uint64_t p, std::size_t k, std::size_t l) {
      Mat2 const lhs = inverse_sl2(make_witness(g(p, k))) * make_witness(g(p, l));
      Mat2 const rhs = Generator::e12(Poly::t_power(Ring::integers(), k)
                                      - Poly::t_power(Ring::integers(), l))
                           .matrix();
      r.items.push_back({"coset:" + to_string(g(p, k)) + "," + to_string(g(p, l)),
                         to_string(g(p, k)) + "^-1 " + to_string(g(p, l)) + " = E12(t^"
                             + std::to_string(k) + " - t^" + std::to_string(l) + ")",
                         "g_{p,k} coset lemma",
                         asserted(lhs == rhs),
                         to_string(lhs),
                         to_string(rhs)});
    }
  }  // namespace

  CheckReport verify_witness_suite(IndexRange primes, IndexRange ks) {
    if (ks.first < 1) {
      throw DomainError("witness indices start at 1");
    }
    CheckReport r;
    for (std::uint64_t p = primes.first; p <= primes.last; ++p) {
      if (!is_prime(p)) {
        continue;
      }
      NagaoStructureFp const s(p);
      for (std::uint64_t k = ks.first; k <= ks.last; ++k) {
        check_determinants(r, p, k);
        check_unipotence(r, p, k);
        check_reductions(r, s, p, k);
        for (std::uint64_t l = ks.first; l <= ks.last; ++l) {
          check_coset_lemma(r, p, k, l);
        }
      }
    }
    return r;
  }

  CheckReport kernel_combination_check(std::uint64_t p, std::size_t k) {
    if (p != 2 && p != 3) {
      throw DomainError("kernel_combination_check: p must be 2 or 3");
    }
    if (k < 1) {
      throw DomainError("kernel_combination_check: k must be >= 1");
    }
    NagaoStructureFp const s(p);
    Ring const             fp = s.ring();
    Mat2 const             id = Mat2::identity(fp);
    Mat2 const             pg = reduce_mod(make_witness(g(p, k)), p);
    Mat2 const             px = reduce_mod(make_witness(x(k)), p);
    Mat2 const             ph = reduce_mod(make_witness(h(p, k)), p);
    CheckReport            r;

    Mat2 const gx = pg * px;
    r.items.push_back({"kernel:g*x",
                       "pi_p(g_{p,k}) pi_p(x_k) = I",
                       "g_p + x_k in the kernel of pi_p",
                       asserted(equal_in_sl2fpt(s, gx, id)),
                       to_string(gx),
                       to_string(id)});

    WedgeClass const cg  = h1_class_of_translation(pg);
    WedgeClass const cx  = h1_class_of_translation(px);
    WedgeClass const sum = cg + cx;
    r.items.push_back({"kernel:h1",
                       "pi_p*(g_p) + pi_p*(x_k) = 0 in t F_p[t]",
                       "g_p + x_k in the kernel of pi_p",
                       asserted(sum.is_zero()),
                       to_string(cg) + " + " + to_string(cx),
                       "0"});

    Mat2 const gh = pg * ph;
    bool const gh_trivial = equal_in_sl2fpt(s, gh, id);
    r.items.push_back({"kernel:g*h",
                       std::string("pi_p(g_{p,k}) pi_p(h_{p,k}) = I: ")
                           + (gh_trivial ? "holds" : "does not hold"),
                       "g_p + h_{p,k} in the kernel of pi_p",
                       CheckStatus::informational,
                       to_string(gh),
                       to_string(id)});

    Mat2 const g3h = reduce_mod(make_witness(g(p, 3 * k)), p) * ph;
    bool const g3h_trivial = equal_in_sl2fpt(s, g3h, id);
    r.items.push_back({"kernel:g3k*h",
                       std::string("pi_p(g_{p,3k}) pi_p(h_{p,k}) = I: ")
                           + (g3h_trivial ? "holds" : "does not hold"),
                       "g_p + h_{p,k} in the kernel of pi_p",
                       CheckStatus::informational,
                       to_string(g3h),
                       to_string(id)});
    return r;
  }

}  // namespace nagaolab
