#ifndef NAGAOLAB_TESTS_SUPPORT_HPP_
#define NAGAOLAB_TESTS_SUPPORT_HPP_

// Random inputs and a deliberately naive oracle for polynomial matrices,
// shared by the unit tests and the acceptance runner.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "nagaolab/amalgam.hpp"
#include "nagaolab/nagao.hpp"

namespace testsupport {

  using namespace nagaolab;

  using Rng = std::mt19937_64;

  inline long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  // Degree at most max_deg; over Z coefficients in [-bound, bound].
  inline Poly random_poly(Rng& rng, Ring ring, std::size_t max_deg, long bound = 5) {
    std::size_t const      deg = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_deg)));
    std::vector<mpz_class> c(deg + 1);
    for (auto& x : c) {
      x = ring.is_field() ? uniform(rng, 0, static_cast<long>(ring.modulus()) - 1) : uniform(rng, -bound, bound);
    }
    return Poly(ring, std::move(c));
  }

  inline Poly random_t_poly(Rng& rng, Ring ring, std::size_t max_deg, long bound = 5) {
    Poly f = random_poly(rng, ring, max_deg, bound);
    return f - Poly::constant(ring, f.constant_term());
  }

  inline Coeff random_unit(Rng& rng, Ring ring) {
    if (ring.is_integers()) {
      return Coeff(ring, uniform(rng, 0, 1) ? 1 : -1);
    }
    return Coeff(ring, uniform(rng, 1, static_cast<long>(ring.modulus()) - 1));
  }

  inline Generator random_generator(Rng& rng, Ring ring, std::size_t max_deg) {
    switch (uniform(rng, 0, 3)) {
      case 0:
        return Generator::e12(random_poly(rng, ring, max_deg));
      case 1:
        return Generator::e21(random_poly(rng, ring, max_deg));
      case 2:
        return Generator::diag(random_unit(rng, ring));
      default:
        return Generator::w(ring);
    }
  }

  inline GeneratorWord random_generator_word(Rng& rng, Ring ring, std::size_t max_len, std::size_t max_deg) {
    GeneratorWord w;
    std::size_t const len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
    for (std::size_t k = 0; k < len; ++k) {
      w.push_back(random_generator(rng, ring, max_deg));
    }
    return w;
  }

  // A random letter of SL2(R) * B(R[t]) for R = F_p or Z: factor one gets an
  // SL2(R) element built from constant generators, factor two an element
  // of B(R[t]).
  inline Letter random_letter(Rng& rng, Ring ring, std::size_t max_deg) {
    if (uniform(rng, 0, 1) == 0) {
      SL2 g = SL2::identity(ring);
      for (long k = uniform(rng, 1, 3); k > 0; --k) {
        g = g * random_generator(rng, ring, 0).element();
      }
      return Letter{Factor::one, g};
    }
    Coeff const u = random_unit(rng, ring);
    Mat2 const  b(Poly::constant(ring, u.value()),
                 random_poly(rng, ring, max_deg),
                 Poly(ring),
                 Poly::constant(ring, u.inverse().value()));
    return Letter{Factor::two, SL2(b)};
  }

  inline Word random_word(Rng& rng, Ring ring, std::size_t max_len, std::size_t max_deg) {
    Word              w;
    std::size_t const len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
    for (std::size_t k = 0; k < len; ++k) {
      w.push_back(random_letter(rng, ring, max_deg));
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracle: dense coefficient vectors, schoolbook products, no shared code
  // with the library beyond reading coefficients out.
  ////////////////////////////////////////////////////////////////////////

  struct OraclePoly {
    std::vector<mpz_class> c;  // may carry trailing zeros
  };

  using OracleMat = std::array<OraclePoly, 4>;

  inline mpz_class oracle_reduce(mpz_class v, std::uint64_t p) {
    if (p == 0) {
      return v;
    }
    mpz_class const m = static_cast<unsigned long>(p);
    v %= m;
    if (v < 0) {
      v += m;
    }
    return v;
  }

  inline OraclePoly oracle_add(OraclePoly const& x, OraclePoly const& y, std::uint64_t p) {
    OraclePoly out;
    out.c.resize(std::max(x.c.size(), y.c.size()));
    for (std::size_t k = 0; k < out.c.size(); ++k) {
      mpz_class s = 0;
      if (k < x.c.size()) {
        s += x.c[k];
      }
      if (k < y.c.size()) {
        s += y.c[k];
      }
      out.c[k] = oracle_reduce(s, p);
    }
    return out;
  }

  inline OraclePoly oracle_mul(OraclePoly const& x, OraclePoly const& y, std::uint64_t p) {
    OraclePoly out;
    if (x.c.empty() || y.c.empty()) {
      return out;
    }
    out.c.assign(x.c.size() + y.c.size() - 1, 0);
    for (std::size_t i = 0; i < x.c.size(); ++i) {
      for (std::size_t j = 0; j < y.c.size(); ++j) {
        out.c[i + j] += x.c[i] * y.c[j];
      }
    }
    for (auto& v : out.c) {
      v = oracle_reduce(v, p);
    }
    return out;
  }

  inline OracleMat oracle_of(Mat2 const& m) {
    return {OraclePoly{m.a().coeffs()}, OraclePoly{m.b().coeffs()}, OraclePoly{m.c().coeffs()},
            OraclePoly{m.d().coeffs()}};
  }

  inline OracleMat oracle_mat_mul(OracleMat const& x, OracleMat const& y, std::uint64_t p) {
    return {oracle_add(oracle_mul(x[0], y[0], p), oracle_mul(x[1], y[2], p), p),
            oracle_add(oracle_mul(x[0], y[1], p), oracle_mul(x[1], y[3], p), p),
            oracle_add(oracle_mul(x[2], y[0], p), oracle_mul(x[3], y[2], p), p),
            oracle_add(oracle_mul(x[2], y[1], p), oracle_mul(x[3], y[3], p), p)};
  }

  inline OracleMat oracle_identity() {
    return {OraclePoly{{1}}, OraclePoly{}, OraclePoly{}, OraclePoly{{1}}};
  }

  inline bool oracle_equal(OraclePoly const& x, Poly const& f) {
    std::size_t const n = std::max(x.c.size(), f.coeffs().size());
    for (std::size_t k = 0; k < n; ++k) {
      mpz_class const u = k < x.c.size() ? x.c[k] : mpz_class(0);
      mpz_class const v = k < f.coeffs().size() ? f.coeffs()[k] : mpz_class(0);
      if (u != v) {
        return false;
      }
    }
    return true;
  }

  inline bool oracle_equal(OracleMat const& x, Mat2 const& m) {
    return oracle_equal(x[0], m.a()) && oracle_equal(x[1], m.b()) && oracle_equal(x[2], m.c())
           && oracle_equal(x[3], m.d());
  }

  // Left-to-right fold of the letters through the oracle.
  inline OracleMat oracle_product(Word const& w, std::uint64_t p) {
    OracleMat acc = oracle_identity();
    for (auto const& l : w) {
      acc = oracle_mat_mul(acc, oracle_of(l.element.matrix()), p);
    }
    return acc;
  }

  inline OracleMat oracle_product(GeneratorWord const& w, std::uint64_t p) {
    OracleMat acc = oracle_identity();
    for (auto const& g : w) {
      acc = oracle_mat_mul(acc, oracle_of(g.matrix()), p);
    }
    return acc;
  }

}  // namespace testsupport

#endif  // NAGAOLAB_TESTS_SUPPORT_HPP_
