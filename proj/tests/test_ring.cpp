#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "nagaolab/ring.hpp"
#include "support.hpp"

using namespace nagaolab;
using testsupport::random_poly;
using testsupport::Rng;

namespace {
  Ring const zz = Ring::integers();

  Poly P(std::string_view s, Ring r = zz) {
    return parse_poly(s, r);
  }

  // Every tuple in {1..p-1}^n, with the subset-sum test done by looping over
  // all 2^n - 1 masks.
  bool brute_force_sn(std::uint64_t p, std::size_t n) {
    std::vector<std::uint64_t> a(n, 1);
    while (true) {
      bool ok = true;
      for (std::uint64_t mask = 1; ok && mask < (std::uint64_t(1) << n); ++mask) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (mask >> j & 1) {
            s += a[j];
          }
        }
        ok = s % p != 0;
      }
      if (ok) {
        return true;
      }
      std::size_t j = 0;
      while (j < n && a[j] == p - 1) {
        a[j++] = 1;
      }
      if (j == n) {
        return false;
      }
      ++a[j];
    }
  }
}  // namespace

TEST_CASE("primality by trial division") {
  std::set<std::uint64_t> const small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t n = 0; n < 50; ++n) {
    CHECK(is_prime(n) == (small.count(n) == 1));
  }
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1000000007ULL * 3));
  CHECK_THROWS_AS(Ring::mod(4), DomainError);
  CHECK_THROWS_AS(Ring::mod(1), DomainError);
}

TEST_CASE("coefficients") {
  Ring const f7 = Ring::mod(7);
  Coeff const c(f7, -1);
  CHECK(c.value() == 6);
  CHECK((c * c.inverse()).value() == 1);
  CHECK(Coeff(zz, -1).is_unit());
  CHECK_FALSE(Coeff(zz, 2).is_unit());
  CHECK_THROWS_AS(Coeff(zz, 2).inverse(), DomainError);
  CHECK_THROWS_AS(Coeff(f7, 0).inverse(), DomainError);
  CHECK_THROWS_AS(Coeff(f7, 1) + Coeff(Ring::mod(5), 1), RingMismatch);
}

TEST_CASE("degree of zero is a marker") {
  CHECK(Poly(zz).degree().is_neg_infinity());
  CHECK_THROWS_AS(Poly(zz).degree().value(), DomainError);
  CHECK(Poly(zz).degree() < Degree(0));
  CHECK((Poly(zz).degree() + Degree(3)).is_neg_infinity());
  CHECK(P("t^3").degree() == Degree(3));
}

TEST_CASE("multiplication examples") {
  CHECK(P("1 + t") * P("1 - t") == P("1 - t^2"));
  CHECK((Poly(zz) * P("3 + t^5")).is_zero());
  Ring const f2 = Ring::mod(2);
  CHECK(P("t + 1", f2) * P("t^2 + t + 1", f2) == P("t^3 + 1", f2));
}

TEST_CASE("division examples") {
  Ring const f2 = Ring::mod(2);
  auto const [q1, r1] = divmod(P("t^3 + 1", f2), P("t + 1", f2));
  CHECK(q1 == P("t^2 + t + 1", f2));
  CHECK(r1.is_zero());

  Ring const f5 = Ring::mod(5);
  auto const [q2, r2] = divmod(P("t", f5), P("t^2", f5));
  CHECK(q2.is_zero());
  CHECK(r2 == P("t", f5));

  auto const [q3, r3] = divmod(P("t^2 + 1", f5), P("t + 2", f5));
  CHECK(q3 == P("t + 3", f5));
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(divmod(P("t"), P("t")), DomainError);
  CHECK_THROWS_AS(divmod(P("t", f5), Poly(f5)), DomainError);
}

TEST_CASE("reduction mod p examples") {
  CHECK(reduce_mod(P("1 + 2*t"), 2) == Poly::one(Ring::mod(2)));
  CHECK(reduce_mod(P("8"), 2).is_zero());
  CHECK(reduce_mod(P("1 - 2*t + 4*t^2"), 2) == Poly::one(Ring::mod(2)));
  CHECK(reduce_mod(P("-1"), 5) == Poly::constant(Ring::mod(5), 4));
  CHECK_THROWS_AS(reduce_mod(P("t", Ring::mod(3)), 3), RingMismatch);
}

TEST_CASE("parse and format") {
  CHECK(P("1 - 2*t + t^2").coeffs() == std::vector<mpz_class>{1, -2, 1});
  CHECK(P("t^3").coeffs() == std::vector<mpz_class>{0, 0, 0, 1});
  CHECK(P("0").coeffs().empty());
  CHECK(to_string(P("0")) == "0");
  CHECK(to_string(P("1 - 2*t + t^2")) == "1 - 2*t + t^2");
  CHECK(to_string(P("  t^2+t  ")) == "t + t^2");
  CHECK(to_string(P("-t")) == "-t");
  CHECK(P("t + t") == P("2*t"));
  CHECK(P("5*t", Ring::mod(5)).is_zero());
  CHECK(P("123456789012345678901234567890*t").leading() == mpz_class("123456789012345678901234567890"));

  for (char const* bad : {"", "t^", "2*", "1 +", "t^-1", "x", "2t", "t**2", "--1", "1 2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
}

TEST_CASE("parse of format is the identity") {
  Rng rng(11);
  for (Ring r : {zz, Ring::mod(2), Ring::mod(5), Ring::mod(7)}) {
    for (int k = 0; k < 200; ++k) {
      Poly const f = random_poly(rng, r, 8, 1000);
      CAPTURE(to_string(f));
      CHECK(parse_poly(to_string(f), r) == f);
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(12);
  for (Ring r : {zz, Ring::mod(2), Ring::mod(3), Ring::mod(5)}) {
    Poly const zero(r), one = Poly::one(r);
    for (int k = 0; k < 200; ++k) {
      Poly const a = random_poly(rng, r, 6), b = random_poly(rng, r, 6), c = random_poly(rng, r, 6);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK((a - a).is_zero());
      CHECK(a + (-a) == zero);
      if (!a.is_zero() && !b.is_zero()) {
        CHECK((a * b).degree() == a.degree() + b.degree());
      }
    }
  }
}

TEST_CASE("division with remainder on random pairs") {
  Rng rng(13);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Ring const r = Ring::mod(p);
    for (int k = 0; k < 300; ++k) {
      Poly const a = random_poly(rng, r, 9);
      Poly const b = random_poly(rng, r, 5);
      if (b.is_zero()) {
        continue;
      }
      auto const [q, rem] = divmod(a, b);
      CHECK(q * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("reduction mod p is a ring homomorphism") {
  Rng rng(14);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int k = 0; k < 200; ++k) {
      Poly const a = random_poly(rng, zz, 6, 50), b = random_poly(rng, zz, 6, 50);
      CHECK(reduce_mod(a + b, p) == reduce_mod(a, p) + reduce_mod(b, p));
      CHECK(reduce_mod(a * b, p) == reduce_mod(a, p) * reduce_mod(b, p));
    }
  }
}

TEST_CASE("mixing rings is rejected") {
  CHECK_THROWS_AS(P("t") + P("t", Ring::mod(3)), RingMismatch);
  CHECK_THROWS_AS(P("t", Ring::mod(2)) * P("t", Ring::mod(3)), RingMismatch);
}

TEST_CASE("S(n) witness examples") {
  SnWitness const w32 = sn_witness_search(3, 2);
  REQUIRE(w32.exists());
  CHECK(*w32.residues == std::vector<std::uint64_t>{1, 1});
  CHECK_FALSE(sn_witness_search(3, 3).exists());
  SnWitness const w21 = sn_witness_search(2, 1);
  REQUIRE(w21.exists());
  CHECK(*w21.residues == std::vector<std::uint64_t>{1});
}

TEST_CASE("S(n) search agrees with brute force") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::size_t n = 1; n <= p; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      SnWitness const w = sn_witness_search(p, n);
      CHECK(w.exists() == brute_force_sn(p, n));
      if (w.exists()) {
        auto const& a = *w.residues;
        REQUIRE(a.size() == n);
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
          std::uint64_t s = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (mask >> j & 1) {
              s += a[j];
            }
          }
          CHECK(s % p != 0);
        }
      }
    }
  }
}

TEST_CASE("S(p-1) but not S(p) for p <= 11") {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    CAPTURE(p);
    if (p > 2) {
      CHECK(sn_witness_search(p, p - 1).exists());
    }
    CHECK_FALSE(sn_witness_search(p, p).exists());
  }
}

TEST_CASE("S(n) search caps") {
  CHECK_THROWS_AS(sn_witness_search(37, 2), CapExceeded);
  CHECK_THROWS_AS(sn_witness_search(5, 6), CapExceeded);
  CHECK_THROWS_AS(sn_witness_search(4, 2), DomainError);
  SnSearchLimits tiny;
  tiny.max_nodes = 3;
  CHECK_THROWS_AS(sn_witness_search(11, 11, tiny), CapExceeded);
}
