#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nagaolab/nagao.hpp"
#include "nagaolab/witnesses.hpp"
#include "support.hpp"

using namespace nagaolab;

namespace {
  Ring const zz = Ring::integers();

  CheckItem const& item(CheckReport const& r, std::string const& id) {
    for (auto const& c : r.items) {
      if (c.id == id) {
        return c;
      }
    }
    FAIL("missing check item " << id);
    throw;
  }
}  // namespace

TEST_CASE("witness matrices") {
  CHECK(make_witness({WitnessId::Kind::h, 2, 1}) == parse_matrix("[[1 + 2*t, t^3],[8, 1 - 2*t + 4*t^2]]"));
  CHECK(make_witness({WitnessId::Kind::g, 3, 2}) == parse_matrix("[[1, -t^2],[-3, 1 + 3*t^2]]"));
  CHECK(make_witness({WitnessId::Kind::x, 0, 4}) == parse_matrix("[[1, t^4],[0, 1]]"));
  CHECK(make_witness({WitnessId::Kind::n, 5, 1}) == parse_matrix("[[0, -t],[-5, 5*t]]"));
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(make_witness({WitnessId::Kind::n, p, k})
            == make_witness({WitnessId::Kind::g, p, k}) - Mat2::identity(zz));
      CHECK(evaluate(witness_word({WitnessId::Kind::g, p, k}), zz).matrix()
            == make_witness({WitnessId::Kind::g, p, k}));
      CHECK(evaluate(witness_word({WitnessId::Kind::x, 0, k}), zz).matrix()
            == make_witness({WitnessId::Kind::x, 0, k}));
    }
  }
  CHECK(to_string(WitnessId{WitnessId::Kind::h, 3, 2}) == "h_{3,2}");
  CHECK(to_string(WitnessId{WitnessId::Kind::x, 0, 2}) == "x_2");
  CHECK_THROWS_AS(make_witness({WitnessId::Kind::g, 1, 1}), DomainError);
  CHECK_THROWS_AS(make_witness({WitnessId::Kind::x, 0, 0}), DomainError);
  CHECK_THROWS_AS(witness_word({WitnessId::Kind::h, 2, 1}), DomainError);
}

TEST_CASE("witness suite over p <= 7, k, l <= 4") {
  CheckReport const r = verify_witness_suite({2, 7}, {1, 4});
  CHECK(r.all_asserted_pass());
  CHECK(r.count(CheckStatus::fail) == 0);
  // per (p, k): 4 determinants, 2 unipotence, 2 reductions, 2 informational;
  // per (p, k, l): 1 coset identity
  CHECK(r.count(CheckStatus::informational) == 4 * 4 * 2);
  CHECK(r.count(CheckStatus::pass) == 4 * 4 * 8 + 4 * 16);
  for (auto const& c : r.items) {
    CAPTURE(c.id);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.reference.empty());
  }
  // non-primes in the range are skipped
  CHECK(verify_witness_suite({4, 4}, {1, 1}).items.empty());
}

TEST_CASE("reduction of h_{p,k} lands on x_{3k}") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    CheckReport const r = verify_witness_suite({p, p}, {1, 3});
    for (std::size_t k = 1; k <= 3; ++k) {
      std::string const h = to_string(WitnessId{WitnessId::Kind::h, p, k});
      CheckItem const&  xk = item(r, "reduce:" + h + "~x_" + std::to_string(k));
      CheckItem const&  x3 = item(r, "reduce:" + h + "~x_" + std::to_string(3 * k));
      CHECK(xk.status == CheckStatus::informational);
      CHECK(x3.status == CheckStatus::informational);
      CHECK(xk.statement.find("does not hold") != std::string::npos);
      CHECK(x3.statement.find(": holds") != std::string::npos);
      Mat2 const ph = reduce_mod(make_witness({WitnessId::Kind::h, p, k}), p);
      CHECK(ph == reduce_mod(make_witness({WitnessId::Kind::x, 0, 3 * k}), p));
      CHECK(nagao_normal_form(p, ph) == nagao_normal_form(p, reduce_mod(make_witness({WitnessId::Kind::x, 0, 3 * k}), p)));
    }
  }
}

TEST_CASE("coset identity for every pair") {
  for (std::uint64_t p : {2, 3}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      for (std::size_t l = 1; l <= 4; ++l) {
        Mat2 const lhs = inverse_sl2(make_witness({WitnessId::Kind::g, p, k})) * make_witness({WitnessId::Kind::g, p, l});
        CHECK(lhs == Generator::e12(Poly::t_power(zz, k) - Poly::t_power(zz, l)).matrix());
      }
    }
  }
}

TEST_CASE("translation classes") {
  Ring const       f3 = Ring::mod(3);
  WedgeClass const c  = h1_class_of_translation(parse_matrix("[[1, 2*t + t^3],[0, 1]]", f3));
  CHECK(c.coefficient(WedgeMonomial({1})) == 2);
  CHECK(c.coefficient(WedgeMonomial({3})) == 1);
  CHECK(c.terms().size() == 2);
  CHECK_THROWS_AS(h1_class_of_translation(parse_matrix("[[1, 1 + t],[0, 1]]", f3)), DomainError);
  CHECK_THROWS_AS(h1_class_of_translation(parse_matrix("[[1, 0],[t, 1]]", f3)), DomainError);
}

TEST_CASE("kernel combinations") {
  for (std::uint64_t p : {2, 3}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      CheckReport const r = kernel_combination_check(p, k);
      CHECK(r.all_asserted_pass());
      CHECK(item(r, "kernel:g*x").status == CheckStatus::pass);
      CHECK(item(r, "kernel:h1").status == CheckStatus::pass);
      CHECK(item(r, "kernel:g*h").status == CheckStatus::informational);
      CHECK(item(r, "kernel:g3k*h").statement.find(": holds") != std::string::npos);
      // pi(g) pi(h) = E12(t^{3k} - t^k), which is not the identity
      Mat2 const gh = reduce_mod(make_witness({WitnessId::Kind::g, p, k}) * make_witness({WitnessId::Kind::h, p, k}), p);
      CHECK(gh == Generator::e12(Poly::t_power(Ring::mod(p), 3 * k) - Poly::t_power(Ring::mod(p), k)).matrix());
    }
  }
  CHECK_THROWS_AS(kernel_combination_check(5, 1), DomainError);
}
