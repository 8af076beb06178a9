#ifndef NAGAOLAB_WITNESSES_HPP_
#define NAGAOLAB_WITNESSES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "amalgam.hpp"
#include "homology.hpp"

namespace nagaolab {

  // The explicit integer matrices
  //   h_{p,k} = [[1 + p t^k, t^{3k}], [p^3, 1 - p t^k + p^2 t^{2k}]]
  //   g_{p,k} = [[1, -t^k], [-p, 1 + p t^k]]
  //   x_k     = [[1, t^k], [0, 1]]
  //   n_{p,k} = [[0, -t^k], [-p, p t^k]]  (= g_{p,k} - I)
  struct WitnessId {
    enum class Kind { h, g, x, n };

    Kind          kind;
    std::uint64_t prime = 0;  // ignored for x
    std::size_t   index = 1;
  };

  std::string to_string(WitnessId const& id);

  // Throws DomainError for p < 2 (h, g, n) or k < 1.
  Mat2 make_witness(WitnessId const& id);

  // g_{p,k} = E21(-p) E12(-t^k) and x_k = E12(t^k) as E2(Z[t]) words.
  // Throws DomainError for h and n, which are not given as words.
  Word witness_word(WitnessId const& id);

  // Class of E12(f), f(0) = 0, in the summand t F_p[t] of H_1. Throws
  // DomainError for any other matrix.
  WedgeClass h1_class_of_translation(Mat2 const& m);

  enum class CheckStatus { pass, fail, informational };

  std::string_view to_string(CheckStatus s) noexcept;

  struct CheckItem {
    std::string id;
    std::string statement;
    std::string reference;
    CheckStatus status = CheckStatus::fail;
    std::string lhs;
    std::string rhs;
  };

  struct CheckReport {
    std::vector<CheckItem> items;

    // Informational items never count.
    bool all_asserted_pass() const noexcept;

    std::size_t count(CheckStatus s) const noexcept;
  };

  struct IndexRange {
    std::uint64_t first = 1;
    std::uint64_t last  = 1;
  };

  // For every prime p and k, l in the ranges: determinants of h, g, x, n;
  // g_{p,k}^-1 g_{p,l} = E12(t^k - t^l); g_{p,k} not unipotent and x_k
  // unipotent; pi_p(g_{p,k}) = x_k^-1 decided both by matrix and by normal
  // form equality; phi_p of the word for g_{p,k}. The comparison of
  // pi_p(h_{p,k}) with pi_p(x_k) and pi_p(x_{3k}) is informational.
  // Non-prime p in the range are skipped.
  CheckReport verify_witness_suite(IndexRange primes, IndexRange ks);

  // p in {2, 3}: pi_p(g_{p,k}) pi_p(x_k) = I, and the resulting cancellation
  // of H_1 classes; pi_p(g_{p,k}) pi_p(h_{p,k}) against I (informational).
  CheckReport kernel_combination_check(std::uint64_t p, std::size_t k);

}  // namespace nagaolab

#endif  // NAGAOLAB_WITNESSES_HPP_
