#ifndef NAGAOLAB_HOMOLOGY_HPP_
#define NAGAOLAB_HOMOLOGY_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace nagaolab {

  ////////////////////////////////////////////////////////////////////////
  // Wedge classes
  ////////////////////////////////////////////////////////////////////////

  // t^{l_1} ^ ... ^ t^{l_i} with 1 <= l_1 < ... < l_i. The empty monomial is
  // the unit in degree 0.
  class WedgeMonomial {
   public:
    WedgeMonomial() = default;

    // Throws DomainError unless strictly increasing and positive.
    explicit WedgeMonomial(std::vector<unsigned> exponents);

    std::vector<unsigned> const& exponents() const noexcept {
      return _exponents;
    }

    std::size_t degree() const noexcept {
      return _exponents.size();
    }

    auto operator<=>(WedgeMonomial const&) const = default;

   private:
    std::vector<unsigned> _exponents;
  };

  // Sorts the factors t^{l_1}, ..., t^{l_i} (given in any order) into a
  // monomial. sign is 0 when a factor repeats, else the sign of the sorting
  // permutation.
  struct SignedMonomial {
    int           sign = 0;
    WedgeMonomial monomial;
  };

  SignedMonomial wedge_of(std::vector<unsigned> factors);

  // Finite linear combination of wedge monomials with coefficients in Z or
  // F_p. Zero coefficients are never stored.
  class WedgeClass {
   public:
    explicit WedgeClass(Ring ring = Ring::integers()) : _ring(ring) {}

    static WedgeClass monomial(Ring ring, WedgeMonomial m, mpz_class c = 1);

    Ring ring() const noexcept {
      return _ring;
    }

    std::map<WedgeMonomial, mpz_class> const& terms() const noexcept {
      return _terms;
    }

    bool is_zero() const noexcept {
      return _terms.empty();
    }

    mpz_class coefficient(WedgeMonomial const& m) const;

    WedgeClass& add_term(WedgeMonomial const& m, mpz_class const& c);

    WedgeClass scaled(mpz_class const& c) const;

    friend WedgeClass operator+(WedgeClass const& x, WedgeClass const& y);
    friend WedgeClass operator-(WedgeClass const& x, WedgeClass const& y);

    friend bool operator==(WedgeClass const&, WedgeClass const&) = default;

   private:
    Ring                               _ring;
    std::map<WedgeMonomial, mpz_class> _terms;
  };

  // Bilinear extension of the monomial wedge product. Throws RingMismatch.
  WedgeClass wedge_product(WedgeClass const& x, WedgeClass const& y);

  // Reduction of coefficients mod p on integral classes; monomial labels are
  // unchanged. Throws DomainError unless p is prime, RingMismatch unless x
  // is integral.
  WedgeClass phi_star_class(WedgeClass const& x, std::uint64_t p);

  std::string to_string(WedgeClass const& x);

  // 2 * 3 * (every prime 5 <= q <= prime_bound with (q - 1)/2 dividing the
  // degree of x). Only a divisibility bound for the order of the class,
  // never its exact order.
  std::uint64_t class_order_lower_bound(WedgeMonomial const& x, std::uint64_t prime_bound = 7);

  ////////////////////////////////////////////////////////////////////////
  // Dimension counting
  ////////////////////////////////////////////////////////////////////////

  // Throws CapExceeded on 64-bit overflow.
  std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

  // dim of the i-th exterior power of an n-dimensional space.
  std::uint64_t dim_exterior(std::uint64_t n, std::size_t i);

  // Divided power algebra on n generators of degree 2 (gamma_m in degree
  // 2m): zero in odd degree, multisets of size i/2 in even degree.
  std::uint64_t dim_divided_power(std::uint64_t n, std::size_t i);

  // Degree i part of the exterior algebra on `wedge` degree one generators
  // tensored with the divided power algebra on `divided` degree two
  // generators.
  std::uint64_t dim_exterior_divided(std::uint64_t wedge, std::uint64_t divided, std::size_t i);

  // A basis element of the exterior algebra tensor divided power algebra on
  // n generators v_0, ..., v_{n-1}. The units of F_p act on each generator
  // by alpha^2, so the monomial has weight 2 * (wedge factors) + 2 * (sum of
  // divided power exponents).
  struct WeightedMonomial {
    // Indices of the exterior factors, strictly increasing.
    std::vector<unsigned> wedge;
    // (generator index, m) for the factors gamma_m(v), m >= 1, by index.
    std::vector<std::pair<unsigned, unsigned>> divided;

    std::size_t degree() const noexcept;
    std::size_t weight() const noexcept;
  };

  // Every WeightedMonomial of homological degree i on n generators.
  std::vector<WeightedMonomial> weighted_monomials(std::size_t n, std::size_t i);

  ////////////////////////////////////////////////////////////////////////
  // Graded dimension tables
  ////////////////////////////////////////////////////////////////////////

  // Groups whose F_p-homology is tabulated. All polynomial parts are
  // truncated to degree <= d.
  enum class GroupId {
    t_zt,          // t Z[t], additive
    t_fpt,         // t F_p[t], additive
    b_z,           // B(Z) = Z/2 x Z
    b_zt,          // B(Z[t]) = B(Z) x t Z[t]
    b_fp,          // B(F_p)
    b_fpt,         // B(F_p[t])
    sl2_z,         // SL2(Z), through its abelianization Z/12
    e2_zt,         // E2(Z[t])
    sl2_fpt_quot,  // H(B(F_p[t]))/H(B(F_p)) summand of H(SL2(F_p[t])), p = 2, 3
  };

  std::string_view to_string(GroupId g) noexcept;

  // Inverse of to_string; throws DomainError on unknown names.
  GroupId parse_group_id(std::string_view name);

  std::vector<GroupId> const& all_groups();

  // dim H_i(group, F_p) with polynomial parts truncated at degree d.
  // Throws Unsupported for (group, p) combinations not computed here.
  std::uint64_t h_dims(GroupId g, std::uint64_t p, std::size_t i, std::size_t d);

  // Annotations that travel with a table: e.g. that a summand is left
  // uncomputed.
  std::vector<std::string> table_flags(GroupId g, std::uint64_t p);

  struct GradedDimTable {
    GroupId                    group;
    std::uint64_t              prime;
    std::size_t                truncation;
    std::vector<std::uint64_t> dims;  // indexed by homological degree
    std::vector<std::string>   flags;
  };

  GradedDimTable h_table(GroupId g, std::uint64_t p, std::size_t max_i, std::size_t d);

  // Degreewise convolution, i.e. the Kuenneth formula over a field.
  std::vector<std::uint64_t> kunneth(std::vector<std::uint64_t> const& x,
                                     std::vector<std::uint64_t> const& y);

  enum class CoinvariantBasis {
    full,    // t^0, ..., t^d
    t_part,  // t^1, ..., t^d
  };

  enum class CoinvariantPart {
    full,   // exterior tensor divided powers
    wedge,  // exterior part only
  };

  // dim of the F_p^x-coinvariants of H_i(R, F_p), R = F_p[t] truncated at
  // degree d, for the action alpha: x -> alpha^2 x. The action is diagonal
  // on WeightedMonomials, so this counts monomials of weight divisible by
  // p - 1.
  std::uint64_t coinvariant_dims(std::uint64_t    p,
                                 std::size_t      i,
                                 std::size_t      d,
                                 CoinvariantBasis basis = CoinvariantBasis::full,
                                 CoinvariantPart  part  = CoinvariantPart::full);

  // One degree of the dimension identity coming from the short exact
  // sequences 0 -> H_i(B(Z)) -> H_i(B(Z[t])) + H_i(SL2(Z)) -> H_i(E2(Z[t])) -> 0.
  // The B(Z[t]) term is assembled by Kuenneth from B(Z) and t Z[t].
  struct LedgerReport {
    std::uint64_t prime = 0;
    std::size_t   degree = 0;
    std::size_t   truncation = 0;
    std::uint64_t e2_zt = 0;
    std::uint64_t b_zt = 0;
    std::uint64_t sl2_z = 0;
    std::uint64_t b_z = 0;

    bool holds() const noexcept {
      return e2_zt + b_z == b_zt + sl2_z;
    }
  };

  LedgerReport mv_ledger_check(std::uint64_t p, std::size_t i, std::size_t d);

}  // namespace nagaolab

#endif  // NAGAOLAB_HOMOLOGY_HPP_
