#include "nagaolab/homology.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace nagaolab {

  ////////////////////////////////////////////////////////////////////////
  // Wedge classes
  ////////////////////////////////////////////////////////////////////////

  WedgeMonomial::WedgeMonomial(std::vector<unsigned> exponents)
      : _exponents(std::move(exponents)) {
    for (std::size_t k = 0; k < _exponents.size(); ++k) {
      if (_exponents[k] == 0) {
        throw DomainError("wedge monomial exponents must be >= 1");
      }
      if (k > 0 && _exponents[k - 1] >= _exponents[k]) {
        throw DomainError("wedge monomial exponents must be strictly increasing");
      }
    }
  }

  SignedMonomial wedge_of(std::vector<unsigned> factors) {
    int sign = 1;
    // Insertion sort, counting transpositions.
    for (std::size_t k = 1; k < factors.size(); ++k) {
      for (std::size_t j = k; j > 0 && factors[j - 1] > factors[j]; --j) {
        std::swap(factors[j - 1], factors[j]);
        sign = -sign;
      }
    }
    if (std::adjacent_find(factors.begin(), factors.end()) != factors.end()) {
      return {0, WedgeMonomial()};
    }
    return {sign, WedgeMonomial(std::move(factors))};
  }

  WedgeClass WedgeClass::monomial(Ring ring, WedgeMonomial m, mpz_class c) {
    WedgeClass x(ring);
    x.add_term(m, c);
    return x;
  }

  mpz_class WedgeClass::coefficient(WedgeMonomial const& m) const {
    auto it = _terms.find(m);
    return it == _terms.end() ? mpz_class(0) : it->second;
  }

  WedgeClass& WedgeClass::add_term(WedgeMonomial const& m, mpz_class const& c) {
    mpz_class v = coefficient(m) + c;
    if (_ring.is_field()) {
      v = reduce_residue(v, _ring.modulus());
    }
    if (v == 0) {
      _terms.erase(m);
    } else {
      _terms[m] = std::move(v);
    }
    return *this;
  }

  WedgeClass WedgeClass::scaled(mpz_class const& c) const {
    WedgeClass out(_ring);
    for (auto const& [m, v] : _terms) {
      out.add_term(m, v * c);
    }
    return out;
  }

  WedgeClass operator+(WedgeClass const& x, WedgeClass const& y) {
    require_same_ring(x._ring, y._ring, "wedge class addition");
    WedgeClass out = x;
    for (auto const& [m, v] : y._terms) {
      out.add_term(m, v);
    }
    return out;
  }

  WedgeClass operator-(WedgeClass const& x, WedgeClass const& y) {
    return x + y.scaled(-1);
  }

  WedgeClass wedge_product(WedgeClass const& x, WedgeClass const& y) {
    require_same_ring(x.ring(), y.ring(), "wedge product");
    WedgeClass out(x.ring());
    for (auto const& [mx, cx] : x.terms()) {
      for (auto const& [my, cy] : y.terms()) {
        std::vector<unsigned> factors = mx.exponents();
        factors.insert(factors.end(), my.exponents().begin(), my.exponents().end());
        SignedMonomial const s = wedge_of(std::move(factors));
        if (s.sign != 0) {
          out.add_term(s.monomial, s.sign * cx * cy);
        }
      }
    }
    return out;
  }

  WedgeClass phi_star_class(WedgeClass const& x, std::uint64_t p) {
    Ring const target = Ring::mod(p);
    if (!x.ring().is_integers()) {
      throw RingMismatch("phi_star_class expects an integral class, got "
                         + x.ring().name());
    }
    WedgeClass out(target);
    for (auto const& [m, c] : x.terms()) {
      out.add_term(m, c);
    }
    return out;
  }

  std::string to_string(WedgeClass const& x) {
    if (x.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [m, c] : x.terms()) {
      bool const      negative = c < 0;
      mpz_class const mag      = abs(c);
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      first = false;
      std::string body;
      for (std::size_t k = 0; k < m.exponents().size(); ++k) {
        body += (k == 0 ? "t^" : " ^ t^") + std::to_string(m.exponents()[k]);
      }
      if (body.empty()) {
        out += mag.get_str();
      } else if (mag == 1) {
        out += "(" + body + ")";
      } else {
        out += mag.get_str() + "*(" + body + ")";
      }
    }
    return out;
  }

  std::uint64_t class_order_lower_bound(WedgeMonomial const& x, std::uint64_t prime_bound) {
    std::uint64_t const i     = x.degree();
    std::uint64_t       bound = 6;
    for (std::uint64_t q = 5; q <= prime_bound; ++q) {
      if (!is_prime(q) || i % ((q - 1) / 2) != 0) {
        continue;
      }
      if (bound > std::numeric_limits<std::uint64_t>::max() / q) {
        throw CapExceeded("class_order_lower_bound: overflow");
      }
      bound *= q;
    }
    return bound;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dimension counting
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t j = 1; j <= k; ++j) {
      r = r * (n - k + j) / j;
      if (r > std::numeric_limits<std::uint64_t>::max()) {
        throw CapExceeded("binomial(" + std::to_string(n) + ", " + std::to_string(k)
                          + ") overflows 64 bits");
      }
    }
    return static_cast<std::uint64_t>(r);
  }

  namespace {
    // Multisets of size j from n elements.
    std::uint64_t multisets(std::uint64_t n, std::uint64_t j) {
      if (j == 0) {
        return 1;
      }
      if (n == 0) {
        return 0;
      }
      return binomial(n + j - 1, j);
    }

    std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
      if (x > std::numeric_limits<std::uint64_t>::max() - y) {
        throw CapExceeded("dimension overflows 64 bits");
      }
      return x + y;
    }

    std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
      if (y != 0 && x > std::numeric_limits<std::uint64_t>::max() / y) {
        throw CapExceeded("dimension overflows 64 bits");
      }
      return x * y;
    }
  }  // namespace

  std::uint64_t dim_exterior(std::uint64_t n, std::size_t i) {
    return binomial(n, i);
  }

  std::uint64_t dim_divided_power(std::uint64_t n, std::size_t i) {
    return i % 2 == 1 ? 0 : multisets(n, i / 2);
  }

  std::uint64_t dim_exterior_divided(std::uint64_t wedge, std::uint64_t divided, std::size_t i) {
    std::uint64_t total = 0;
    for (std::size_t even = 0; even <= i; even += 2) {
      total = checked_add(total,
                          checked_mul(dim_exterior(wedge, i - even),
                                      dim_divided_power(divided, even)));
    }
    return total;
  }

  std::size_t WeightedMonomial::degree() const noexcept {
    std::size_t deg = wedge.size();
    for (auto const& [v, m] : divided) {
      deg += 2 * m;
    }
    return deg;
  }

  std::size_t WeightedMonomial::weight() const noexcept {
    std::size_t w = 2 * wedge.size();
    for (auto const& [v, m] : divided) {
      w += 2 * m;
    }
    return w;
  }

  std::vector<WeightedMonomial> weighted_monomials(std::size_t n, std::size_t i) {
    std::vector<WeightedMonomial> out;
    WeightedMonomial              cur;

    // Divided power part: assign exponents to generators v, v+1, ... with
    // total degree `left` (even).
    auto divided = [&](auto&& self, unsigned v, std::size_t left) -> void {
      if (left == 0) {
        out.push_back(cur);
        return;
      }
      if (v >= n) {
        return;
      }
      self(self, v + 1, left);
      for (unsigned m = 1; 2 * m <= left; ++m) {
        cur.divided.emplace_back(v, m);
        self(self, v + 1, left - 2 * m);
        cur.divided.pop_back();
      }
    };

    // Exterior part: choose k increasing indices starting at v.
    auto wedge = [&](auto&& self, unsigned v, std::size_t k, std::size_t rest) -> void {
      if (k == 0) {
        divided(divided, 0, rest);
        return;
      }
      for (unsigned u = v; u < n; ++u) {
        cur.wedge.push_back(u);
        self(self, u + 1, k - 1, rest);
        cur.wedge.pop_back();
      }
    };

    for (std::size_t k = i % 2; k <= i; k += 2) {
      wedge(wedge, 0, k, i - k);
    }
    return out;
  }

  std::uint64_t coinvariant_dims(std::uint64_t    p,
                                 std::size_t      i,
                                 std::size_t      d,
                                 CoinvariantBasis basis,
                                 CoinvariantPart  part) {
    if (!is_prime(p)) {
      throw DomainError("coinvariant_dims: " + std::to_string(p) + " is not prime");
    }
    std::uint64_t const n = basis == CoinvariantBasis::full ? d + 1 : d;
    // Monomials with k exterior factors and divided power exponents summing
    // to j all have weight 2k + 2j; count each such class at once.
    std::uint64_t total = 0;
    for (std::size_t j = 0; 2 * j <= i; ++j) {
      if (part == CoinvariantPart::wedge && j > 0) {
        break;
      }
      std::size_t const k = i - 2 * j;
      if ((2 * k + 2 * j) % (p - 1) != 0) {
        continue;
      }
      total = checked_add(total, checked_mul(binomial(n, k), multisets(n, j)));
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graded dimension tables
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct GroupName {
      GroupId          id;
      std::string_view name;
    };

    constexpr std::array<GroupName, 9> group_names{{
        {GroupId::t_zt, "tzt"},
        {GroupId::t_fpt, "tfpt"},
        {GroupId::b_z, "bz"},
        {GroupId::b_zt, "bzt"},
        {GroupId::b_fp, "bfp"},
        {GroupId::b_fpt, "bfpt"},
        {GroupId::sl2_z, "sl2z"},
        {GroupId::e2_zt, "e2zt"},
        {GroupId::sl2_fpt_quot, "sl2fpt"},
    }};

    bool divides_12(std::uint64_t p) {
      return p == 2 || p == 3;
    }

    // B(Z) = Z/2 x Z: Z/2 contributes only when p = 2.
    std::uint64_t dim_b_z(std::uint64_t p, std::size_t i) {
      return p == 2 ? dim_exterior_divided(2, 1, i) : dim_exterior_divided(1, 0, i);
    }

    // B(Z[t]) = Z/2 x Z x t Z[t], rank d in the last factor.
    std::uint64_t dim_b_zt(std::uint64_t p, std::size_t i, std::size_t d) {
      return p == 2 ? dim_exterior_divided(d + 2, 1, i) : dim_exterior_divided(d + 1, 0, i);
    }

    // H(SL2(Z)) = H(Z/12) integrally, so with F_p coefficients one class in
    // each degree when p | 12 and only H_0 otherwise.
    std::uint64_t dim_sl2_z(std::uint64_t p, std::size_t i) {
      std::uint64_t const r = divides_12(p) ? 1 : 0;
      return dim_exterior_divided(r, r, i);
    }

    std::uint64_t dim_e2_zt(std::uint64_t p, std::size_t i, std::size_t d) {
      if (i == 0) {
        return 1;
      }
      if (p == 2) {
        // B(Z[t]) contributes everything except one copy of each positive
        // degree class of B(Z), which is cancelled against H_i(SL2(Z)) = F_2.
        std::uint64_t total = 0;
        for (std::size_t even = 0; even <= i; even += 2) {
          total = checked_add(total, binomial(d + 2, i - even));
        }
        return total - 1;
      }
      std::uint64_t const finite = p == 3 ? 1 : 0;
      if (i == 1) {
        return d + finite;  // t F_p[t] + Z/12 (x) F_p
      }
      return checked_add(binomial(d + 1, i), finite);  // wedge^i F_p[t] + H_i(SL2(Z))
    }
  }  // namespace

  std::string_view to_string(GroupId g) noexcept {
    for (auto const& [id, name] : group_names) {
      if (id == g) {
        return name;
      }
    }
    return "?";
  }

  GroupId parse_group_id(std::string_view name) {
    for (auto const& [id, n] : group_names) {
      if (n == name) {
        return id;
      }
    }
    throw DomainError("unknown group '" + std::string(name) + "'");
  }

  std::vector<GroupId> const& all_groups() {
    static std::vector<GroupId> const groups = [] {
      std::vector<GroupId> v;
      for (auto const& g : group_names) {
        v.push_back(g.id);
      }
      return v;
    }();
    return groups;
  }

  std::uint64_t h_dims(GroupId g, std::uint64_t p, std::size_t i, std::size_t d) {
    if (!is_prime(p)) {
      throw DomainError("h_dims: " + std::to_string(p) + " is not prime");
    }
    switch (g) {
      case GroupId::t_zt:
        return dim_exterior(d, i);
      case GroupId::t_fpt:
        return dim_exterior_divided(d, d, i);
      case GroupId::b_z:
        return dim_b_z(p, i);
      case GroupId::b_zt:
        return dim_b_zt(p, i, d);
      case GroupId::b_fp:
        return coinvariant_dims(p, i, 0, CoinvariantBasis::full, CoinvariantPart::full);
      case GroupId::b_fpt:
        return coinvariant_dims(p, i, d, CoinvariantBasis::full, CoinvariantPart::full);
      case GroupId::sl2_z:
        return dim_sl2_z(p, i);
      case GroupId::e2_zt:
        return dim_e2_zt(p, i, d);
      case GroupId::sl2_fpt_quot:
        if (!divides_12(p)) {
          throw Unsupported("homology of SL2(F_" + std::to_string(p)
                            + "[t]) is only split into computable summands for p = 2, 3");
        }
        return h_dims(GroupId::b_fpt, p, i, d) - h_dims(GroupId::b_fp, p, i, d);
    }
    throw InternalInconsistency("unknown group id");
  }

  std::vector<std::string> table_flags(GroupId g, std::uint64_t p) {
    std::vector<std::string> flags;
    switch (g) {
      case GroupId::sl2_fpt_quot:
        flags.emplace_back("finite-summand-opaque");
        break;
      case GroupId::b_fp:
      case GroupId::b_fpt:
        if (!divides_12(p)) {
          flags.emplace_back("coinvariants");
        }
        break;
      case GroupId::sl2_z:
        flags.emplace_back("via-Z/12");
        break;
      default:
        break;
    }
    return flags;
  }

  GradedDimTable h_table(GroupId g, std::uint64_t p, std::size_t max_i, std::size_t d) {
    GradedDimTable table{g, p, d, {}, table_flags(g, p)};
    table.dims.reserve(max_i + 1);
    for (std::size_t i = 0; i <= max_i; ++i) {
      table.dims.push_back(h_dims(g, p, i, d));
    }
    return table;
  }

  std::vector<std::uint64_t> kunneth(std::vector<std::uint64_t> const& x,
                                     std::vector<std::uint64_t> const& y) {
    std::size_t const          top = std::min(x.size(), y.size());
    std::vector<std::uint64_t> out(top, 0);
    for (std::size_t i = 0; i < top; ++i) {
      for (std::size_t l = 0; l <= i; ++l) {
        out[i] = checked_add(out[i], checked_mul(x[l], y[i - l]));
      }
    }
    return out;
  }

  LedgerReport mv_ledger_check(std::uint64_t p, std::size_t i, std::size_t d) {
    std::vector<std::uint64_t> bz, tzt;
    for (std::size_t l = 0; l <= i; ++l) {
      bz.push_back(h_dims(GroupId::b_z, p, l, d));
      tzt.push_back(h_dims(GroupId::t_zt, p, l, d));
    }
    LedgerReport r;
    r.prime      = p;
    r.degree     = i;
    r.truncation = d;
    r.e2_zt      = h_dims(GroupId::e2_zt, p, i, d);
    r.b_zt       = kunneth(bz, tzt)[i];
    r.sl2_z      = h_dims(GroupId::sl2_z, p, i, d);
    r.b_z        = bz[i];
    return r;
  }

}  // namespace nagaolab
