#ifndef NAGAOLAB_RING_HPP_
#define NAGAOLAB_RING_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace nagaolab {

  // Trial division. Adequate for the moduli this library works with.
  bool is_prime(std::uint64_t n) noexcept;

  ////////////////////////////////////////////////////////////////////////
  // Ring
  ////////////////////////////////////////////////////////////////////////

  // A coefficient ring: either the integers Z, or the prime field F_p.
  class Ring {
   public:
    // Z
    constexpr Ring() noexcept = default;

    static constexpr Ring integers() noexcept {
      return Ring();
    }

    // F_p; throws DomainError unless p is prime.
    static Ring mod(std::uint64_t p);

    constexpr bool is_integers() const noexcept {
      return _modulus == 0;
    }

    constexpr bool is_field() const noexcept {
      return _modulus != 0;
    }

    // 0 for Z.
    constexpr std::uint64_t modulus() const noexcept {
      return _modulus;
    }

    std::string name() const;

    constexpr auto operator<=>(Ring const&) const noexcept = default;

   private:
    explicit constexpr Ring(std::uint64_t p) noexcept : _modulus(p) {}
    std::uint64_t _modulus = 0;
  };

  // Throws RingMismatch if x and y differ.
  void require_same_ring(Ring x, Ring y, char const* op);

  ////////////////////////////////////////////////////////////////////////
  // Coeff
  ////////////////////////////////////////////////////////////////////////

  // An element of Z or of F_p. Residues are kept in [0, p).
  class Coeff {
   public:
    Coeff() = default;
    Coeff(Ring ring, mpz_class value);

    Ring ring() const noexcept {
      return _ring;
    }

    mpz_class const& value() const noexcept {
      return _value;
    }

    bool is_zero() const {
      return _value == 0;
    }

    // +-1 over Z, nonzero over F_p.
    bool is_unit() const;

    // Throws DomainError unless is_unit().
    Coeff inverse() const;

    Coeff operator-() const;

    friend Coeff operator+(Coeff const& x, Coeff const& y);
    friend Coeff operator-(Coeff const& x, Coeff const& y);
    friend Coeff operator*(Coeff const& x, Coeff const& y);

    friend bool operator==(Coeff const& x, Coeff const& y) {
      return x._ring == y._ring && x._value == y._value;
    }

   private:
    Ring      _ring;
    mpz_class _value;
  };

  // Reduce an integer into [0, p).
  mpz_class reduce_residue(mpz_class const& v, std::uint64_t p);

  // Inverse of v modulo the prime p; throws DomainError when v = 0 mod p.
  mpz_class inverse_mod(mpz_class const& v, std::uint64_t p);

  ////////////////////////////////////////////////////////////////////////
  // Degree
  ////////////////////////////////////////////////////////////////////////

  // Polynomial degree, with a dedicated value for the zero polynomial that
  // refuses to be used as a number.
  class Degree {
   public:
    static constexpr Degree neg_infinity() noexcept {
      return Degree();
    }

    explicit constexpr Degree(std::size_t d) noexcept : _value(d), _finite(true) {}

    constexpr bool is_neg_infinity() const noexcept {
      return !_finite;
    }

    // Throws DomainError for -infinity.
    std::size_t value() const;

    constexpr std::strong_ordering operator<=>(Degree const& that) const noexcept {
      if (_finite != that._finite) {
        return _finite ? std::strong_ordering::greater : std::strong_ordering::less;
      }
      return _value <=> that._value;
    }

    constexpr bool operator==(Degree const&) const noexcept = default;

    // -infinity absorbs.
    friend constexpr Degree operator+(Degree x, Degree y) noexcept {
      if (!x._finite || !y._finite) {
        return Degree();
      }
      return Degree(x._value + y._value);
    }

    std::string to_string() const;

   private:
    constexpr Degree() noexcept = default;
    std::size_t _value  = 0;
    bool        _finite = false;
  };

  ////////////////////////////////////////////////////////////////////////
  // Poly
  ////////////////////////////////////////////////////////////////////////

  // Dense univariate polynomial in t over Z or F_p. Coefficients are stored
  // in ascending degree with no trailing zeros; the zero polynomial has no
  // coefficients at all.
  class Poly {
   public:
    // The zero polynomial over Z.
    Poly() = default;

    // The zero polynomial over `ring`.
    explicit Poly(Ring ring) : _ring(ring) {}

    Poly(Ring ring, std::vector<mpz_class> coeffs);

    static Poly constant(Ring ring, mpz_class c);
    static Poly one(Ring ring);
    // c * t^k
    static Poly monomial(Ring ring, mpz_class c, std::size_t k);
    static Poly t_power(Ring ring, std::size_t k);

    Ring ring() const noexcept {
      return _ring;
    }

    std::vector<mpz_class> const& coeffs() const noexcept {
      return _coeffs;
    }

    Degree degree() const noexcept {
      return _coeffs.empty() ? Degree::neg_infinity()
                             : Degree(_coeffs.size() - 1);
    }

    bool is_zero() const noexcept {
      return _coeffs.empty();
    }

    bool is_constant() const noexcept {
      return _coeffs.size() <= 1;
    }

    bool is_one() const;

    // Constant polynomial whose value is a unit of the coefficient ring.
    bool is_unit() const;

    // Coefficient of t^k (zero beyond the degree).
    mpz_class coeff(std::size_t k) const;

    mpz_class constant_term() const {
      return coeff(0);
    }

    // Throws DomainError for the zero polynomial.
    mpz_class const& leading() const;

    Poly operator-() const;
    Poly scaled(mpz_class const& c) const;

    friend Poly operator+(Poly const& x, Poly const& y);
    friend Poly operator-(Poly const& x, Poly const& y);
    friend Poly operator*(Poly const& x, Poly const& y);

    Poly& operator+=(Poly const& y) {
      return *this = *this + y;
    }
    Poly& operator-=(Poly const& y) {
      return *this = *this - y;
    }
    Poly& operator*=(Poly const& y) {
      return *this = *this * y;
    }

    friend bool operator==(Poly const& x, Poly const& y) {
      return x._ring == y._ring && x._coeffs == y._coeffs;
    }

   private:
    void canonicalize();

    Ring                   _ring;
    std::vector<mpz_class> _coeffs;
  };

  struct PolyDivMod {
    Poly quotient;
    Poly remainder;
  };

  // a = q*b + r with deg r < deg b. Only over F_p: Z[t] has no Euclidean
  // division. Throws DomainError when b = 0 or the coefficients are not a
  // field, RingMismatch on mixed rings.
  PolyDivMod divmod(Poly const& a, Poly const& b);

  // Coefficientwise reduction of an integer polynomial into F_p[t].
  Poly reduce_mod(Poly const& a, std::uint64_t p);

  // Grammar (whitespace insignificant):
  //   poly := ['+'|'-'] term (('+'|'-') term)*
  //   term := int | int '*' 't' ['^' uint] | 't' ['^' uint]
  // Like terms are collected. The result is reduced into `ring`.
  Poly parse_poly(std::string_view text, Ring ring = Ring::integers());

  // Ascending degree, e.g. "1 - 2*t + t^2"; the zero polynomial is "0".
  std::string to_string(Poly const& f);

  ////////////////////////////////////////////////////////////////////////
  // S(n) witnesses
  ////////////////////////////////////////////////////////////////////////

  struct SnSearchLimits {
    std::uint64_t max_prime = 31;
    // When set, arity n may not exceed p.
    bool          arity_at_most_prime = true;
    // Upper bound on visited search nodes.
    std::uint64_t max_nodes = std::uint64_t(1) << 26;
  };

  // Units a_1..a_n of Z_(p) all of whose nonempty subfamily sums are units.
  // A unit of Z_(p) reduces to a nonzero residue, and a sum is a unit iff
  // its residue is nonzero, so the search runs over residues mod p.
  struct SnWitness {
    std::uint64_t                              prime = 0;
    std::size_t                                arity = 0;
    std::optional<std::vector<std::uint64_t>> residues;
    std::uint64_t                              nodes_visited = 0;

    bool exists() const noexcept {
      return residues.has_value();
    }
  };

  // Exhaustive search for an S(n) witness mod p. Returns the
  // lexicographically least witness tuple, or a result with no residues
  // when the whole space has been searched without success. Throws
  // CapExceeded when the limits would be exceeded, DomainError on bad p, n.
  SnWitness sn_witness_search(std::uint64_t        p,
                              std::size_t          n,
                              SnSearchLimits const& limits = {});

}  // namespace nagaolab

#endif  // NAGAOLAB_RING_HPP_
