#include "nagaolab/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace nagaolab {

  bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t q = 2; q <= n / q; ++q) {
      if (n % q == 0) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ring
  ////////////////////////////////////////////////////////////////////////

  Ring Ring::mod(std::uint64_t p) {
    if (!is_prime(p)) {
      throw DomainError("modulus " + std::to_string(p) + " is not prime");
    }
    return Ring(p);
  }

  std::string Ring::name() const {
    return is_integers() ? "Z" : "F_" + std::to_string(_modulus);
  }

  void require_same_ring(Ring x, Ring y, char const* op) {
    if (x != y) {
      throw RingMismatch(std::string(op) + ": coefficient rings differ ("
                         + x.name() + " vs " + y.name() + ")");
    }
  }

  mpz_class reduce_residue(mpz_class const& v, std::uint64_t p) {
    mpz_class r;
    mpz_class m(static_cast<unsigned long>(p));
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
  }

  mpz_class inverse_mod(mpz_class const& v, std::uint64_t p) {
    mpz_class r;
    mpz_class m(static_cast<unsigned long>(p));
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw DomainError(v.get_str() + " is not invertible mod "
                        + std::to_string(p));
    }
    return reduce_residue(r, p);
  }

  ////////////////////////////////////////////////////////////////////////
  // Coeff
  ////////////////////////////////////////////////////////////////////////

  Coeff::Coeff(Ring ring, mpz_class value) : _ring(ring), _value(std::move(value)) {
    if (_ring.is_field()) {
      _value = reduce_residue(_value, _ring.modulus());
    }
  }

  bool Coeff::is_unit() const {
    if (_ring.is_integers()) {
      return _value == 1 || _value == -1;
    }
    return _value != 0;
  }

  Coeff Coeff::inverse() const {
    if (!is_unit()) {
      throw DomainError(_value.get_str() + " is not a unit of " + _ring.name());
    }
    if (_ring.is_integers()) {
      return *this;
    }
    return Coeff(_ring, inverse_mod(_value, _ring.modulus()));
  }

  Coeff Coeff::operator-() const {
    return Coeff(_ring, -_value);
  }

  Coeff operator+(Coeff const& x, Coeff const& y) {
    require_same_ring(x._ring, y._ring, "coefficient addition");
    return Coeff(x._ring, x._value + y._value);
  }

  Coeff operator-(Coeff const& x, Coeff const& y) {
    require_same_ring(x._ring, y._ring, "coefficient subtraction");
    return Coeff(x._ring, x._value - y._value);
  }

  Coeff operator*(Coeff const& x, Coeff const& y) {
    require_same_ring(x._ring, y._ring, "coefficient multiplication");
    return Coeff(x._ring, x._value * y._value);
  }

  ////////////////////////////////////////////////////////////////////////
  // Degree
  ////////////////////////////////////////////////////////////////////////

  std::size_t Degree::value() const {
    if (!_finite) {
      throw DomainError("degree of the zero polynomial has no numeric value");
    }
    return _value;
  }

  std::string Degree::to_string() const {
    return _finite ? std::to_string(_value) : "-inf";
  }

  ////////////////////////////////////////////////////////////////////////
  // Poly
  ////////////////////////////////////////////////////////////////////////

  Poly::Poly(Ring ring, std::vector<mpz_class> coeffs)
      : _ring(ring), _coeffs(std::move(coeffs)) {
    canonicalize();
  }

  void Poly::canonicalize() {
    if (_ring.is_field()) {
      for (auto& c : _coeffs) {
        c = reduce_residue(c, _ring.modulus());
      }
    }
    while (!_coeffs.empty() && _coeffs.back() == 0) {
      _coeffs.pop_back();
    }
  }

  Poly Poly::constant(Ring ring, mpz_class c) {
    return Poly(ring, {std::move(c)});
  }

  Poly Poly::one(Ring ring) {
    return constant(ring, 1);
  }

  Poly Poly::monomial(Ring ring, mpz_class c, std::size_t k) {
    std::vector<mpz_class> v(k + 1);
    v[k] = std::move(c);
    return Poly(ring, std::move(v));
  }

  Poly Poly::t_power(Ring ring, std::size_t k) {
    return monomial(ring, 1, k);
  }

  bool Poly::is_one() const {
    return _coeffs.size() == 1 && _coeffs[0] == 1;
  }

  bool Poly::is_unit() const {
    return _coeffs.size() == 1 && Coeff(_ring, _coeffs[0]).is_unit();
  }

  mpz_class Poly::coeff(std::size_t k) const {
    return k < _coeffs.size() ? _coeffs[k] : mpz_class(0);
  }

  mpz_class const& Poly::leading() const {
    if (_coeffs.empty()) {
      throw DomainError("the zero polynomial has no leading coefficient");
    }
    return _coeffs.back();
  }

  Poly Poly::operator-() const {
    std::vector<mpz_class> v(_coeffs.size());
    std::transform(_coeffs.begin(), _coeffs.end(), v.begin(), [](auto const& c) {
      return mpz_class(-c);
    });
    return Poly(_ring, std::move(v));
  }

  Poly Poly::scaled(mpz_class const& c) const {
    std::vector<mpz_class> v(_coeffs.size());
    std::transform(_coeffs.begin(), _coeffs.end(), v.begin(), [&c](auto const& x) {
      return mpz_class(x * c);
    });
    return Poly(_ring, std::move(v));
  }

  Poly operator+(Poly const& x, Poly const& y) {
    require_same_ring(x._ring, y._ring, "polynomial addition");
    std::vector<mpz_class> v(std::max(x._coeffs.size(), y._coeffs.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = x.coeff(i) + y.coeff(i);
    }
    return Poly(x._ring, std::move(v));
  }

  Poly operator-(Poly const& x, Poly const& y) {
    require_same_ring(x._ring, y._ring, "polynomial subtraction");
    std::vector<mpz_class> v(std::max(x._coeffs.size(), y._coeffs.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = x.coeff(i) - y.coeff(i);
    }
    return Poly(x._ring, std::move(v));
  }

  Poly operator*(Poly const& x, Poly const& y) {
    require_same_ring(x._ring, y._ring, "polynomial multiplication");
    if (x.is_zero() || y.is_zero()) {
      return Poly(x._ring);
    }
    std::vector<mpz_class> v(x._coeffs.size() + y._coeffs.size() - 1);
    for (std::size_t i = 0; i < x._coeffs.size(); ++i) {
      if (x._coeffs[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < y._coeffs.size(); ++j) {
        mpz_addmul(v[i + j].get_mpz_t(),
                   x._coeffs[i].get_mpz_t(),
                   y._coeffs[j].get_mpz_t());
      }
    }
    return Poly(x._ring, std::move(v));
  }

  PolyDivMod divmod(Poly const& a, Poly const& b) {
    require_same_ring(a.ring(), b.ring(), "polynomial division");
    Ring const ring = a.ring();
    if (!ring.is_field()) {
      throw DomainError("polynomial division requires field coefficients");
    }
    if (b.is_zero()) {
      throw DomainError("polynomial division by zero");
    }
    std::uint64_t const p       = ring.modulus();
    std::size_t const   db      = b.degree().value();
    mpz_class const     lead_in = inverse_mod(b.leading(), p);

    std::vector<mpz_class> rem = a.coeffs();
    std::vector<mpz_class> quo(rem.size() > db ? rem.size() - db : 0);
    for (std::size_t k = rem.size(); k-- > db;) {
      mpz_class c = reduce_residue(rem[k] * lead_in, p);
      if (c == 0) {
        continue;
      }
      quo[k - db] = c;
      for (std::size_t j = 0; j <= db; ++j) {
        rem[k - db + j] = reduce_residue(rem[k - db + j] - c * b.coeffs()[j], p);
      }
    }
    return {Poly(ring, std::move(quo)), Poly(ring, std::move(rem))};
  }

  Poly reduce_mod(Poly const& a, std::uint64_t p) {
    Ring const target = Ring::mod(p);
    if (!a.ring().is_integers()) {
      throw RingMismatch("reduction mod p expects integer coefficients, got "
                         + a.ring().name());
    }
    return Poly(target, a.coeffs());
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t max_parsed_exponent = std::size_t(1) << 20;

    class PolyParser {
     public:
      explicit PolyParser(std::string_view s) : _s(s) {}

      std::map<std::size_t, mpz_class> parse() {
        skip_ws();
        if (at_end()) {
          throw ParseError("empty polynomial", _pos);
        }
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
          negative = peek() == '-';
          ++_pos;
        }
        term(negative);
        while (true) {
          skip_ws();
          if (at_end()) {
            break;
          }
          char const c = peek();
          if (c != '+' && c != '-') {
            throw ParseError(std::string("unexpected '") + c + "'", _pos);
          }
          ++_pos;
          term(c == '-');
        }
        return std::move(_terms);
      }

     private:
      bool at_end() const {
        return _pos >= _s.size();
      }

      char peek() const {
        return _s[_pos];
      }

      void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
      }

      std::string digits() {
        std::size_t const start = _pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          ++_pos;
        }
        return std::string(_s.substr(start, _pos - start));
      }

      std::size_t exponent() {
        skip_ws();
        if (at_end() || peek() != '^') {
          return 1;
        }
        ++_pos;
        skip_ws();
        if (!at_end() && peek() == '-') {
          throw ParseError("negative exponent", _pos);
        }
        std::size_t const start = _pos;
        std::string const d     = digits();
        if (d.empty()) {
          throw ParseError("expected exponent", start);
        }
        if (d.size() > 8 || std::stoull(d) > max_parsed_exponent) {
          throw ParseError("exponent too large", start);
        }
        return std::stoull(d);
      }

      void term(bool negative) {
        skip_ws();
        if (at_end()) {
          throw ParseError("expected term", _pos);
        }
        mpz_class   c(1);
        std::size_t k = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          c = mpz_class(digits());
          skip_ws();
          if (!at_end() && peek() == '*') {
            ++_pos;
            skip_ws();
            if (at_end() || peek() != 't') {
              throw ParseError("expected 't' after '*'", _pos);
            }
            ++_pos;
            k = exponent();
          }
        } else if (peek() == 't') {
          ++_pos;
          k = exponent();
        } else {
          throw ParseError(std::string("unexpected '") + peek() + "'", _pos);
        }
        if (negative) {
          c = -c;
        }
        _terms[k] += c;
      }

      std::string_view                 _s;
      std::size_t                      _pos = 0;
      std::map<std::size_t, mpz_class> _terms;
    };
  }  // namespace

  Poly parse_poly(std::string_view text, Ring ring) {
    auto const             terms = PolyParser(text).parse();
    std::vector<mpz_class> v(terms.rbegin()->first + 1);
    for (auto const& [k, c] : terms) {
      v[k] = c;
    }
    return Poly(ring, std::move(v));
  }

  std::string to_string(Poly const& f) {
    if (f.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      mpz_class const& c = f.coeffs()[k];
      if (c == 0) {
        continue;
      }
      bool const      negative = c < 0;
      mpz_class const mag      = abs(c);
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (k == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) {
        out += mag.get_str() + "*";
      }
      out += "t";
      if (k > 1) {
        out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // S(n) witnesses
  ////////////////////////////////////////////////////////////////////////

  SnWitness sn_witness_search(std::uint64_t p, std::size_t n, SnSearchLimits const& limits) {
    if (!is_prime(p)) {
      throw DomainError("S(n) search: " + std::to_string(p) + " is not prime");
    }
    if (n == 0) {
      throw DomainError("S(n) search: arity must be at least 1");
    }
    if (p > limits.max_prime) {
      throw CapExceeded("S(n) search: prime " + std::to_string(p)
                        + " exceeds the cap " + std::to_string(limits.max_prime));
    }
    if (limits.arity_at_most_prime && n > p) {
      throw CapExceeded("S(n) search: arity " + std::to_string(n)
                        + " exceeds the prime " + std::to_string(p));
    }

    SnWitness result;
    result.prime = p;
    result.arity = n;

    // The subset-sum condition is invariant under permuting the tuple, so it
    // suffices to visit nondecreasing tuples; the first one found is also the
    // lexicographically least witness overall. `sums[k]` holds the set of
    // nonempty subset sums of the first k chosen residues.
    std::vector<std::uint64_t>     tuple(n);
    std::vector<std::vector<char>> sums(n + 1, std::vector<char>(p, 0));

    std::function<bool(std::size_t, std::uint64_t)> extend
        = [&](std::size_t depth, std::uint64_t lo) -> bool {
      if (depth == n) {
        return true;
      }
      for (std::uint64_t a = lo; a < p; ++a) {
        if (++result.nodes_visited > limits.max_nodes) {
          throw CapExceeded("S(n) search: node budget of "
                            + std::to_string(limits.max_nodes) + " exhausted");
        }
        auto const& prev = sums[depth];
        auto&       next = sums[depth + 1];
        next             = prev;
        next[a]          = 1;
        for (std::uint64_t s = 0; s < p; ++s) {
          if (prev[s]) {
            next[(s + a) % p] = 1;
          }
        }
        if (next[0]) {
          continue;
        }
        tuple[depth] = a;
        if (extend(depth + 1, a)) {
          return true;
        }
      }
      return false;
    };

    if (extend(0, 1)) {
      result.residues = tuple;
    }
    return result;
  }

}  // namespace nagaolab
