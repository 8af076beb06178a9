#ifndef NAGAOLAB_GL2_HPP_
#define NAGAOLAB_GL2_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "ring.hpp"

namespace nagaolab {

  // 2x2 matrix [[a, b], [c, d]] over Z[t] or F_p[t].
  class Mat2 {
   public:
    // Zero matrix over Z.
    Mat2() = default;

    // Throws RingMismatch unless all four entries share a ring.
    Mat2(Poly a, Poly b, Poly c, Poly d);

    static Mat2 identity(Ring ring);
    static Mat2 zero(Ring ring);

    Ring ring() const noexcept {
      return _a.ring();
    }

    Poly const& a() const noexcept {
      return _a;
    }
    Poly const& b() const noexcept {
      return _b;
    }
    Poly const& c() const noexcept {
      return _c;
    }
    Poly const& d() const noexcept {
      return _d;
    }

    Poly det() const;
    Poly trace() const;

    // c = 0
    bool is_upper_triangular() const noexcept {
      return _c.is_zero();
    }

    // All entries constant polynomials.
    bool is_constant() const noexcept;

    bool is_identity() const;

    Mat2 operator-() const;

    friend Mat2 operator*(Mat2 const& m, Mat2 const& n);
    friend Mat2 operator+(Mat2 const& m, Mat2 const& n);
    friend Mat2 operator-(Mat2 const& m, Mat2 const& n);

    friend bool operator==(Mat2 const& m, Mat2 const& n) = default;

   private:
    Poly _a, _b, _c, _d;
  };

  // [[d, -b], [-c, a]]; throws NotSpecialLinear unless det(m) = 1.
  Mat2 inverse_sl2(Mat2 const& m);

  // Trace exactly 2. The two characterisations available over a domain,
  // trace(m) = 2 and (m - I)^2 = 0, are both evaluated and must agree.
  // Throws NotSpecialLinear unless det(m) = 1.
  bool is_unipotent(Mat2 const& m);

  // Trace +-2, i.e. m or -m unipotent. Not used by default.
  bool is_unipotent_up_to_sign(Mat2 const& m);

  // Entrywise reduction of an integer matrix into F_p[t].
  Mat2 reduce_mod(Mat2 const& m, std::uint64_t p);

  ////////////////////////////////////////////////////////////////////////
  // SL2
  ////////////////////////////////////////////////////////////////////////

  // A matrix known to have determinant 1. The check happens once, at
  // construction; products and inverses stay in the group without
  // recomputing determinants.
  class SL2 {
   public:
    // Identity over Z.
    SL2() : _m(Mat2::identity(Ring::integers())) {}

    // Throws NotSpecialLinear unless det(m) = 1.
    explicit SL2(Mat2 m);

    static SL2 identity(Ring ring);

    Mat2 const& matrix() const noexcept {
      return _m;
    }

    Ring ring() const noexcept {
      return _m.ring();
    }

    SL2 inverse() const;

    friend SL2 operator*(SL2 const& x, SL2 const& y);

    friend bool operator==(SL2 const& x, SL2 const& y) = default;

   private:
    struct trusted {};
    SL2(Mat2 m, trusted) : _m(std::move(m)) {}

    Mat2 _m;
  };

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  // E12(f) = [[1, f], [0, 1]], E21(f) = [[1, 0], [f, 1]],
  // Diag(u) = [[u, 0], [0, u^-1]] for a unit u, W = [[0, -1], [1, 0]].
  class Generator {
   public:
    enum class Kind { e12, e21, diag, w };

    static Generator e12(Poly f);
    static Generator e21(Poly f);
    // Throws DomainError unless u is a unit.
    static Generator diag(Coeff u);
    static Generator w(Ring ring);

    Kind kind() const noexcept {
      return _kind;
    }

    Ring ring() const noexcept {
      return _param.ring();
    }

    // f for E12/E21, the constant u for Diag, zero for W.
    Poly const& parameter() const noexcept {
      return _param;
    }

    Mat2 matrix() const;

    SL2 element() const;

    friend bool operator==(Generator const&, Generator const&) = default;

   private:
    Generator(Kind k, Poly param) : _kind(k), _param(std::move(param)) {}

    Kind _kind;
    Poly _param;
  };

  std::string to_string(Generator const& g);

  // "[[a, b], [c, d]]" with the polynomial grammar for the entries.
  std::string to_string(Mat2 const& m);

  // Accepts "[[p11, p12],[p21, p22]]" or a generator shorthand
  // E12(<poly>), E21(<poly>), D(<int>), W.
  Mat2 parse_matrix(std::string_view text, Ring ring = Ring::integers());

  // Generator shorthand only.
  Generator parse_generator(std::string_view text, Ring ring = Ring::integers());

}  // namespace nagaolab

#endif  // NAGAOLAB_GL2_HPP_
