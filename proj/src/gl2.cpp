#include "nagaolab/gl2.hpp"

#include <array>
#include <cctype>

namespace nagaolab {

  Mat2::Mat2(Poly a, Poly b, Poly c, Poly d)
      : _a(std::move(a)), _b(std::move(b)), _c(std::move(c)), _d(std::move(d)) {
    require_same_ring(_a.ring(), _b.ring(), "matrix construction");
    require_same_ring(_a.ring(), _c.ring(), "matrix construction");
    require_same_ring(_a.ring(), _d.ring(), "matrix construction");
  }

  Mat2 Mat2::identity(Ring ring) {
    return Mat2(Poly::one(ring), Poly(ring), Poly(ring), Poly::one(ring));
  }

  Mat2 Mat2::zero(Ring ring) {
    return Mat2(Poly(ring), Poly(ring), Poly(ring), Poly(ring));
  }

  Poly Mat2::det() const {
    return _a * _d - _b * _c;
  }

  Poly Mat2::trace() const {
    return _a + _d;
  }

  bool Mat2::is_constant() const noexcept {
    return _a.is_constant() && _b.is_constant() && _c.is_constant()
           && _d.is_constant();
  }

  bool Mat2::is_identity() const {
    return *this == identity(ring());
  }

  Mat2 Mat2::operator-() const {
    return Mat2(-_a, -_b, -_c, -_d);
  }

  Mat2 operator*(Mat2 const& m, Mat2 const& n) {
    require_same_ring(m.ring(), n.ring(), "matrix multiplication");
    return Mat2(m._a * n._a + m._b * n._c,
                m._a * n._b + m._b * n._d,
                m._c * n._a + m._d * n._c,
                m._c * n._b + m._d * n._d);
  }

  Mat2 operator+(Mat2 const& m, Mat2 const& n) {
    return Mat2(m._a + n._a, m._b + n._b, m._c + n._c, m._d + n._d);
  }

  Mat2 operator-(Mat2 const& m, Mat2 const& n) {
    return Mat2(m._a - n._a, m._b - n._b, m._c - n._c, m._d - n._d);
  }

  namespace {
    void require_det_one(Mat2 const& m, char const* op) {
      Poly const det = m.det();
      if (!det.is_one()) {
        throw NotSpecialLinear(std::string(op) + ": determinant is "
                               + to_string(det) + ", not 1");
      }
    }
  }  // namespace

  Mat2 inverse_sl2(Mat2 const& m) {
    require_det_one(m, "inverse_sl2");
    return Mat2(m.d(), -m.b(), -m.c(), m.a());
  }

  bool is_unipotent(Mat2 const& m) {
    require_det_one(m, "is_unipotent");
    Ring const ring      = m.ring();
    bool const by_trace  = m.trace() == Poly::constant(ring, 2);
    Mat2 const nil       = m - Mat2::identity(ring);
    bool const by_square = (nil * nil) == Mat2::zero(ring);
    if (by_trace != by_square) {
      throw InternalInconsistency("is_unipotent: trace test and (m - I)^2 test "
                                  "disagree on "
                                  + to_string(m));
    }
    return by_trace;
  }

  bool is_unipotent_up_to_sign(Mat2 const& m) {
    require_det_one(m, "is_unipotent_up_to_sign");
    Ring const ring = m.ring();
    Poly const tr   = m.trace();
    return tr == Poly::constant(ring, 2) || tr == Poly::constant(ring, -2);
  }

  Mat2 reduce_mod(Mat2 const& m, std::uint64_t p) {
    return Mat2(reduce_mod(m.a(), p),
                reduce_mod(m.b(), p),
                reduce_mod(m.c(), p),
                reduce_mod(m.d(), p));
  }

  ////////////////////////////////////////////////////////////////////////
  // SL2
  ////////////////////////////////////////////////////////////////////////

  SL2::SL2(Mat2 m) : _m(std::move(m)) {
    require_det_one(_m, "SL2");
  }

  SL2 SL2::identity(Ring ring) {
    return SL2(Mat2::identity(ring), trusted{});
  }

  SL2 SL2::inverse() const {
    return SL2(Mat2(_m.d(), -_m.b(), -_m.c(), _m.a()), trusted{});
  }

  SL2 operator*(SL2 const& x, SL2 const& y) {
    return SL2(x._m * y._m, SL2::trusted{});
  }

  ////////////////////////////////////////////////////////////////////////
  // Generators
  ////////////////////////////////////////////////////////////////////////

  Generator Generator::e12(Poly f) {
    return Generator(Kind::e12, std::move(f));
  }

  Generator Generator::e21(Poly f) {
    return Generator(Kind::e21, std::move(f));
  }

  Generator Generator::diag(Coeff u) {
    if (!u.is_unit()) {
      throw DomainError("Diag(" + u.value().get_str() + "): not a unit of "
                        + u.ring().name());
    }
    return Generator(Kind::diag, Poly::constant(u.ring(), u.value()));
  }

  Generator Generator::w(Ring ring) {
    return Generator(Kind::w, Poly(ring));
  }

  Mat2 Generator::matrix() const {
    Ring const ring = _param.ring();
    Poly const one  = Poly::one(ring);
    Poly const zero(ring);
    switch (_kind) {
      case Kind::e12:
        return Mat2(one, _param, zero, one);
      case Kind::e21:
        return Mat2(one, zero, _param, one);
      case Kind::diag: {
        Coeff const u(ring, _param.constant_term());
        return Mat2(_param, zero, zero, Poly::constant(ring, u.inverse().value()));
      }
      case Kind::w:
        return Mat2(zero, -one, one, zero);
    }
    throw InternalInconsistency("unknown generator kind");
  }

  SL2 Generator::element() const {
    return SL2(matrix());
  }

  std::string to_string(Generator const& g) {
    switch (g.kind()) {
      case Generator::Kind::e12:
        return "E12(" + to_string(g.parameter()) + ")";
      case Generator::Kind::e21:
        return "E21(" + to_string(g.parameter()) + ")";
      case Generator::Kind::diag:
        return "D(" + g.parameter().constant_term().get_str() + ")";
      case Generator::Kind::w:
        return "W";
    }
    return "?";
  }

  std::string to_string(Mat2 const& m) {
    return "[[" + to_string(m.a()) + ", " + to_string(m.b()) + "], ["
           + to_string(m.c()) + ", " + to_string(m.d()) + "]]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::size_t skip_ws(std::string_view s, std::size_t pos) {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
      return pos;
    }

    void expect(std::string_view s, std::size_t& pos, char c) {
      pos = skip_ws(s, pos);
      if (pos >= s.size() || s[pos] != c) {
        throw ParseError(std::string("expected '") + c + "'", pos);
      }
      ++pos;
    }

    // Reads up to (not including) the next occurrence of one of `stops`.
    Poly entry(std::string_view s, std::size_t& pos, std::string_view stops, Ring ring) {
      std::size_t const start = pos;
      std::size_t const end   = s.find_first_of(stops, pos);
      if (end == std::string_view::npos) {
        throw ParseError("unterminated matrix entry", start);
      }
      pos = end;
      try {
        return parse_poly(s.substr(start, end - start), ring);
      } catch (ParseError const& e) {
        throw ParseError("bad matrix entry", start + e.position());
      }
    }
  }  // namespace

  Generator parse_generator(std::string_view text, Ring ring) {
    std::size_t const start = skip_ws(text, 0);
    std::size_t       end   = text.size();
    while (end > start && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
      --end;
    }
    std::string_view const s = text.substr(start, end - start);
    if (s == "W") {
      return Generator::w(ring);
    }
    auto const open = s.find('(');
    if (open == std::string_view::npos || s.back() != ')') {
      throw ParseError("unknown generator '" + std::string(s) + "'", start);
    }
    std::string_view const name = s.substr(0, open);
    std::string_view const arg  = s.substr(open + 1, s.size() - open - 2);
    Poly                   f;
    try {
      f = parse_poly(arg, ring);
    } catch (ParseError const& e) {
      throw ParseError("bad generator argument", start + open + 1 + e.position());
    }
    if (name == "E12") {
      return Generator::e12(f);
    }
    if (name == "E21") {
      return Generator::e21(f);
    }
    if (name == "D") {
      if (!f.is_constant() || f.is_zero()) {
        throw ParseError("D(...) takes a nonzero integer", start + open + 1);
      }
      try {
        return Generator::diag(Coeff(ring, f.constant_term()));
      } catch (DomainError const& e) {
        throw ParseError(e.what(), start + open + 1);
      }
    }
    throw ParseError("unknown generator '" + std::string(name) + "'", start);
  }

  Mat2 parse_matrix(std::string_view text, Ring ring) {
    std::size_t pos = skip_ws(text, 0);
    if (pos < text.size() && text[pos] != '[') {
      return parse_generator(text, ring).matrix();
    }
    std::array<Poly, 4> e;
    expect(text, pos, '[');
    expect(text, pos, '[');
    e[0] = entry(text, pos, ",", ring);
    expect(text, pos, ',');
    e[1] = entry(text, pos, "]", ring);
    expect(text, pos, ']');
    expect(text, pos, ',');
    expect(text, pos, '[');
    e[2] = entry(text, pos, ",", ring);
    expect(text, pos, ',');
    e[3] = entry(text, pos, "]", ring);
    expect(text, pos, ']');
    expect(text, pos, ']');
    pos = skip_ws(text, pos);
    if (pos != text.size()) {
      throw ParseError("trailing characters after matrix", pos);
    }
    return Mat2(e[0], e[1], e[2], e[3]);
  }

}  // namespace nagaolab
