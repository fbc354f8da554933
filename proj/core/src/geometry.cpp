#include "ctk/geometry.hpp"

#include <ostream>
#include <stdexcept>

namespace ctk {

bool operator==(const Point& a, const Point& b) {
  return a.t == b.t && a.s == b.s;
}

bool operator!=(const Point& a, const Point& b) { return !(a == b); }

Point operator+(const Point& a, const Point& b) {
  return {a.t + b.t, a.s + b.s};
}

Point operator-(const Point& a, const Point& b) {
  return {a.t - b.t, a.s - b.s};
}

Point operator*(const Scalar& k, const Point& p) { return {k * p.t, k * p.s}; }

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.t << ", " << p.s << ")";
}

Point swap_axes(const Point& p) { return {p.s, p.t}; }

Scalar q_form(const Point& v) { return v.t * v.t - v.s * v.s; }

Scalar euclid_sq(const Point& v) { return v.t * v.t + v.s * v.s; }

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Equal: return "Equal";
    case CausalClass::TimelikeFuture: return "TimelikeFuture";
    case CausalClass::TimelikePast: return "TimelikePast";
    case CausalClass::LightlikeFuture: return "LightlikeFuture";
    case CausalClass::LightlikePast: return "LightlikePast";
    case CausalClass::SpacelikePlus: return "SpacelikePlus";
    case CausalClass::SpacelikeMinus: return "SpacelikeMinus";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, CausalClass c) {
  return os << to_string(c);
}

CausalClass classify(const Point& x, const Point& y) {
  const Point d = y - x;
  const int ts = sign(d.t);
  const int ss = sign(d.s);
  if (ts == 0 && ss == 0) return CausalClass::Equal;
  const int qs = sign(q_form(d));
  // q >= 0 with d != 0 forces t != 0; q < 0 forces s != 0, so the
  // split below is total.
  if (qs > 0) {
    return ts > 0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
  }
  if (qs == 0) {
    return ts > 0 ? CausalClass::LightlikeFuture : CausalClass::LightlikePast;
  }
  return ss > 0 ? CausalClass::SpacelikePlus : CausalClass::SpacelikeMinus;
}

bool operator==(const Mat2& m, const Mat2& n) {
  return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Point operator*(const Mat2& m, const Point& p) {
  return {m.a * p.t + m.b * p.s, m.c * p.t + m.d * p.s};
}

Scalar determinant(const Mat2& m) { return m.a * m.d - m.b * m.c; }

Point AffineMap::operator()(const Point& p) const {
  return linear * p + translation;
}

AffineMap compose(const AffineMap& f, const AffineMap& g) {
  return {f.linear * g.linear, f.linear * g.translation + f.translation};
}

bool is_invertible(const AffineMap& m) { return determinant(m.linear) != 0; }

AffineMap inverse(const AffineMap& m) {
  const Scalar det = determinant(m.linear);
  if (det == 0) throw std::domain_error("affine map is singular");
  const Mat2 inv{m.linear.d / det, -m.linear.b / det, -m.linear.c / det,
                 m.linear.a / det};
  const Point neg = inv * m.translation;
  return {inv, {-neg.t, -neg.s}};
}

AffineMap identity_map() {
  return {{Scalar(1), Scalar(0), Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
}

AffineMap translation_map(Point offset) {
  AffineMap m = identity_map();
  m.translation = std::move(offset);
  return m;
}

AffineMap linear_map(Scalar a, Scalar b, Scalar c, Scalar d) {
  return {{std::move(a), std::move(b), std::move(c), std::move(d)},
          {Scalar(0), Scalar(0)}};
}

AffineMap boost_from_parameter(const Scalar& k) {
  if (k <= 0) {
    throw std::invalid_argument("boost parameter must be positive, got " +
                                to_string(k));
  }
  const Scalar c = (k + 1 / k) / 2;
  const Scalar h = (k - 1 / k) / 2;
  return linear_map(c, h, h, c);
}

AffineMap dilatation_map(const Scalar& k) {
  if (k <= 0) {
    throw std::invalid_argument("dilatation factor must be positive, got " +
                                to_string(k));
  }
  return linear_map(k, Scalar(0), Scalar(0), k);
}

AffineMap time_reflection() {
  return linear_map(Scalar(-1), Scalar(0), Scalar(0), Scalar(1));
}

AffineMap space_reflection() {
  return linear_map(Scalar(1), Scalar(0), Scalar(0), Scalar(-1));
}

AffineMap swap_map() {
  return linear_map(Scalar(0), Scalar(1), Scalar(1), Scalar(0));
}

}  // namespace ctk
