#pragma once

#include "ctk/scalar.hpp"

#include <iosfwd>
#include <string_view>

namespace ctk {

/// An event in the Minkowski plane: t is the time coordinate (x0),
/// s the space coordinate (x1). Value-semantic and immutable in use.
struct Point {
  Scalar t;
  Scalar s;
};

bool operator==(const Point& a, const Point& b);
bool operator!=(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Scalar& k, const Point& p);
std::ostream& operator<<(std::ostream& os, const Point& p);

/// Exchanges the two coordinates: (t, s) -> (s, t). Conjugating by
/// this map is what trades timelike for spacelike throughout.
Point swap_axes(const Point& p);

/// The quadratic form t^2 - s^2.
Scalar q_form(const Point& v);

/// Squared Euclidean norm t^2 + s^2. Radii are always compared
/// squared so everything stays rational.
Scalar euclid_sq(const Point& v);

/// Position of y relative to x. Exactly one class holds for every
/// ordered pair; the seven classes partition M x M.
enum class CausalClass {
  Equal,
  TimelikeFuture,
  TimelikePast,
  LightlikeFuture,
  LightlikePast,
  SpacelikePlus,
  SpacelikeMinus,
};

std::string_view to_string(CausalClass c);
std::ostream& operator<<(std::ostream& os, CausalClass c);

CausalClass classify(const Point& x, const Point& y);

/// 2x2 rational matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  Scalar a, b, c, d;
};

bool operator==(const Mat2& m, const Mat2& n);
Mat2 operator*(const Mat2& m, const Mat2& n);
Point operator*(const Mat2& m, const Point& p);
Scalar determinant(const Mat2& m);

/// Affine self-map of the plane: p -> linear * p + translation.
/// Composition and (for nonsingular linear part) inversion are exact.
struct AffineMap {
  Mat2 linear;
  Point translation;

  Point operator()(const Point& p) const;
};

/// f after g: (compose(f, g))(p) == f(g(p)).
AffineMap compose(const AffineMap& f, const AffineMap& g);

/// Exact inverse. Throws std::domain_error on a singular linear part.
AffineMap inverse(const AffineMap& m);

bool is_invertible(const AffineMap& m);

AffineMap identity_map();
AffineMap translation_map(Point offset);
AffineMap linear_map(Scalar a, Scalar b, Scalar c, Scalar d);

/// Orthochronous boost with matrix [[c, h], [h, c]], c = (k + 1/k)/2,
/// h = (k - 1/k)/2. Then c^2 - h^2 = 1 exactly, so Q is left invariant;
/// positive rational k ranges over a dense subset of the boost group.
/// Throws std::invalid_argument unless k > 0.
AffineMap boost_from_parameter(const Scalar& k);

/// Scaling by k > 0 about the origin. Throws unless k > 0.
AffineMap dilatation_map(const Scalar& k);

AffineMap time_reflection();   // diag(-1, 1)
AffineMap space_reflection();  // diag(1, -1)
AffineMap swap_map();          // [[0, 1], [1, 0]]

}  // namespace ctk
