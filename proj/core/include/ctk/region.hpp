#pragma once

#include "ctk/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace ctk {

enum class ConeKind { Time, Light, Space, Causal };

/// Future/Past select by the sign of the time displacement, Plus/Minus
/// by the sign of the space displacement. Time and Causal cones take
/// Future/Past/Both; Space cones take Plus/Minus/Both; Light cones take
/// all five (in the plane the null cone splits both ways).
enum class Orientation { Future, Past, Plus, Minus, Both };

/// One cone of the plane, anchored at `apex`. Causal denotes
/// Time ∪ Light with one shared orientation and apex policy.
/// `apex_included` toggles membership of the apex alone.
struct ConeAtom {
  Point apex;
  ConeKind kind = ConeKind::Time;
  Orientation orientation = Orientation::Both;
  bool apex_included = true;
};

/// Open Euclidean ball, radius given squared. radius_sq > 0.
struct BallAtom {
  Point center;
  Scalar radius_sq;
};

/// A set of events as a symbolic expression tree with an exact
/// membership oracle. Leaves are cones, balls, singletons, all, empty;
/// nodes are the boolean combinators. Trees are immutable and share
/// structure; copying a Region is cheap.
class Region {
 public:
  struct Node;

  static Region all();
  static Region empty();
  static Region singleton(Point p);
  /// Throws std::invalid_argument on an invalid kind/orientation combo.
  static Region cone(ConeAtom atom);
  /// Throws std::invalid_argument unless radius_sq > 0.
  static Region ball(BallAtom atom);
  static Region ball(Point center, Scalar radius_sq);

  friend Region operator|(Region lhs, Region rhs);   // union
  friend Region operator&(Region lhs, Region rhs);   // intersection
  friend Region operator-(Region lhs, Region rhs);   // difference
  friend Region operator~(Region operand);           // complement

  /// Wraps an already-built node; the factories above are the usual way in.
  explicit Region(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  const Node& node() const { return *node_; }

 private:
  std::shared_ptr<const Node> node_;
};

struct AllAtom {};
struct EmptyAtom {};
struct SingletonAtom {
  Point point;
};
struct UnionNode {
  Region lhs, rhs;
};
struct IntersectionNode {
  Region lhs, rhs;
};
struct DifferenceNode {
  Region lhs, rhs;
};
struct ComplementNode {
  Region operand;
};

struct Region::Node {
  std::variant<AllAtom, EmptyAtom, SingletonAtom, ConeAtom, BallAtom,
               UnionNode, IntersectionNode, DifferenceNode, ComplementNode>
      v;
};

/// Exact membership, by structural recursion and sign tests.
bool contains(const Region& reg, const Point& p);

/// Image of the region under swap_axes, again as a region: Time and
/// Space kinds trade places, Future/Past trade with Plus/Minus, balls
/// map to balls. A Causal atom becomes Space ∪ Light.
Region swap_region(const Region& reg);

struct ProbeResult {
  bool found = false;
  std::optional<Point> point;
};

/// A point of `reg` strictly outside the closed ball, demonstrating
/// reg fits in no ball. Marches the eight axis/diagonal rays from the
/// ball's center, doubling the step until outside; succeeds for every
/// nonempty unbounded cone region anchored there. Bounded regions give
/// a not-found result.
ProbeResult escape_point(const Region& reg, const BallAtom& ball);

/// A point within delta of x (squared: euclid_sq(q - x) < delta_sq)
/// that is outside `reg`, demonstrating that reg contains no Euclidean
/// ball around x. Probes the eight fixed directions scaled below
/// delta. Sound when found; a not-found result proves nothing.
/// Throws std::invalid_argument unless x is a member of reg.
ProbeResult puncture_point(const Region& reg, const Point& x,
                           const Scalar& delta_sq);

/// Whether C^L(x) \ {x} is a subset of reg. reg must be a finite union
/// of cone atoms anchored at x (the catalog's canonical shapes); the
/// answer is decided symbolically from the atoms' null coverage and
/// cross-checked by sampling 100 rational points on each of the four
/// null half-rays. Disagreement raises internal_consistency_error.
bool contains_punctured_light_cone(const Region& reg, const Point& x);

/// Row-major boolean raster; row 0 is the top of the window (largest
/// time coordinate), columns run left to right in space.
struct Bitmap {
  std::size_t width = 0;   // samples along the space axis
  std::size_t height = 0;  // samples along the time axis
  std::vector<std::uint8_t> cells;  // 0 or 1, row-major

  std::uint8_t at(std::size_t row, std::size_t col) const {
    return cells[row * width + col];
  }
};

/// Evaluates membership on the rational lattice of the window.
/// A resolution of 1 along an axis samples the midpoint; otherwise the
/// endpoints are included and spacing is uniform. Throws
/// std::invalid_argument on a degenerate window or zero resolution.
Bitmap sample_grid(const Region& reg, const Point& corner_lo,
                   const Point& corner_hi, std::size_t res_t,
                   std::size_t res_s);

}  // namespace ctk
