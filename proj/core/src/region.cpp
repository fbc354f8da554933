#include "ctk/region.hpp"

#include "ctk/errors.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace ctk {

namespace {

bool orientation_valid(ConeKind kind, Orientation o) {
  switch (kind) {
    case ConeKind::Time:
    case ConeKind::Causal:
      return o == Orientation::Future || o == Orientation::Past ||
             o == Orientation::Both;
    case ConeKind::Space:
      return o == Orientation::Plus || o == Orientation::Minus ||
             o == Orientation::Both;
    case ConeKind::Light:
      return true;
  }
  return false;
}

Region wrap(Region::Node node) {
  return Region(std::make_shared<const Region::Node>(std::move(node)));
}

}  // namespace

Region Region::all() { return wrap({AllAtom{}}); }
Region Region::empty() { return wrap({EmptyAtom{}}); }
Region Region::singleton(Point p) { return wrap({SingletonAtom{std::move(p)}}); }

Region Region::cone(ConeAtom atom) {
  if (!orientation_valid(atom.kind, atom.orientation)) {
    throw std::invalid_argument("cone orientation does not fit its kind");
  }
  return wrap({std::move(atom)});
}

Region Region::ball(BallAtom atom) {
  if (atom.radius_sq <= 0) {
    throw std::invalid_argument("ball radius_sq must be positive");
  }
  return wrap({std::move(atom)});
}

Region Region::ball(Point center, Scalar radius_sq) {
  return ball(BallAtom{std::move(center), std::move(radius_sq)});
}

Region operator|(Region lhs, Region rhs) {
  return wrap({UnionNode{std::move(lhs), std::move(rhs)}});
}
Region operator&(Region lhs, Region rhs) {
  return wrap({IntersectionNode{std::move(lhs), std::move(rhs)}});
}
Region operator-(Region lhs, Region rhs) {
  return wrap({DifferenceNode{std::move(lhs), std::move(rhs)}});
}
Region operator~(Region operand) {
  return wrap({ComplementNode{std::move(operand)}});
}

namespace {

bool cone_contains(const ConeAtom& atom, const Point& p) {
  const CausalClass cls = classify(atom.apex, p);
  if (cls == CausalClass::Equal) return atom.apex_included;
  const Orientation o = atom.orientation;
  switch (atom.kind) {
    case ConeKind::Time:
      if (cls == CausalClass::TimelikeFuture)
        return o == Orientation::Future || o == Orientation::Both;
      if (cls == CausalClass::TimelikePast)
        return o == Orientation::Past || o == Orientation::Both;
      return false;
    case ConeKind::Space:
      if (cls == CausalClass::SpacelikePlus)
        return o == Orientation::Plus || o == Orientation::Both;
      if (cls == CausalClass::SpacelikeMinus)
        return o == Orientation::Minus || o == Orientation::Both;
      return false;
    case ConeKind::Causal:
      if (cls == CausalClass::TimelikeFuture ||
          cls == CausalClass::LightlikeFuture)
        return o == Orientation::Future || o == Orientation::Both;
      if (cls == CausalClass::TimelikePast || cls == CausalClass::LightlikePast)
        return o == Orientation::Past || o == Orientation::Both;
      return false;
    case ConeKind::Light: {
      if (cls != CausalClass::LightlikeFuture &&
          cls != CausalClass::LightlikePast)
        return false;
      switch (o) {
        case Orientation::Future: return cls == CausalClass::LightlikeFuture;
        case Orientation::Past: return cls == CausalClass::LightlikePast;
        case Orientation::Plus: return p.s > atom.apex.s;
        case Orientation::Minus: return p.s < atom.apex.s;
        case Orientation::Both: return true;
      }
      return false;
    }
  }
  return false;
}

struct ContainsVisitor {
  const Point& p;

  bool operator()(const AllAtom&) const { return true; }
  bool operator()(const EmptyAtom&) const { return false; }
  bool operator()(const SingletonAtom& a) const { return a.point == p; }
  bool operator()(const ConeAtom& a) const { return cone_contains(a, p); }
  bool operator()(const BallAtom& a) const {
    return euclid_sq(p - a.center) < a.radius_sq;
  }
  bool operator()(const UnionNode& n) const {
    return contains(n.lhs, p) || contains(n.rhs, p);
  }
  bool operator()(const IntersectionNode& n) const {
    return contains(n.lhs, p) && contains(n.rhs, p);
  }
  bool operator()(const DifferenceNode& n) const {
    return contains(n.lhs, p) && !contains(n.rhs, p);
  }
  bool operator()(const ComplementNode& n) const {
    return !contains(n.operand, p);
  }
};

}  // namespace

bool contains(const Region& reg, const Point& p) {
  return std::visit(ContainsVisitor{p}, reg.node().v);
}

namespace {

Orientation swap_orientation(Orientation o) {
  switch (o) {
    case Orientation::Future: return Orientation::Plus;
    case Orientation::Past: return Orientation::Minus;
    case Orientation::Plus: return Orientation::Future;
    case Orientation::Minus: return Orientation::Past;
    case Orientation::Both: return Orientation::Both;
  }
  return o;
}

struct SwapVisitor {
  Region operator()(const AllAtom&) const { return Region::all(); }
  Region operator()(const EmptyAtom&) const { return Region::empty(); }
  Region operator()(const SingletonAtom& a) const {
    return Region::singleton(swap_axes(a.point));
  }
  Region operator()(const ConeAtom& a) const {
    const Point apex = swap_axes(a.apex);
    const Orientation o = swap_orientation(a.orientation);
    switch (a.kind) {
      case ConeKind::Time:
        return Region::cone({apex, ConeKind::Space, o, a.apex_included});
      case ConeKind::Space:
        return Region::cone({apex, ConeKind::Time, o, a.apex_included});
      case ConeKind::Light:
        return Region::cone({apex, ConeKind::Light, o, a.apex_included});
      case ConeKind::Causal:
        // Time ∪ Light swaps to Space ∪ Light.
        return Region::cone({apex, ConeKind::Space, o, a.apex_included}) |
               Region::cone({apex, ConeKind::Light, o, a.apex_included});
    }
    throw std::logic_error("unreachable");
  }
  Region operator()(const BallAtom& a) const {
    return Region::ball(swap_axes(a.center), a.radius_sq);
  }
  Region operator()(const UnionNode& n) const {
    return swap_region(n.lhs) | swap_region(n.rhs);
  }
  Region operator()(const IntersectionNode& n) const {
    return swap_region(n.lhs) & swap_region(n.rhs);
  }
  Region operator()(const DifferenceNode& n) const {
    return swap_region(n.lhs) - swap_region(n.rhs);
  }
  Region operator()(const ComplementNode& n) const {
    return ~swap_region(n.operand);
  }
};

}  // namespace

Region swap_region(const Region& reg) {
  return std::visit(SwapVisitor{}, reg.node().v);
}

namespace {

const std::array<Point, 8>& probe_directions() {
  static const std::array<Point, 8> dirs{{
      {Scalar(1), Scalar(0)},
      {Scalar(-1), Scalar(0)},
      {Scalar(0), Scalar(1)},
      {Scalar(0), Scalar(-1)},
      {Scalar(1), Scalar(1)},
      {Scalar(1), Scalar(-1)},
      {Scalar(-1), Scalar(1)},
      {Scalar(-1), Scalar(-1)},
  }};
  return dirs;
}

}  // namespace

ProbeResult escape_point(const Region& reg, const BallAtom& ball) {
  for (const Point& dir : probe_directions()) {
    if (!contains(reg, ball.center + dir)) continue;
    Scalar n(1);
    while (euclid_sq(n * dir) <= ball.radius_sq) n *= 2;
    const Point candidate = ball.center + n * dir;
    // Cone regions anchored at the center keep the whole ray; anything
    // else (balls, singletons) drops out here.
    if (contains(reg, candidate)) {
      return {true, candidate};
    }
  }
  return {};
}

ProbeResult puncture_point(const Region& reg, const Point& x,
                           const Scalar& delta_sq) {
  if (delta_sq <= 0) {
    throw std::invalid_argument("puncture delta_sq must be positive");
  }
  if (!contains(reg, x)) {
    throw std::invalid_argument("puncture anchor is not a member of the region");
  }
  for (const Point& dir : probe_directions()) {
    Scalar scale(1);
    while (euclid_sq(scale * dir) >= delta_sq) scale /= 2;
    const Point probe = x + scale * dir;
    if (!contains(reg, probe)) {
      return {true, probe};
    }
  }
  return {};
}

namespace {

// The four punctured null rays at an apex, indexed by the signs of the
// (t, s) displacement: NE, NW, SE, SW.
enum NullRayIndex { kNE = 0, kNW = 1, kSE = 2, kSW = 3 };

void cover_null_rays(const ConeAtom& atom, std::array<bool, 4>& covered) {
  const Orientation o = atom.orientation;
  if (atom.kind == ConeKind::Light || atom.kind == ConeKind::Causal) {
    const bool future = o == Orientation::Future || o == Orientation::Both;
    const bool past = o == Orientation::Past || o == Orientation::Both;
    if (future) covered[kNE] = covered[kNW] = true;
    if (past) covered[kSE] = covered[kSW] = true;
    if (atom.kind == ConeKind::Light) {
      if (o == Orientation::Plus) covered[kNE] = covered[kSE] = true;
      if (o == Orientation::Minus) covered[kNW] = covered[kSW] = true;
    }
  }
}

void collect_atoms(const Region& reg, const Point& x,
                   std::array<bool, 4>& covered) {
  if (const auto* u = std::get_if<UnionNode>(&reg.node().v)) {
    collect_atoms(u->lhs, x, covered);
    collect_atoms(u->rhs, x, covered);
    return;
  }
  const auto* atom = std::get_if<ConeAtom>(&reg.node().v);
  if (atom == nullptr) {
    throw std::invalid_argument(
        "light-cone containment expects a union of cone atoms");
  }
  if (atom->apex != x) {
    throw std::invalid_argument(
        "light-cone containment expects atoms anchored at the query point");
  }
  cover_null_rays(*atom, covered);
}

}  // namespace

bool contains_punctured_light_cone(const Region& reg, const Point& x) {
  std::array<bool, 4> covered{};
  collect_atoms(reg, x, covered);
  const bool symbolic = covered[0] && covered[1] && covered[2] && covered[3];

  const std::array<Point, 4> rays{{{Scalar(1), Scalar(1)},
                                   {Scalar(1), Scalar(-1)},
                                   {Scalar(-1), Scalar(1)},
                                   {Scalar(-1), Scalar(-1)}}};
  bool sampled = true;
  for (const Point& dir : rays) {
    for (int j = 1; j <= 100 && sampled; ++j) {
      const Scalar lambda(j, 7);
      sampled = contains(reg, x + lambda * dir);
    }
    if (!sampled) break;
  }
  if (symbolic != sampled) {
    throw internal_consistency_error(
        "symbolic and sampled light-cone containment disagree");
  }
  return symbolic;
}

Bitmap sample_grid(const Region& reg, const Point& corner_lo,
                   const Point& corner_hi, std::size_t res_t,
                   std::size_t res_s) {
  if (!(corner_lo.t < corner_hi.t) || !(corner_lo.s < corner_hi.s)) {
    throw std::invalid_argument("window corners must satisfy lo < hi");
  }
  if (res_t == 0 || res_s == 0) {
    throw std::invalid_argument("grid resolution must be at least 1");
  }

  const auto coordinate = [](const Scalar& lo, const Scalar& hi,
                             std::size_t res, std::size_t i) -> Scalar {
    if (res == 1) return (lo + hi) / 2;
    return lo + Scalar(static_cast<long>(i)) * (hi - lo) /
                    Scalar(static_cast<long>(res - 1));
  };

  Bitmap bitmap;
  bitmap.width = res_s;
  bitmap.height = res_t;
  bitmap.cells.reserve(res_t * res_s);
  for (std::size_t row = 0; row < res_t; ++row) {
    // Row 0 at the top of the window.
    const Scalar t = coordinate(corner_lo.t, corner_hi.t, res_t,
                                res_t - 1 - row);
    for (std::size_t col = 0; col < res_s; ++col) {
      const Scalar s = coordinate(corner_lo.s, corner_hi.s, res_s, col);
      bitmap.cells.push_back(contains(reg, Point{t, s}) ? 1 : 0);
    }
  }
  return bitmap;
}

}  // namespace ctk
