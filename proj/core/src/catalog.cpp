#include "ctk/catalog.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ctk {

std::string_view to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::OrderSubbase: return "order-subbase";
    case ConstructionKind::Interval: return "interval";
    case ConstructionKind::IntersectionWithE: return "intersection-with-E";
  }
  return "?";
}

namespace {

// Generating relation per index triple 1-3, 4-6, ..., 28-30.
constexpr std::array<RelationId, 10> kGroupRelation{{
    RelationId::Chronology,       // 1-3
    RelationId::Horismos,         // 4-6
    RelationId::Chorology,        // 7-9
    RelationId::IrrHorismos,      // 10-12
    RelationId::ReflChronology,   // 13-15
    RelationId::IrrCausal,        // 16-18
    RelationId::Causal,           // 19-21
    RelationId::ReflChorology,    // 22-24
    RelationId::IrrComplChronology,  // 25-27
    RelationId::ComplChronology,  // 28-30
}};

ConstructionKind kind_of(int index) {
  switch (index % 3) {
    case 1: return ConstructionKind::OrderSubbase;
    case 2: return ConstructionKind::Interval;
    default: return ConstructionKind::IntersectionWithE;
  }
}

const std::array<std::string, 30>& notation_table() {
  static const std::array<std::string, 30> table = [] {
    std::array<std::string, 30> t;
    for (int i = 1; i <= 30; ++i) {
      const RelationId r = kGroupRelation[static_cast<std::size_t>((i - 1) / 3)];
      const std::string sym{info(r).symbol};
      switch (kind_of(i)) {
        case ConstructionKind::OrderSubbase: t[i - 1] = "T_" + sym; break;
        case ConstructionKind::Interval: t[i - 1] = "T_in^" + sym; break;
        case ConstructionKind::IntersectionWithE: t[i - 1] = "Z_in^" + sym; break;
      }
    }
    return t;
  }();
  return table;
}

const std::array<TopologyId, 30>& topology_table() {
  static const std::array<TopologyId, 30> table = [] {
    std::array<TopologyId, 30> t;
    for (int i = 1; i <= 30; ++i) {
      t[i - 1] = TopologyId{
          i, kGroupRelation[static_cast<std::size_t>((i - 1) / 3)], kind_of(i),
          notation_table()[static_cast<std::size_t>(i - 1)]};
    }
    return t;
  }();
  return table;
}

Region cone_at(const Point& x, ConeKind kind, Orientation o, bool apex) {
  return Region::cone({x, kind, o, apex});
}

Region oriented_set(RelationId r, const Point& x, Orientation time_like,
                    Orientation space_like) {
  const bool apex = info(r).reflexive;
  switch (r) {
    case RelationId::Chronology:
    case RelationId::ReflChronology:
      return cone_at(x, ConeKind::Time, time_like, apex);
    case RelationId::Horismos:
    case RelationId::IrrHorismos:
      return cone_at(x, ConeKind::Light, time_like, apex);
    case RelationId::Chorology:
    case RelationId::ReflChorology:
      return cone_at(x, ConeKind::Space, space_like, apex);
    case RelationId::Causal:
    case RelationId::IrrCausal:
      return cone_at(x, ConeKind::Causal, time_like, apex);
    case RelationId::ComplChronology:
    case RelationId::IrrComplChronology:
      return cone_at(x, ConeKind::Space, space_like, apex) |
             cone_at(x, ConeKind::Light, space_like, apex);
  }
  throw std::logic_error("unreachable");
}

void require_kind(const TopologyId& tid, ConstructionKind want,
                  const char* op) {
  if (tid.kind != want) {
    throw std::invalid_argument(std::string(op) + " needs a " +
                                std::string(to_string(want)) + " topology, " +
                                std::string(tid.notation) + " is " +
                                std::string(to_string(tid.kind)));
  }
}

}  // namespace

const TopologyId& topology(int index) {
  if (index < 1 || index > 30) {
    throw std::invalid_argument("topology index must be in 1..30, got " +
                                std::to_string(index));
  }
  return topology_table()[static_cast<std::size_t>(index - 1)];
}

std::span<const TopologyId> all_topologies() { return topology_table(); }

const TopologyId& dual_topology(const TopologyId& tid) {
  const int offset = (tid.index - 1) % 3;
  const RelationId dual_rel = dual_relation(tid.relation);
  for (int g = 0; g < 10; ++g) {
    if (kGroupRelation[static_cast<std::size_t>(g)] == dual_rel) {
      return topology(g * 3 + offset + 1);
    }
  }
  throw std::logic_error("relation missing from the topology table");
}

Region future_set(RelationId r, const Point& x) {
  return oriented_set(r, x, Orientation::Future, Orientation::Plus);
}

Region past_set(RelationId r, const Point& x) {
  return oriented_set(r, x, Orientation::Past, Orientation::Minus);
}

std::vector<Region> subbase_at(const TopologyId& tid, const Point& x) {
  require_kind(tid, ConstructionKind::OrderSubbase, "subbase_at");
  return {future_set(tid.relation, x), past_set(tid.relation, x)};
}

Region diamond(const TopologyId& tid, const Point& a, const Point& b) {
  require_kind(tid, ConstructionKind::OrderSubbase, "diamond");
  return future_set(tid.relation, a) & past_set(tid.relation, b);
}

Region interval_core(const TopologyId& tid, const Point& x) {
  if (tid.kind == ConstructionKind::OrderSubbase) {
    throw std::invalid_argument("interval_core is undefined for " +
                                std::string(tid.notation));
  }
  const auto both = Orientation::Both;
  switch (tid.relation) {
    case RelationId::Chronology:  // C^S ∪ C^L, apex in
      return cone_at(x, ConeKind::Space, both, true) |
             cone_at(x, ConeKind::Light, both, true);
    case RelationId::Horismos:  // (C^S ∪ C^T) \ {x}
      return cone_at(x, ConeKind::Space, both, false) |
             cone_at(x, ConeKind::Time, both, false);
    case RelationId::Chorology:  // C^T ∪ C^L, apex in
      return cone_at(x, ConeKind::Causal, both, true);
    case RelationId::IrrHorismos:  // C^T ∪ C^S, apex in
      return cone_at(x, ConeKind::Time, both, true) |
             cone_at(x, ConeKind::Space, both, true);
    case RelationId::ReflChronology:  // (C^S ∪ C^L) \ {x}
      return cone_at(x, ConeKind::Space, both, false) |
             cone_at(x, ConeKind::Light, both, false);
    case RelationId::IrrCausal:  // C^S, apex in
      return cone_at(x, ConeKind::Space, both, true);
    case RelationId::Causal:  // C^S \ {x}
      return cone_at(x, ConeKind::Space, both, false);
    case RelationId::ReflChorology:  // (C^T ∪ C^L) \ {x}
      return cone_at(x, ConeKind::Causal, both, false);
    case RelationId::IrrComplChronology:  // C^T, apex in
      return cone_at(x, ConeKind::Time, both, true);
    case RelationId::ComplChronology:  // C^T \ {x}
      return cone_at(x, ConeKind::Time, both, false);
  }
  throw std::logic_error("unreachable");
}

namespace {

void require_member(const Region& reg, const Point& x, const TopologyId& tid) {
  if (!contains(reg, x)) {
    throw std::invalid_argument("anchor is not inside the basic open of " +
                                std::string(tid.notation) +
                                " (its regions exclude their defining event)");
  }
}

}  // namespace

Region basic_open(const TopologyId& tid, const Point& x,
                  const DiamondParams& params) {
  Region reg = diamond(tid, params.a, params.b);
  require_member(reg, x, tid);
  return reg;
}

Region basic_open(const TopologyId& tid, const Point& x,
                  const AnchorSetParams& params) {
  require_kind(tid, ConstructionKind::Interval, "basic_open");
  if (params.anchors.empty()) {
    throw std::invalid_argument("anchor set must be nonempty");
  }
  const RelationId r = tid.relation;
  std::optional<Region> acc;
  const auto add = [&acc](Region piece) {
    acc = acc ? (*acc & std::move(piece)) : std::move(piece);
  };
  for (const Point& a : params.anchors) {
    if (a == x) {
      add(~(future_set(r, a) | past_set(r, a)));
      continue;
    }
    // Only the subbasic complements that contain x.
    if (!relates(r, a, x)) add(~future_set(r, a));
    if (!relates(r, x, a)) add(~past_set(r, a));
  }
  Region reg = acc ? *acc : Region::all();
  require_member(reg, x, tid);
  return reg;
}

Region basic_open(const TopologyId& tid, const Point& x,
                  const BallParams& params) {
  require_kind(tid, ConstructionKind::IntersectionWithE, "basic_open");
  Region reg = Region::ball(x, params.radius_sq) & interval_core(tid, x);
  require_member(reg, x, tid);
  return reg;
}

namespace {

Point diamond_axis(RelationId r) {
  switch (r) {
    case RelationId::Chronology:
    case RelationId::ReflChronology:
    case RelationId::Causal:
    case RelationId::IrrCausal:
      return {Scalar(1), Scalar(0)};
    case RelationId::Chorology:
    case RelationId::ReflChorology:
    case RelationId::ComplChronology:
    case RelationId::IrrComplChronology:
      return {Scalar(0), Scalar(1)};
    case RelationId::Horismos:
    case RelationId::IrrHorismos:
      // The null axis: time-axis endpoints would give a diamond that
      // misses its own midpoint (it degenerates to two spacelike
      // points), so the light relations take their diamonds along
      // (1,1), where the diamond is the null segment through x.
      return {Scalar(1), Scalar(1)};
  }
  return {Scalar(1), Scalar(0)};
}

}  // namespace

Region canonical_member(const TopologyId& tid, const Point& x,
                        const Scalar& param) {
  if (param <= 0) {
    throw std::invalid_argument("family parameter must be positive, got " +
                                to_string(param));
  }
  switch (tid.kind) {
    case ConstructionKind::OrderSubbase: {
      const Point step = param * diamond_axis(tid.relation);
      return diamond(tid, x - step, x + step);
    }
    case ConstructionKind::Interval:
      return interval_core(tid, x);
    case ConstructionKind::IntersectionWithE:
      return Region::ball(x, param * param) & interval_core(tid, x);
  }
  throw std::logic_error("unreachable");
}

NeighborhoodFamily::NeighborhoodFamily(TopologyId tid, Point anchor)
    : tid_(tid), anchor_(std::move(anchor)) {}

NeighborhoodFamily::NeighborhoodFamily(Point anchor)
    : anchor_(std::move(anchor)) {}

NeighborhoodFamily NeighborhoodFamily::euclidean(Point anchor) {
  return NeighborhoodFamily(std::move(anchor));
}

int NeighborhoodFamily::index() const { return tid_ ? tid_->index : 0; }

bool NeighborhoodFamily::monotone() const { return true; }

Region NeighborhoodFamily::member(const Scalar& param) const {
  if (!tid_) {
    if (param <= 0) {
      throw std::invalid_argument("family parameter must be positive, got " +
                                  to_string(param));
    }
    return Region::ball(anchor_, param * param);
  }
  return canonical_member(*tid_, anchor_, param);
}

Region NeighborhoodFamily::refined(const AnchorSetParams& params) const {
  if (!tid_) {
    throw std::invalid_argument("the ball family has no interval refinement");
  }
  return basic_open(*tid_, anchor_, params);
}

NeighborhoodFamily neighborhood_family(const TopologyId& tid, const Point& x) {
  return NeighborhoodFamily(tid, x);
}

std::string_view formula(const TopologyId& tid) {
  static const std::array<std::string_view, 30> table{{
      "C_+^T(a) ∩ C_-^T(b)",                                        // 1
      "C^S(x) ∪ C^L(x)",                                            // 2
      "B_eps(x) ∩ [C^S(x) ∪ C^L(x)]",                               // 3
      "[C_+^L(a) ∪ {a}] ∩ [C_-^L(b) ∪ {b}]",                        // 4
      "[C^S(x) ∪ C^T(x)] ∖ {x}",                                    // 5
      "B_eps(x) ∩ [(C^S(x) ∪ C^T(x)) ∖ {x}]",                       // 6
      "C_+^S(a) ∩ C_-^S(b)",                                        // 7
      "C^T(x) ∪ C^L(x)",                                            // 8
      "B_eps(x) ∩ [C^T(x) ∪ C^L(x)]",                               // 9
      "[C_+^L(a) ∖ {a}] ∩ [C_-^L(b) ∖ {b}]",                        // 10
      "C^T(x) ∪ C^S(x)",                                            // 11
      "B_eps(x) ∩ [C^T(x) ∪ C^S(x)]",                               // 12
      "[C_+^T(a) ∪ {a}] ∩ [C_-^T(b) ∪ {b}]",                        // 13
      "[C^S(x) ∪ C^L(x)] ∖ {x}",                                    // 14
      "B_eps(x) ∩ [(C^S(x) ∪ C^L(x)) ∖ {x}]",                       // 15
      "[(C_+^T(a) ∪ C_+^L(a)) ∖ {a}] ∩ [(C_-^T(b) ∪ C_-^L(b)) ∖ {b}]",  // 16
      "C^S(x)",                                                     // 17
      "B_eps(x) ∩ C^S(x)",                                          // 18
      "[C_+^T(a) ∪ C_+^L(a)] ∩ [C_-^T(b) ∪ C_-^L(b)]",              // 19
      "C^S(x) ∖ {x}",                                               // 20
      "B_eps(x) ∩ [C^S(x) ∖ {x}]",                                  // 21
      "[C_+^S(a) ∪ {a}] ∩ [C_-^S(b) ∪ {b}]",                        // 22
      "[C^T(x) ∪ C^L(x)] ∖ {x}",                                    // 23
      "B_eps(x) ∩ [(C^T(x) ∪ C^L(x)) ∖ {x}]",                       // 24
      "[(C_+^S(a) ∪ C_+^L(a)) ∖ {a}] ∩ [(C_-^S(b) ∪ C_-^L(b)) ∖ {b}]",  // 25
      "C^T(x)",                                                     // 26
      "B_eps(x) ∩ C^T(x)",                                          // 27
      "[C_+^S(a) ∪ C_+^L(a)] ∩ [C_-^S(b) ∪ C_-^L(b)]",              // 28
      "C^T(x) ∖ {x}",                                               // 29
      "B_eps(x) ∩ [C^T(x) ∖ {x}]",                                  // 30
  }};
  return table[static_cast<std::size_t>(tid.index - 1)];
}

}  // namespace ctk
