#pragma once

#include "ctk/region.hpp"
#include "ctk/relations.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ctk {

/// How a topology is built from its relation: straight from the order
/// (diamond subbase), as the interval topology (complements of futures
/// and pasts), or as the intersection of the latter with the Euclidean
/// topology E. Catalog index mod 3 = 1, 2, 0 respectively.
enum class ConstructionKind { OrderSubbase, Interval, IntersectionWithE };

std::string_view to_string(ConstructionKind k);

/// One of the thirty causally generated topologies: indices 1..30,
/// grouped in threes per generating relation (1-3 chronology,
/// 4-6 horismos, 7-9 chorology, 10-12 irr-horismos, 13-15
/// refl-chronology, 16-18 irr-causal, 19-21 causal, 22-24
/// refl-chorology, 25-27 irr-compl-chronology, 28-30 compl-chronology).
struct TopologyId {
  int index;
  RelationId relation;
  ConstructionKind kind;
  std::string_view notation;  // e.g. "T_<<", "T_in^<<", "Z_in^<<"
};

/// Throws std::invalid_argument unless 1 <= index <= 30.
const TopologyId& topology(int index);
std::span<const TopologyId> all_topologies();

/// Same construction kind over the dual relation. Involution; the
/// index pairing is 1-7, 2-8, 3-9, 13-22, 14-23, 15-24, 16-25, 17-26,
/// 18-27, 19-28, 20-29, 21-30, everything else fixed.
const TopologyId& dual_topology(const TopologyId& tid);

/// {y : x R y} as a region: cone atoms with the apex included exactly
/// when the relation is reflexive.
Region future_set(RelationId r, const Point& x);

/// {y : y R x}.
Region past_set(RelationId r, const Point& x);

/// The two subbasic sets [future_set, past_set] at x.
/// Throws std::invalid_argument unless tid.kind is OrderSubbase.
std::vector<Region> subbase_at(const TopologyId& tid, const Point& x);

/// future_set(r, a) ∩ past_set(r, b), the basic open of an order
/// topology. Throws unless tid.kind is OrderSubbase.
Region diamond(const TopologyId& tid, const Point& a, const Point& b);

/// The canonical basic open of the interval topology at x,
/// M \ (future_set(r, x) ∪ past_set(r, x)), in normalized cone form
/// (all cones Both-oriented):
///   2,3: C^S ∪ C^L           5,6: (C^S ∪ C^T) \ {x}   8,9: C^T ∪ C^L
///   11,12: C^T ∪ C^S         14,15: (C^S ∪ C^L) \ {x}
///   17,18: C^S               20,21: C^S \ {x}
///   23,24: (C^T ∪ C^L) \ {x} 26,27: C^T               29,30: C^T \ {x}
/// Throws unless tid.kind is Interval or IntersectionWithE.
Region interval_core(const TopologyId& tid, const Point& x);

/// Parameter for a canonical basic open; which alternative applies is
/// dictated by the construction kind.
struct DiamondParams {
  Point a, b;
};
struct AnchorSetParams {
  std::vector<Point> anchors;  // canonical form: {x}
};
struct BallParams {
  Scalar radius_sq;
};

/// Basic open of the topology around x.
///   OrderSubbase + DiamondParams: diamond(tid, a, b).
///   Interval + AnchorSetParams: intersection over the anchor set of
///     the subbasic complements; at anchor x itself both complements
///     are taken (giving interval_core for the canonical {x}), at
///     other anchors only the complements containing x.
///   IntersectionWithE + BallParams: B(x, radius_sq) ∩ interval_core.
/// Throws std::invalid_argument if the params don't match the kind or
/// if x does not end up inside the region (the topologies whose cores
/// delete their own anchor reject their canonical params this way).
Region basic_open(const TopologyId& tid, const Point& x,
                  const DiamondParams& params);
Region basic_open(const TopologyId& tid, const Point& x,
                  const AnchorSetParams& params);
Region basic_open(const TopologyId& tid, const Point& x,
                  const BallParams& params);

/// The canonical member region for a positive parameter, without the
/// anchor-membership guard of basic_open:
///   OrderSubbase: diamond with endpoints x -/+ param * axis, where the
///     axis is (1,0) for time/causal relations, (0,1) for space ones
///     and (1,1) for the two light ones (the only axis whose diamonds
///     contain x there);
///   Interval: interval_core(tid, x), param ignored;
///   IntersectionWithE: B(x, param^2) ∩ interval_core (param is the
///     radius, squared exactly).
Region canonical_member(const TopologyId& tid, const Point& x,
                        const Scalar& param);

/// Parameterized local family at x used by the convergence checker:
/// members come from canonical_member; smaller parameters give smaller
/// regions for the diamond and ball families. The euclidean() factory
/// gives the comparison family of plain open balls (radius = param);
/// it carries index 0.
class NeighborhoodFamily {
 public:
  NeighborhoodFamily(TopologyId tid, Point anchor);
  static NeighborhoodFamily euclidean(Point anchor);

  /// Catalog index 1..30, or 0 for the Euclidean ball family.
  int index() const;
  const TopologyId* tid() const { return tid_ ? &*tid_ : nullptr; }
  const Point& anchor() const { return anchor_; }
  bool monotone() const;

  /// Throws std::invalid_argument unless param > 0.
  Region member(const Scalar& param) const;

  /// Interval refinement by extra anchors (see basic_open).
  Region refined(const AnchorSetParams& params) const;

 private:
  explicit NeighborhoodFamily(Point anchor);
  std::optional<TopologyId> tid_;
  Point anchor_;
};

NeighborhoodFamily neighborhood_family(const TopologyId& tid, const Point& x);

/// Canonical formula of a catalog row, e.g. "B_eps(x) ∩ C^T(x)".
std::string_view formula(const TopologyId& tid);

}  // namespace ctk
