#pragma once

#include "ctk/geometry.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ctk {

/// The ten causal order relations, numbered 1..10 in the traditional
/// order. Each is a decidable predicate on ordered point pairs.
enum class RelationId : int {
  Chronology = 1,          // <<   timelike future
  Horismos = 2,            // ->   lightlike future, reflexive
  Chorology = 3,           // <    spacelike plus
  IrrHorismos = 4,         // ->   without the diagonal
  ReflChronology = 5,      // <<=  chronology plus the diagonal
  Causal = 6,              // -<   timelike-or-lightlike future, reflexive
  IrrCausal = 7,           // -<   without the diagonal
  ReflChorology = 8,       // <=   chorology plus the diagonal
  ComplChronology = 9,     // <<c  plus space cone with its light boundary, reflexive
  IrrComplChronology = 10, // <<c  without the diagonal
};

struct RelationInfo {
  int index;                 // 1..10
  std::string_view name;     // stable CLI name, e.g. "refl-chronology"
  std::string_view symbol;
  bool reflexive;
};

const RelationInfo& info(RelationId r);
std::span<const RelationId> all_relations();

/// Accepts the stable name or the index "1".."10".
RelationId relation_from_name(std::string_view text);

/// Whether x R y. The future set of each relation, as a predicate on
/// d = y - x:
///   1: Q>0, t>0          2: d=0 or (Q=0, t>0)   3: Q<0, s>0
///   4: Q=0, t>0, d!=0    5: d=0 or (Q>0, t>0)   6: d=0 or (Q>=0, t>0)
///   7: Q>=0, t>0, d!=0   8: d=0 or (Q<0, s>0)
///   9: d=0 or (Q<=0, s>0)                      10: Q<=0, s>0, d!=0
/// Relations 9/10 are the plus space cone together with its light
/// boundary (the two null rays with s > 0); that is the only reading
/// under which 9 is transitive and the swap duality below is exact.
bool relates(RelationId r, const Point& x, const Point& y);

/// Conjugation by swap_axes: 1<->3, 5<->8, 6<->9, 7<->10, 2 and 4
/// fixed. For the eight relations in the swapped pairs,
///   relates(dual_relation(r), swap x, swap y) == relates(r, x, y)
/// holds pointwise. Horismos has no pointwise swap partner (swap sends
/// the future null half-cone to the plus one); for 2 and 4 only the
/// unordered relation is swap-invariant.
RelationId dual_relation(RelationId r);

/// Outcome of a sampled automorphism check. A counterexample, when
/// present, replays through `relates`.
struct PreservationReport {
  bool holds = true;
  std::optional<std::pair<Point, Point>> counterexample;
  bool failed_on_inverse = false;
  std::size_t samples_checked = 0;
};

/// Checks relates(r, x, y) == relates(r, m x, m y) for every sampled
/// pair, and the same through the exact inverse map. Stops at the
/// first counterexample. Throws std::domain_error if m is singular.
PreservationReport preserves(const AffineMap& m, RelationId r,
                             std::span<const std::pair<Point, Point>> sample);

/// Q-invariance of the linear part, decided exactly from the three
/// basis evaluations Q(e0), Q(e1), Q(e0+e1).
bool leaves_q_invariant(const Mat2& linear);

/// Q-invariant and maps (1,0) to a vector with t > 0.
bool is_orthochronous(const AffineMap& m);

/// Q-invariant and maps (0,1) to a vector with s > 0.
bool is_orthochorous(const AffineMap& m);

/// A light ray: base point plus a nonzero null direction. The
/// constructor enforces q_form(direction) == 0, direction != 0.
struct NullRay {
  NullRay(Point base, Point direction);

  Point base;
  Point direction;
};

enum class LightRayCheck { None, NullImage, Parallelism, IntervalLength };

/// Evidence that an affine map does (or does not) respect light-ray
/// geometry: null lines to null lines, parallels to parallels, equal
/// parameter intervals on parallel rays to equal intervals.
struct LightRayReport {
  bool holds = true;
  std::size_t rays_checked = 0;
  LightRayCheck failed_check = LightRayCheck::None;
  std::optional<Point> non_null_image_direction;
  std::optional<std::pair<std::size_t, std::size_t>> witness_rays;
};

LightRayReport check_light_ray_geometry(const AffineMap& m,
                                        std::span<const NullRay> rays);

}  // namespace ctk
