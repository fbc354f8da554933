#include "ctk/analysis.hpp"

#include "ctk/errors.hpp"

#include <array>
#include <random>
#include <stdexcept>
#include <string>

namespace ctk {

namespace {

// Probe geometry shared by both comparability checks. The interior
// offset and delta are tuned to each other: probes from an offset site
// reach exactly the null boundary of the cone the site sits in.
const Scalar kPunctureDeltaSq = Scalar(1, 16);
const Scalar kInteriorOffset = Scalar(1, 8);
const Scalar kEscapeRadiusSq = Scalar(1);

// A member of the core adjacent to its boundary, for the topologies
// whose cores exclude the anchor itself (those of the reflexive
// relations, plus horismos whose core misses every null point).
Point interior_site(RelationId r, const Point& x) {
  switch (r) {
    case RelationId::ReflChronology:  // cores keep the null rays
    case RelationId::ReflChorology:
      return x + Point{kInteriorOffset, kInteriorOffset};
    case RelationId::Causal:  // space cone without apex
      return x + Point{Scalar(0), kInteriorOffset};
    case RelationId::Horismos:  // both open cones
    case RelationId::ComplChronology:  // time cone without apex
      return x + Point{kInteriorOffset, Scalar(0)};
    default:
      return x;
  }
}

ComparabilityEvidence puncture_evidence(const TopologyId& tid, const Point& x,
                                        Region region) {
  const Point site =
      contains(region, x) ? x : interior_site(tid.relation, x);
  const ProbeResult probe = puncture_point(region, site, kPunctureDeltaSq);
  if (!probe.found) {
    throw internal_consistency_error(
        "no puncture found for " + std::string(tid.notation) +
        " at its designated probe site");
  }
  return ComparabilityEvidence{x,
                               std::move(region),
                               site,
                               *probe.point,
                               kPunctureDeltaSq,
                               std::nullopt,
                               kEscapeRadiusSq,
                               0};
}

}  // namespace

bool reverify(const ComparabilityReport& report) {
  for (const ComparabilityEvidence& ev : report.evidence) {
    if (!contains(ev.region, ev.puncture_site)) return false;
    if (contains(ev.region, ev.puncture_probe)) return false;
    if (!(euclid_sq(ev.puncture_probe - ev.puncture_site) <
          ev.puncture_delta_sq)) {
      return false;
    }
    if (ev.escape) {
      if (!contains(ev.region, *ev.escape)) return false;
      if (!(euclid_sq(*ev.escape - ev.anchor) > ev.escape_radius_sq)) {
        return false;
      }
    }
  }
  return true;
}

ComparabilityReport check_strictly_finer_than_E(const TopologyId& tid,
                                                std::span<const Point> anchors) {
  if (tid.kind != ConstructionKind::IntersectionWithE) {
    throw std::invalid_argument("check_strictly_finer_than_E needs an "
                                "intersection topology");
  }
  ComparabilityReport report;
  report.tid = tid.index;
  report.claim = ComparabilityClaim::StrictlyFinerThanE;
  bool ok = !anchors.empty();
  for (const Point& x : anchors) {
    Region region = Region::ball(x, kEscapeRadiusSq) & interval_core(tid, x);
    ComparabilityEvidence ev = puncture_evidence(tid, x, std::move(region));

    // Inclusion half: basic opens sit inside their ball by
    // construction; spot-check it on the surrounding lattice.
    std::size_t checked = 0;
    for (int i = -5; i <= 5; ++i) {
      for (int j = -5; j <= 5; ++j) {
        const Point p = x + Point{Scalar(i, 4), Scalar(j, 4)};
        if (!contains(ev.region, p)) continue;
        ++checked;
        if (!(euclid_sq(p - x) < kEscapeRadiusSq)) ok = false;
      }
    }
    ev.inclusion_checked = checked;
    if (checked == 0) ok = false;
    report.evidence.push_back(std::move(ev));
  }
  report.verdict = ok && reverify(report);
  return report;
}

ComparabilityReport check_incomparable_with_E(const TopologyId& tid,
                                              std::span<const Point> anchors) {
  if (tid.kind != ConstructionKind::Interval) {
    throw std::invalid_argument(
        "check_incomparable_with_E needs an interval topology");
  }
  ComparabilityReport report;
  report.tid = tid.index;
  report.claim = ComparabilityClaim::IncomparableWithE;
  bool ok = !anchors.empty();
  for (const Point& x : anchors) {
    ComparabilityEvidence ev =
        puncture_evidence(tid, x, interval_core(tid, x));
    const ProbeResult escape =
        escape_point(ev.region, BallAtom{x, kEscapeRadiusSq});
    if (!escape.found) {
      ok = false;
    } else {
      ev.escape = escape.point;
    }
    report.evidence.push_back(std::move(ev));
  }
  report.verdict = ok && reverify(report);
  return report;
}

ConvergenceReport converges(std::span<const Point> seq, const Point& limit,
                            const NeighborhoodFamily& family,
                            std::span<const Scalar> params) {
  if (seq.empty()) throw std::invalid_argument("sequence must be nonempty");
  if (family.anchor() != limit) {
    throw std::invalid_argument("the family must be anchored at the limit");
  }
  ConvergenceReport report;
  report.tid = family.index();
  report.params.assign(params.begin(), params.end());
  report.converged = true;
  for (const Scalar& param : params) {
    Region member = family.member(param);
    std::optional<std::size_t> last_escape;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (!contains(member, seq[i])) last_escape = i;
    }
    MemberOutcome outcome{param, std::nullopt, std::nullopt};
    if (!last_escape) {
      outcome.tail_start = 0;
    } else if (*last_escape + 1 < seq.size()) {
      outcome.tail_start = *last_escape + 1;
    } else {
      // The final term escapes: no tail exists and the escaping term
      // defeats every candidate tail index.
      outcome.escape_index = *last_escape;
      report.converged = false;
      if (!report.witness_member) {
        report.witness_member = member;
        report.witness_escape_index = *last_escape;
      }
    }
    report.members.push_back(std::move(outcome));
  }
  return report;
}

ConvergenceReport converges(std::span<const Point> seq, const Point& limit,
                            const TopologyId& tid,
                            std::span<const Scalar> params) {
  return converges(seq, limit, neighborhood_family(tid, limit), params);
}

NeighborhoodFamily euclidean_family(const Point& anchor) {
  return NeighborhoodFamily::euclidean(anchor);
}

ConvergenceReport converges_euclidean(std::span<const Point> seq,
                                      const Point& limit,
                                      std::span<const Scalar> params) {
  return converges(seq, limit, euclidean_family(limit), params);
}

namespace {

bool claimed_holds(int index) {
  switch (index) {
    case 2: case 3: case 8: case 9:
    case 14: case 15: case 23: case 24:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<LctAuditRow> lct_audit(std::span<const Point> anchors) {
  if (anchors.empty()) {
    throw std::invalid_argument("lct_audit needs at least one anchor");
  }
  std::vector<LctAuditRow> rows;
  for (const TopologyId& tid : all_topologies()) {
    if (tid.kind == ConstructionKind::OrderSubbase) continue;
    bool first = true;
    bool computed = false;
    for (const Point& x : anchors) {
      const bool value =
          contains_punctured_light_cone(interval_core(tid, x), x);
      if (first) {
        computed = value;
        first = false;
      } else if (value != computed) {
        throw internal_consistency_error(
            "light-cone containment of " + std::string(tid.notation) +
            " varies across anchors");
      }
    }
    const LctGroup group =
        claimed_holds(tid.index) ? LctGroup::ClaimedHolds : LctGroup::ClaimedFails;
    // The bundled classification pairs "holds" with basic opens *not*
    // containing their light cone.
    const bool claimed_containment = group == LctGroup::ClaimedFails;
    rows.push_back(LctAuditRow{tid.index, computed, group,
                               computed != claimed_containment});
  }
  return rows;
}

ConvergenceReport null_sequence_experiment(const TopologyId& tid,
                                           std::size_t n_terms) {
  if (n_terms < 2) {
    throw std::invalid_argument("null sequence needs at least two terms");
  }
  std::vector<Point> seq;
  seq.reserve(n_terms);
  for (std::size_t k = 1; k <= n_terms; ++k) {
    const Scalar lambda(1, static_cast<long>(k));
    seq.push_back(Point{lambda, lambda});
  }
  const Point origin{Scalar(0), Scalar(0)};
  std::vector<Scalar> params;
  if (tid.kind == ConstructionKind::Interval) {
    params = {Scalar(1)};
  } else {
    params = {Scalar(1), Scalar(1, 2), Scalar(1, 4)};
  }
  return converges(seq, origin, tid, params);
}

std::span<const Point> default_anchors() {
  static const std::array<Point, 3> anchors{{
      {Scalar(0), Scalar(0)},
      {Scalar(3), Scalar(-2)},
      {Scalar(-5, 2), Scalar(7, 3)},
  }};
  return anchors;
}

std::vector<std::pair<Point, Point>> sample_pairs(std::size_t count) {
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(count);
  const std::array<Scalar, 5> grid{Scalar(-1), Scalar(-1, 2), Scalar(0),
                                   Scalar(1, 2), Scalar(1)};
  for (const Scalar& t1 : grid) {
    for (const Scalar& s1 : grid) {
      for (const Scalar& t2 : grid) {
        for (const Scalar& s2 : grid) {
          if (pairs.size() == count) return pairs;
          pairs.push_back({Point{t1, s1}, Point{t2, s2}});
        }
      }
    }
  }
  std::mt19937_64 rng(0x5eed2d11u);
  const auto rational = [&rng]() -> Scalar {
    const long num = static_cast<long>(rng() % 25) - 12;
    const long den = static_cast<long>(rng() % 9) + 1;
    return Scalar(num, den);
  };
  while (pairs.size() < count) {
    pairs.push_back({Point{rational(), rational()},
                     Point{rational(), rational()}});
  }
  return pairs;
}

std::vector<NullRay> standard_rays() {
  const Point ne{Scalar(1), Scalar(1)};
  const Point nw{Scalar(1), Scalar(-1)};
  return {
      NullRay({Scalar(0), Scalar(0)}, ne),
      NullRay({Scalar(0), Scalar(1)}, ne),   // parallel to the first
      NullRay({Scalar(0), Scalar(0)}, nw),
      NullRay({Scalar(2), Scalar(0)}, nw),
      NullRay({Scalar(-1), Scalar(1, 2)}, ne),
      NullRay({Scalar(1, 3), Scalar(0)}, nw),
  };
}

}  // namespace ctk
