#include "ctk/analysis.hpp"

#include "ctk/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using namespace ctk;

namespace {

Point pt(long t, long s) { return {Scalar(t), Scalar(s)}; }
const Point kOrigin = {Scalar(0), Scalar(0)};

std::vector<Point> harmonic_seq(long n, bool timelike) {
  std::vector<Point> seq;
  for (long k = 1; k <= n; ++k) {
    const Scalar lambda(1, k);
    seq.push_back(timelike ? Point{lambda, Scalar(0)}
                           : Point{Scalar(0), lambda});
  }
  return seq;
}

}  // namespace

TEST_CASE("strictly-finer check: every intersection topology, witnesses verified") {
  for (const TopologyId& tid : all_topologies()) {
    if (tid.kind != ConstructionKind::IntersectionWithE) continue;
    const ComparabilityReport report =
        check_strictly_finer_than_E(tid, default_anchors());
    CHECK(report.verdict);
    CHECK(report.claim == ComparabilityClaim::StrictlyFinerThanE);
    CHECK(report.evidence.size() == default_anchors().size());
    CHECK(reverify(report));
    for (const ComparabilityEvidence& ev : report.evidence) {
      CHECK(ev.inclusion_checked > 0);
      CHECK_FALSE(contains(ev.region, ev.puncture_probe));
      CHECK(euclid_sq(ev.puncture_probe - ev.puncture_site) <
            ev.puncture_delta_sq);
    }
  }
  CHECK_THROWS_AS(check_strictly_finer_than_E(topology(2), default_anchors()),
                  std::invalid_argument);
}

TEST_CASE("strictly-finer check: the path-topology analogue punctures sideways") {
  const ComparabilityReport report =
      check_strictly_finer_than_E(topology(27), default_anchors());
  REQUIRE(report.verdict);
  // The timelike probe directions stay inside B ∩ C^T; the spacelike
  // one leaves.
  const ComparabilityEvidence& ev = report.evidence.front();
  CHECK(ev.puncture_site == ev.anchor);
  CHECK(ev.puncture_probe.t == ev.anchor.t);
  CHECK(ev.puncture_probe.s != ev.anchor.s);
}

TEST_CASE("incomparable check: every interval topology, witnesses verified") {
  for (const TopologyId& tid : all_topologies()) {
    if (tid.kind != ConstructionKind::Interval) continue;
    const ComparabilityReport report =
        check_incomparable_with_E(tid, default_anchors());
    CHECK(report.verdict);
    CHECK(report.claim == ComparabilityClaim::IncomparableWithE);
    CHECK(reverify(report));
    for (const ComparabilityEvidence& ev : report.evidence) {
      REQUIRE(ev.escape.has_value());
      CHECK(contains(ev.region, *ev.escape));
      CHECK(euclid_sq(*ev.escape - ev.anchor) > ev.escape_radius_sq);
    }
  }
  CHECK_THROWS_AS(check_incomparable_with_E(topology(3), default_anchors()),
                  std::invalid_argument);
}

TEST_CASE("incomparable check: spot witnesses at the origin") {
  const ComparabilityReport r2 =
      check_incomparable_with_E(topology(2), default_anchors());
  CHECK(r2.evidence.front().puncture_probe == Point{Scalar(1, 8), Scalar(0)});
  CHECK(*r2.evidence.front().escape == pt(0, 2));

  const ComparabilityReport r26 =
      check_incomparable_with_E(topology(26), default_anchors());
  CHECK(r26.evidence.front().puncture_probe == Point{Scalar(0), Scalar(1, 8)});
  CHECK(*r26.evidence.front().escape == pt(2, 0));

  const ComparabilityReport r8 =
      check_incomparable_with_E(topology(8), default_anchors());
  CHECK(*r8.evidence.front().escape == pt(2, 0));
}

TEST_CASE("Euclidean convergence tails match the ball radii") {
  const auto seq = harmonic_seq(100, true);  // (1/k, 0)
  const std::vector<Scalar> eps{Scalar(1), Scalar(1, 2), Scalar(1, 4)};
  const ConvergenceReport report = converges_euclidean(seq, kOrigin, eps);
  CHECK(report.converged);
  CHECK(report.tid == 0);
  REQUIRE(report.members.size() == 3);
  // Terms are 0-indexed: 1/k enters the ball of radius eps once k > 1/eps.
  CHECK(*report.members[0].tail_start == 1);
  CHECK(*report.members[1].tail_start == 2);
  CHECK(*report.members[2].tail_start == 4);
}

TEST_CASE("a spacelike approach never converges in the path-topology analogue") {
  const auto seq = harmonic_seq(100, false);  // (0, 1/k)
  const std::vector<Scalar> eps{Scalar(1)};
  const ConvergenceReport report = converges(seq, kOrigin, topology(27), eps);
  CHECK_FALSE(report.converged);
  REQUIRE(report.witness_member.has_value());
  CHECK(*report.witness_escape_index == seq.size() - 1);
  // Refutation is complete: the escaping term really is outside.
  CHECK_FALSE(contains(*report.witness_member, seq[*report.witness_escape_index]));
  // ... and the same approach is fine Euclidean-wise.
  CHECK(converges_euclidean(seq, kOrigin, eps).converged);
}

TEST_CASE("null approach distinguishes the causal-cone core from the space-cone core") {
  std::vector<Point> null_seq;
  for (long k = 1; k <= 100; ++k) {
    null_seq.push_back({Scalar(1, k), Scalar(1, k)});
  }
  const std::vector<Scalar> eps{Scalar(1), Scalar(1, 2)};
  CHECK(converges(null_seq, kOrigin, topology(9), eps).converged);
  CHECK_FALSE(converges(null_seq, kOrigin, topology(18), eps).converged);
}

TEST_CASE("convergence verdicts are swap-dual") {
  std::vector<Point> seq;
  for (long k = 1; k <= 50; ++k) seq.push_back({Scalar(1, k), Scalar(0)});
  std::vector<Point> swapped;
  for (const Point& p : seq) swapped.push_back(swap_axes(p));
  const std::vector<Scalar> eps{Scalar(1), Scalar(1, 2)};
  for (const int index : {2, 3, 9, 17, 18, 26, 27, 1, 7}) {
    const TopologyId& tid = topology(index);
    const ConvergenceReport direct = converges(seq, kOrigin, tid, eps);
    const ConvergenceReport dual =
        converges(swapped, kOrigin, dual_topology(tid), eps);
    CHECK(direct.converged == dual.converged);
  }
}

TEST_CASE("converges validates its inputs") {
  const std::vector<Scalar> eps{Scalar(1)};
  CHECK_THROWS_AS(
      converges(std::vector<Point>{}, kOrigin, topology(3), eps),
      std::invalid_argument);
  const auto seq = harmonic_seq(5, true);
  const std::vector<Scalar> bad{Scalar(-1)};
  CHECK_THROWS_AS(converges(seq, kOrigin, topology(3), bad),
                  std::invalid_argument);
}

TEST_CASE("null sequence experiment over the catalog") {
  // Cores with the light rays admit the null approach.
  for (const int index : {3, 9, 15, 24, 2, 8, 14, 23}) {
    const ConvergenceReport report =
        null_sequence_experiment(topology(index), 100);
    CHECK(report.converged);
  }
  // Cores without them refute it, with a replayable witness.
  for (const int index : {6, 12, 18, 21, 27, 30, 5, 11, 17, 20, 26, 29}) {
    const ConvergenceReport report =
        null_sequence_experiment(topology(index), 100);
    CHECK_FALSE(report.converged);
    REQUIRE(report.witness_member.has_value());
    const Point escaping{Scalar(1, static_cast<long>(*report.witness_escape_index) + 1),
                         Scalar(1, static_cast<long>(*report.witness_escape_index) + 1)};
    CHECK_FALSE(contains(*report.witness_member, escaping));
  }
  // The Alexandrov diamonds also swallow the null ray eventually.
  CHECK(null_sequence_experiment(topology(1), 100).converged);
  CHECK_THROWS_AS(null_sequence_experiment(topology(3), 1),
                  std::invalid_argument);
}

TEST_CASE("lct audit computes the containment column and flags every row") {
  const std::vector<LctAuditRow> rows = lct_audit(default_anchors());
  REQUIRE(rows.size() == 20);
  for (const LctAuditRow& row : rows) {
    const bool expected_contains = row.tid == 2 || row.tid == 3 ||
                                   row.tid == 8 || row.tid == 9 ||
                                   row.tid == 14 || row.tid == 15 ||
                                   row.tid == 23 || row.tid == 24;
    CHECK(row.computed_contains_light_cone == expected_contains);
    CHECK((row.claimed_group == LctGroup::ClaimedHolds) == expected_contains);
    // The claimed pairing puts containment on the other side, so every
    // row is discrepant; the audit must surface that, not smooth it over.
    CHECK(row.discrepancy_flag);
  }
  CHECK_THROWS_AS(lct_audit(std::span<const Point>{}), std::invalid_argument);
}

TEST_CASE("sample pairs are deterministic and cover the diagonal") {
  const auto a = sample_pairs(1000);
  const auto b = sample_pairs(1000);
  REQUIRE(a.size() == 1000);
  CHECK(a.size() == b.size());
  bool diagonal = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
    diagonal = diagonal || a[i].first == a[i].second;
  }
  CHECK(diagonal);
}
