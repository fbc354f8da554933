// Acceptance suite: one test case per criterion, each printing a
// single [ok] line once every assertion in it has held. Run through
// ctest or directly; the binary fails if any criterion fails.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctk/analysis.hpp"
#include "ctk/errors.hpp"
#include "ctk/io.hpp"

#include "cli_support.hpp"
#include "test_support.hpp"

#include <cstdio>
#include <set>
#include <vector>

using namespace ctk;
using ctk_test::make_rng;
using ctk_test::rand_point;
using ctk_test::rand_region;

namespace {

Point pt(long t, long s) { return {Scalar(t), Scalar(s)}; }
const Point kOrigin = {Scalar(0), Scalar(0)};

void report(int criterion, const char* summary) {
  std::printf("[ok] criterion %d: %s\n", criterion, summary);
  std::fflush(stdout);
}

std::vector<Point> grid_41x41(const Point& center) {
  std::vector<Point> points;
  points.reserve(41 * 41);
  for (long i = -20; i <= 20; ++i) {
    for (long j = -20; j <= 20; ++j) {
      points.push_back(center + Point{Scalar(i, 4), Scalar(j, 4)});
    }
  }
  return points;
}

}  // namespace

TEST_CASE("criterion 1: reflexivity table") {
  auto rng = make_rng(101);
  std::size_t checks = 0;
  for (int i = 0; i < 50; ++i) {
    const Point x = rand_point(rng);
    for (const RelationId r : all_relations()) {
      REQUIRE(relates(r, x, x) == info(r).reflexive);
      ++checks;
    }
  }
  REQUIRE(checks == 500);
  report(1, "relates(r, x, x) matches the reflexivity flag, 500/500");
}

TEST_CASE("criterion 2: interval-core dual-implementation oracle") {
  std::size_t agreements = 0;
  for (const TopologyId& tid : all_topologies()) {
    if (tid.kind != ConstructionKind::Interval) continue;
    for (const Point& anchor : default_anchors()) {
      const Region core = interval_core(tid, anchor);
      const auto grid = grid_41x41(anchor);
      REQUIRE(grid.size() == 1681);
      for (const Point& p : grid) {
        const bool set_builder = !relates(tid.relation, anchor, p) &&
                                 !relates(tid.relation, p, anchor);
        REQUIRE(contains(core, p) == set_builder);
        ++agreements;
      }
    }
  }
  REQUIRE(agreements == 10 * 3 * 1681);
  report(2, "normalized cone cores equal the set-builder predicate on "
            "41x41 grids at 3 anchors, 50430/50430");
}

TEST_CASE("criterion 3: comparability suite") {
  for (const TopologyId& tid : all_topologies()) {
    if (tid.kind == ConstructionKind::OrderSubbase) continue;
    if (tid.kind == ConstructionKind::IntersectionWithE) {
      const ComparabilityReport r =
          check_strictly_finer_than_E(tid, default_anchors());
      REQUIRE(r.verdict);
      REQUIRE(r.evidence.size() == 3);
      REQUIRE(reverify(r));
      for (const ComparabilityEvidence& ev : r.evidence) {
        REQUIRE(contains(ev.region, ev.puncture_site));
        REQUIRE_FALSE(contains(ev.region, ev.puncture_probe));
        REQUIRE(euclid_sq(ev.puncture_probe - ev.puncture_site) <
                ev.puncture_delta_sq);
        REQUIRE(ev.inclusion_checked > 0);
      }
    } else {
      const ComparabilityReport r =
          check_incomparable_with_E(tid, default_anchors());
      REQUIRE(r.verdict);
      REQUIRE(reverify(r));
      for (const ComparabilityEvidence& ev : r.evidence) {
        REQUIRE(ev.escape.has_value());
        REQUIRE(contains(ev.region, *ev.escape));
        REQUIRE(euclid_sq(*ev.escape - ev.anchor) > ev.escape_radius_sq);
        REQUIRE_FALSE(contains(ev.region, ev.puncture_probe));
      }
    }
  }
  report(3, "all 10 intersection and 10 interval topologies pass their "
            "comparability checks at 3 anchors, every witness re-verified");
}

TEST_CASE("criterion 4: duality") {
  const std::pair<int, int> pairing[] = {
      {1, 7},   {2, 8},   {3, 9},   {4, 4},   {5, 5},   {6, 6},
      {10, 10}, {11, 11}, {12, 12}, {13, 22}, {14, 23}, {15, 24},
      {16, 25}, {17, 26}, {18, 27}, {19, 28}, {20, 29}, {21, 30}};
  std::set<int> seen;
  for (const auto& [a, b] : pairing) {
    REQUIRE(dual_topology(topology(a)).index == b);
    REQUIRE(dual_topology(topology(b)).index == a);
    seen.insert(a);
    seen.insert(b);
  }
  REQUIRE(seen.size() == 30);
  for (const TopologyId& tid : all_topologies()) {
    REQUIRE(dual_topology(dual_topology(tid)).index == tid.index);
  }

  const Point x = {Scalar(1, 2), Scalar(-1, 3)};
  const auto grid = grid_41x41(x);
  for (const TopologyId& tid : all_topologies()) {
    const Region member = canonical_member(tid, x, Scalar(1));
    const Region dual_member =
        canonical_member(dual_topology(tid), swap_axes(x), Scalar(1));
    for (const Point& p : grid) {
      REQUIRE(contains(dual_member, swap_axes(p)) == contains(member, p));
    }
  }
  report(4, "dual_topology is the stated involution and swap conjugation "
            "holds at all 1681 grid points for all 30 topologies");
}

TEST_CASE("criterion 5: automorphism checks") {
  const auto pairs = sample_pairs(1000);
  REQUIRE(pairs.size() == 1000);

  std::vector<AffineMap> preserving{
      boost_from_parameter(Scalar(2)),
      boost_from_parameter(Scalar(3)),
      boost_from_parameter(Scalar(5, 2)),
      translation_map(pt(1, 1)),
      translation_map({Scalar(-3, 7), Scalar(2)}),
      dilatation_map(Scalar(2)),
      dilatation_map(Scalar(1, 3)),
  };
  for (const AffineMap& m : preserving) {
    for (const RelationId r : all_relations()) {
      const PreservationReport rep = preserves(m, r, pairs);
      REQUIRE(rep.holds);
      REQUIRE(rep.samples_checked == 1000);
    }
  }

  const PreservationReport t_breaks =
      preserves(time_reflection(), RelationId::Chronology, pairs);
  REQUIRE_FALSE(t_breaks.holds);
  REQUIRE(t_breaks.counterexample.has_value());
  REQUIRE(preserves(time_reflection(), RelationId::Chorology, pairs).holds);

  const PreservationReport s_breaks =
      preserves(space_reflection(), RelationId::Chorology, pairs);
  REQUIRE_FALSE(s_breaks.holds);
  REQUIRE(s_breaks.counterexample.has_value());
  REQUIRE(preserves(space_reflection(), RelationId::Chronology, pairs).holds);

  const auto rays = standard_rays();
  for (const AffineMap& m :
       {boost_from_parameter(Scalar(2)), boost_from_parameter(Scalar(3)),
        boost_from_parameter(Scalar(5, 2)), identity_map(), time_reflection(),
        space_reflection(), translation_map(pt(2, -1)),
        compose(boost_from_parameter(Scalar(2)), time_reflection())}) {
    REQUIRE(check_light_ray_geometry(m, rays).holds);
  }
  const LightRayReport rot = check_light_ray_geometry(
      linear_map(Scalar(3, 5), Scalar(-4, 5), Scalar(4, 5), Scalar(3, 5)),
      rays);
  REQUIRE_FALSE(rot.holds);
  REQUIRE(rot.non_null_image_direction.has_value());
  REQUIRE(q_form(*rot.non_null_image_direction) != 0);
  report(5, "boosts/translations/dilatations preserve all 10 relations on "
            "1000 pairs; reflections break exactly the expected ones; "
            "light-ray geometry verdicts are as stated");
}

TEST_CASE("criterion 6: LCT audit") {
  const std::vector<LctAuditRow> rows = lct_audit(default_anchors());
  REQUIRE(rows.size() == 20);
  const std::set<int> contains_group{2, 3, 8, 9, 14, 15, 23, 24};
  std::size_t flagged = 0;
  for (const LctAuditRow& row : rows) {
    const bool expected = contains_group.count(row.tid) > 0;
    REQUIRE(row.computed_contains_light_cone == expected);
    const bool claimed_containment = row.claimed_group == LctGroup::ClaimedFails;
    REQUIRE(row.discrepancy_flag ==
            (row.computed_contains_light_cone != claimed_containment));
    if (row.discrepancy_flag) ++flagged;
  }
  REQUIRE(flagged > 0);  // the audit must surface the inconsistency
  // Anchor independence is enforced inside lct_audit; run it per anchor
  // too and compare.
  for (const Point& anchor : default_anchors()) {
    const std::vector<Point> single{anchor};
    const auto rows_here = lct_audit(single);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      REQUIRE(rows_here[i].computed_contains_light_cone ==
              rows[i].computed_contains_light_cone);
    }
  }
  report(6, "computed light-cone-containment column is anchor-independent, "
            "matches the expected 8/12 split, and every contradicting row "
            "is flagged (all 20 are)");
}

TEST_CASE("criterion 7: null-sequence experiment") {
  for (const int index : {3, 9, 15, 24}) {
    const ConvergenceReport rep = null_sequence_experiment(topology(index), 100);
    REQUIRE(rep.converged);
    for (const MemberOutcome& m : rep.members) {
      REQUIRE(m.tail_start.has_value());
    }
  }
  for (const int index : {6, 12, 18, 21, 27, 30}) {
    const ConvergenceReport rep = null_sequence_experiment(topology(index), 100);
    REQUIRE_FALSE(rep.converged);
    REQUIRE(rep.witness_member.has_value());
    REQUIRE(rep.witness_escape_index.has_value());
    const long k = static_cast<long>(*rep.witness_escape_index) + 1;
    const Point escaping{Scalar(1, k), Scalar(1, k)};
    REQUIRE_FALSE(contains(*rep.witness_member, escaping));
    REQUIRE(*rep.witness_escape_index == 99);
  }
  report(7, "x_k = (1/k, 1/k) converges for topologies 3, 9, 15, 24 and is "
            "refuted with explicit witnesses for 6, 12, 18, 21, 27, 30");
}

TEST_CASE("criterion 8: region algebra soundness") {
  auto rng = make_rng(108);
  for (int i = 0; i < 10000; ++i) {
    const Region a = rand_region(rng, 3);
    const Region b = rand_region(rng, 3);
    const Point p = rand_point(rng);
    REQUIRE(contains(a | b, p) == (contains(a, p) || contains(b, p)));
    REQUIRE(contains(a & b, p) == (contains(a, p) && contains(b, p)));
    REQUIRE(contains(a - b, p) == (contains(a, p) && !contains(b, p)));
    REQUIRE(contains(~a, p) == !contains(a, p));
  }
  report(8, "boolean-combinator identities hold on 10000 randomized region "
            "trees and points");
}

TEST_CASE("criterion 9: CLI goldens and exit codes") {
  using ctk_test::golden_path;
  using ctk_test::read_file;
  using ctk_test::run_cli;
  using ctk_test::write_file;

  const auto catalog1 = run_cli("catalog");
  const auto catalog2 = run_cli("catalog");
  REQUIRE(catalog1.exit_code == 0);
  REQUIRE(catalog1.out == catalog2.out);
  REQUIRE(catalog1.out == read_file(golden_path("catalog.txt")));

  const auto audit1 = run_cli("lct-audit");
  const auto audit2 = run_cli("lct-audit");
  REQUIRE(audit1.exit_code == 0);
  REQUIRE(audit1.out == audit2.out);
  REQUIRE(audit1.out == read_file(golden_path("lct_audit.txt")));

  const std::string render_args =
      "render 26 --window -1,-1:1,1 --res 3x3 --format pgm";
  const auto render1 = run_cli(render_args);
  const auto render2 = run_cli(render_args);
  REQUIRE(render1.exit_code == 0);
  REQUIRE(render1.out == render2.out);
  REQUIRE(render1.out == read_file(golden_path("render_tid26_3x3.pgm")));

  std::string rows;
  for (int k = 1; k <= 100; ++k) {
    rows += "1/" + std::to_string(k) + ",1/" + std::to_string(k) + "\n";
  }
  write_file("acceptance_null_seq.csv", rows);
  REQUIRE(run_cli("converge 27 --limit 0,0 --seq acceptance_null_seq.csv")
              .exit_code == 3);
  REQUIRE(run_cli("converge 3 --limit 0,0 --seq acceptance_null_seq.csv")
              .exit_code == 0);
  report(9, "catalog, lct-audit and render are byte-identical across runs "
            "and match their goldens; converge honors the exit-code contract");
}
