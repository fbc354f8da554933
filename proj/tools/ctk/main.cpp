// ctk: exact causal-structure toolkit for the 2D Minkowski plane.
//
// Exit codes: 0 success/affirmed, 2 usage error, 3 property refuted
// (with a witness in the output), 4 internal consistency failure.

#include <CLI11.hpp>

#include "ctk/analysis.hpp"
#include "ctk/catalog.hpp"
#include "ctk/errors.hpp"
#include "ctk/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRefuted = 3;
constexpr int kExitInternal = 4;

struct Options {
  bool json = false;
  bool text = false;
  std::string output;

  bool use_json() const {
    if (json) return true;
    if (text) return false;
    const char* env = std::getenv("CTK_OUTPUT");
    return env != nullptr && std::string_view(env) == "json";
  }

  void emit(const std::string& payload) const {
    if (output.empty()) {
      std::cout << payload;
      return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file " + output);
    out << payload;
  }
};

void add_format_flags(CLI::App* cmd, Options& opt) {
  auto* j = cmd->add_flag("--json", opt.json, "JSON output");
  auto* t = cmd->add_flag("--text", opt.text, "plain text output");
  j->excludes(t);
  t->excludes(j);
  cmd->add_option("-o,--output", opt.output, "write output to a file");
}

int parse_tid(const std::string& text) {
  try {
    return std::stoi(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
}

ctk::AffineMap parse_map_atom(const std::string& atom) {
  using ctk::Scalar;
  const auto colon = atom.find(':');
  const std::string head = atom.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? std::string() : atom.substr(colon + 1);
  if (head == "identity") return ctk::identity_map();
  if (head == "swap") return ctk::swap_map();
  if (head == "reflect-t") return ctk::time_reflection();
  if (head == "reflect-s") return ctk::space_reflection();
  if (head == "boost") return ctk::boost_from_parameter(ctk::parse_scalar(args));
  if (head == "dilate") return ctk::dilatation_map(ctk::parse_scalar(args));
  if (head == "translate") return ctk::translation_map(ctk::parse_point(args));
  if (head == "linear") {
    const std::vector<Scalar> entries = ctk::parse_scalar_list(args);
    if (entries.size() != 4) {
      throw std::invalid_argument("linear map needs 4 entries a,b,c,d");
    }
    return ctk::linear_map(entries[0], entries[1], entries[2], entries[3]);
  }
  throw std::invalid_argument(
      "unknown map atom '" + atom +
      "' (expected identity, swap, reflect-t, reflect-s, boost:K, dilate:K, "
      "translate:T,S or linear:a,b,c,d)");
}

// "f*g" applies g first; atoms compose left to right as in f ∘ g.
ctk::AffineMap parse_map_spec(const std::string& spec) {
  std::optional<ctk::AffineMap> acc;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('*', start);
    if (end == std::string::npos) end = spec.size();
    const ctk::AffineMap atom =
        parse_map_atom(spec.substr(start, end - start));
    acc = acc ? ctk::compose(*acc, atom) : atom;
    start = end + 1;
    if (end == spec.size()) break;
  }
  return *acc;
}

ctk::Region region_from_target(const std::string& target, const ctk::Point& anchor,
                               const ctk::Scalar& param) {
  if (!target.empty() &&
      target.find_first_not_of("0123456789") == std::string::npos) {
    return ctk::canonical_member(ctk::topology(parse_tid(target)), anchor,
                                 param);
  }
  std::ifstream in(target, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot read region file " + target);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ctk::region_from_json(buffer.str());
}

std::vector<ctk::Point> read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read CSV file " + path);
  return ctk::parse_points_csv(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact causal relations, regions and the thirty causal "
               "topologies of the Minkowski plane"};
  app.require_subcommand(1);

  int exit_code = kExitOk;

  // classify
  Options classify_opt;
  std::string cl_x, cl_y;
  auto* cmd_classify =
      app.add_subcommand("classify", "causal class of y relative to x");
  cmd_classify->add_option("x", cl_x, "point t,s")->required();
  cmd_classify->add_option("y", cl_y, "point t,s")->required();
  add_format_flags(cmd_classify, classify_opt);
  cmd_classify->callback([&] {
    const ctk::Point x = ctk::parse_point(cl_x);
    const ctk::Point y = ctk::parse_point(cl_y);
    const ctk::CausalClass cls = ctk::classify(x, y);
    const ctk::Scalar q = ctk::q_form(y - x);
    if (classify_opt.use_json()) {
      classify_opt.emit(std::string("{\"class\":\"") +
                        std::string(ctk::to_string(cls)) + "\",\"q\":\"" +
                        ctk::to_string(q) + "\"}\n");
    } else {
      classify_opt.emit(std::string(ctk::to_string(cls)) +
                        " Q=" + ctk::to_string(q) + "\n");
    }
  });

  // relate
  Options relate_opt;
  std::string rel_name, rel_x, rel_y;
  auto* cmd_relate =
      app.add_subcommand("relate", "does x R y hold for a relation 1..10");
  cmd_relate->add_option("relation", rel_name, "name or index")->required();
  cmd_relate->add_option("x", rel_x)->required();
  cmd_relate->add_option("y", rel_y)->required();
  add_format_flags(cmd_relate, relate_opt);
  cmd_relate->callback([&] {
    const ctk::RelationId r = ctk::relation_from_name(rel_name);
    const bool holds =
        ctk::relates(r, ctk::parse_point(rel_x), ctk::parse_point(rel_y));
    if (relate_opt.use_json()) {
      relate_opt.emit(std::string("{\"relation\":\"") +
                      std::string(ctk::info(r).name) + "\",\"relates\":" +
                      (holds ? "true" : "false") + "}\n");
    } else {
      relate_opt.emit(holds ? "true\n" : "false\n");
    }
  });

  // catalog
  Options catalog_opt;
  auto* cmd_catalog =
      app.add_subcommand("catalog", "the thirty causal topologies");
  add_format_flags(cmd_catalog, catalog_opt);
  cmd_catalog->callback([&] {
    const std::vector<ctk::CatalogRow> rows = ctk::catalog_rows();
    catalog_opt.emit(catalog_opt.use_json() ? ctk::catalog_json(rows)
                                            : ctk::catalog_text(rows));
  });

  // neighborhood
  Options nb_opt;
  std::string nb_tid, nb_x, nb_eps = "1";
  auto* cmd_nb = app.add_subcommand(
      "neighborhood", "canonical basic open of a topology at a point");
  cmd_nb->add_option("tid", nb_tid, "topology index 1..30")->required();
  cmd_nb->add_option("x", nb_x, "anchor t,s")->required();
  cmd_nb->add_option("--eps", nb_eps, "family parameter (default 1)");
  add_format_flags(cmd_nb, nb_opt);
  cmd_nb->callback([&] {
    const ctk::Region reg =
        ctk::canonical_member(ctk::topology(parse_tid(nb_tid)),
                              ctk::parse_point(nb_x), ctk::parse_scalar(nb_eps));
    nb_opt.emit(ctk::region_to_json(reg, nb_opt.use_json() ? 2 : -1) + "\n");
  });

  // member
  Options member_opt;
  std::string mb_target, mb_point;
  auto* cmd_member = app.add_subcommand(
      "member", "membership of a point in a region file or a topology's "
                "canonical region at the origin");
  cmd_member->add_option("region", mb_target, "region.json path or tid")
      ->required();
  cmd_member->add_option("p", mb_point, "point t,s")->required();
  add_format_flags(cmd_member, member_opt);
  cmd_member->callback([&] {
    const ctk::Point origin{ctk::Scalar(0), ctk::Scalar(0)};
    const ctk::Region reg =
        region_from_target(mb_target, origin, ctk::Scalar(1));
    const bool inside = ctk::contains(reg, ctk::parse_point(mb_point));
    if (member_opt.use_json()) {
      member_opt.emit(std::string("{\"member\":") +
                      (inside ? "true" : "false") + "}\n");
    } else {
      member_opt.emit(inside ? "true\n" : "false\n");
    }
  });

  // compare
  Options compare_opt;
  std::string cp_tid;
  auto* cmd_compare = app.add_subcommand(
      "compare", "comparability of a topology with the Euclidean topology");
  cmd_compare->add_option("tid", cp_tid)->required();
  add_format_flags(cmd_compare, compare_opt);
  cmd_compare->callback([&] {
    const ctk::TopologyId& tid = ctk::topology(parse_tid(cp_tid));
    ctk::ComparabilityReport report;
    switch (tid.kind) {
      case ctk::ConstructionKind::Interval:
        report = ctk::check_incomparable_with_E(tid, ctk::default_anchors());
        break;
      case ctk::ConstructionKind::IntersectionWithE:
        report = ctk::check_strictly_finer_than_E(tid, ctk::default_anchors());
        break;
      case ctk::ConstructionKind::OrderSubbase:
        throw std::invalid_argument(
            "no comparability check is defined for order topologies");
    }
    compare_opt.emit(compare_opt.use_json()
                         ? ctk::comparability_report_json(report)
                         : ctk::comparability_report_text(report));
    if (!report.verdict) exit_code = kExitRefuted;
  });

  // converge
  Options cv_opt;
  std::string cv_tid, cv_limit, cv_seq, cv_eps = "1,1/2,1/4";
  auto* cmd_converge = app.add_subcommand(
      "converge", "does a CSV point sequence converge in a topology");
  cmd_converge->add_option("tid", cv_tid, "topology index 1..30, or E")
      ->required();
  cmd_converge->add_option("--limit", cv_limit, "limit point t,s")->required();
  cmd_converge->add_option("--seq", cv_seq, "CSV file of t,s rows")->required();
  cmd_converge->add_option("--eps", cv_eps,
                           "comma-separated family parameters");
  add_format_flags(cmd_converge, cv_opt);
  cmd_converge->callback([&] {
    const std::vector<ctk::Point> seq = read_csv_file(cv_seq);
    if (seq.empty()) {
      throw std::invalid_argument("sequence file " + cv_seq + " is empty");
    }
    const ctk::Point limit = ctk::parse_point(cv_limit);
    const std::vector<ctk::Scalar> eps = ctk::parse_scalar_list(cv_eps);
    const ctk::NeighborhoodFamily family =
        (cv_tid == "E" || cv_tid == "0")
            ? ctk::euclidean_family(limit)
            : ctk::neighborhood_family(ctk::topology(parse_tid(cv_tid)), limit);
    const ctk::ConvergenceReport report =
        ctk::converges(seq, limit, family, eps);
    cv_opt.emit(cv_opt.use_json() ? ctk::convergence_report_json(report)
                                  : ctk::convergence_report_text(report));
    if (!report.converged) exit_code = kExitRefuted;
  });

  // lct-audit
  Options lct_opt;
  auto* cmd_lct = app.add_subcommand(
      "lct-audit", "light-cone containment of the twenty interval and "
                   "intersection cores, against the claimed classification");
  add_format_flags(cmd_lct, lct_opt);
  cmd_lct->callback([&] {
    const std::vector<ctk::LctAuditRow> rows =
        ctk::lct_audit(ctk::default_anchors());
    lct_opt.emit(lct_opt.use_json() ? ctk::lct_audit_json(rows)
                                    : ctk::lct_audit_text(rows));
  });

  // dual
  Options dual_opt;
  std::string dual_tid;
  auto* cmd_dual =
      app.add_subcommand("dual", "swap-dual of a topology (involution)");
  cmd_dual->add_option("tid", dual_tid)->required();
  add_format_flags(cmd_dual, dual_opt);
  cmd_dual->callback([&] {
    const ctk::TopologyId& tid = ctk::topology(parse_tid(dual_tid));
    const ctk::TopologyId& dual = ctk::dual_topology(tid);
    if (dual_opt.use_json()) {
      dual_opt.emit("{\"tid\":" + std::to_string(tid.index) +
                    ",\"dual\":" + std::to_string(dual.index) + "}\n");
    } else {
      dual_opt.emit("dual of " + std::to_string(tid.index) + " (" +
                    std::string(tid.notation) + ") is " +
                    std::to_string(dual.index) + " (" +
                    std::string(dual.notation) + ")\n");
    }
  });

  // automorphism-check
  Options am_opt;
  std::string am_spec, am_rel = "all";
  bool am_rays = false;
  auto* cmd_am = app.add_subcommand(
      "automorphism-check",
      "sampled preservation of a relation under an affine map");
  cmd_am->add_option("map", am_spec,
                     "map spec, atoms joined by '*' (applied right to left)")
      ->required();
  cmd_am->add_option("relation", am_rel, "relation name/index, or 'all'");
  cmd_am->add_flag("--light-rays", am_rays,
                   "also check light-ray geometry on the standard rays");
  add_format_flags(cmd_am, am_opt);
  cmd_am->callback([&] {
    const ctk::AffineMap map = parse_map_spec(am_spec);
    const auto pairs = ctk::sample_pairs(1000);
    std::vector<ctk::RelationId> relations;
    if (am_rel == "all") {
      const auto all = ctk::all_relations();
      relations.assign(all.begin(), all.end());
    } else {
      relations.push_back(ctk::relation_from_name(am_rel));
    }
    std::string payload;
    bool refuted = false;
    for (const ctk::RelationId r : relations) {
      const ctk::PreservationReport report = ctk::preserves(map, r, pairs);
      refuted = refuted || !report.holds;
      payload += am_opt.use_json() ? ctk::preservation_report_json(report, r)
                                   : ctk::preservation_report_text(report, r);
    }
    if (am_rays) {
      const auto rays = ctk::standard_rays();
      const ctk::LightRayReport report =
          ctk::check_light_ray_geometry(map, rays);
      refuted = refuted || !report.holds;
      payload += am_opt.use_json() ? ctk::light_ray_report_json(report)
                                   : ctk::light_ray_report_text(report);
    }
    am_opt.emit(payload);
    if (refuted) exit_code = kExitRefuted;
  });

  // render
  Options rd_opt;
  std::string rd_target, rd_anchor = "0,0", rd_window, rd_res, rd_format = "pgm";
  auto* cmd_render = app.add_subcommand(
      "render", "membership raster of a region or a topology's canonical "
                "region");
  cmd_render->add_option("region", rd_target, "region.json path or tid")
      ->required();
  cmd_render->add_option("--anchor", rd_anchor, "anchor for tid targets");
  cmd_render
      ->add_option("--window", rd_window, "window 'lo_t,lo_s:hi_t,hi_s'")
      ->required();
  cmd_render->add_option("--res", rd_res, "resolution 'TxS', rows x columns")
      ->required();
  cmd_render->add_option("--format", rd_format, "pgm or csv");
  cmd_render->add_option("-o,--output", rd_opt.output, "write to a file");
  cmd_render->callback([&] {
    const auto colon = rd_window.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("window needs 'lo_t,lo_s:hi_t,hi_s'");
    }
    const ctk::Point lo = ctk::parse_point(rd_window.substr(0, colon));
    const ctk::Point hi = ctk::parse_point(rd_window.substr(colon + 1));
    const auto cross = rd_res.find('x');
    if (cross == std::string::npos) {
      throw std::invalid_argument("resolution needs 'TxS'");
    }
    const int res_t = parse_tid(rd_res.substr(0, cross));
    const int res_s = parse_tid(rd_res.substr(cross + 1));
    if (res_t < 1 || res_s < 1) {
      throw std::invalid_argument("resolution must be at least 1x1");
    }
    const ctk::Region reg = region_from_target(
        rd_target, ctk::parse_point(rd_anchor), ctk::Scalar(1));
    const ctk::Bitmap bitmap =
        ctk::sample_grid(reg, lo, hi, static_cast<std::size_t>(res_t),
                         static_cast<std::size_t>(res_s));
    std::ostringstream os;
    if (rd_format == "pgm") {
      ctk::write_pgm(os, bitmap);
    } else if (rd_format == "csv") {
      ctk::write_bitmap_csv(os, bitmap);
    } else {
      throw std::invalid_argument("unknown render format '" + rd_format + "'");
    }
    rd_opt.emit(os.str());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ctk::internal_consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
