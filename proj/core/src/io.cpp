#include "ctk/io.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ctk {

using nlohmann::json;

Point parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) {
    throw std::invalid_argument("point literal needs 't,s', got '" +
                                std::string(text) + "'");
  }
  return {parse_scalar(text.substr(0, comma)),
          parse_scalar(text.substr(comma + 1))};
}

std::string to_string(const Point& p) {
  return to_string(p.t) + "," + to_string(p.s);
}

std::vector<Point> parse_points_csv(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      points.push_back(parse_point(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("CSV row " + std::to_string(row) + ": " +
                                  e.what());
    }
  }
  return points;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    values.push_back(parse_scalar(text.substr(start, end - start)));
    start = end + 1;
    if (end == text.size()) break;
  }
  return values;
}

namespace {

json point_json(const Point& p) {
  return json::array({to_string(p.t), to_string(p.s)});
}

Point point_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() ||
      !j[1].is_string()) {
    throw std::invalid_argument("region JSON error at " + path +
                                ": expected a [\"t\",\"s\"] pair");
  }
  return {parse_scalar(j[0].get<std::string>()),
          parse_scalar(j[1].get<std::string>())};
}

std::string_view kind_name(ConeKind k) {
  switch (k) {
    case ConeKind::Time: return "time";
    case ConeKind::Light: return "light";
    case ConeKind::Space: return "space";
    case ConeKind::Causal: return "causal";
  }
  return "?";
}

std::string_view orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Future: return "future";
    case Orientation::Past: return "past";
    case Orientation::Plus: return "plus";
    case Orientation::Minus: return "minus";
    case Orientation::Both: return "both";
  }
  return "?";
}

ConeKind kind_from_name(const std::string& name, const std::string& path) {
  if (name == "time") return ConeKind::Time;
  if (name == "light") return ConeKind::Light;
  if (name == "space") return ConeKind::Space;
  if (name == "causal") return ConeKind::Causal;
  throw std::invalid_argument("region JSON error at " + path +
                              ": unknown cone kind '" + name + "'");
}

Orientation orientation_from_name(const std::string& name,
                                  const std::string& path) {
  if (name == "future") return Orientation::Future;
  if (name == "past") return Orientation::Past;
  if (name == "plus") return Orientation::Plus;
  if (name == "minus") return Orientation::Minus;
  if (name == "both") return Orientation::Both;
  throw std::invalid_argument("region JSON error at " + path +
                              ": unknown orientation '" + name + "'");
}

struct RegionToJson {
  json operator()(const AllAtom&) const { return {{"type", "all"}}; }
  json operator()(const EmptyAtom&) const { return {{"type", "empty"}}; }
  json operator()(const SingletonAtom& a) const {
    return {{"type", "singleton"}, {"point", point_json(a.point)}};
  }
  json operator()(const ConeAtom& a) const {
    return {{"type", "cone"},
            {"apex", point_json(a.apex)},
            {"kind", kind_name(a.kind)},
            {"orientation", orientation_name(a.orientation)},
            {"apex_included", a.apex_included}};
  }
  json operator()(const BallAtom& a) const {
    return {{"type", "ball"},
            {"center", point_json(a.center)},
            {"radius_sq", to_string(a.radius_sq)}};
  }
  json operator()(const UnionNode& n) const { return binary("union", n.lhs, n.rhs); }
  json operator()(const IntersectionNode& n) const {
    return binary("intersection", n.lhs, n.rhs);
  }
  json operator()(const DifferenceNode& n) const {
    return binary("difference", n.lhs, n.rhs);
  }
  json operator()(const ComplementNode& n) const {
    return {{"type", "complement"}, {"operand", to_json(n.operand)}};
  }

  static json to_json(const Region& reg) {
    return std::visit(RegionToJson{}, reg.node().v);
  }
  static json binary(const char* type, const Region& lhs, const Region& rhs) {
    return {{"type", type}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
  }
};

const json& field(const json& j, const char* key, const std::string& path) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument("region JSON error at " + path + "." + key +
                                ": missing field");
  }
  return *it;
}

Region region_from(const json& j, const std::string& path) {
  if (!j.is_object()) {
    throw std::invalid_argument("region JSON error at " + path +
                                ": expected an object");
  }
  const json& type_field = field(j, "type", path);
  if (!type_field.is_string()) {
    throw std::invalid_argument("region JSON error at " + path +
                                ": 'type' must be a string");
  }
  const std::string type = type_field.get<std::string>();
  if (type == "all") return Region::all();
  if (type == "empty") return Region::empty();
  if (type == "singleton") {
    return Region::singleton(
        point_from_json(field(j, "point", path), path + ".point"));
  }
  if (type == "cone") {
    ConeAtom atom;
    atom.apex = point_from_json(field(j, "apex", path), path + ".apex");
    atom.kind = kind_from_name(field(j, "kind", path).get<std::string>(),
                               path + ".kind");
    atom.orientation = orientation_from_name(
        field(j, "orientation", path).get<std::string>(), path + ".orientation");
    const json& apex_inc = field(j, "apex_included", path);
    if (!apex_inc.is_boolean()) {
      throw std::invalid_argument("region JSON error at " + path +
                                  ".apex_included: expected a boolean");
    }
    atom.apex_included = apex_inc.get<bool>();
    try {
      return Region::cone(atom);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("region JSON error at " + path + ": " +
                                  e.what());
    }
  }
  if (type == "ball") {
    const json& radius = field(j, "radius_sq", path);
    if (!radius.is_string()) {
      throw std::invalid_argument("region JSON error at " + path +
                                  ".radius_sq: expected a rational string");
    }
    try {
      return Region::ball(
          point_from_json(field(j, "center", path), path + ".center"),
          parse_scalar(radius.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("region JSON error at " + path + ": " +
                                  e.what());
    }
  }
  if (type == "union" || type == "intersection" || type == "difference") {
    Region lhs = region_from(field(j, "lhs", path), path + ".lhs");
    Region rhs = region_from(field(j, "rhs", path), path + ".rhs");
    if (type == "union") return lhs | rhs;
    if (type == "intersection") return lhs & rhs;
    return lhs - rhs;
  }
  if (type == "complement") {
    return ~region_from(field(j, "operand", path), path + ".operand");
  }
  throw std::invalid_argument("region JSON error at " + path +
                              ": unknown type '" + type + "'");
}

}  // namespace

std::string region_to_json(const Region& reg, int indent) {
  return RegionToJson::to_json(reg).dump(indent);
}

Region region_from_json(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("region JSON parse error: ") +
                                e.what());
  }
  return region_from(j, "$");
}

void write_pgm(std::ostream& os, const Bitmap& bitmap) {
  os << "P5\n" << bitmap.width << " " << bitmap.height << "\n255\n";
  for (std::uint8_t cell : bitmap.cells) {
    os.put(cell ? static_cast<char>(255) : static_cast<char>(0));
  }
}

void write_bitmap_csv(std::ostream& os, const Bitmap& bitmap) {
  for (std::size_t row = 0; row < bitmap.height; ++row) {
    for (std::size_t col = 0; col < bitmap.width; ++col) {
      if (col > 0) os << ",";
      os << (bitmap.at(row, col) ? 1 : 0);
    }
    os << "\n";
  }
}

std::vector<CatalogRow> catalog_rows() {
  std::vector<CatalogRow> rows;
  const Point origin{Scalar(0), Scalar(0)};
  for (const TopologyId& tid : all_topologies()) {
    CatalogRow row;
    row.index = tid.index;
    row.notation = std::string(tid.notation);
    row.relation = std::string(info(tid.relation).name);
    row.kind = std::string(to_string(tid.kind));
    row.formula = std::string(formula(tid));
    switch (tid.kind) {
      case ConstructionKind::OrderSubbase:
        row.comparability = "n/a";
        break;
      case ConstructionKind::Interval:
        row.comparability = "incomparable-with-E";
        break;
      case ConstructionKind::IntersectionWithE:
        row.comparability = "finer-than-E";
        break;
    }
    if (tid.kind != ConstructionKind::OrderSubbase) {
      row.contains_light_cone =
          contains_punctured_light_cone(interval_core(tid, origin), origin);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string catalog_text(const std::vector<CatalogRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%3s  %-10s %-21s %-20s %-20s %-5s %s\n",
                "id", "notation", "relation", "kind", "comparability", "cone",
                "canonical basic open");
  os << buf;
  for (const CatalogRow& row : rows) {
    const char* cone = row.contains_light_cone
                           ? (*row.contains_light_cone ? "yes" : "no")
                           : "-";
    std::snprintf(buf, sizeof(buf), "%3d  %-10s %-21s %-20s %-20s %-5s %s\n",
                  row.index, row.notation.c_str(), row.relation.c_str(),
                  row.kind.c_str(), row.comparability.c_str(), cone,
                  row.formula.c_str());
    os << buf;
  }
  return os.str();
}

std::string catalog_json(const std::vector<CatalogRow>& rows) {
  json arr = json::array();
  for (const CatalogRow& row : rows) {
    json r{{"index", row.index},
           {"notation", row.notation},
           {"relation", row.relation},
           {"kind", row.kind},
           {"formula", row.formula},
           {"comparability", row.comparability}};
    if (row.contains_light_cone) {
      r["contains_light_cone"] = *row.contains_light_cone;
    } else {
      r["contains_light_cone"] = nullptr;
    }
    arr.push_back(std::move(r));
  }
  return arr.dump(2) + "\n";
}

namespace {

const char* lct_group_name(LctGroup g) {
  return g == LctGroup::ClaimedHolds ? "holds" : "fails";
}

}  // namespace

std::string lct_audit_text(const std::vector<LctAuditRow>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%3s  %-10s %-20s %-12s %s\n", "tid",
                "notation", "contains-light-cone", "claimed-lct",
                "discrepancy");
  os << buf;
  for (const LctAuditRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%3d  %-10s %-20s %-12s %s\n", row.tid,
                  std::string(topology(row.tid).notation).c_str(),
                  row.computed_contains_light_cone ? "yes" : "no",
                  lct_group_name(row.claimed_group),
                  row.discrepancy_flag ? "yes" : "no");
    os << buf;
  }
  return os.str();
}

std::string lct_audit_json(const std::vector<LctAuditRow>& rows) {
  json arr = json::array();
  for (const LctAuditRow& row : rows) {
    arr.push_back({{"tid", row.tid},
                   {"notation", std::string(topology(row.tid).notation)},
                   {"contains_light_cone", row.computed_contains_light_cone},
                   {"claimed_lct", lct_group_name(row.claimed_group)},
                   {"discrepancy", row.discrepancy_flag}});
  }
  return arr.dump(2) + "\n";
}

namespace {

const char* claim_name(ComparabilityClaim c) {
  return c == ComparabilityClaim::StrictlyFinerThanE ? "strictly-finer-than-E"
                                                     : "incomparable-with-E";
}

json evidence_json(const ComparabilityEvidence& ev) {
  json j{{"anchor", point_json(ev.anchor)},
         {"region", RegionToJson::to_json(ev.region)},
         {"puncture_site", point_json(ev.puncture_site)},
         {"puncture_probe", point_json(ev.puncture_probe)},
         {"puncture_delta_sq", to_string(ev.puncture_delta_sq)}};
  if (ev.escape) {
    j["escape"] = point_json(*ev.escape);
    j["escape_radius_sq"] = to_string(ev.escape_radius_sq);
  } else {
    j["inclusion_checked"] = ev.inclusion_checked;
  }
  return j;
}

}  // namespace

std::string comparability_report_json(const ComparabilityReport& report) {
  json j{{"tid", report.tid},
         {"claim", claim_name(report.claim)},
         {"verdict", report.verdict}};
  json ev = json::array();
  for (const ComparabilityEvidence& e : report.evidence) {
    ev.push_back(evidence_json(e));
  }
  j["evidence"] = std::move(ev);
  return j.dump(2) + "\n";
}

std::string comparability_report_text(const ComparabilityReport& report) {
  std::ostringstream os;
  os << "topology " << report.tid << " ("
     << topology(report.tid).notation << "): claim " << claim_name(report.claim)
     << ", verdict " << (report.verdict ? "supported" : "REFUTED") << "\n";
  for (const ComparabilityEvidence& ev : report.evidence) {
    os << "  anchor " << ev.anchor << ": puncture at " << ev.puncture_site
       << " -> probe " << ev.puncture_probe << " outside (delta_sq "
       << to_string(ev.puncture_delta_sq) << ")";
    if (ev.escape) {
      os << "; escape " << *ev.escape << " beyond radius_sq "
         << to_string(ev.escape_radius_sq);
    } else {
      os << "; " << ev.inclusion_checked << " sampled members inside the ball";
    }
    os << "\n";
  }
  return os.str();
}

namespace {

json member_json(const MemberOutcome& m) {
  json j{{"param", to_string(m.param)}};
  j["tail_start"] = m.tail_start ? json(*m.tail_start) : json(nullptr);
  j["escape_index"] = m.escape_index ? json(*m.escape_index) : json(nullptr);
  return j;
}

}  // namespace

std::string convergence_report_json(const ConvergenceReport& report) {
  json j{{"tid", report.tid}, {"converged", report.converged}};
  json params = json::array();
  for (const Scalar& p : report.params) params.push_back(to_string(p));
  j["params"] = std::move(params);
  json members = json::array();
  for (const MemberOutcome& m : report.members) members.push_back(member_json(m));
  j["members"] = std::move(members);
  if (report.witness_member) {
    j["witness"] = {{"member", RegionToJson::to_json(*report.witness_member)},
                    {"escape_index", *report.witness_escape_index}};
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string convergence_report_text(const ConvergenceReport& report) {
  std::ostringstream os;
  if (report.tid > 0) {
    os << "topology " << report.tid << " (" << topology(report.tid).notation
       << ")";
  } else {
    os << "Euclidean ball family";
  }
  os << ": "
     << (report.converged ? "converged (relative to the tested members)"
                          : "refuted")
     << "\n";
  for (const MemberOutcome& m : report.members) {
    os << "  param " << to_string(m.param) << ": ";
    if (m.tail_start) {
      os << "tail from term " << *m.tail_start;
    } else {
      os << "no tail, term " << *m.escape_index << " escapes";
    }
    os << "\n";
  }
  return os.str();
}

std::string preservation_report_text(const PreservationReport& report,
                                     RelationId r) {
  std::ostringstream os;
  os << info(r).name << ": ";
  if (report.holds) {
    os << "preserved (" << report.samples_checked << " pairs, both directions)";
  } else {
    os << "BROKEN on pair (" << report.counterexample->first << ", "
       << report.counterexample->second << ")"
       << (report.failed_on_inverse ? " under the inverse map" : "");
  }
  os << "\n";
  return os.str();
}

std::string preservation_report_json(const PreservationReport& report,
                                     RelationId r) {
  json j{{"relation", std::string(info(r).name)},
         {"holds", report.holds},
         {"samples_checked", report.samples_checked}};
  if (report.counterexample) {
    j["counterexample"] = {{"x", point_json(report.counterexample->first)},
                           {"y", point_json(report.counterexample->second)},
                           {"failed_on_inverse", report.failed_on_inverse}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string light_ray_report_text(const LightRayReport& report) {
  std::ostringstream os;
  if (report.holds) {
    os << "light-ray geometry preserved (" << report.rays_checked << " rays)\n";
    return os.str();
  }
  os << "light-ray geometry BROKEN: ";
  switch (report.failed_check) {
    case LightRayCheck::NullImage:
      os << "image direction " << *report.non_null_image_direction
         << " is not null (Q = "
         << to_string(q_form(*report.non_null_image_direction)) << ")";
      break;
    case LightRayCheck::Parallelism:
      os << "parallel rays " << report.witness_rays->first << " and "
         << report.witness_rays->second << " have non-parallel images";
      break;
    case LightRayCheck::IntervalLength:
      os << "equal intervals on rays " << report.witness_rays->first << " and "
         << report.witness_rays->second << " map to unequal intervals";
      break;
    case LightRayCheck::None:
      break;
  }
  os << "\n";
  return os.str();
}

std::string light_ray_report_json(const LightRayReport& report) {
  json j{{"holds", report.holds}, {"rays_checked", report.rays_checked}};
  switch (report.failed_check) {
    case LightRayCheck::None: j["failed_check"] = nullptr; break;
    case LightRayCheck::NullImage: j["failed_check"] = "null-image"; break;
    case LightRayCheck::Parallelism: j["failed_check"] = "parallelism"; break;
    case LightRayCheck::IntervalLength:
      j["failed_check"] = "interval-length";
      break;
  }
  if (report.non_null_image_direction) {
    j["non_null_image_direction"] = point_json(*report.non_null_image_direction);
    j["image_q"] = to_string(q_form(*report.non_null_image_direction));
  }
  if (report.witness_rays) {
    j["witness_rays"] = {report.witness_rays->first, report.witness_rays->second};
  }
  return j.dump(2) + "\n";
}

}  // namespace ctk
