#pragma once

#include "ctk/analysis.hpp"
#include "ctk/catalog.hpp"
#include "ctk/region.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctk {

/// Scalars travel as "p/q" strings ("p" when integral), points as
/// [t, s] pairs, both in JSON and in CSV.

/// Parses "t,s" where each coordinate is a rational literal.
Point parse_point(std::string_view text);
std::string to_string(const Point& p);

/// Header-free CSV of "t,s" rows. Parse errors name the row number.
std::vector<Point> parse_points_csv(std::istream& in);

/// Parses a comma-separated list of rational literals.
std::vector<Scalar> parse_scalar_list(std::string_view text);

/// Region JSON: a tagged-union tree mirroring the Region type, e.g.
///   {"type":"cone","apex":["0","0"],"kind":"time",
///    "orientation":"both","apex_included":true}
///   {"type":"ball","center":["0","0"],"radius_sq":"1"}
///   {"type":"union","lhs":{...},"rhs":{...}}
///   {"type":"complement","operand":{...}}
/// plus "intersection", "difference", "singleton" ({"point":[t,s]}),
/// "all" and "empty". Schema errors report the JSON path.
std::string region_to_json(const Region& reg, int indent = -1);
Region region_from_json(std::string_view json_text);

/// Rasters: binary PGM (P5, maxval 255, members white) and CSV of 0/1.
void write_pgm(std::ostream& os, const Bitmap& bitmap);
void write_bitmap_csv(std::ostream& os, const Bitmap& bitmap);

/// Catalog table: per-row comparability status and light-cone
/// containment come from the bundled audits ("n/a" for order rows).
struct CatalogRow {
  int index;
  std::string notation;
  std::string relation;
  std::string kind;
  std::string formula;
  std::string comparability;  // "finer-than-E", "incomparable-with-E", "n/a"
  std::optional<bool> contains_light_cone;
};

std::vector<CatalogRow> catalog_rows();
std::string catalog_text(const std::vector<CatalogRow>& rows);
std::string catalog_json(const std::vector<CatalogRow>& rows);

std::string lct_audit_text(const std::vector<LctAuditRow>& rows);
std::string lct_audit_json(const std::vector<LctAuditRow>& rows);

std::string comparability_report_json(const ComparabilityReport& report);
std::string comparability_report_text(const ComparabilityReport& report);

std::string convergence_report_json(const ConvergenceReport& report);
std::string convergence_report_text(const ConvergenceReport& report);

std::string preservation_report_text(const PreservationReport& report,
                                     RelationId r);
std::string preservation_report_json(const PreservationReport& report,
                                     RelationId r);

std::string light_ray_report_text(const LightRayReport& report);
std::string light_ray_report_json(const LightRayReport& report);

}  // namespace ctk
