#include "ctk/relations.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace ctk {

namespace {

constexpr std::array<RelationInfo, 10> kRelations{{
    {1, "chronology", "<<", false},
    {2, "horismos", "->", true},
    {3, "chorology", "<", false},
    {4, "irr-horismos", "->*", false},
    {5, "refl-chronology", "<<=", true},
    {6, "causal", "-<", true},
    {7, "irr-causal", "-<*", false},
    {8, "refl-chorology", "<=", true},
    {9, "compl-chronology", "<<c", true},
    {10, "irr-compl-chronology", "<<c*", false},
}};

constexpr std::array<RelationId, 10> kAll{{
    RelationId::Chronology, RelationId::Horismos, RelationId::Chorology,
    RelationId::IrrHorismos, RelationId::ReflChronology, RelationId::Causal,
    RelationId::IrrCausal, RelationId::ReflChorology,
    RelationId::ComplChronology, RelationId::IrrComplChronology,
}};

}  // namespace

const RelationInfo& info(RelationId r) {
  return kRelations[static_cast<std::size_t>(static_cast<int>(r) - 1)];
}

std::span<const RelationId> all_relations() { return kAll; }

RelationId relation_from_name(std::string_view text) {
  for (const RelationInfo& ri : kRelations) {
    if (text == ri.name) return static_cast<RelationId>(ri.index);
  }
  if (text.size() <= 2 && !text.empty()) {
    int idx = 0;
    for (char ch : text) {
      if (ch < '0' || ch > '9') { idx = 0; break; }
      idx = idx * 10 + (ch - '0');
    }
    if (idx >= 1 && idx <= 10) return static_cast<RelationId>(idx);
  }
  throw std::invalid_argument("unknown relation: '" + std::string(text) + "'");
}

bool relates(RelationId r, const Point& x, const Point& y) {
  const Point d = y - x;
  const bool diagonal = d.t == 0 && d.s == 0;
  const int qs = diagonal ? 0 : sign(q_form(d));
  switch (r) {
    case RelationId::Chronology:
      return !diagonal && qs > 0 && d.t > 0;
    case RelationId::Horismos:
      return diagonal || (qs == 0 && d.t > 0);
    case RelationId::Chorology:
      return qs < 0 && d.s > 0;
    case RelationId::IrrHorismos:
      return !diagonal && qs == 0 && d.t > 0;
    case RelationId::ReflChronology:
      return diagonal || (qs > 0 && d.t > 0);
    case RelationId::Causal:
      return diagonal || (qs >= 0 && d.t > 0);
    case RelationId::IrrCausal:
      return !diagonal && qs >= 0 && d.t > 0;
    case RelationId::ReflChorology:
      return diagonal || (qs < 0 && d.s > 0);
    case RelationId::ComplChronology:
      return diagonal || (qs <= 0 && d.s > 0);
    case RelationId::IrrComplChronology:
      return !diagonal && qs <= 0 && d.s > 0;
  }
  return false;
}

RelationId dual_relation(RelationId r) {
  switch (r) {
    case RelationId::Chronology: return RelationId::Chorology;
    case RelationId::Chorology: return RelationId::Chronology;
    case RelationId::ReflChronology: return RelationId::ReflChorology;
    case RelationId::ReflChorology: return RelationId::ReflChronology;
    case RelationId::Causal: return RelationId::ComplChronology;
    case RelationId::ComplChronology: return RelationId::Causal;
    case RelationId::IrrCausal: return RelationId::IrrComplChronology;
    case RelationId::IrrComplChronology: return RelationId::IrrCausal;
    case RelationId::Horismos: return RelationId::Horismos;
    case RelationId::IrrHorismos: return RelationId::IrrHorismos;
  }
  return r;
}

PreservationReport preserves(const AffineMap& m, RelationId r,
                             std::span<const std::pair<Point, Point>> sample) {
  const AffineMap inv = inverse(m);  // throws on a singular map
  PreservationReport report;
  for (const auto& [x, y] : sample) {
    ++report.samples_checked;
    if (relates(r, x, y) != relates(r, m(x), m(y))) {
      report.holds = false;
      report.counterexample = {x, y};
      report.failed_on_inverse = false;
      return report;
    }
    if (relates(r, x, y) != relates(r, inv(x), inv(y))) {
      report.holds = false;
      report.counterexample = {x, y};
      report.failed_on_inverse = true;
      return report;
    }
  }
  return report;
}

bool leaves_q_invariant(const Mat2& linear) {
  const Point e0{Scalar(1), Scalar(0)};
  const Point e1{Scalar(0), Scalar(1)};
  const Point e01{Scalar(1), Scalar(1)};
  return q_form(linear * e0) == 1 && q_form(linear * e1) == -1 &&
         q_form(linear * e01) == 0;
}

bool is_orthochronous(const AffineMap& m) {
  if (!leaves_q_invariant(m.linear)) return false;
  return (m.linear * Point{Scalar(1), Scalar(0)}).t > 0;
}

bool is_orthochorous(const AffineMap& m) {
  if (!leaves_q_invariant(m.linear)) return false;
  return (m.linear * Point{Scalar(0), Scalar(1)}).s > 0;
}

NullRay::NullRay(Point b, Point dir)
    : base(std::move(b)), direction(std::move(dir)) {
  if ((direction.t == 0 && direction.s == 0) || q_form(direction) != 0) {
    throw std::invalid_argument("ray direction must be null and nonzero");
  }
}

namespace {

bool parallel(const Point& u, const Point& v) {
  return u.t * v.s - u.s * v.t == 0;
}

}  // namespace

LightRayReport check_light_ray_geometry(const AffineMap& m,
                                        std::span<const NullRay> rays) {
  if (!is_invertible(m)) throw std::domain_error("affine map is singular");
  LightRayReport report;
  report.rays_checked = rays.size();

  std::vector<Point> images;
  images.reserve(rays.size());
  for (const NullRay& ray : rays) {
    Point img = m.linear * ray.direction;
    if (q_form(img) != 0) {
      report.holds = false;
      report.failed_check = LightRayCheck::NullImage;
      report.non_null_image_direction = img;
      return report;
    }
    images.push_back(std::move(img));
  }

  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      if (!parallel(rays[i].direction, rays[j].direction)) continue;
      if (!parallel(images[i], images[j])) {
        report.holds = false;
        report.failed_check = LightRayCheck::Parallelism;
        report.witness_rays = {i, j};
        return report;
      }
      // Equal parameter intervals on parallel rays: rays given with the
      // same direction vector must keep identical interval vectors.
      if (rays[i].direction == rays[j].direction &&
          images[i] != images[j]) {
        report.holds = false;
        report.failed_check = LightRayCheck::IntervalLength;
        report.witness_rays = {i, j};
        return report;
      }
    }
  }
  return report;
}

}  // namespace ctk
