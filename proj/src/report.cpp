#include "isotori/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace isotori {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_vec(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string format_mat(const RatMat& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += to_string(m(r, c));
    }
  }
  return out + "]";
}

std::string projected_value(const ProjectedResult& p) {
  switch (p.status) {
    case ProjectedStatus::NOT_UNIT_SPHERE:
      return "NOT_APPLICABLE (not on the unit sphere)";
    case ProjectedStatus::NOT_HORIZONTAL:
      return "NOT_APPLICABLE (not horizontal)";
    default:
      return p.hmin ? "true" : "false";
  }
}

}  // namespace

void Report::add(std::string key, std::string value) {
  entries_.emplace_back(std::move(key), std::move(value));
}
void Report::add(std::string key, bool value) {
  add(std::move(key), std::string(value ? "true" : "false"));
}
void Report::add(std::string key, double value) {
  add(std::move(key), format_double(value));
}
void Report::add(std::string key, const Rat& value) {
  add(std::move(key), to_string(value));
}

std::string Report::value_of(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return {};
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : entries_) j[k] = v;
  return j.dump(2) + "\n";
}

std::string format_certificate(const Certificate& cert) {
  if (const auto* sol = std::get_if<Solution>(&cert))
    return "SOLUTION lambda = " + format_vec(sol->lambda);
  const auto& v = std::get<Violation>(cert);
  return "VIOLATION at d = " + std::to_string(v.index) + ": " +
         to_string(v.lhs) + " != " + to_string(v.rhs);
}

void append_classification(Report& report, const Classification& c,
                           const std::string& prefix) {
  const TorusSpec& s = c.spec;
  if (prefix.empty()) {
    report.add("report_version", std::string("1"));
    report.add("name", s.name);
  }
  report.add(prefix + "n", std::to_string(s.n));
  report.add(prefix + "l", std::to_string(s.l));
  report.add(prefix + "m", std::to_string(s.m));
  report.add(prefix + "alpha", format_vec(c.alpha_values));
  report.add(prefix + "omega_I_isotropic", c.omega_I_isotropic);
  report.add(prefix + "omega_I_obstruction", format_mat(c.omega_I));
  report.add(prefix + "hmin_ambient_J", c.hmin_J.hmin);
  report.add(prefix + "hmin_ambient_J_certificate", format_certificate(c.hmin_J.certificate));
  report.add(prefix + "hmin_ambient_K", c.hmin_K.hmin);
  report.add(prefix + "hmin_ambient_K_certificate", format_certificate(c.hmin_K.certificate));
  report.add(prefix + "sphere_r_sq", c.sphere_r_sq);
  report.add(prefix + "horizontal_J", c.horizontal_J);
  report.add(prefix + "horizontal_K", c.horizontal_K);
  report.add(prefix + "hmin_projected_J", projected_value(c.proj_J));
  if (c.proj_J.certificate)
    report.add(prefix + "hmin_projected_J_certificate",
               format_certificate(*c.proj_J.certificate));
  report.add(prefix + "hmin_projected_K", projected_value(c.proj_K));
  if (c.proj_K.certificate)
    report.add(prefix + "hmin_projected_K_certificate",
               format_certificate(*c.proj_K.certificate));
  report.add(prefix + "minimal_in_sphere", c.minimal);
  // Convention: the Hopf projection is reported minimal exactly when its
  // horizontal lift is minimal in the unit sphere.
  if (c.sphere_r_sq == 1 && (c.horizontal_J || c.horizontal_K))
    report.add(prefix + "projection_minimal", c.minimal);
  report.add(prefix + "propagation_x_minimal", c.propagation.x_minimal);
  report.add(prefix + "propagation_y_minimal", c.propagation.y_minimal);
  report.add(prefix + "propagation_full_minimal", c.propagation.full_minimal);
  report.add(prefix + "propagation_implication_holds", c.propagation.implication_holds);
  if (c.homogeneous_X)
    append_classification(report, *c.homogeneous_X, prefix + "homogeneous_X.");
  if (c.homogeneous_Y)
    append_classification(report, *c.homogeneous_Y, prefix + "homogeneous_Y.");
}

void append_residual(Report& report, const std::string& key,
                     const ResidualReport& r) {
  report.add(key + ".max_residual", r.max_residual);
  report.add(key + ".verdict", std::string(verdict_name(r.verdict)));
}

Report classification_report(const Classification& c) {
  Report report;
  append_classification(report, c);
  return report;
}

}  // namespace isotori
