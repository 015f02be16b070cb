#include "isotori/certify.hpp"

#include <stdexcept>

namespace isotori {

namespace {

const RatMat& frequency_rows(const TorusSpec& spec, Form form) {
  return form == Form::J ? spec.E : spec.F;
}

// Solve (lambda, row_d) = target_d for all d; on inconsistency report the
// smallest index d such that rows 1..d-1 are consistent but row d breaks,
// with the exact value forced by the free-variables-zero solution of the
// prefix.
HminResult solve_with_certificate(const RatMat& rows, const RatVec& targets) {
  if (auto lambda = solve(rows, targets)) return {true, Solution{*lambda}};

  const std::size_t n = rows.rows();
  for (std::size_t d = 1; d <= n; ++d) {
    RatMat prefix(d, rows.cols());
    RatVec rhs(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < rows.cols(); ++c) prefix(r, c) = rows(r, c);
      rhs[r] = targets[r];
    }
    if (solve(prefix, rhs)) continue;
    RatVec lambda(rows.cols());
    if (d > 1) {
      RatMat head((d - 1), rows.cols());
      RatVec head_rhs(d - 1);
      for (std::size_t r = 0; r + 1 < d; ++r) {
        for (std::size_t c = 0; c < rows.cols(); ++c) head(r, c) = rows(r, c);
        head_rhs[r] = targets[r];
      }
      lambda = *solve(head, head_rhs);
    }
    return {false, Violation{d, dot(lambda, rows.row(d - 1)), targets[d - 1]}};
  }
  throw std::logic_error("inconsistent system with no violating prefix");
}

void require_valid(const TorusSpec& spec) {
  const auto violations = validate(spec);
  if (!violations.empty())
    throw std::invalid_argument("invalid torus spec: " + violations.front());
}

}  // namespace

RatMat omega_I_obstruction(const TorusSpec& spec) {
  RatMat c(spec.l, spec.m);
  for (std::size_t d = 0; d < spec.n; ++d)
    for (std::size_t p = 0; p < spec.l; ++p)
      for (std::size_t q = 0; q < spec.m; ++q)
        c(p, q) += spec.r_sq[d] * spec.E(d, p) * spec.F(d, q);
  return c;
}

bool omega_I_isotropic(const TorusSpec& spec) {
  if (spec.l * spec.m != 0) return false;
  const RatMat c = omega_I_obstruction(spec);
  for (std::size_t p = 0; p < c.rows(); ++p)
    for (std::size_t q = 0; q < c.cols(); ++q)
      if (c(p, q) != 0) return false;
  return true;
}

HminResult hmin_ambient(const TorusSpec& spec, Form form) {
  if (spec.l + spec.m == 0)
    throw std::invalid_argument("hmin_ambient requires l + m >= 1");
  const RatVec a = alpha(spec);
  const Rat denom(static_cast<long>(spec.l + spec.m));
  RatVec targets(spec.n);
  for (std::size_t d = 0; d < spec.n; ++d) targets[d] = a[d] / denom;
  return solve_with_certificate(frequency_rows(spec, form), targets);
}

bool hmin_ambient_rank_form(const TorusSpec& spec, Form form) {
  const RatMat& rows = frequency_rows(spec, form);
  const RatVec a = alpha(spec);
  RatMat primed(spec.n, rows.cols() + 1);
  for (std::size_t d = 0; d < spec.n; ++d) {
    for (std::size_t c = 0; c < rows.cols(); ++c) primed(d, c) = rows(d, c);
    primed(d, rows.cols()) = a[d];
  }
  return rank(primed) == rows.cols();
}

Rat sphere_radius_sq(const TorusSpec& spec) {
  Rat sum;
  for (const Rat& r : spec.r_sq) sum += r;
  return sum;
}

bool horizontality(const TorusSpec& spec, Form form) {
  const RatMat& rows = frequency_rows(spec, form);
  RatVec sum(rows.cols());
  for (std::size_t d = 0; d < spec.n; ++d)
    for (std::size_t c = 0; c < rows.cols(); ++c)
      sum[c] += spec.r_sq[d] * rows(d, c);
  return is_zero(sum);
}

ProjectedResult hmin_projected(const TorusSpec& spec, Form form) {
  if (sphere_radius_sq(spec) != 1)
    return {ProjectedStatus::NOT_UNIT_SPHERE, false, std::nullopt};
  if (!horizontality(spec, form))
    return {ProjectedStatus::NOT_HORIZONTAL, false, std::nullopt};
  const RatVec a = alpha(spec);
  const Rat total(static_cast<long>(spec.l + spec.m));
  RatVec targets(spec.n);
  for (std::size_t d = 0; d < spec.n; ++d) targets[d] = a[d] - total;
  const HminResult result = solve_with_certificate(frequency_rows(spec, form), targets);
  return {ProjectedStatus::OK, result.hmin, result.certificate};
}

bool hmin_projected_rank_form(const TorusSpec& spec, Form form) {
  const RatMat& rows = frequency_rows(spec, form);
  const RatVec a = alpha(spec);
  const Rat total(static_cast<long>(spec.l + spec.m));
  RatMat doubled(spec.n, rows.cols() + 1);
  for (std::size_t d = 0; d < spec.n; ++d) {
    for (std::size_t c = 0; c < rows.cols(); ++c) doubled(d, c) = rows(d, c);
    doubled(d, rows.cols()) = a[d] - total;
  }
  return rank(doubled) == rows.cols();
}

bool minimal_in_sphere(const TorusSpec& spec) {
  if (spec.l + spec.m == 0) return true;
  const Rat target =
      Rat(static_cast<long>(spec.l + spec.m)) / sphere_radius_sq(spec);
  for (const Rat& a_d : alpha(spec))
    if (a_d != target) return false;
  return true;
}

PropagationReport minimality_propagation_check(const TorusSpec& spec) {
  PropagationReport report;
  const TorusSpec x_proj = project_homogeneous(spec, Side::X);
  const TorusSpec y_proj = project_homogeneous(spec, Side::Y);
  report.x_minimal = minimal_in_sphere(x_proj);
  report.y_minimal = minimal_in_sphere(y_proj);
  report.full_minimal = minimal_in_sphere(spec);
  report.implication_holds =
      !(report.x_minimal && report.y_minimal) || report.full_minimal;
  return report;
}

namespace {

Classification classify_impl(const TorusSpec& spec, bool recurse) {
  require_valid(spec);
  if (spec.l + spec.m == 0)
    throw std::invalid_argument("classification requires l + m >= 1");

  Classification c;
  c.spec = spec;
  c.alpha_values = alpha(spec);
  c.omega_I = omega_I_obstruction(spec);
  c.omega_I_isotropic = omega_I_isotropic(spec);
  c.hmin_J = hmin_ambient(spec, Form::J);
  c.hmin_K = hmin_ambient(spec, Form::K);
  c.sphere_r_sq = sphere_radius_sq(spec);
  c.horizontal_J = horizontality(spec, Form::J);
  c.horizontal_K = horizontality(spec, Form::K);
  c.proj_J = hmin_projected(spec, Form::J);
  c.proj_K = hmin_projected(spec, Form::K);
  c.minimal = minimal_in_sphere(spec);
  c.propagation = minimality_propagation_check(spec);

  if (recurse) {
    const TorusSpec x_proj = project_homogeneous(spec, Side::X);
    const TorusSpec y_proj = project_homogeneous(spec, Side::Y);
    if (x_proj.l + x_proj.m >= 1)
      c.homogeneous_X = std::make_unique<Classification>(classify_impl(x_proj, false));
    if (y_proj.l + y_proj.m >= 1)
      c.homogeneous_Y = std::make_unique<Classification>(classify_impl(y_proj, false));
  }
  return c;
}

}  // namespace

Classification classify(const TorusSpec& spec) { return classify_impl(spec, true); }

}  // namespace isotori
