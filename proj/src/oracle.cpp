#include "isotori/oracle.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace isotori {

namespace {

std::vector<double> uniform_point(std::mt19937_64& rng, std::size_t dim) {
  std::vector<double> p(dim);
  for (double& c : p) {
    // Engine output mapped to [0,1) directly so points are reproducible
    // across standard library implementations.
    c = 2.0 * std::numbers::pi * ((rng() >> 11) * 0x1.0p-53);
  }
  return p;
}

std::span<const double> x_part(const std::vector<double>& p, const TorusSpec& s) {
  return {p.data(), s.l};
}
std::span<const double> y_part(const std::vector<double>& p, const TorusSpec& s) {
  return {p.data() + s.l, s.m};
}

// Dense float solve with partial pivoting, for the small Gram systems.
std::vector<double> solve_float(std::vector<std::vector<double>> a,
                                std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[sel][col])) sel = r;
    if (std::abs(a[sel][col]) < 1e-12)
      throw std::runtime_error("singular Gram system; invalid spec");
    std::swap(a[sel], a[col]);
    std::swap(b[sel], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double rhs = b[i];
    for (std::size_t c = i + 1; c < n; ++c) rhs -= a[i][c] * x[c];
    x[i] = rhs / a[i][i];
  }
  return x;
}

// Component of v orthogonal to the span of the frame.
QuatVec normal_part(const QuatVec& v, const std::vector<QuatVec>& frame) {
  if (frame.empty()) return v;
  const std::size_t k = frame.size();
  std::vector<std::vector<double>> gram(k, std::vector<double>(k));
  std::vector<double> rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) gram[a][b] = real_inner(frame[a], frame[b]);
    rhs[a] = real_inner(v, frame[a]);
  }
  const std::vector<double> coeff = solve_float(gram, rhs);
  QuatVec rem = v;
  for (std::size_t a = 0; a < k; ++a) rem = rem - coeff[a] * frame[a];
  return rem;
}

QuatVec field_value(const TorusSpec& spec, bool use_sphere, const Rat& r_sq,
                    std::span<const double> x, std::span<const double> y) {
  return use_sphere ? sphere_mean_curvature(spec, r_sq, x, y)
                    : mean_curvature(spec, x, y);
}

void require_unit_sphere(const TorusSpec& spec) {
  if (sphere_radius_sq(spec) != 1)
    throw std::invalid_argument("oracle requires a unit-sphere spec");
}

Verdict band_verdict(double residual, const OracleParams& p) {
  if (residual <= p.tolerance) return Verdict::ZERO;
  if (residual >= p.coarse_threshold) return Verdict::NONZERO;
  return Verdict::INDETERMINATE;
}

}  // namespace

std::vector<std::vector<double>> sample_points(const TorusSpec& spec,
                                               const OracleParams& params) {
  std::mt19937_64 rng(params.rng_seed);
  std::vector<std::vector<double>> points;
  points.reserve(params.sample_count);
  for (std::size_t i = 0; i < params.sample_count; ++i)
    points.push_back(uniform_point(rng, spec.l + spec.m));
  return points;
}

QuatVec fd_mean_curvature(const TorusSpec& spec, std::span<const double> x,
                          std::span<const double> y, const OracleParams& params) {
  if (spec.l + spec.m == 0)
    throw std::invalid_argument("fd_mean_curvature requires l + m >= 1");
  const MetricBlocks blocks = metric_blocks(spec);
  const RatMat g1_inv = spec.l ? *inverse(blocks.G1) : RatMat(0, 0);
  const RatMat g2_inv = spec.m ? *inverse(blocks.G2) : RatMat(0, 0);

  std::vector<double> base(spec.l + spec.m);
  for (std::size_t i = 0; i < spec.l; ++i) base[i] = x[i];
  for (std::size_t i = 0; i < spec.m; ++i) base[spec.l + i] = y[i];

  const double h = params.fd_step;
  auto eval = [&](const std::vector<double>& p) {
    return immerse(spec, x_part(p, spec), y_part(p, spec));
  };
  auto second_diff = [&](std::size_t a, std::size_t b) {
    std::vector<double> p = base;
    if (a == b) {
      p[a] = base[a] + h;
      QuatVec plus = eval(p);
      p[a] = base[a] - h;
      QuatVec minus = eval(p);
      return (1.0 / (h * h)) * (plus + minus - 2.0 * eval(base));
    }
    p[a] = base[a] + h; p[b] = base[b] + h;
    QuatVec pp = eval(p);
    p[b] = base[b] - h;
    QuatVec pm = eval(p);
    p[a] = base[a] - h; p[b] = base[b] + h;
    QuatVec mp = eval(p);
    p[b] = base[b] - h;
    QuatVec mm = eval(p);
    return (1.0 / (4 * h * h)) * (pp - pm - mp + mm);
  };

  QuatVec laplacian(spec.n);
  for (std::size_t p = 0; p < spec.l; ++p)
    for (std::size_t q = 0; q < spec.l; ++q)
      laplacian = laplacian + to_double(g1_inv(p, q)) * second_diff(p, q);
  for (std::size_t r = 0; r < spec.m; ++r)
    for (std::size_t s = 0; s < spec.m; ++s)
      laplacian = laplacian +
                  to_double(g2_inv(r, s)) * second_diff(spec.l + r, spec.l + s);
  return (1.0 / static_cast<double>(spec.l + spec.m)) * laplacian;
}

ResidualReport fd_mean_curvature_residual(const TorusSpec& spec,
                                          const OracleParams& params) {
  ResidualReport report{.check = "fd_mean_curvature"};
  for (const auto& p : sample_points(spec, params)) {
    const auto x = x_part(p, spec), y = y_part(p, spec);
    const QuatVec closed = mean_curvature(spec, x, y);
    const QuatVec fd = fd_mean_curvature(spec, x, y, params);
    const double rel = norm(fd - closed) / norm(closed);
    if (rel >= report.max_residual) {
      report.max_residual = rel;
      report.worst_point = p;
    }
  }
  report.pass = report.max_residual <= params.tolerance;
  report.verdict = band_verdict(report.max_residual, params);
  return report;
}

IsotropyReport isotropy_residual(const TorusSpec& spec, const OracleParams& params) {
  IsotropyReport report;
  const RatMat c_exact = omega_I_obstruction(spec);
  for (const auto& p : sample_points(spec, params)) {
    const auto frame = tangent_frame(spec, x_part(p, spec), y_part(p, spec));
    for (std::size_t a = 0; a < frame.size(); ++a)
      for (std::size_t b = 0; b < frame.size(); ++b) {
        const FormValues f = form_values(frame[a], frame[b]);
        report.wJ_max = std::max(report.wJ_max, std::abs(f.wJ));
        report.wK_max = std::max(report.wK_max, std::abs(f.wK));
      }
    // omega_I pairs the j-phase direction with the k-phase direction; on the
    // cross pairs it reduces to g(J dx, K dy) and must reproduce the exact
    // obstruction matrix C_{pq} = sum_d r_d^2 e_{dp} f_{dq} at every point.
    for (std::size_t pp = 0; pp < spec.l; ++pp)
      for (std::size_t q = 0; q < spec.m; ++q) {
        const double wI = real_inner(apply_structure(Axis::J, frame[pp]),
                                     apply_structure(Axis::K, frame[spec.l + q]));
        report.wI_error_max = std::max(
            report.wI_error_max, std::abs(wI - to_double(c_exact(pp, q))));
      }
  }
  report.pass = report.wJ_max <= params.algebraic_tol &&
                report.wK_max <= params.algebraic_tol &&
                report.wI_error_max <= params.algebraic_tol;
  return report;
}

ResidualReport tangency_residual(const TorusSpec& spec, Form form,
                                 bool use_sphere, const OracleParams& params) {
  if (use_sphere) require_unit_sphere(spec);
  const Rat r_sq = sphere_radius_sq(spec);
  const Axis axis = form == Form::J ? Axis::J : Axis::K;
  ResidualReport report{.check = std::string("tangency_") + form_name(form) +
                                 (use_sphere ? "_sphere" : "")};
  for (const auto& p : sample_points(spec, params)) {
    const auto x = x_part(p, spec), y = y_part(p, spec);
    const QuatVec rotated =
        apply_structure(axis, field_value(spec, use_sphere, r_sq, x, y));
    const auto frame = tangent_frame(spec, x, y);
    const double res = norm(normal_part(rotated, frame));
    if (res >= report.max_residual) {
      report.max_residual = res;
      report.worst_point = p;
    }
  }
  report.pass = report.max_residual <= params.tolerance;
  report.verdict = band_verdict(report.max_residual, params);
  return report;
}

ResidualReport h_psi_identity(const TorusSpec& spec, const OracleParams& params) {
  ResidualReport report{.check = "h_psi_identity"};
  for (const auto& p : sample_points(spec, params)) {
    const auto x = x_part(p, spec), y = y_part(p, spec);
    const double val =
        real_inner(mean_curvature(spec, x, y), immerse(spec, x, y));
    const double res = std::abs(val + 1.0);
    if (res >= report.max_residual) {
      report.max_residual = res;
      report.worst_point = p;
    }
  }
  report.pass = report.max_residual <= params.algebraic_tol;
  report.verdict = band_verdict(report.max_residual, params);
  return report;
}

ResidualReport divergence_residual(const TorusSpec& spec, Form form,
                                   bool use_sphere, const OracleParams& params) {
  if (use_sphere) require_unit_sphere(spec);
  const Rat r_sq = sphere_radius_sq(spec);
  const Axis axis = form == Form::J ? Axis::J : Axis::K;
  const double h = params.fd_step;
  ResidualReport report{.check = std::string("divergence_") + form_name(form) +
                                 (use_sphere ? "_sphere" : "")};
  for (const auto& p : sample_points(spec, params)) {
    const auto frame = tangent_frame(spec, x_part(p, spec), y_part(p, spec));
    for (std::size_t a = 0; a < spec.l + spec.m; ++a) {
      std::vector<double> plus = p, minus = p;
      plus[a] += h;
      minus[a] -= h;
      const QuatVec fp = apply_structure(
          axis, field_value(spec, use_sphere, r_sq, x_part(plus, spec), y_part(plus, spec)));
      const QuatVec fm = apply_structure(
          axis, field_value(spec, use_sphere, r_sq, x_part(minus, spec), y_part(minus, spec)));
      const QuatVec deriv = (1.0 / (2 * h)) * (fp - fm);
      for (const QuatVec& t : frame) {
        const double res = std::abs(real_inner(deriv, t));
        if (res >= report.max_residual) {
          report.max_residual = res;
          report.worst_point = p;
        }
      }
    }
  }
  report.pass = report.max_residual <= params.tolerance;
  report.verdict = band_verdict(report.max_residual, params);
  return report;
}

ResidualReport hopf_fiber_orthogonality(const TorusSpec& spec, Axis v,
                                        const OracleParams& params) {
  require_unit_sphere(spec);
  const char* axis_names[] = {"I", "J", "K"};
  ResidualReport report{.check = std::string("hopf_fiber_") +
                                 axis_names[static_cast<int>(v)]};
  for (const auto& p : sample_points(spec, params)) {
    const auto x = x_part(p, spec), y = y_part(p, spec);
    const QuatVec fiber = apply_structure(v, immerse(spec, x, y));
    for (const QuatVec& t : tangent_frame(spec, x, y)) {
      const double res = std::abs(real_inner(fiber, t));
      if (res >= report.max_residual) {
        report.max_residual = res;
        report.worst_point = p;
      }
    }
  }
  report.pass = report.max_residual <= params.algebraic_tol;
  report.verdict = band_verdict(report.max_residual, params);
  return report;
}

}  // namespace isotori
