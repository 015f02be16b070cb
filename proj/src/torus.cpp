#include "isotori/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace isotori {

namespace {

double phase(const RatMat& rows, std::size_t d, std::span<const double> coords) {
  double s = 0;
  for (std::size_t c = 0; c < rows.cols(); ++c)
    s += to_double(rows(d, c)) * coords[c];
  return s;
}

void check_point(const TorusSpec& spec, std::span<const double> x,
                 std::span<const double> y) {
  if (x.size() != spec.l || y.size() != spec.m)
    throw std::invalid_argument("point dimension does not match (l, m)");
}

}  // namespace

std::vector<std::string> validate(const TorusSpec& spec) {
  std::vector<std::string> violations;
  if (spec.l > spec.n) violations.push_back("l exceeds n");
  if (spec.m > spec.n) violations.push_back("m exceeds n");
  if (spec.r_sq.size() != spec.n)
    violations.push_back("r_squared must have n entries");
  for (std::size_t d = 0; d < spec.r_sq.size(); ++d)
    if (spec.r_sq[d] <= 0)
      violations.push_back("r_squared[" + std::to_string(d + 1) + "] must be positive");
  if (spec.E.rows() != spec.n || spec.E.cols() != spec.l)
    violations.push_back("E must be n x l");
  if (spec.F.rows() != spec.n || spec.F.cols() != spec.m)
    violations.push_back("F must be n x m");
  if (spec.E.rows() == spec.n && spec.E.cols() == spec.l && rank(spec.E) != spec.l)
    violations.push_back("rows of E do not generate a lattice of maximal rank: rank " +
                         std::to_string(rank(spec.E)) + " < " + std::to_string(spec.l));
  if (spec.F.rows() == spec.n && spec.F.cols() == spec.m && rank(spec.F) != spec.m)
    violations.push_back("rows of F do not generate a lattice of maximal rank: rank " +
                         std::to_string(rank(spec.F)) + " < " + std::to_string(spec.m));
  return violations;
}

MetricBlocks metric_blocks(const TorusSpec& spec) {
  MetricBlocks blocks{RatMat(spec.l, spec.l), RatMat(spec.m, spec.m)};
  for (std::size_t d = 0; d < spec.n; ++d) {
    for (std::size_t p = 0; p < spec.l; ++p)
      for (std::size_t q = 0; q < spec.l; ++q)
        blocks.G1(p, q) += spec.r_sq[d] * spec.E(d, p) * spec.E(d, q);
    for (std::size_t r = 0; r < spec.m; ++r)
      for (std::size_t s = 0; s < spec.m; ++s)
        blocks.G2(r, s) += spec.r_sq[d] * spec.F(d, r) * spec.F(d, s);
  }
  return blocks;
}

RatVec alpha(const TorusSpec& spec) {
  const MetricBlocks blocks = metric_blocks(spec);
  const auto g1_inv = inverse(blocks.G1);
  const auto g2_inv = inverse(blocks.G2);
  if (!g1_inv || !g2_inv)
    throw std::logic_error("metric block singular; spec not validated");
  RatVec a(spec.n);
  for (std::size_t d = 0; d < spec.n; ++d) {
    const RatVec e_d = spec.E.row(d);
    const RatVec f_d = spec.F.row(d);
    a[d] = dot(mat_vec(*g1_inv, e_d), e_d) + dot(mat_vec(*g2_inv, f_d), f_d);
  }
  return a;
}

QuatVec immerse(const TorusSpec& spec, std::span<const double> x,
                std::span<const double> y) {
  check_point(spec, x, y);
  QuatVec psi(spec.n);
  for (std::size_t d = 0; d < spec.n; ++d) {
    const double r_d = std::sqrt(to_double(spec.r_sq[d]));
    psi[d] = r_d * (exp_unit(Axis::J, phase(spec.E, d, x)) *
                    exp_unit(Axis::K, phase(spec.F, d, y)));
  }
  return psi;
}

std::vector<QuatVec> tangent_frame(const TorusSpec& spec,
                                   std::span<const double> x,
                                   std::span<const double> y) {
  check_point(spec, x, y);
  std::vector<QuatVec> frame;
  frame.reserve(spec.l + spec.m);
  // d/dtheta e^{j theta} = j e^{j theta}, likewise for k; the derivative
  // factor stays in its own exponential's slot.
  for (std::size_t p = 0; p < spec.l; ++p) {
    QuatVec v(spec.n);
    for (std::size_t d = 0; d < spec.n; ++d) {
      const double r_d = std::sqrt(to_double(spec.r_sq[d]));
      const Quat a = exp_unit(Axis::J, phase(spec.E, d, x));
      const Quat b = exp_unit(Axis::K, phase(spec.F, d, y));
      v[d] = (r_d * to_double(spec.E(d, p))) * (unit(Axis::J) * a * b);
    }
    frame.push_back(std::move(v));
  }
  for (std::size_t q = 0; q < spec.m; ++q) {
    QuatVec v(spec.n);
    for (std::size_t d = 0; d < spec.n; ++d) {
      const double r_d = std::sqrt(to_double(spec.r_sq[d]));
      const Quat a = exp_unit(Axis::J, phase(spec.E, d, x));
      const Quat b = exp_unit(Axis::K, phase(spec.F, d, y));
      v[d] = (r_d * to_double(spec.F(d, q))) * (a * (unit(Axis::K) * b));
    }
    frame.push_back(std::move(v));
  }
  return frame;
}

QuatVec mean_curvature(const TorusSpec& spec, std::span<const double> x,
                       std::span<const double> y) {
  if (spec.l + spec.m == 0)
    throw std::invalid_argument("mean curvature requires l + m >= 1");
  const RatVec a = alpha(spec);
  QuatVec h = immerse(spec, x, y);
  const double scale = -1.0 / static_cast<double>(spec.l + spec.m);
  for (std::size_t d = 0; d < spec.n; ++d)
    h[d] = (scale * to_double(a[d])) * h[d];
  return h;
}

QuatVec sphere_mean_curvature(const TorusSpec& spec, const Rat& r_sq_total,
                              std::span<const double> x,
                              std::span<const double> y) {
  Rat sum;
  for (const Rat& r : spec.r_sq) sum += r;
  if (sum != r_sq_total)
    throw std::invalid_argument("spec does not lie on the requested sphere");
  if (spec.l + spec.m == 0)
    throw std::invalid_argument("sphere mean curvature requires l + m >= 1");
  const RatVec a = alpha(spec);
  QuatVec h = immerse(spec, x, y);
  for (std::size_t d = 0; d < spec.n; ++d) {
    const Rat beta = 1 / r_sq_total - a[d] / Rat(static_cast<long>(spec.l + spec.m));
    h[d] = to_double(beta) * h[d];
  }
  return h;
}

TorusSpec project_homogeneous(const TorusSpec& spec, Side side) {
  TorusSpec out = spec;
  if (side == Side::X) {
    out.m = 0;
    out.F = RatMat(spec.n, 0);
  } else {
    out.l = 0;
    out.E = RatMat(spec.n, 0);
  }
  return out;
}

}  // namespace isotori
