#ifndef ISOTORI_TORUS_HPP
#define ISOTORI_TORUS_HPP

#include <span>
#include <string>
#include <vector>

#include "isotori/linalg.hpp"
#include "isotori/quaternion.hpp"

namespace isotori {

// Exact data of the torus T^{l,m} in H^n: squared radii r_d^2 and the
// frequency rows e_d (of E, n x l) and f_d (of F, n x m). Radii themselves
// may be irrational; everything the criteria need depends on r_d^2 only.
struct TorusSpec {
  std::size_t n = 0;  // quaternionic ambient dimension
  std::size_t l = 0;
  std::size_t m = 0;
  RatVec r_sq;  // length n, all > 0
  RatMat E;     // n x l
  RatMat F;     // n x m
  std::string name;
};

// Every invariant violation, not just the first. Empty means valid.
std::vector<std::string> validate(const TorusSpec& spec);

struct MetricBlocks {
  RatMat G1;  // l x l
  RatMat G2;  // m x m
};

// G1 = sum_d r_d^2 e_d e_d^T, G2 = sum_d r_d^2 f_d f_d^T. Constant in
// (x, y); the cross block vanishes identically.
MetricBlocks metric_blocks(const TorusSpec& spec);

// alpha_d = (G1^{-1} e_d, e_d) + (G2^{-1} f_d, f_d); a degenerate factor
// (l = 0 or m = 0) contributes zero.
RatVec alpha(const TorusSpec& spec);

// psi(x, y), componentwise r_d e^{j(e_d,x)} e^{k(f_d,y)}.
QuatVec immerse(const TorusSpec& spec, std::span<const double> x,
                std::span<const double> y);

// The l vectors d psi / d x_p followed by the m vectors d psi / d y_q,
// differentiated analytically componentwise.
std::vector<QuatVec> tangent_frame(const TorusSpec& spec,
                                   std::span<const double> x,
                                   std::span<const double> y);

// H = -(1/(l+m)) (alpha_d psi_d)_d. Requires l + m >= 1.
QuatVec mean_curvature(const TorusSpec& spec, std::span<const double> x,
                       std::span<const double> y);

// Mean curvature in the sphere of squared radius r_sq_total = sum r_d^2:
// componentwise (1/r^2 - alpha_d/(l+m)) psi_d. Throws if r_sq_total does
// not equal sum r_d^2.
QuatVec sphere_mean_curvature(const TorusSpec& spec, const Rat& r_sq_total,
                              std::span<const double> x,
                              std::span<const double> y);

enum class Side { X, Y };

// The homogeneous torus psi(x, 0) (side X: keep E, drop F) or psi(0, y).
TorusSpec project_homogeneous(const TorusSpec& spec, Side side);

}  // namespace isotori

#endif
