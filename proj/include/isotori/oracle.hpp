#ifndef ISOTORI_ORACLE_HPP
#define ISOTORI_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "isotori/certify.hpp"
#include "isotori/torus.hpp"

namespace isotori {

struct OracleParams {
  std::size_t sample_count = 10;
  double fd_step = 1e-4;
  double tolerance = 1e-6;        // FD-vs-closed-form, relative
  double algebraic_tol = 1e-8;    // identities with no differentiation
  double coarse_threshold = 1e-3; // below this but above tolerance: INDETERMINATE
  std::uint64_t rng_seed = 42;
};

enum class Verdict { ZERO, NONZERO, INDETERMINATE };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ZERO: return "ZERO";
    case Verdict::NONZERO: return "NONZERO";
    default: return "INDETERMINATE";
  }
}

struct ResidualReport {
  std::string check;
  double max_residual = 0;
  std::vector<double> worst_point;  // x coords then y coords
  bool pass = false;                // max_residual <= the applicable tolerance
  Verdict verdict = Verdict::INDETERMINATE;
};

// Deterministic sample points, uniform in [0, 2pi)^{l+m}.
std::vector<std::vector<double>> sample_points(const TorusSpec& spec,
                                               const OracleParams& params);

// (1/(l+m)) sum G^{pq} d_p d_q psi by central second differences, with the
// exact block inverses converted to floats after inversion.
QuatVec fd_mean_curvature(const TorusSpec& spec, std::span<const double> x,
                          std::span<const double> y, const OracleParams& params);

// Max relative deviation of the FD mean curvature from the closed form
// over the sample points.
ResidualReport fd_mean_curvature_residual(const TorusSpec& spec,
                                          const OracleParams& params);

struct IsotropyReport {
  double wJ_max = 0;      // |omega_J| over tangent-frame pairs
  double wK_max = 0;
  double wI_error_max = 0;  // |omega_I(dx_p, dy_q) - C_pq| vs exact obstruction
  bool pass = false;
};

IsotropyReport isotropy_residual(const TorusSpec& spec, const OracleParams& params);

// Norm of the normal component of J H (or K H; or of the sphere mean
// curvature when use_sphere). ZERO/NONZERO verdict uses the tolerance and
// coarse-threshold bands; in between is INDETERMINATE.
ResidualReport tangency_residual(const TorusSpec& spec, Form form,
                                 bool use_sphere, const OracleParams& params);

// max |(H, psi) + 1| over sample points.
ResidualReport h_psi_identity(const TorusSpec& spec, const OracleParams& params);

// Finite differences of the field vH (or v Hhat) along each coordinate,
// projected on the tangent frame; near zero confirms div(vH) = 0.
ResidualReport divergence_residual(const TorusSpec& spec, Form form,
                                   bool use_sphere, const OracleParams& params);

// max |(v psi, frame vector)| over sample points; near zero iff the
// corresponding horizontality sum vanishes.
ResidualReport hopf_fiber_orthogonality(const TorusSpec& spec, Axis v,
                                        const OracleParams& params);

}  // namespace isotori

#endif
