#ifndef ISOTORI_CERTIFY_HPP
#define ISOTORI_CERTIFY_HPP

#include <memory>
#include <optional>
#include <variant>

#include "isotori/torus.hpp"

namespace isotori {

enum class Form { J, K };

inline const char* form_name(Form f) { return f == Form::J ? "J" : "K"; }

// Rational witness for a decision: either an exact solution vector of the
// defining linear system, or the first row where the forced system fails.
struct Solution {
  RatVec lambda;
};
struct Violation {
  std::size_t index;  // 1-based component index d
  Rat lhs, rhs;
};
using Certificate = std::variant<Solution, Violation>;

struct HminResult {
  bool hmin = false;
  Certificate certificate;
};

// C_{pq} = sum_d r_d^2 e_{dp} f_{dq} (l x m). The torus is omega_I
// isotropic only in the degenerate case where one factor is absent.
RatMat omega_I_obstruction(const TorusSpec& spec);

bool omega_I_isotropic(const TorusSpec& spec);

// H-minimality of T^{l,m} in H^n with respect to omega_J or omega_K:
// solvability of (lambda, e_d) = alpha_d / (l+m) for all d (F rows for K).
HminResult hmin_ambient(const TorusSpec& spec, Form form);

// Redundant cross-check via the rank formulation: rank of the n x (l+1)
// matrix with rows (e_d; alpha_d) equals l. Must agree with hmin_ambient.
bool hmin_ambient_rank_form(const TorusSpec& spec, Form form);

Rat sphere_radius_sq(const TorusSpec& spec);

// Exact zero test of sum_d r_d^2 e_d (form J) or sum_d r_d^2 f_d (form K).
bool horizontality(const TorusSpec& spec, Form form);

enum class ProjectedStatus { OK, NOT_UNIT_SPHERE, NOT_HORIZONTAL };

struct ProjectedResult {
  ProjectedStatus status = ProjectedStatus::OK;
  bool hmin = false;
  std::optional<Certificate> certificate;
};

// H-minimality of the Hopf projection pi_J(T^{l,m}) (resp. pi_K): requires
// the unit sphere and the matching horizontality; then solvability of
// (lambda, e_d) = alpha_d - (l+m) for all d. The condition ranges over all
// n components.
ProjectedResult hmin_projected(const TorusSpec& spec, Form form);

bool hmin_projected_rank_form(const TorusSpec& spec, Form form);

// alpha_d = (l+m)/r^2 for every d, with r^2 = sum r_d^2.
bool minimal_in_sphere(const TorusSpec& spec);

struct PropagationReport {
  bool x_minimal = false;
  bool y_minimal = false;
  bool full_minimal = false;
  // Both projections minimal must imply the full torus minimal.
  bool implication_holds = false;
};

PropagationReport minimality_propagation_check(const TorusSpec& spec);

struct Classification {
  TorusSpec spec;
  RatVec alpha_values;
  RatMat omega_I;  // l x m obstruction matrix
  bool omega_I_isotropic = false;
  HminResult hmin_J, hmin_K;
  Rat sphere_r_sq;
  bool horizontal_J = false, horizontal_K = false;
  ProjectedResult proj_J, proj_K;
  bool minimal = false;
  PropagationReport propagation;
  // Classifications of the homogeneous projections psi(x,0) and psi(0,y).
  // Absent at nesting depth one, or when the projection is zero-dimensional.
  std::unique_ptr<Classification> homogeneous_X, homogeneous_Y;
};

// Full report. Throws std::invalid_argument on an invalid spec or l+m = 0.
Classification classify(const TorusSpec& spec);

}  // namespace isotori

#endif
