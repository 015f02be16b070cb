#include "isotori/catalog.hpp"

#include "isotori/report.hpp"

namespace isotori {

namespace {

RatMat mat(std::size_t rows, std::size_t cols,
           std::initializer_list<long> entries) {
  RatMat m(rows, cols);
  auto it = entries.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rat(*it++);
  return m;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;

  {
    CatalogEntry e;
    e.name = "unit-circle";
    e.description =
        "The unit circle T^{1,0} in H^1: psi(x) = e^{jx}. A great circle of "
        "S^3, minimal, H-minimal for omega_J, pi_K-horizontal.";
    e.spec = {1, 1, 0, {rat(1)}, mat(1, 1, {1}), RatMat(1, 0), e.name};
    e.expected = {
        {"alpha", "(1)"},
        {"hmin_ambient_J", "true"},
        {"hmin_ambient_K", "false"},
        {"sphere_r_sq", "1"},
        {"horizontal_J", "false"},
        {"horizontal_K", "true"},
        {"hmin_projected_J", "NOT_APPLICABLE (not horizontal)"},
        {"hmin_projected_K", "true"},
        {"minimal_in_sphere", "true"},
        {"homogeneous_X.hmin_ambient_J", "true"},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "ex2-1-tnm";
    e.description =
        "A T^{n,m} family instance with n = 3, m = 2: E the standard basis "
        "of R^3, f_3 = f_1 and r_3 = r_1 (the family requires f_p = f_q "
        "exactly when r_p = r_q). H-minimal for both forms.";
    e.spec = {3, 3, 2, {rat(1), rat(2), rat(1)},
              mat(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}),
              mat(3, 2, {1, 0, 0, 1, 1, 0}), e.name};
    e.expected = {
        {"alpha", "(3/2, 1, 3/2)"},
        {"hmin_ambient_J", "true"},
        {"hmin_ambient_K", "true"},
        {"sphere_r_sq", "4"},
        {"horizontal_J", "false"},
        {"horizontal_K", "false"},
        {"hmin_projected_J", "NOT_APPLICABLE (not on the unit sphere)"},
        {"hmin_projected_K", "NOT_APPLICABLE (not on the unit sphere)"},
        {"minimal_in_sphere", "false"},
        {"homogeneous_X.hmin_ambient_J", "true"},
        {"homogeneous_Y.hmin_ambient_K", "true"},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "ex2-2-t22";
    e.description =
        "T^{2,2} in H^4: psi = (2 e^{jx1}e^{ky1}, e^{jx2}e^{ky2}, "
        "(1/2) e^{j(2x1+2x2)}e^{ky1}, e^{j(x1+2x2)}e^{ky2}). Not H-minimal "
        "for either form, yet both homogeneous projections are H-minimal.";
    e.spec = {4, 2, 2, {rat(4), rat(1), rat(1, 4), rat(1)},
              mat(4, 2, {1, 0, 0, 1, 2, 2, 1, 2}),
              mat(4, 2, {1, 0, 0, 1, 1, 0, 0, 1}), e.name};
    e.expected = {
        {"alpha", "(70/153, 13/18, 172/153, 7/6)"},
        {"hmin_ambient_J", "false"},
        {"hmin_ambient_K", "false"},
        {"homogeneous_X.hmin_ambient_J", "true"},
        {"homogeneous_Y.hmin_ambient_K", "true"},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "ex2-3-t33";
    e.description =
        "T^{3,3} in H^4: psi = (e^{jx1}e^{ky1}, e^{jx2}e^{ky2}, "
        "e^{jx3}e^{ky3}, (1/sqrt2) e^{j2x1}e^{k2y2}). H-minimal for both "
        "forms, yet neither homogeneous projection is H-minimal.";
    e.spec = {4, 3, 3, {rat(1), rat(1), rat(1), rat(1, 2)},
              mat(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 2, 0, 0}),
              mat(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 2, 0}), e.name};
    e.expected = {
        {"alpha", "(4/3, 4/3, 2, 8/3)"},
        {"hmin_ambient_J", "true"},
        {"hmin_ambient_J_certificate", "SOLUTION lambda = (2/9, 2/9, 1/3)"},
        {"hmin_ambient_K", "true"},
        {"homogeneous_X.hmin_ambient_J", "false"},
        {"homogeneous_Y.hmin_ambient_K", "false"},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "ex3-1-t33-minimal";
    e.description =
        "T^{3,3} in H^4: psi = (e^{jx1}e^{ky1}, sqrt(3/2) e^{jx2}e^{ky2}, "
        "sqrt(3/2) e^{jx3}e^{ky3}, e^{-j(x1+x2+x3)}e^{-ky1}). Minimal in the "
        "sphere of squared radius 5, while neither homogeneous projection "
        "is minimal there.";
    e.spec = {4, 3, 3, {rat(1), rat(3, 2), rat(3, 2), rat(1)},
              mat(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, -1, -1, -1}),
              mat(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, -1, 0, 0}), e.name};
    e.expected = {
        {"alpha", "(6/5, 6/5, 6/5, 6/5)"},
        {"sphere_r_sq", "5"},
        {"minimal_in_sphere", "true"},
        {"propagation_x_minimal", "false"},
        {"propagation_y_minimal", "false"},
        {"propagation_full_minimal", "true"},
        {"propagation_implication_holds", "true"},
        {"homogeneous_X.minimal_in_sphere", "false"},
        {"homogeneous_Y.minimal_in_sphere", "false"},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "ex3-2-t22-projected";
    e.description =
        "T^{2,2} in the unit sphere of H^4: psi = (1/2)(e^{jx1}e^{ky1}, "
        "e^{jx2}e^{ky2}, e^{-jx1}e^{-k(2y1+y2)}, e^{-jx2}e^{ky1}). Both Hopf "
        "projections are H-minimal but not minimal; the X homogeneous "
        "projection is minimal, the Y one is H-minimal but not minimal.";
    e.spec = {4, 2, 2,
              {rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)},
              mat(4, 2, {1, 0, 0, 1, -1, 0, 0, -1}),
              mat(4, 2, {1, 0, 0, 1, -2, -1, 1, 0}), e.name};
    e.expected = {
        {"alpha", "(3, 5, 5, 3)"},
        {"sphere_r_sq", "1"},
        {"horizontal_J", "true"},
        {"horizontal_K", "true"},
        {"hmin_projected_J", "true"},
        {"hmin_projected_J_certificate", "SOLUTION lambda = (-1, 1)"},
        {"hmin_projected_K", "true"},
        {"hmin_projected_K_certificate", "SOLUTION lambda = (-1, 1)"},
        {"minimal_in_sphere", "false"},
        {"homogeneous_X.minimal_in_sphere", "true"},
        {"homogeneous_Y.hmin_projected_K", "true"},
        {"homogeneous_Y.minimal_in_sphere", "false"},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "ex3-3-t23-minimal";
    e.description =
        "T^{2,3} in the unit sphere of H^4: psi = (1/2)(e^{jx1}e^{ky1}, "
        "e^{jx2}e^{ky2}, e^{-jx1}e^{ky3}, e^{-jx2}e^{-k(y1+y2+y3)}). Both "
        "homogeneous projections are minimal, so the full torus is minimal "
        "and both Hopf projections are minimal.";
    e.spec = {4, 2, 3,
              {rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)},
              mat(4, 2, {1, 0, 0, 1, -1, 0, 0, -1}),
              mat(4, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1, -1, -1, -1}), e.name};
    e.expected = {
        {"alpha", "(5, 5, 5, 5)"},
        {"sphere_r_sq", "1"},
        {"horizontal_J", "true"},
        {"horizontal_K", "true"},
        {"hmin_projected_J", "true"},
        {"hmin_projected_J_certificate", "SOLUTION lambda = (0, 0)"},
        {"hmin_projected_K", "true"},
        {"minimal_in_sphere", "true"},
        {"projection_minimal", "true"},
        {"propagation_x_minimal", "true"},
        {"propagation_y_minimal", "true"},
        {"propagation_full_minimal", "true"},
        {"homogeneous_X.minimal_in_sphere", "true"},
        {"homogeneous_Y.minimal_in_sphere", "true"},
    };
    entries.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "corollary-tnn";
    e.description =
        "T^{2,2} in H^2 with E = F = identity, unit radii: the l = m = n "
        "case, H-minimal with respect to both forms simultaneously.";
    e.spec = {2, 2, 2, {rat(1), rat(1)}, mat(2, 2, {1, 0, 0, 1}),
              mat(2, 2, {1, 0, 0, 1}), e.name};
    e.expected = {
        {"alpha", "(2, 2)"},
        {"hmin_ambient_J", "true"},
        {"hmin_ambient_K", "true"},
        {"sphere_r_sq", "2"},
        {"minimal_in_sphere", "true"},
    };
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

CatalogCheckResult check_entry(const CatalogEntry& entry) {
  const Report report = classification_report(classify(entry.spec));
  CatalogCheckResult result;
  for (const auto& [key, expected] : entry.expected) {
    const std::string actual = report.value_of(key);
    if (actual != expected) {
      result.pass = false;
      result.mismatches.push_back(key + ": expected '" + expected +
                                  "', got '" + actual + "'");
    }
  }
  return result;
}

}  // namespace isotori
