#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isotori/catalog.hpp"
#include "isotori/certify.hpp"
#include "random_specs.hpp"

using namespace isotori;

namespace {

const TorusSpec& entry(const char* name) { return find_entry(name)->spec; }

bool is_zero_matrix(const RatMat& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) return false;
  return true;
}

TorusSpec scaled(const TorusSpec& spec, const Rat& c) {
  TorusSpec out = spec;
  for (Rat& r : out.r_sq) r *= c;
  return out;
}

}  // namespace

TEST_CASE("omega_I obstruction matrix") {
  SUBCASE("closed form") {
    const RatMat c = omega_I_obstruction(entry("ex3-2-t22-projected"));
    REQUIRE(c.rows() == 2);
    REQUIRE(c.cols() == 2);
    CHECK(c(0, 0) == rat(3, 4));
    CHECK(c(0, 1) == rat(1, 4));
    CHECK(c(1, 0) == rat(-1, 4));
    CHECK(c(1, 1) == rat(1, 4));
  }
  SUBCASE("one-component torus") {
    TorusSpec tiny{1, 1, 1, {rat(1)}, RatMat::identity(1), RatMat::identity(1), ""};
    const RatMat c = omega_I_obstruction(tiny);
    CHECK(c(0, 0) == 1);
    CHECK(!omega_I_isotropic(tiny));
  }
  SUBCASE("degenerate factor is vacuously isotropic") {
    const TorusSpec proj = project_homogeneous(entry("ex2-2-t22"), Side::X);
    CHECK(omega_I_obstruction(proj).cols() == 0);
    CHECK(omega_I_isotropic(proj));
  }
}

TEST_CASE("ambient H-minimality") {
  SUBCASE("certificate for the H-minimal T^{3,3}") {
    const HminResult r = hmin_ambient(entry("ex2-3-t33"), Form::J);
    CHECK(r.hmin);
    CHECK(std::get<Solution>(r.certificate).lambda ==
          RatVec{rat(2, 9), rat(2, 9), rat(1, 3)});
    CHECK(hmin_ambient(entry("ex2-3-t33"), Form::K).hmin);
  }
  SUBCASE("violating witness for the non-H-minimal T^{2,2}") {
    for (Form form : {Form::J, Form::K}) {
      const HminResult r = hmin_ambient(entry("ex2-2-t22"), form);
      CHECK(!r.hmin);
      const auto& v = std::get<Violation>(r.certificate);
      CHECK(v.lhs != v.rhs);
      // rows 1..2 force lambda; row 3 is the first break on the J side
      if (form == Form::J) {
        CHECK(v.index == 3);
        CHECK(v.lhs == rat(361, 153) / 4);
        CHECK(v.rhs == rat(172, 153) / 4);
      }
    }
  }
  SUBCASE("l = n is always H-minimal for omega_J") {
    CHECK(hmin_ambient(entry("ex2-1-tnm"), Form::J).hmin);
    CHECK(hmin_ambient(entry("corollary-tnn"), Form::J).hmin);
    CHECK(hmin_ambient(entry("corollary-tnn"), Form::K).hmin);
  }
}

TEST_CASE("rank and solvability formulations agree") {
  for (const CatalogEntry& e : catalog())
    for (Form form : {Form::J, Form::K})
      CHECK(hmin_ambient(e.spec, form).hmin == hmin_ambient_rank_form(e.spec, form));

  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const TorusSpec spec = isotori::testing::random_spec(rng);
    for (Form form : {Form::J, Form::K})
      CHECK(hmin_ambient(spec, form).hmin == hmin_ambient_rank_form(spec, form));
  }
}

TEST_CASE("sphere radius") {
  CHECK(sphere_radius_sq(entry("ex3-1-t33-minimal")) == 5);
  CHECK(sphere_radius_sq(entry("ex3-2-t22-projected")) == 1);
  CHECK(sphere_radius_sq(entry("unit-circle")) == 1);
}

TEST_CASE("horizontality") {
  CHECK(horizontality(entry("ex3-2-t22-projected"), Form::J));
  CHECK(horizontality(entry("ex3-2-t22-projected"), Form::K));
  CHECK(!horizontality(entry("ex2-3-t33"), Form::J));
  // absent factor: the empty sum vanishes
  CHECK(horizontality(entry("unit-circle"), Form::K));
}

TEST_CASE("projected H-minimality") {
  SUBCASE("certificates") {
    for (Form form : {Form::J, Form::K}) {
      const ProjectedResult r = hmin_projected(entry("ex3-2-t22-projected"), form);
      REQUIRE(r.status == ProjectedStatus::OK);
      CHECK(r.hmin);
      CHECK(std::get<Solution>(*r.certificate).lambda == RatVec{rat(-1), rat(1)});
    }
    const ProjectedResult r33 = hmin_projected(entry("ex3-3-t23-minimal"), Form::J);
    REQUIRE(r33.status == ProjectedStatus::OK);
    CHECK(r33.hmin);
    CHECK(is_zero(std::get<Solution>(*r33.certificate).lambda));
  }
  SUBCASE("not applicable off the unit sphere") {
    const TorusSpec rescaled = scaled(entry("ex3-2-t22-projected"), rat(2));
    CHECK(hmin_projected(rescaled, Form::J).status == ProjectedStatus::NOT_UNIT_SPHERE);
  }
  SUBCASE("not applicable without horizontality") {
    CHECK(hmin_projected(entry("unit-circle"), Form::J).status ==
          ProjectedStatus::NOT_HORIZONTAL);
  }
  SUBCASE("agrees with the rank formulation when applicable") {
    for (const CatalogEntry& e : catalog())
      for (Form form : {Form::J, Form::K}) {
        const ProjectedResult r = hmin_projected(e.spec, form);
        if (r.status == ProjectedStatus::OK)
          CHECK(r.hmin == hmin_projected_rank_form(e.spec, form));
      }
  }
}

TEST_CASE("minimality in the sphere") {
  CHECK(minimal_in_sphere(entry("ex3-1-t33-minimal")));
  CHECK(!minimal_in_sphere(entry("ex3-2-t22-projected")));
  CHECK(minimal_in_sphere(entry("ex3-3-t23-minimal")));

  SUBCASE("minimal implies projected H-minimal when applicable") {
    std::mt19937_64 rng(43);
    for (const CatalogEntry& e : catalog()) {
      if (!minimal_in_sphere(e.spec)) continue;
      for (Form form : {Form::J, Form::K}) {
        const ProjectedResult r = hmin_projected(e.spec, form);
        if (r.status == ProjectedStatus::OK) CHECK(r.hmin);
      }
    }
  }
}

TEST_CASE("minimality propagation") {
  const PropagationReport ex33 = minimality_propagation_check(entry("ex3-3-t23-minimal"));
  CHECK(ex33.x_minimal);
  CHECK(ex33.y_minimal);
  CHECK(ex33.full_minimal);
  CHECK(ex33.implication_holds);

  const PropagationReport ex31 = minimality_propagation_check(entry("ex3-1-t33-minimal"));
  CHECK(!ex31.x_minimal);
  CHECK(!ex31.y_minimal);
  CHECK(ex31.full_minimal);  // converse is not claimed
  CHECK(ex31.implication_holds);

  std::mt19937_64 rng(47);
  for (int t = 0; t < 200; ++t)
    CHECK(minimality_propagation_check(isotori::testing::random_spec(rng))
              .implication_holds);
}

TEST_CASE("classification aggregates") {
  SUBCASE("T^{3,3} vs its homogeneous projections") {
    const Classification c = classify(entry("ex2-3-t33"));
    CHECK(c.hmin_J.hmin);
    CHECK(c.hmin_K.hmin);
    REQUIRE(c.homogeneous_X);
    REQUIRE(c.homogeneous_Y);
    CHECK(!c.homogeneous_X->hmin_J.hmin);
    CHECK(!c.homogeneous_Y->hmin_K.hmin);
  }
  SUBCASE("T^{2,2} vs its homogeneous projections") {
    const Classification c = classify(entry("ex2-2-t22"));
    CHECK(!c.hmin_J.hmin);
    CHECK(!c.hmin_K.hmin);
    CHECK(c.homogeneous_X->hmin_J.hmin);
    CHECK(c.homogeneous_Y->hmin_K.hmin);
  }
  SUBCASE("projected example") {
    const Classification c = classify(entry("ex3-2-t22-projected"));
    CHECK(c.proj_J.hmin);
    CHECK(c.proj_K.hmin);
    CHECK(!c.minimal);
    CHECK(c.homogeneous_X->minimal);
    const Classification& y = *c.homogeneous_Y;
    CHECK(y.proj_K.status == ProjectedStatus::OK);
    CHECK(y.proj_K.hmin);
    CHECK(!y.minimal);
  }
  SUBCASE("homogeneous spec has no Y projection") {
    const Classification c = classify(entry("unit-circle"));
    CHECK(c.homogeneous_X);
    CHECK(!c.homogeneous_Y);
  }
}

TEST_CASE("properties on random specs") {
  std::mt19937_64 rng(53);
  SUBCASE("l = n forces hmin_J; m = n forces hmin_K") {
    for (int t = 0; t < 100; ++t) {
      CHECK(hmin_ambient(isotori::testing::random_spec(rng, 4, true, false), Form::J).hmin);
      CHECK(hmin_ambient(isotori::testing::random_spec(rng, 4, false, true), Form::K).hmin);
    }
  }
  SUBCASE("scaling the radii preserves verdicts and scales certificates") {
    for (int t = 0; t < 100; ++t) {
      const TorusSpec spec = isotori::testing::random_spec(rng);
      const Rat c = isotori::testing::random_positive(rng);
      const TorusSpec spec_c = scaled(spec, c);
      for (Form form : {Form::J, Form::K}) {
        const HminResult base = hmin_ambient(spec, form);
        const HminResult rescaled = hmin_ambient(spec_c, form);
        CHECK(base.hmin == rescaled.hmin);
        if (base.hmin) {
          const RatVec& lambda = std::get<Solution>(base.certificate).lambda;
          RatVec expected = lambda;
          for (Rat& v : expected) v /= c;
          CHECK(std::get<Solution>(rescaled.certificate).lambda == expected);
        } else {
          CHECK(std::get<Violation>(base.certificate).index ==
                std::get<Violation>(rescaled.certificate).index);
        }
      }
    }
  }
  SUBCASE("omega_I obstruction vanishes only on a thin set of specs") {
    for (const CatalogEntry& e : catalog())
      if (e.spec.l >= 1 && e.spec.m >= 1)
        CHECK(!is_zero_matrix(omega_I_obstruction(e.spec)));
    // C = E^T diag(r^2) F can vanish even with both factors present (the
    // weighted e/f pairings may cancel), but only on a measure-zero set;
    // over a discrete ensemble it stays rare.
    TorusSpec cancel{2, 1, 1, {rat(1), rat(1)}, RatMat(2, 1), RatMat(2, 1), ""};
    cancel.E(0, 0) = 1; cancel.E(1, 0) = 1;
    cancel.F(0, 0) = 1; cancel.F(1, 0) = -1;
    REQUIRE(validate(cancel).empty());
    CHECK(is_zero_matrix(omega_I_obstruction(cancel)));
    int zero_count = 0;
    for (int t = 0; t < 1000; ++t) {
      const TorusSpec spec = isotori::testing::random_spec(rng, 5, false, false, true);
      if (is_zero_matrix(omega_I_obstruction(spec))) ++zero_count;
    }
    CHECK(zero_count <= 5);
  }
}
