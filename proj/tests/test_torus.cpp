#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "isotori/catalog.hpp"
#include "isotori/certify.hpp"
#include "isotori/torus.hpp"
#include "random_specs.hpp"

using namespace isotori;

namespace {

const TorusSpec& entry(const char* name) { return find_entry(name)->spec; }

std::vector<double> random_point(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> dist(0, 2 * std::numbers::pi);
  std::vector<double> p(dim);
  for (double& c : p) c = dist(rng);
  return p;
}

// Exact determinant via elimination (test-only).
Rat det(const RatMat& m) {
  RatMat a = m;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a(sel, col) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(sel, c), a(col, c));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rat f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return d;
}

bool positive_definite(const RatMat& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RatMat lead(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) lead(r, c) = m(r, c);
    if (det(lead) <= 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(entry("ex2-3-t33")).empty());

  TorusSpec dup{2, 2, 0, {rat(1), rat(1)}, RatMat(2, 2), RatMat(2, 0), ""};
  dup.E(0, 0) = 1;
  dup.E(1, 0) = 1;  // e_1 = e_2 = (1, 0)
  const auto violations = validate(dup);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("rank 1 < 2") != std::string::npos);

  TorusSpec zero_r = entry("unit-circle");
  zero_r.r_sq[0] = 0;
  CHECK(!validate(zero_r).empty());

  TorusSpec l_too_big = entry("unit-circle");
  l_too_big.l = 2;
  CHECK(!validate(l_too_big).empty());
}

TEST_CASE("metric blocks closed form") {
  const MetricBlocks ex22 = metric_blocks(entry("ex2-2-t22"));
  RatMat g1(2, 2);
  g1(0, 0) = 6; g1(0, 1) = 3; g1(1, 0) = 3; g1(1, 1) = 6;
  CHECK(ex22.G1 == g1);

  TorusSpec basis{3, 3, 0, {rat(1), rat(1), rat(1)}, RatMat::identity(3),
                  RatMat(3, 0), ""};
  CHECK(metric_blocks(basis).G1 == RatMat::identity(3));
  CHECK(metric_blocks(basis).G2 == RatMat(0, 0));

  const MetricBlocks ex32 = metric_blocks(entry("ex3-2-t22-projected"));
  RatMat g2(2, 2);
  g2(0, 0) = rat(3, 2); g2(0, 1) = rat(1, 2);
  g2(1, 0) = rat(1, 2); g2(1, 1) = rat(1, 2);
  CHECK(ex32.G2 == g2);
}

TEST_CASE("metric blocks match float inner products of the tangent frame") {
  std::mt19937_64 rng(17);
  for (const CatalogEntry& e : catalog()) {
    const TorusSpec& spec = e.spec;
    const MetricBlocks blocks = metric_blocks(spec);
    for (int t = 0; t < 10; ++t) {
      const auto p = random_point(rng, spec.l + spec.m);
      const std::span<const double> x(p.data(), spec.l), y(p.data() + spec.l, spec.m);
      const auto frame = tangent_frame(spec, x, y);
      for (std::size_t a = 0; a < spec.l; ++a)
        for (std::size_t b = 0; b < spec.l; ++b)
          CHECK(real_inner(frame[a], frame[b]) ==
                doctest::Approx(to_double(blocks.G1(a, b))).epsilon(1e-10));
      for (std::size_t a = 0; a < spec.m; ++a)
        for (std::size_t b = 0; b < spec.m; ++b)
          CHECK(real_inner(frame[spec.l + a], frame[spec.l + b]) ==
                doctest::Approx(to_double(blocks.G2(a, b))).epsilon(1e-10));
      for (std::size_t a = 0; a < spec.l; ++a)
        for (std::size_t b = 0; b < spec.m; ++b)
          CHECK(std::abs(real_inner(frame[a], frame[spec.l + b])) < 1e-12);
    }
  }
}

TEST_CASE("alpha examples") {
  CHECK(alpha(entry("ex2-3-t33")) ==
        RatVec{rat(4, 3), rat(4, 3), rat(2), rat(8, 3)});
  for (const Rat& a : alpha(entry("ex3-1-t33-minimal"))) CHECK(a == rat(6, 5));
  for (const Rat& a : alpha(entry("ex3-3-t23-minimal"))) CHECK(a == rat(5));
}

TEST_CASE("immersion") {
  const TorusSpec& spec = entry("ex2-3-t33");
  SUBCASE("origin maps to the radii") {
    const std::vector<double> zero(3, 0.0);
    const QuatVec psi = immerse(spec, zero, zero);
    for (std::size_t d = 0; d < spec.n; ++d) {
      CHECK(psi[d].w == doctest::Approx(std::sqrt(to_double(spec.r_sq[d]))));
      CHECK(psi[d].x == doctest::Approx(0));
      CHECK(psi[d].y == doctest::Approx(0));
      CHECK(psi[d].z == doctest::Approx(0));
    }
  }
  SUBCASE("componentwise norms and periodicity") {
    std::mt19937_64 rng(23);
    const double period = 2 * std::numbers::pi;
    for (int t = 0; t < 20; ++t) {
      const auto p = random_point(rng, 6);
      const std::span<const double> x(p.data(), 3), y(p.data() + 3, 3);
      const QuatVec psi = immerse(spec, x, y);
      for (std::size_t d = 0; d < spec.n; ++d)
        CHECK(psi[d].norm() ==
              doctest::Approx(std::sqrt(to_double(spec.r_sq[d]))).epsilon(1e-12));
      // E and F have integer entries, so 2*pi shifts are lattice periods.
      std::vector<double> shifted = p;
      shifted[rng() % 6] += period;
      const std::span<const double> xs(shifted.data(), 3), ys(shifted.data() + 3, 3);
      const QuatVec psi2 = immerse(spec, xs, ys);
      for (std::size_t d = 0; d < spec.n; ++d)
        CHECK((psi2[d] - psi[d]).norm() < 1e-12);
    }
  }
}

TEST_CASE("tangent frame of the circle") {
  const TorusSpec& circle = entry("unit-circle");
  const std::vector<double> zero{0.0};
  const auto frame = tangent_frame(circle, zero, std::span<const double>{});
  REQUIRE(frame.size() == 1);
  CHECK((frame[0][0] - unit(Axis::J)).norm() < 1e-15);
}

TEST_CASE("mean curvature") {
  std::mt19937_64 rng(29);
  SUBCASE("(H, psi) = -1 everywhere, every catalog spec") {
    for (const CatalogEntry& e : catalog()) {
      for (int t = 0; t < 10; ++t) {
        const auto p = random_point(rng, e.spec.l + e.spec.m);
        const std::span<const double> x(p.data(), e.spec.l),
            y(p.data() + e.spec.l, e.spec.m);
        CHECK(real_inner(mean_curvature(e.spec, x, y), immerse(e.spec, x, y)) ==
              doctest::Approx(-1.0).epsilon(1e-12));
      }
    }
  }
  SUBCASE("unit circle: H = -psi") {
    const TorusSpec& circle = entry("unit-circle");
    const std::vector<double> x{1.3};
    const QuatVec h = mean_curvature(circle, x, {});
    const QuatVec psi = immerse(circle, x, {});
    CHECK((h[0] + psi[0]).norm() < 1e-14);
  }
}

TEST_CASE("sphere mean curvature") {
  std::mt19937_64 rng(31);
  SUBCASE("vanishes for the minimal torus") {
    const TorusSpec& spec = entry("ex3-1-t33-minimal");
    for (int t = 0; t < 10; ++t) {
      const auto p = random_point(rng, 6);
      const std::span<const double> x(p.data(), 3), y(p.data() + 3, 3);
      CHECK(norm(sphere_mean_curvature(spec, rat(5), x, y)) < 1e-12);
    }
  }
  SUBCASE("Hhat = H + psi / r^2 and tangency to the sphere") {
    for (const CatalogEntry& e : catalog()) {
      const Rat r_sq = sphere_radius_sq(e.spec);
      for (int t = 0; t < 10; ++t) {
        const auto p = random_point(rng, e.spec.l + e.spec.m);
        const std::span<const double> x(p.data(), e.spec.l),
            y(p.data() + e.spec.l, e.spec.m);
        const QuatVec hhat = sphere_mean_curvature(e.spec, r_sq, x, y);
        const QuatVec psi = immerse(e.spec, x, y);
        const QuatVec expected =
            mean_curvature(e.spec, x, y) + (1.0 / to_double(r_sq)) * psi;
        CHECK(norm(hhat - expected) < 1e-12);
        CHECK(std::abs(real_inner(hhat, psi)) < 1e-12);
      }
    }
  }
  SUBCASE("wrong sphere radius throws") {
    const std::vector<double> zero(6, 0.0);
    const std::span<const double> x(zero.data(), 3), y(zero.data() + 3, 3);
    CHECK_THROWS_AS(sphere_mean_curvature(entry("ex3-1-t33-minimal"), rat(1), x, y),
                    std::invalid_argument);
  }
}

TEST_CASE("homogeneous projections") {
  const TorusSpec& spec = entry("ex2-2-t22");
  const TorusSpec x_proj = project_homogeneous(spec, Side::X);
  CHECK(x_proj.m == 0);
  CHECK(x_proj.E == spec.E);
  CHECK(x_proj.F.cols() == 0);
  CHECK(project_homogeneous(x_proj, Side::X).E == x_proj.E);

  // Blocks survive the projection, and the f-term of alpha vanishes.
  CHECK(metric_blocks(x_proj).G1 == metric_blocks(spec).G1);
  const RatVec a = alpha(x_proj);
  const MetricBlocks blocks = metric_blocks(spec);
  const RatMat g1_inv = *inverse(blocks.G1);
  for (std::size_t d = 0; d < spec.n; ++d)
    CHECK(a[d] == dot(mat_vec(g1_inv, spec.E.row(d)), spec.E.row(d)));
}

TEST_CASE("exact invariants on random specs") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const TorusSpec spec = isotori::testing::random_spec(rng);
    REQUIRE(validate(spec).empty());
    const MetricBlocks blocks = metric_blocks(spec);
    CHECK(positive_definite(blocks.G1));
    CHECK(positive_definite(blocks.G2));
    // trace identity: sum_d r_d^2 alpha_d = l + m
    Rat trace;
    const RatVec a = alpha(spec);
    for (std::size_t d = 0; d < spec.n; ++d) trace += spec.r_sq[d] * a[d];
    CHECK(trace == Rat(static_cast<long>(spec.l + spec.m)));
  }
}
