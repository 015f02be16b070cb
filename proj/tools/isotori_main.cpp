#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isotori/catalog.hpp"
#include "isotori/certify.hpp"
#include "isotori/oracle.hpp"
#include "isotori/report.hpp"
#include "isotori/specfile.hpp"

namespace {

using namespace isotori;

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitOracleDisagreement = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ISOTORI_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 42;
}

TorusSpec load_validated(const std::string& path) {
  const TorusSpec spec = load_spec(path);
  const auto violations = validate(spec);
  if (!violations.empty()) {
    std::string message = "validation failed:";
    for (const auto& v : violations) message += "\n  - " + v;
    throw SpecFileError(message);
  }
  return spec;
}

void print_report(const Report& report, bool as_json) {
  std::cout << (as_json ? report.to_json() : report.to_text());
}

int run_check(const std::string& path, bool as_json) {
  const TorusSpec spec = load_validated(path);
  print_report(classification_report(classify(spec)), as_json);
  return kExitOk;
}

// Appends the oracle sections and returns true if every numeric verdict is
// consistent with the exact certificates (INDETERMINATE never disagrees).
bool run_oracles(Report& report, const TorusSpec& spec,
                 const Classification& c, const OracleParams& params) {
  bool agree = true;
  auto check_band = [&](const ResidualReport& r, bool exact_zero) {
    if (r.verdict == Verdict::ZERO && !exact_zero) agree = false;
    if (r.verdict == Verdict::NONZERO && exact_zero) agree = false;
  };

  const ResidualReport fd = fd_mean_curvature_residual(spec, params);
  append_residual(report, "oracle.fd_mean_curvature", fd);
  if (!fd.pass) agree = false;

  const IsotropyReport iso = isotropy_residual(spec, params);
  report.add("oracle.isotropy.wJ_max", iso.wJ_max);
  report.add("oracle.isotropy.wK_max", iso.wK_max);
  report.add("oracle.isotropy.wI_error_max", iso.wI_error_max);
  report.add("oracle.isotropy.pass", iso.pass);
  if (!iso.pass) agree = false;

  const ResidualReport hpsi = h_psi_identity(spec, params);
  append_residual(report, "oracle.h_psi_identity", hpsi);
  if (!hpsi.pass) agree = false;

  for (Form form : {Form::J, Form::K}) {
    const std::string key = std::string("oracle.tangency_") + form_name(form);
    const ResidualReport t = tangency_residual(spec, form, false, params);
    append_residual(report, key, t);
    const bool exact = (form == Form::J ? c.hmin_J : c.hmin_K).hmin;
    check_band(t, exact);
    if (exact) {
      const ResidualReport d = divergence_residual(spec, form, false, params);
      append_residual(report, std::string("oracle.divergence_") + form_name(form), d);
      if (!d.pass) agree = false;
    }
  }

  // Sphere mean curvature magnitude: near zero exactly for minimal specs.
  {
    const Rat r_sq = sphere_radius_sq(spec);
    ResidualReport hhat{.check = "sphere_mean_curvature"};
    for (const auto& p : sample_points(spec, params)) {
      const std::span<const double> x(p.data(), spec.l), y(p.data() + spec.l, spec.m);
      const double v = norm(sphere_mean_curvature(spec, r_sq, x, y));
      if (v >= hhat.max_residual) {
        hhat.max_residual = v;
        hhat.worst_point = p;
      }
    }
    hhat.verdict = hhat.max_residual <= params.algebraic_tol ? Verdict::ZERO
                   : hhat.max_residual >= params.coarse_threshold
                       ? Verdict::NONZERO
                       : Verdict::INDETERMINATE;
    append_residual(report, "oracle.sphere_mean_curvature", hhat);
    check_band(hhat, c.minimal);
  }

  if (c.sphere_r_sq == 1) {
    for (Form form : {Form::J, Form::K}) {
      const std::string key =
          std::string("oracle.tangency_") + form_name(form) + "_sphere";
      const ResidualReport t = tangency_residual(spec, form, true, params);
      append_residual(report, key, t);
      const bool exact = hmin_projected_rank_form(spec, form);
      check_band(t, exact);
      if (exact) {
        const ResidualReport d = divergence_residual(spec, form, true, params);
        append_residual(report,
                        std::string("oracle.divergence_") + form_name(form) + "_sphere", d);
        if (!d.pass) agree = false;
      }
    }
    const ResidualReport hj = hopf_fiber_orthogonality(spec, Axis::J, params);
    append_residual(report, "oracle.hopf_fiber_J", hj);
    check_band(hj, c.horizontal_J);
    const ResidualReport hk = hopf_fiber_orthogonality(spec, Axis::K, params);
    append_residual(report, "oracle.hopf_fiber_K", hk);
    check_band(hk, c.horizontal_K);
    const ResidualReport hi = hopf_fiber_orthogonality(spec, Axis::I, params);
    append_residual(report, "oracle.hopf_fiber_I", hi);
  }

  report.add("oracle.agreement", agree ? std::string("AGREE") : std::string("DISAGREE"));
  return agree;
}

int run_verify(const std::string& path, const OracleParams& params, bool as_json) {
  const TorusSpec spec = load_validated(path);
  const Classification c = classify(spec);
  Report report = classification_report(c);
  const bool agree = run_oracles(report, spec, c, params);
  print_report(report, as_json);
  return agree ? kExitOk : kExitOracleDisagreement;
}

int run_catalog_list() {
  for (const CatalogEntry& e : catalog()) {
    std::cout << e.name << "\n  " << e.description << "\n  expected:";
    for (const auto& [key, value] : e.expected)
      std::cout << " " << key << "=" << value;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_catalog_check(const std::string& name) {
  const CatalogEntry* entry = find_entry(name);
  if (!entry) {
    std::cerr << "unknown catalog entry: " << name << "\n";
    return kExitParseError;
  }
  const CatalogCheckResult result = check_entry(*entry);
  if (result.pass) {
    std::cout << name << ": PASS\n";
    return kExitOk;
  }
  std::cout << name << ": FAIL\n";
  for (const auto& m : result.mismatches) std::cout << "  " << m << "\n";
  return kExitParseError;
}

int run_catalog_export(const std::string& name) {
  const CatalogEntry* entry = find_entry(name);
  if (!entry) {
    std::cerr << "unknown catalog entry: " << name << "\n";
    return kExitParseError;
  }
  std::cout << serialize_spec(entry->spec);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certification of flat isotropic tori in H^n"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  OracleParams params;
  params.rng_seed = default_seed();

  auto* check = app.add_subcommand("check", "Classify a torus spec file exactly");
  check->add_option("file", path)->required();
  check->add_flag("--json", as_json, "Emit the report as JSON");

  auto* verify = app.add_subcommand(
      "verify", "Classify and cross-check every claim numerically");
  verify->add_option("file", path)->required();
  verify->add_option("--seed", params.rng_seed, "RNG seed for sample points");
  verify->add_option("--samples", params.sample_count, "Sample points per check");
  verify->add_option("--fd-step", params.fd_step, "Finite-difference step");
  verify->add_option("--tol", params.tolerance, "Tolerance for FD checks");
  verify->add_flag("--json", as_json, "Emit the report as JSON");

  auto* cat = app.add_subcommand("catalog", "Built-in example tori");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "List entries and their expected classifications");
  std::string entry_name;
  auto* cat_check = cat->add_subcommand("check", "Re-derive and compare one entry");
  cat_check->add_option("name", entry_name)->required();
  auto* cat_export = cat->add_subcommand("export", "Write an entry as a spec file");
  cat_export->add_option("name", entry_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(path, as_json);
    if (verify->parsed()) return run_verify(path, params, as_json);
    if (cat->parsed()) {
      if (cat->get_subcommand("list")->parsed()) return run_catalog_list();
      if (cat_check->parsed()) return run_catalog_check(entry_name);
      return run_catalog_export(entry_name);
    }
  } catch (const SpecFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  }
  return kExitOk;
}
