#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ruled/commands.hpp"
#include "ruled/surface_file.hpp"

namespace cli = ruled::cli;

int main(int argc, char** argv) {
  CLI::App app{"Ruled surfaces in Minkowski 3-space: frames, invariants, similarity and reconstruction"};
  app.set_version_flag("--version", std::string(cli::kVersion));
  app.require_subcommand(1);

  cli::Tolerances tol;
  if (const char* env = std::getenv("RULED_TOL_OVERRIDES")) {
    try {
      tol = cli::apply_overrides(tol, env);
    } catch (const ruled::FileError& e) {
      std::cerr << "error: RULED_TOL_OVERRIDES: " << e.what() << "\n";
      return cli::kInputError;
    }
  }
  app.add_option("--tol-null", tol.tol_null, "causal character threshold")->check(CLI::PositiveNumber);
  app.add_option("--tol-frame", tol.tol_frame, "frame and developability tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-similar", tol.tol_similar, "similarity tolerance")->check(CLI::PositiveNumber);

  cli::AnalyzeOptions an;
  std::string an_out;
  auto* analyze = app.add_subcommand("analyze", "classify a surface and report its frame invariants");
  analyze->add_option("input", an.input, "surface file")->required();
  analyze->add_option("--out", an_out, "directory for summary.json, frame.csv, delta.csv");

  cli::CompareOptions cmp;
  std::string mode = "invariants";
  auto* compare = app.add_subcommand("compare", "decide whether two surfaces are similar");
  compare->add_option("a", cmp.a, "first surface file")->required();
  compare->add_option("b", cmp.b, "second surface file")->required();
  compare->add_option("--mode", mode, "definition or invariants")
      ->check(CLI::IsMember({"definition", "invariants"}));
  compare->add_flag("--search-phi-offset", cmp.search_phi_offset, "search a shift of the total-curvature origin");

  cli::ReconstructOptions rc;
  int rc_steps = 0;
  std::string rc_theta;
  auto* reconstruct = app.add_subcommand("reconstruct", "integrate a surface from a curvature ratio profile");
  reconstruct->add_option("profile", rc.profile, "profile file")->required();
  auto* steps_opt = reconstruct->add_option("--steps", rc_steps, "integration steps (at least 16)");
  auto* theta_opt = reconstruct->add_option("--theta", rc_theta, "ruling angle expression in u");
  auto* dev_flag = reconstruct->add_flag("--developable", rc.developable, "tangent developable surface");
  theta_opt->excludes(dev_flag);
  reconstruct->add_option("--out", rc.out_dir, "output directory");
  reconstruct->add_option("--v-min", rc.v_min, "mesh ruling parameter minimum");
  reconstruct->add_option("--v-max", rc.v_max, "mesh ruling parameter maximum");
  reconstruct->add_option("--v-steps", rc.v_steps, "mesh ruling subdivisions");

  cli::VerifyOptions vf;
  std::string vf_input;
  auto* verify = app.add_subcommand("verify", "run the invariant checks");
  verify->add_option("input", vf_input, "surface file (default: builtin suite)");
  verify->add_option("--suite", vf.suite, "builtin");
  verify->add_flag("--verbose", vf.verbose, "print every check");
  verify->add_flag("--inject-corruption", vf.inject_corruption)->group("");

  cli::ExportOptions ex;
  auto* exp = app.add_subcommand("export", "write a Wavefront OBJ mesh");
  exp->add_option("input", ex.input, "surface file")->required();
  exp->add_option("-o,--output", ex.output, "OBJ path")->required();
  exp->add_option("--v-min", ex.v_min, "ruling parameter minimum");
  exp->add_option("--v-max", ex.v_max, "ruling parameter maximum");
  exp->add_option("--u-steps", ex.u_steps, "base subdivisions");
  exp->add_option("--v-steps", ex.v_steps, "ruling subdivisions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kInputError;
  }

  if (*analyze) {
    an.tol = tol;
    if (!an_out.empty()) an.out_dir = an_out;
    return cli::analyze(an, std::cout, std::cerr);
  }
  if (*compare) {
    cmp.tol = tol;
    cmp.mode = mode == "definition" ? ruled::SimilarityMode::ByDefinition : ruled::SimilarityMode::ByInvariants;
    return cli::compare(cmp, std::cout, std::cerr);
  }
  if (*reconstruct) {
    rc.tol = tol;
    if (*steps_opt) rc.steps = rc_steps;
    if (*theta_opt) rc.theta = rc_theta;
    return cli::reconstruct(rc, std::cout, std::cerr);
  }
  if (*verify) {
    vf.tol = tol;
    if (!vf_input.empty()) vf.input = vf_input;
    return cli::verify(vf, std::cout, std::cerr);
  }
  return cli::export_mesh(ex, std::cout, std::cerr);
}
