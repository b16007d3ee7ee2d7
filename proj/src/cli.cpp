#include "cohiggs/cli.hpp"

#include "cohiggs/errors.hpp"
#include "cohiggs/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace cohiggs {

namespace {

void emit_report(const Json& j, const RunConfig& cfg, std::ostream& out) {
  if (cfg.output.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw std::runtime_error("cannot write " + cfg.output);
  file << j.dump(2) << "\n";
}

Json gaussq_to_json(const GaussQ& v) { return Json(to_string(v)); }

int run_validate(const RunConfig& cfg, std::ostream& out) {
  const CoHiggsBundleP1 b = bundle_from_json(load_json(cfg.input));
  const ValidationReport report = validate(b);
  emit_report(validation_to_json(report), cfg, out);
  return report.ok() ? 0 : 2;
}

int run_spectral(const RunConfig& cfg, std::ostream& out) {
  const CoHiggsBundleP1 b = bundle_from_json(load_json(cfg.input));
  const ValidationReport report = validate(b);
  if (!report.ok()) {
    emit_report(validation_to_json(report), cfg, out);
    return 2;
  }
  const SpectralCurve s = char_poly(b);
  Json j;
  j["curve"] = curve_to_json(s);
  const bool reduced = is_reduced(s);
  j["reduced"] = reduced;
  j["smoothness"] = nullptr;
  j["singular_witness"] = nullptr;
  j["irreducible"] = nullptr;
  j["genus"] = nullptr;
  if (reduced) {
    const SmoothnessReport smooth = smoothness_report(s);
    switch (smooth.status) {
      case Smoothness::Smooth: j["smoothness"] = "smooth"; break;
      case Smoothness::Singular: j["smoothness"] = "singular"; break;
      case Smoothness::Undetermined: j["smoothness"] = "undetermined"; break;
    }
    if (smooth.witness) {
      Json w;
      w["chart"] = std::string(1, smooth.witness->chart);
      w["base"] = gaussq_to_json(smooth.witness->base);
      w["fibre"] = gaussq_to_json(smooth.witness->fibre);
      j["singular_witness"] = std::move(w);
    }
    switch (is_irreducible(s)) {
      case TriBool::True: j["irreducible"] = "true"; break;
      case TriBool::False: j["irreducible"] = "false"; break;
      case TriBool::Unknown: j["irreducible"] = "unknown"; break;
    }
    if (smooth.status == Smoothness::Smooth) {
      const std::optional<int> g = genus(s);
      j["genus"] = g ? Json(*g) : Json(nullptr);
    }
  }
  const ZeroSectionReport z = zero_section_intersection(s);
  Json zj;
  zj["degenerate"] = z.degenerate;
  zj["total_multiplicity"] = z.total_multiplicity;
  zj["finite_multiplicity"] = z.finite_multiplicity;
  zj["infinity_multiplicity"] = z.infinity_multiplicity;
  zj["finite_squarefree"] = z.finite_squarefree;
  zj["transversal"] = z.transversal;
  j["zero_section"] = std::move(zj);
  emit_report(j, cfg, out);
  return 0;
}

int run_cohomology(const RunConfig& cfg, std::ostream& out) {
  const CoHiggsBundleP1 b = bundle_from_json(load_json(cfg.input));
  const ValidationReport report = validate(b);
  if (!report.ok()) {
    emit_report(validation_to_json(report), cfg, out);
    return 2;
  }
  emit_report(hypercohomology_to_json(hypercohomology(b), theorem_check(b)), cfg, out);
  return 0;
}

int run_stability(const RunConfig& cfg, std::ostream& out) {
  const CoHiggsBundleP1 b = bundle_from_json(load_json(cfg.input));
  const ValidationReport report = validate(b);
  if (!report.ok()) {
    emit_report(validation_to_json(report), cfg, out);
    return 2;
  }
  emit_report(stability_to_json(stability_verdict(b), slope(b)), cfg, out);
  return 0;
}

Json cohomology_snapshot(const CoHiggsBundleP1& b) {
  Json j = hypercohomology_to_json(hypercohomology(b), theorem_check(b));
  j["stability"] = to_string(stability_verdict(b).status);
  return j;
}

int run_bfield_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.theta.empty()) {
    err << "bfield-check needs --theta\n";
    return 1;
  }
  const CoHiggsBundleP1 b = bundle_from_json(load_json(cfg.input));
  const DolbeaultB theta = theta_from_json(load_json(cfg.theta));
  if (theta.variables() != 1) {
    err << "bfield-check runs on one-variable potentials\n";
    return 1;
  }
  const ValidationReport report = validate(b);
  if (!report.ok()) {
    emit_report(validation_to_json(report), cfg, out);
    return 2;
  }
  const GaugeCheck check = gauge_equivalence_check(b, theta);
  const TransformedDbar transformed = transformed_dbar(b, theta);
  const MpMatrix obstruction = commutator_obstruction({phi_as_multipoly(b)}, theta);
  const CoHiggsBundleP1 after = apply_exact_bfield(b, theta);

  Json j;
  j["pass"] = check.pass;
  j["holomorphy_residual_zero"] = is_zero_matrix(check.holomorphy_residual);
  j["commutator_residual_zero"] = is_zero_matrix(check.commutator_residual);
  j["obstruction_zero"] = is_zero_matrix(obstruction);
  j["phi_unchanged"] = transformed.phi_unchanged;
  j["before"] = cohomology_snapshot(b);
  j["after"] = cohomology_snapshot(after);
  const bool invariant = j["before"] == j["after"];
  j["invariant"] = invariant;
  emit_report(j, cfg, out);
  return check.pass && invariant ? 0 : 2;
}

int run_nahm(const RunConfig& cfg, std::ostream& out) {
  const NahmState s0 = nahm_from_json(load_json(cfg.input));
  std::ofstream trajectory;
  if (!cfg.trajectory.empty()) {
    trajectory.open(cfg.trajectory);
    if (!trajectory) throw std::runtime_error("cannot write " + cfg.trajectory);
  }
  long seen = 0;
  double last_logged = s0.t - 1.0;
  const int stride = cfg.stride > 0 ? cfg.stride : 1;
  const StepObserver observer = [&](const NahmState& s) {
    if (!trajectory.is_open()) return;
    if (seen++ % stride == 0) {
      trajectory << nahm_to_json(s).dump() << "\n";
      last_logged = s.t;
    }
  };

  const IntegratorOptions opts;
  const NahmState s1 = integrate(s0, cfg.t_end, cfg.dt, opts, observer);
  if (trajectory.is_open() && last_logged != s1.t) {
    trajectory << nahm_to_json(s1).dump() << "\n";
  }
  const NahmState lax = lax_flow(s0, cfg.t_end, cfg.dt, opts);
  const double gap = std::max({(s1.T1 - lax.T1).norm(), (s1.T2 - lax.T2).norm(),
                               (s1.T3 - lax.T3).norm()});
  const double drift = isospectral_drift(s0, cfg.t_end, cfg.dt, cfg.samples, opts);
  const LaxSignResult sign = lax_consistency_oracle(static_cast<int>(s0.size()), cfg.seed);

  Json j;
  j["k"] = static_cast<int>(s0.size());
  j["t_start"] = s0.t;
  j["t_end"] = cfg.t_end;
  j["dt"] = cfg.dt;
  j["samples"] = cfg.samples;
  j["isospectral_drift"] = drift;
  j["lax_gap"] = gap;
  Json oracle;
  oracle["sign"] = sign.sign;
  oracle["residual"] = sign.residual;
  j["lax_consistency"] = std::move(oracle);
  j["final"] = nahm_to_json(s1);
  emit_report(j, cfg, out);
  return 0;
}

int run_fixtures(const RunConfig& cfg, std::ostream& out) {
  Json j;
  Json written = Json::array();
  for (const auto& p : write_demo_fixtures(cfg.dir)) written.push_back(p.string());
  j["written"] = std::move(written);
  emit_report(j, cfg, out);
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "validate") return run_validate(cfg, out);
    if (cfg.command == "spectral") return run_spectral(cfg, out);
    if (cfg.command == "cohomology") return run_cohomology(cfg, out);
    if (cfg.command == "stability") return run_stability(cfg, out);
    if (cfg.command == "bfield-check") return run_bfield_check(cfg, out, err);
    if (cfg.command == "nahm") return run_nahm(cfg, out);
    if (cfg.command == "fixtures") return run_fixtures(cfg, out);
    err << "unknown command: " << cfg.command << "\n";
    return 1;
  } catch (const ParseError& e) {
    Json j;
    j["error"] = "parse";
    j["message"] = e.what();
    j["position"] = e.position();
    err << j.dump(2) << "\n";
    return 1;
  } catch (const PoleEncountered& e) {
    Json j;
    j["error"] = "pole_encountered";
    j["time"] = e.time();
    emit_report(j, cfg, out);
    return 3;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "domain";
    j["message"] = e.what();
    err << j.dump(2) << "\n";
    return 2;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"co-Higgs bundles on the projective line: spectral curves, "
               "hypercohomology, stability, B-field checks, matrix-triple flow"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_io = [&cfg](CLI::App* sub) {
    sub->add_option("--in", cfg.input, "input JSON path")->required();
    sub->add_option("--out", cfg.output, "report path (stdout when omitted)");
  };

  add_io(app.add_subcommand("validate", "check the degree bounds of a bundle"));
  add_io(app.add_subcommand("spectral", "spectral curve and its geometry"));
  add_io(app.add_subcommand("cohomology", "hypercohomology dimensions and the vanishing check"));
  add_io(app.add_subcommand("stability", "stability verdict"));

  CLI::App* bfield = app.add_subcommand("bfield-check", "exact B-field gauge identities");
  add_io(bfield);
  bfield->add_option("--theta", cfg.theta, "potential JSON path")->required();

  CLI::App* nahm = app.add_subcommand("nahm", "integrate the matrix-triple flow");
  add_io(nahm);
  nahm->add_option("--t", cfg.t_end, "target time");
  nahm->add_option("--dt", cfg.dt, "step size");
  nahm->add_option("--samples", cfg.samples, "pencil sample points for the drift");
  nahm->add_option("--trajectory", cfg.trajectory, "JSONL trajectory dump path");
  nahm->add_option("--stride", cfg.stride, "log every n-th step");
  nahm->add_option("--seed", cfg.seed, "seed for the orientation oracle");

  CLI::App* fixtures = app.add_subcommand("fixtures", "write ready-to-run demo inputs");
  fixtures->add_option("--dir", cfg.dir, "target directory");
  fixtures->add_option("--out", cfg.output, "report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace cohiggs
