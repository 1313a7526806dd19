// Copyright 2026 The cvqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cvqt: command-line front end for two-mode Gaussian teleportation analysis.
//
// Exit codes: 0 ok, 2 unphysical state, 3 bad input, 4 grid too large,
// 5 I/O error, 6 quadrature oracle disagreement or non-convergence.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cvqt/cvqt.hpp"

namespace {

using namespace cvqt;

enum ExitCode : int {
  kOk = 0,
  kUnphysical = 2,
  kBadInput = 3,
  kGridTooLarge = 4,
  kIoError = 5,
  kOracleFailure = 6,
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string format;  // empty: per-command default
  std::string out;
  bool quiet = false;
};

struct StateFlags {
  double r = 0.0;
  double k1 = 0.5;
  double k2 = 0.5;
  double k = 0.5;
  double t = 0.5;
  std::string cm_path;
};

void add_tmst_flags(CLI::App* app, StateFlags& f) {
  app->add_option("--r", f.r, "two-mode squeeze parameter (>= 0)")->required();
  app->add_option("--k1", f.k1, "mode-a thermal parameter n1 + 1/2 (>= 1/2)")->required();
  app->add_option("--k2", f.k2, "mode-b thermal parameter n2 + 1/2 (>= 1/2)")->required();
}

void add_bs_flags(CLI::App* app, StateFlags& f) {
  app->add_option("--r", f.r,
                  "single-mode squeeze parameter (>= 0); the x quadrature is squeezed, "
                  "input variance diag(k e^-2r, k e^2r)")
      ->required();
  app->add_option("--k", f.k, "input thermal parameter n + 1/2 (>= 1/2)")->required();
  app->add_option("--T", f.t, "beam-splitter transmittance in (0, 1)")->required();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CovMat load_covmat(const std::string& path) {
  std::istringstream in(read_file(path));
  return covmat_from_json(in);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("write to '" + path + "' failed");
}

/// Writes to --out when given, stdout otherwise; --quiet suppresses stdout.
void emit(const CommonFlags& common, const std::string& text) {
  if (!common.out.empty()) {
    write_text(common.out, text);
  } else if (!common.quiet) {
    std::cout << text;
  }
}

int report_state(const CovMat& v, const CommonFlags& common) {
  const ValidityReport validity = validate(v);
  const auto [report, label] = classify(v);
  JsonObject doc;
  doc.object("validity", to_json_object(validity));
  doc.string("classification", to_string(label));
  if (validity.physical) {
    doc.object("report", to_json_object(report));
    doc.object("canonical", to_json_object(to_canonical(v).params));
    doc.object("entanglement", to_json_object(simon_inseparable(v)));
  }
  if (common.format == "csv") {
    std::string text = "delta_epr,f_epr,det_m,fidelity,entangled,epr,qt,class\n";
    text += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g},{:d},{:d},{:d},{}\n", report.delta_epr,
                        report.f_epr, report.det_m, report.fidelity, report.entangled ? 1 : 0,
                        report.epr_correlated ? 1 : 0, report.qt ? 1 : 0, to_string(label));
    emit(common, text);
  } else {
    emit(common, doc.str() + "\n");
  }
  return validity.physical ? kOk : kUnphysical;
}

int run_oracle(const CovMat& v, const QuadratureSpec& q, const CommonFlags& common) {
  require_physical(v, "oracle");
  const double closed = fidelity(v);
  const QuadratureResult quad = fidelity_by_quadrature(v, q);
  const double diff = std::abs(closed - quad.value);
  JsonObject doc;
  doc.number("closed_form", closed)
      .number("quadrature", quad.value)
      .number("abs_difference", diff)
      .number("est_error", quad.est_error);
  if (quad.warning) doc.string("warning", quad.warning->message);
  emit(common, doc.str() + "\n");
  if (quad.warning) {
    std::cerr << "cvqt: " << quad.warning->message << "\n";
    return kOracleFailure;
  }
  return diff < 1e-5 ? kOk : kOracleFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-mode Gaussian entanglement, EPR correlation and teleportation analysis"};
  app.require_subcommand(1);
  // Family subcommands (state tmst ...) hand common flags back to their parent.
  app.fallthrough();

  CommonFlags common;
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", common.out, "output path (default: stdout)");
    sub->add_flag("--quiet", common.quiet, "suppress standard output");
  };

  // analyze
  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "classify a covariance matrix JSON file");
  analyze->add_option("path", analyze_path, "covariance matrix JSON")->required();
  add_common(analyze);

  // state
  StateFlags state_flags;
  std::string emit_cm;
  auto* state = app.add_subcommand("state", "build a resource state and classify it");
  state->require_subcommand(1);
  auto* state_tmst = state->add_subcommand("tmst", "two-mode squeezed thermal state");
  auto* state_bs = state->add_subcommand("bs", "beam-splitter output of a squeezed thermal input");
  add_tmst_flags(state_tmst, state_flags);
  add_bs_flags(state_bs, state_flags);
  for (auto* s : {state_tmst, state_bs}) {
    s->add_option("--emit-cm", emit_cm, "also write the covariance matrix JSON to this path");
  }
  add_common(state);

  // sweep
  double sweep_r_tmst = 0.48;
  double sweep_r_bs = 0.5;
  std::string ax_k1 = "0.5:2.5:201";
  std::string ax_k2 = "0.5:2.5:201";
  std::string ax_k = "0.5:2.0:151";
  std::string ax_t = "0.05:0.95:151";
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "evaluate every criterion on a parameter grid");
  sweep->require_subcommand(1);
  auto* sweep_tmst = sweep->add_subcommand("tmst", "grid over (k1, k2) at fixed r");
  sweep_tmst->add_option("--r", sweep_r_tmst, "two-mode squeeze parameter")->capture_default_str();
  sweep_tmst->add_option("--k1", ax_k1, "axis1 as min:max:steps")->capture_default_str();
  sweep_tmst->add_option("--k2", ax_k2, "axis2 as min:max:steps")->capture_default_str();
  auto* sweep_bs = sweep->add_subcommand("bs", "grid over (k, T) at fixed r");
  sweep_bs->add_option("--r", sweep_r_bs, "single-mode squeeze parameter (x squeezed)")
      ->capture_default_str();
  sweep_bs->add_option("--k", ax_k, "axis1 as min:max:steps")->capture_default_str();
  sweep_bs->add_option("--T", ax_t, "axis2 as min:max:steps")->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads (0: all cores)");
  add_common(sweep);

  // thresholds
  double th_k1 = 0.5;
  double th_k2 = 0.5;
  auto* thresholds = app.add_subcommand("thresholds", "TMST entanglement and teleportation onsets");
  thresholds->add_option("--k1", th_k1, "mode-a thermal parameter (>= 1/2)")->required();
  thresholds->add_option("--k2", th_k2, "mode-b thermal parameter (>= 1/2)")->required();
  add_common(thresholds);

  // oracle
  StateFlags oracle_flags;
  QuadratureSpec quad;
  std::string rule = "midpoint";
  auto* oracle = app.add_subcommand(
      "oracle", "compare the closed-form fidelity with characteristic-function quadrature");
  oracle->require_subcommand(1);
  auto* oracle_tmst = oracle->add_subcommand("tmst", "two-mode squeezed thermal state");
  auto* oracle_bs = oracle->add_subcommand("bs", "beam-splitter resource");
  auto* oracle_cm = oracle->add_subcommand("cm", "covariance matrix JSON file");
  add_tmst_flags(oracle_tmst, oracle_flags);
  add_bs_flags(oracle_bs, oracle_flags);
  oracle_cm->add_option("path", oracle_flags.cm_path, "covariance matrix JSON")->required();
  oracle->add_option("--radius", quad.radius, "integration half-width in the lambda plane")
      ->capture_default_str();
  oracle->add_option("--points", quad.points_per_axis, "grid points per axis")
      ->capture_default_str();
  oracle->add_option("--rule", rule, "quadrature rule")
      ->check(CLI::IsMember({"midpoint", "gauss-legendre"}))
      ->capture_default_str();
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  if (common.format.empty()) common.format = sweep->parsed() ? "csv" : "json";

  try {
    if (analyze->parsed()) {
      return report_state(load_covmat(analyze_path), common);
    }
    if (state->parsed()) {
      const CovMat v = state_tmst->parsed()
                           ? tmst(TmstSpec(state_flags.r, state_flags.k1, state_flags.k2))
                           : bs_resource(BsSpec(state_flags.r, state_flags.k, state_flags.t));
      if (!emit_cm.empty()) write_text(emit_cm, covmat_to_json(v).dump(2) + "\n");
      return report_state(v, common);
    }
    if (sweep->parsed()) {
      SweepConfig cfg;
      if (sweep_tmst->parsed()) {
        cfg.family = Family::Tmst;
        cfg.fixed["r"] = sweep_r_tmst;
        cfg.axis1 = parse_axis("k1", ax_k1);
        cfg.axis2 = parse_axis("k2", ax_k2);
      } else {
        cfg.family = Family::Bs;
        cfg.fixed["r"] = sweep_r_bs;
        cfg.axis1 = parse_axis("k", ax_k);
        cfg.axis2 = parse_axis("T", ax_t);
      }
      cfg.output_path = common.out;
      cfg.format = common.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
      const RegionGrid grid = run_sweep(cfg, threads);
      std::ostringstream text;
      if (cfg.format == OutputFormat::Json) {
        write_json(grid, text);
      } else {
        write_csv(grid, text);
      }
      emit(common, text.str());
      return kOk;
    }
    if (thresholds->parsed()) {
      const double r_ent = r_ent_threshold(th_k1, th_k2);
      const double r_qt = r_qt_threshold(th_k1, th_k2);
      if (common.format == "csv") {
        emit(common, fmt::format("k1,k2,r_ent,r_qt,difference\n{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n",
                                 th_k1, th_k2, r_ent, r_qt, r_qt - r_ent));
      } else {
        JsonObject doc;
        doc.number("k1", th_k1)
            .number("k2", th_k2)
            .number("r_ent", r_ent)
            .number("r_qt", r_qt)
            .number("difference", r_qt - r_ent);
        emit(common, doc.str() + "\n");
      }
      return kOk;
    }
    if (oracle->parsed()) {
      quad.rule = rule == "midpoint" ? QuadratureRule::Midpoint : QuadratureRule::GaussLegendre;
      CovMat v;
      if (oracle_tmst->parsed()) {
        v = tmst(TmstSpec(oracle_flags.r, oracle_flags.k1, oracle_flags.k2));
      } else if (oracle_bs->parsed()) {
        v = bs_resource(BsSpec(oracle_flags.r, oracle_flags.k, oracle_flags.t));
      } else {
        v = load_covmat(oracle_flags.cm_path);
        if (!is_physical(v)) {
          std::cerr << "cvqt: covariance matrix is not physical\n";
          return kUnphysical;
        }
      }
      return run_oracle(v, quad, common);
    }
  } catch (const GridTooLarge& e) {
    std::cerr << "cvqt: " << e.what() << "\n";
    return kGridTooLarge;
  } catch (const IoError& e) {
    std::cerr << "cvqt: " << e.what() << "\n";
    return kIoError;
  } catch (const PreconditionFailed& e) {
    std::cerr << "cvqt: " << e.what() << "\n";
    return kUnphysical;
  } catch (const InvalidInput& e) {
    std::cerr << "cvqt: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
