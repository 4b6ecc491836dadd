// Copyright 2026 The crossgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: tune, generate, run, grid, modes, respoly and
// reproduce-fig4. Exit codes: 0 success, 1 usage error, 2 verification or
// divergence failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "crossgame/experiment.h"
#include "crossgame/game_io.h"
#include "crossgame/gamegen.h"
#include "crossgame/optimizers.h"
#include "crossgame/polyoracle.h"
#include "crossgame/spectrum.h"
#include "crossgame/svg_plot.h"
#include "crossgame/trace_io.h"
#include "crossgame/tuner.h"
#include "json.hpp"

namespace crossgame {
namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitFatal = 2;

// Verification or divergence failure (exit code 2).
struct FatalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json ComplexJson(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json HyperparamsJson(const Hyperparams& p) {
  return {{"h", p.h}, {"gamma", p.gamma}, {"m", p.m}};
}

json RateJson(const RateReport& r) {
  return {{"rho_squared", r.rho_squared},
          {"per_iter_bound", r.per_iter_bound},
          {"per_eval_bound", r.per_eval_bound},
          {"tau", r.tau},
          {"notes", r.notes}};
}

Method RequireMethod(const std::string& name) {
  const std::optional<Method> m = ParseMethod(name);
  if (!m) throw std::invalid_argument("unknown method '" + name + "' (gd, gdm, eg, egm)");
  return *m;
}

Vector ReadVectorFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  json doc = json::parse(in, nullptr, false);
  if (!doc.is_array()) throw std::invalid_argument("'" + path + "' is not a JSON array");
  std::vector<double> values;
  for (const json& v : doc) values.push_back(v.get<double>());
  return Vector(std::move(values));
}

struct ModelArgs {
  double mu = 1.0;
  double L = 200.0;
  double c = 99.5;
  std::optional<double> c_prime;

  void Register(CLI::App* cmd) {
    cmd->add_option("--mu", mu, "left end of the real segment");
    cmd->add_option("--L", L, "right end of the real segment");
    cmd->add_option("--c", c, "imaginary half-length of the complex segment");
    cmd->add_option("--c-prime", c_prime,
                    "real part of the complex segment (default (mu+L)/2)");
  }
  SpectrumModel Model() const {
    SpectrumModel m{mu, L, c, c_prime.value_or((mu + L) / 2.0)};
    m.Validate();
    return m;
  }
};

int Tune(const ModelArgs& args) {
  const SpectrumModel model = args.Model();
  const Hyperparams p = OptimalEgm(model.mu, model.L, model.c);
  const RateExpansion e = EgmRateExpansion(model.mu, model.L, model.c);
  const Spectrum extreme = CrossExtremePoints(model);
  const EgRateBounds eg = EgRateBound(extreme, model);

  json out;
  out["model"] = {{"mu", model.mu}, {"L", model.L}, {"c", model.c},
                  {"c_prime", model.c_prime}};
  out["egm"] = HyperparamsJson(p);
  out["egm"]["rate_per_iter"] = std::sqrt(p.m);
  out["egm"]["rate_per_eval"] = AsymptoticRate(p.m);
  out["expansion"] = {{"exact", e.exact},
                      {"first_order", e.first_order},
                      {"tau", e.tau},
                      {"applicable", e.applicable}};
  out["gd"] = RateJson(GdRateBound(extreme));
  out["gd"]["step"] = GdTheoryStep(extreme);
  out["eg"] = RateJson(eg.general);
  out["eg"]["step"] = EgTheoryStep(extreme);
  out["eg"]["equal_length_rho_squared"] =
      eg.equal_length_rho_squared ? json(*eg.equal_length_rho_squared) : json(nullptr);
  out["gdm_cannot_accelerate"] = GdmAccelerationThreshold(model.mu, model.L);
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct GenerateArgs {
  ModelArgs model;
  int n_real = 100;
  int n_pairs = 50;
  std::uint64_t seed = 0;
  bool b_zero = false;
  std::string out;
};

int Generate(const GenerateArgs& args) {
  const SpectrumModel model = args.model.Model();
  Rng rng(args.seed);
  const QuadraticGame g =
      BuildCrossGame(model, GameOptions{args.n_real, args.n_pairs, args.b_zero}, rng);
  const VerificationReport rep = VerifyGame(g);
  if (!rep.passed()) {
    std::ostringstream msg;
    msg << "game verification failed (block residual " << rep.max_block_residual
        << ", stationarity residual " << rep.stationarity_residual << ")";
    throw FatalError(msg.str());
  }
  SaveGame(g, args.out);
  json out{{"out", args.out},
           {"dim", g.dim()},
           {"d1", g.d1},
           {"d2", g.d2},
           {"max_block_residual", rep.max_block_residual},
           {"stationarity_residual", rep.stationarity_residual}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct RunArgs {
  std::string game;
  std::string method;
  std::optional<double> h, gamma, m;
  int iters = 2000;
  std::string out;
  std::string w0;
};

// Fills unset parameters: EGM defaults to its closed-form optimum for the
// game's cross, GD and EG to their theory step sizes.
Hyperparams ResolveParams(const QuadraticGame& g, Method method, const RunArgs& a) {
  switch (method) {
    case Method::kEgm: {
      const Hyperparams opt = OptimalEgm(g.model.mu, g.model.L, g.model.c);
      return {a.h.value_or(opt.h), a.gamma.value_or(opt.gamma), a.m.value_or(opt.m)};
    }
    case Method::kGd:
      return {a.h.value_or(GdTheoryStep(g.declared)), 0.0, 0.0};
    case Method::kEg: {
      const double h = a.h.value_or(EgTheoryStep(g.declared));
      return {h, h, 0.0};
    }
    case Method::kGdm:
      if (!a.h || !a.m) throw std::invalid_argument("gdm needs --h and --m");
      return {*a.h, 0.0, *a.m};
  }
  throw std::invalid_argument("unknown method");
}

int Run(const RunArgs& args) {
  const Method method = RequireMethod(args.method);
  const QuadraticGame g = LoadGame(args.game);
  const Hyperparams p = ResolveParams(g, method, args);
  const Vector w0 = args.w0.empty() ? Vector(g.dim()) : ReadVectorFile(args.w0);
  const RunTrace trace = RunOnGame(g, method, p, w0, args.iters);
  WriteTracesCsvFile(args.out, {{MethodName(method), trace}});
  json out{{"method", MethodName(method)},
           {"params", HyperparamsJson(p)},
           {"iterations", trace.iterations()},
           {"diverged", trace.diverged},
           {"final_distance", trace.distances.back()},
           {"out", args.out}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct GridArgs {
  std::string game;
  std::string method;
  int iters = 2000;
  std::optional<double> h_lo, h_hi, h_step, m_lo, m_hi, m_step;
};

int Grid(const GridArgs& args) {
  const Method method = RequireMethod(args.method);
  const QuadraticGame g = LoadGame(args.game);
  GridSpec spec = DefaultGrid(method);
  spec.h_lo = args.h_lo.value_or(spec.h_lo);
  spec.h_hi = args.h_hi.value_or(spec.h_hi);
  spec.h_step = args.h_step.value_or(spec.h_step);
  spec.m_lo = args.m_lo.value_or(spec.m_lo);
  spec.m_hi = args.m_hi.value_or(spec.m_hi);
  spec.m_step = args.m_step.value_or(spec.m_step);
  GridResult r;
  try {
    r = GridSearch(g, method, spec, args.iters);
  } catch (const std::runtime_error& e) {
    throw FatalError(e.what());
  }
  json out{{"method", MethodName(method)},
           {"best", HyperparamsJson(r.best)},
           {"final_distance", r.final_distance},
           {"candidates", r.candidates},
           {"diverged", r.diverged}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int Modes(const Hyperparams& p) {
  const ModeClass mc = ClassifyMode(p);
  json out{{"params", HyperparamsJson(p)},
           {"ratio", p.h / (4.0 * p.gamma)},
           {"mode", ModeName(mc.mode)},
           {"case", static_cast<int>(mc.mode)},
           {"sigma_inv_minus_one",
            {ComplexJson(mc.preimage_minus_one[0]), ComplexJson(mc.preimage_minus_one[1])}},
           {"sigma_inv_plus_one",
            {ComplexJson(mc.preimage_plus_one[0]), ComplexJson(mc.preimage_plus_one[1])}}};
  if (mc.mode == Mode::kComplexAndReal) {
    const RobustRegion r = RobustRegionCase2(p);
    out["robust_region"] = {{"real_lo", r.real_lo},
                            {"real_hi", r.real_hi},
                            {"complex_re", r.complex_re},
                            {"complex_b_max", r.complex_b_max}};
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct RespolyArgs {
  Hyperparams p;
  double re = 1.0;
  double im = 0.0;
  int t = 10;
  std::string family = "egm";
};

int Respoly(const RespolyArgs& a) {
  if (a.family != "egm" && a.family != "gdm") {
    throw std::invalid_argument("--family must be egm or gdm");
  }
  if (a.t < 0) throw std::invalid_argument("--t must be >= 0");
  const Complex lambda(a.re, a.im);
  const bool gdm = a.family == "gdm";
  Hyperparams rec = a.p;
  if (gdm) rec.gamma = 0.0;
  json rows = json::array();
  for (int t = 0; t <= a.t; ++t) {
    json row{{"t", t}, {"recurrence", ComplexJson(ResidualEgmRecurrence(rec, lambda, t))}};
    if (a.p.m > 0.0) {
      const Complex closed =
          gdm ? ResidualGdm(a.p, lambda, t) : ResidualEgmChebyshev(a.p, lambda, t);
      row["chebyshev"] = ComplexJson(closed);
      row["bound"] = WorstCaseRateBound(a.p.m, t);
    }
    rows.push_back(row);
  }
  json out{{"family", a.family}, {"params", HyperparamsJson(a.p)},
           {"lambda", ComplexJson(lambda)}, {"values", rows}};
  if (a.p.m > 0.0) {
    out["link"] = ComplexJson(gdm ? LinkXi(a.p, lambda) : LinkSigma(a.p, lambda));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct ReproduceArgs {
  ModelArgs model;
  int n_real = 100;
  int n_pairs = 50;
  int iters = 2000;
  std::uint64_t seed = 0;
  bool b_zero = false;
  std::string out = "fig4";
};

int Reproduce(const ReproduceArgs& a) {
  ExperimentConfig cfg;
  cfg.model = a.model.Model();
  cfg.n_real = a.n_real;
  cfg.n_pairs = a.n_pairs;
  cfg.iters = a.iters;
  cfg.seed = a.seed;
  cfg.b_zero = a.b_zero;
  ExperimentResult r;
  try {
    r = RunComparison(cfg);
  } catch (const std::runtime_error& e) {
    throw FatalError(e.what());
  }
  std::filesystem::create_directories(a.out);
  const std::string csv = (std::filesystem::path(a.out) / "fig4.csv").string();
  const std::string svg = (std::filesystem::path(a.out) / "fig4.svg").string();
  WriteTracesCsvFile(csv, r.series);
  std::ofstream(svg, std::ios::binary) << ComparisonSvg(r);

  json series = json::array();
  for (const LabeledTrace& s : r.series) {
    series.push_back({{"label", s.label},
                      {"method", MethodName(s.trace.method)},
                      {"params", HyperparamsJson(s.trace.params)},
                      {"final_distance", s.trace.distances.back()},
                      {"final_relative", s.trace.distances.back() / s.trace.distances.front()},
                      {"diverged", s.trace.diverged}});
  }
  json out{{"csv", csv}, {"svg", svg}, {"dim", r.game.dim()}, {"series", series}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

void AddHyperparams(CLI::App* cmd, Hyperparams& p) {
  cmd->add_option("--h", p.h, "step size")->required();
  cmd->add_option("--gamma", p.gamma, "extrapolation step size")->required();
  cmd->add_option("--m", p.m, "momentum")->required();
}

}  // namespace

int Main(int argc, char** argv) {
  CLI::App app{"Quadratic games with cross-shaped Jacobian spectrum: tuning and "
               "running GD, GDM, EG and EGM"};
  // Long-form help only, so that --h stays free for the step size.
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  ModelArgs tune_args;
  CLI::App* tune = app.add_subcommand("tune", "optimal EGM parameters and rate bounds");
  tune_args.Register(tune);

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand("generate", "build and verify a game, write JSON");
  gen_args.model.Register(gen);
  gen->add_option("--n-real", gen_args.n_real, "eigenvalues on [mu, L]");
  gen->add_option("--n-pairs", gen_args.n_pairs, "conjugate pairs on the complex segment");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_flag("--b-zero", gen_args.b_zero, "use b = 0 (and w_star = 0)");
  gen->add_option("--out", gen_args.out, "output game file")->required();

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run one method on a game, write a trace CSV");
  run->add_option("--game", run_args.game, "game file")->required();
  run->add_option("--method", run_args.method, "gd, gdm, eg or egm")->required();
  run->add_option("--h", run_args.h, "step size");
  run->add_option("--gamma", run_args.gamma, "extrapolation step size (egm)");
  run->add_option("--m", run_args.m, "momentum (gdm, egm)");
  run->add_option("--iters", run_args.iters, "iterations");
  run->add_option("--out", run_args.out, "output CSV")->required();
  run->add_option("--w0", run_args.w0, "JSON array with the starting point (default 0)");

  GridArgs grid_args;
  CLI::App* grid = app.add_subcommand("grid", "exhaustive grid search for gd, gdm or eg");
  grid->add_option("--game", grid_args.game, "game file")->required();
  grid->add_option("--method", grid_args.method, "gd, gdm or eg")->required();
  grid->add_option("--iters", grid_args.iters, "iterations per candidate");
  grid->add_option("--h-lo", grid_args.h_lo, "smallest step size");
  grid->add_option("--h-hi", grid_args.h_hi, "largest step size");
  grid->add_option("--h-step", grid_args.h_step, "step-size spacing");
  grid->add_option("--m-lo", grid_args.m_lo, "smallest momentum (gdm)");
  grid->add_option("--m-hi", grid_args.m_hi, "largest momentum (gdm)");
  grid->add_option("--m-step", grid_args.m_step, "momentum spacing (gdm)");

  Hyperparams modes_params;
  CLI::App* modes = app.add_subcommand("modes", "classify the robust-region mode");
  AddHyperparams(modes, modes_params);

  RespolyArgs poly_args;
  CLI::App* poly = app.add_subcommand("respoly", "evaluate residual polynomials");
  AddHyperparams(poly, poly_args.p);
  poly->add_option("--re", poly_args.re, "Re(lambda)");
  poly->add_option("--im", poly_args.im, "Im(lambda)");
  poly->add_option("--t", poly_args.t, "largest degree");
  poly->add_option("--family", poly_args.family, "egm or gdm");

  ReproduceArgs rep_args;
  rep_args.model.c = 99.5;
  CLI::App* rep = app.add_subcommand("reproduce-fig4",
                                     "run the six-method comparison, write CSV and SVG");
  rep_args.model.Register(rep);
  rep->add_option("--n-real", rep_args.n_real, "eigenvalues on [mu, L]");
  rep->add_option("--n-pairs", rep_args.n_pairs, "conjugate pairs on the complex segment");
  rep->add_option("--iters", rep_args.iters, "iterations per method");
  rep->add_option("--seed", rep_args.seed, "generator seed");
  rep->add_flag("--b-zero", rep_args.b_zero, "b = 0, w_star = 0, random w0");
  rep->add_option("--out", rep_args.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*tune) return Tune(tune_args);
    if (*gen) return Generate(gen_args);
    if (*run) return Run(run_args);
    if (*grid) return Grid(grid_args);
    if (*modes) return Modes(modes_params);
    if (*poly) return Respoly(poly_args);
    if (*rep) return Reproduce(rep_args);
  } catch (const FatalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFatal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace crossgame

int main(int argc, char** argv) { return crossgame::Main(argc, argv); }
