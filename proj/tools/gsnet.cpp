/*
 * Copyright 2026 The gsnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// gsnet command-line tool: compile, analyze, train, wasserstein.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "gsnet/analysis.hpp"
#include "gsnet/builder.hpp"
#include "gsnet/error.hpp"
#include "gsnet/experiments.hpp"
#include "gsnet/oracle.hpp"
#include "gsnet/training.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace gsnet;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitParse = 3;
constexpr int kExitDiverged = 4;

fs::path default_dir() {
  const char* env = std::getenv("GSNET_OUT_DIR");
  return env && *env ? fs::path(env) : fs::path(".");
}

std::string resolve(const std::string& given, const std::string& fallback_name) {
  if (!given.empty()) return given;
  return (default_dir() / fallback_name).string();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

// `# config:` line shared by every CSV: hash of the canonical metadata dump.
std::string config_line(const json& meta) { return "fnv1a=" + hex64(fnv1a(meta.dump())); }

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json certificate_json(const SizeCertificate& c) {
  return {{"depth", c.depth},
          {"gadget_count", c.gadget_count},
          {"passthrough_count", c.passthrough_count},
          {"neuron_count", c.neuron_count},
          {"depth_bound", c.depth_bound},
          {"size_bound", c.size_bound},
          {"bound_rule", c.bound_rule},
          {"within_bounds", c.within_bounds()}};
}

json audit_json(const ConstraintReport& r) {
  return {{"satisfied", r.satisfied},
          {"tolerance", r.tolerance},
          {"first_layer_2inf", r.first_layer_2inf},
          {"later_layer_inf_norms", r.later_layer_inf_norms},
          {"violations", r.violations()}};
}

json nan_to_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// ---------------------------------------------------------------- compile

struct CompileArgs {
  std::string expr, pwl, out, certificate;
  bool convex = false;
  bool canonical = false;
  std::size_t k = 2;
};

int run_compile(const CompileArgs& a) {
  const std::size_t points = 10000;
  CompiledNetwork c = [&] {
    if (!a.expr.empty()) return compile_maxmin(load_maxmin(a.expr), a.k);
    const Pwl1d f = load_pwl_csv(a.pwl);
    for (const auto& p : f.pieces())
      if (std::abs(p.a[0]) > 1.0 + 1e-12)
        throw ConstraintError("piece with slope " + num(p.a[0]) + " is steeper than 1");
    if (a.convex) return convex_pwl1d_to_net(f, a.k);
    return compile_pwl1d(f, a.k, a.canonical ? DepthPolicy::Canonical : DepthPolicy::Minimal);
  }();

  json cert = certificate_json(c.certificate);
  cert["grouping_size"] = a.k;
  cert["input_dim"] = c.network.input_dim();
  const ConstraintReport audit = check_assumption1(c.network);
  cert["audit"] = audit_json(audit);

  double worst = 0.0;
  if (!a.expr.empty()) {
    const MaxMinExpr e = load_maxmin(a.expr);
    double radius = 10.0;
    for (const auto& leaf : e.leaves()) radius = std::max(radius, 2.0 * std::abs(leaf.b));
    std::mt19937_64 rng(0);
    std::uniform_real_distribution<double> u(-radius, radius);
    Vector x(c.network.input_dim());
    for (std::size_t i = 0; i < points; ++i) {
      for (double& v : x) v = u(rng);
      worst = std::max(worst, std::abs(c.network(x) - eval_maxmin(e, x)));
    }
    cert["source"] = {{"kind", "expr"}, {"path", a.expr}, {"leaves", e.leaf_count()}};
  } else {
    const Pwl1d f = load_pwl_csv(a.pwl);
    const auto& xs = f.breakpoints();
    const double span = std::max(1.0, xs.back() - xs.front());
    const double lo = xs.front() - span, hi = xs.back() + span;
    for (std::size_t i = 0; i < points; ++i) {
      const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
      worst = std::max(worst, std::abs(c.network(Vector{x}) - f(x)));
    }
    for (double x : xs) worst = std::max(worst, std::abs(c.network(Vector{x}) - f(x)));
    const auto pieces = f.pieces();
    const std::size_t mf = pieces.size();
    const std::size_t Mf = std::max<std::size_t>(1, count_ordered_subdomains_1d(pieces));
    const TheoryBounds tb = bound_calculator(mf, Mf, 1, a.k, c.network.depth(), 0.1);
    cert["source"] = {{"kind", a.convex ? "pwl-convex" : "pwl"}, {"path", a.pwl}, {"m_f", mf}, {"M_f", Mf}};
    cert["theory"] = {{"ordered_subdomains_upper", nan_to_null(tb.ordered_subdomains_upper)},
                      {"maxmin_depth", tb.maxmin_depth},
                      {"maxmin_size", nan_to_null(tb.maxmin_size)},
                      {"convex_function_depth", tb.convex_function_depth},
                      {"convex_function_size", nan_to_null(tb.convex_function_size)},
                      {"grouped_depth", tb.grouped_depth},
                      {"grouped_size", nan_to_null(tb.grouped_size)},
                      {"size_lower_bound", nan_to_null(tb.size_lower_bound)}};
  }
  const bool exact = worst <= kCompiledTolerance;
  cert["self_check"] = {{"points", points}, {"max_abs_error", worst}, {"passed", exact}};
  const bool ok = exact && audit.satisfied && c.certificate.within_bounds();
  cert["passed"] = ok;

  const std::string net_path = resolve(a.out, std::string("net") + kNetworkFileExtension);
  const std::string cert_path = resolve(a.certificate, "certificate.json");
  write_file(net_path, serialize(c.network));
  write_file(cert_path, cert.dump(2) + "\n");
  std::printf("depth %zu (bound %zu), gadgets %zu (bound %zu), neurons %zu, audit %s, self-check max error %.3g: %s\n",
              c.certificate.depth, c.certificate.depth_bound, c.certificate.gadget_count, c.certificate.size_bound,
              c.certificate.neuron_count, audit.satisfied ? "pass" : "fail", worst, ok ? "pass" : "FAIL");
  return ok ? 0 : kExitFailed;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string net, out;
  std::vector<double> interval{-1.0, 1.0};
};

int run_analyze(const AnalyzeArgs& a) {
  const GroupSortNetwork net = load_network(a.net);
  if (net.input_dim() != 1) throw DimensionError("analyze needs a 1-D network, got input dimension " +
                                                 std::to_string(net.input_dim()));
  const double lo = a.interval[0], hi = a.interval[1];
  const RegionProfile p = enumerate_regions_1d(net, lo, hi);
  const std::uint64_t bound = region_upper_bound(net.hidden_widths(), net.grouping_size());
  const double lip = empirical_lipschitz(net, lo, hi);
  const json meta = {{"command", "analyze"}, {"net", a.net}, {"lo", lo}, {"hi", hi}};
  std::ostringstream os;
  os << "# config: " << config_line(meta) << "\n" << to_csv(p);
  write_file(resolve(a.out, "regions.csv"), os.str());
  std::printf("region_count %zu, region_bound %llu, lipschitz_estimate %.6f\n", p.region_count,
              static_cast<unsigned long long>(bound), lip);
  return 0;
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  std::string experiment = "pwl32", activation = "groupsort", enforcement = "bjorck", out;
  std::size_t depth = 4, width = 20, k = 2, steps = 0;
  std::uint64_t seed = 0;
};

int run_train(const TrainArgs& a) {
  RegressionExperiment e = regression_experiment(a.experiment, a.seed);
  e.config.enforcement = parse_enforcement(a.enforcement);
  if (a.steps > 0) e.config.steps = a.steps;
  const Activation act = a.activation == "relu" ? Activation::ReLU : Activation::GroupSort;
  const ArchSpec arch = ArchSpec::uniform(1, a.depth, a.width, a.k, act);
  arch.validate();
  e.config.validate();

  const TrainConfig& c = e.config;
  const json meta = {
      {"command", "train"},
      {"experiment", a.experiment},
      {"interval", {e.problem.lo, e.problem.hi}},
      {"dataset_size", e.problem.data ? e.problem.data->size() : 0},
      {"arch",
       {{"input_dim", 1}, {"hidden_widths", arch.hidden_widths}, {"grouping_size", a.k}, {"activation", a.activation}}},
      {"config",
       {{"batch_size", c.batch_size},
        {"learning_rate", c.learning_rate},
        {"lr_schedule", c.lr_schedule == LrSchedule::Cosine ? "cosine" : "constant"},
        {"lr_final_fraction", c.lr_final_fraction},
        {"adam_beta1", c.adam_beta1},
        {"adam_beta2", c.adam_beta2},
        {"adam_epsilon", c.adam_epsilon},
        {"steps", c.steps},
        {"seed", c.seed},
        {"enforcement", to_string(c.enforcement)},
        {"enforce_every", c.enforce_every},
        {"bias_init", c.bias_init},
        {"hidden_bias_init", c.hidden_bias_init},
        {"eval_every", c.eval_every},
        {"eval_grid", c.eval_grid}}}};

  const RegressionResult r = train_regression(e.problem, arch, e.config);
  const fs::path dir = a.out.empty() ? default_dir() : fs::path(a.out);
  write_file(dir / "metrics.csv", to_csv(r.history, config_line(meta)));
  write_file(dir / (std::string("net") + kNetworkFileExtension), serialize(r.net));
  json run = meta;
  run["config_hash"] = config_line(meta);
  const MetricsRecord& last = r.history.back();
  run["final"] = {{"step", last.step},
                  {"loss", last.loss},
                  {"uniform_error", nan_to_null(last.uniform_error)},
                  {"lipschitz_estimate", nan_to_null(last.lipschitz_estimate)},
                  {"region_count", last.region_count}};
  write_file(dir / "run.json", run.dump(2) + "\n");
  std::printf("step %zu: loss %.6g, uniform_error %.6g, lipschitz_estimate %.6g, region_count %zu\n", last.step,
              last.loss, last.uniform_error, last.lipschitz_estimate, last.region_count);
  return 0;
}

// ---------------------------------------------------------------- wasserstein

struct WassersteinArgs {
  WassersteinOptions opt;
  bool no_control = false;
  std::string out;
};

int run_wasserstein_cmd(WassersteinArgs a) {
  a.opt.control = !a.no_control;
  const WassersteinOptions& o = a.opt;
  const json meta = {{"command", "wasserstein"}, {"pairs", o.pairs},   {"components", o.components},
                     {"samples", o.samples},     {"depth", o.depth},   {"width", o.width},
                     {"k", o.k},                 {"seed", o.seed},     {"steps", o.steps},
                     {"control", o.control}};
  const WassersteinRun run = run_wasserstein(o);
  std::ostringstream os;
  os << "# config: " << config_line(meta) << "\n";
  os << "pair_id,w1,neural,relative_error,diverged,control\n";
  std::size_t diverged = 0;
  for (const auto& row : run.rows) {
    os << row.pair_id << ',' << num(row.w1) << ',' << num(row.neural) << ',' << num(row.relative_error) << ','
       << (row.diverged ? 1 : 0) << ',' << (row.control ? 1 : 0) << "\n";
    diverged += row.diverged;
  }
  const ParabolicFit& f = run.fit;
  os << "# fit: a=" << num(f.a) << " b=" << num(f.b) << " c=" << num(f.c) << " lre=" << num(f.lre)
     << " envelope=" << num(f.envelope) << "\n";
  write_file(resolve(a.out, "wasserstein.csv"), os.str());
  std::printf("%zu rows, %zu diverged; parabolic fit a=%.4g b=%.4g c=%.4g, LRE %.4f, envelope %.4f\n",
              run.rows.size(), diverged, f.a, f.b, f.c, f.lre, f.envelope);
  return 0;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitParse;
  } catch (const TrainingError& e) {
    std::fprintf(stderr, "training diverged: %s\n", e.what());
    return kExitDiverged;
  } catch (const ConstraintError& e) {
    std::fprintf(stderr, "infeasible input: %s\n", e.what());
    return kExitInfeasible;
  } catch (const DimensionError& e) {
    std::fprintf(stderr, "dimension error: %s\n", e.what());
    return kExitInfeasible;
  } catch (const ShapeError& e) {
    std::fprintf(stderr, "shape error: %s\n", e.what());
    return kExitInfeasible;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GroupSort network compiler, analyzer and trainer.\n"
               "Outputs default to $GSNET_OUT_DIR (or the working directory).\n"
               "Exit codes: 0 ok, 1 failed check, 2 infeasible input, 3 parse error, 4 divergence."};
  app.require_subcommand(1);

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "Compile a max-min expression or 1-D PWL function to a network");
  auto* expr_opt = compile->add_option("--expr", ca.expr, "Max-min expression file")->check(CLI::ExistingFile);
  auto* pwl_opt = compile->add_option("--pwl", ca.pwl, "Piecewise-linear CSV file")->check(CLI::ExistingFile);
  expr_opt->excludes(pwl_opt);
  compile->add_flag("--convex", ca.convex, "Use the convex/concave front-end (PWL input only)")->needs(pwl_opt);
  compile->add_flag("--canonical", ca.canonical, "Pad PWL networks to the construction depth bound")->needs(pwl_opt);
  compile->add_option("--k", ca.k, "Grouping size")->default_val(2)->check(CLI::Range(2, 1 << 20));
  compile->add_option("--out", ca.out, "Output network file (.gsnet.json)");
  compile->add_option("--certificate", ca.certificate, "Output certificate JSON");
  compile->callback([&] {
    if (ca.expr.empty() && ca.pwl.empty()) throw CLI::RequiredError("--expr or --pwl");
  });

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Enumerate the linear regions of a 1-D network");
  analyze->add_option("--net", aa.net, "Network file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--interval", aa.interval, "Interval LO HI")->expected(2)->default_str("-1 1");
  analyze->add_option("--out", aa.out, "Output region CSV");

  TrainArgs ta;
  auto* train = app.add_subcommand("train", "Train a constrained network on a regression experiment");
  train->add_option("--experiment", ta.experiment, "Experiment preset")
      ->check(CLI::IsMember(regression_experiment_names()))
      ->default_val("pwl32");
  train->add_option("--activation", ta.activation, "Activation")
      ->check(CLI::IsMember({"groupsort", "relu"}))
      ->default_val("groupsort");
  train->add_option("--enforcement", ta.enforcement, "Weight constraint enforcement")
      ->check(CLI::IsMember({"bjorck", "row", "none"}))
      ->default_val("bjorck");
  train->add_option("--depth", ta.depth, "Depth q (number of affine layers)")->default_val(4)->check(CLI::PositiveNumber);
  train->add_option("--width", ta.width, "Hidden width")->default_val(20)->check(CLI::PositiveNumber);
  train->add_option("--k", ta.k, "Grouping size")->default_val(2)->check(CLI::Range(2, 1 << 20));
  train->add_option("--seed", ta.seed, "Seed")->default_val(0);
  train->add_option("--steps", ta.steps, "Override the preset step count");
  train->add_option("--out", ta.out, "Output directory");

  WassersteinArgs wa;
  auto* wass = app.add_subcommand("wasserstein", "Compare oracle W1 with trained neural distances");
  wass->add_option("--pairs", wa.opt.pairs, "Mixture pairs")->default_val(40)->check(CLI::PositiveNumber);
  wass->add_option("--components", wa.opt.components, "Mixture components")->default_val(4)->check(CLI::PositiveNumber);
  wass->add_option("--samples", wa.opt.samples, "Samples per distribution")->default_val(256)->check(CLI::PositiveNumber);
  wass->add_option("--depth", wa.opt.depth, "Critic depth")->default_val(2)->check(CLI::PositiveNumber);
  wass->add_option("--width", wa.opt.width, "Critic width")->default_val(20)->check(CLI::PositiveNumber);
  wass->add_option("--k", wa.opt.k, "Grouping size")->default_val(2)->check(CLI::Range(2, 1 << 20));
  wass->add_option("--steps", wa.opt.steps, "Critic training steps")->default_val(1000)->check(CLI::PositiveNumber);
  wass->add_option("--seed", wa.opt.seed, "Master seed")->default_val(0);
  wass->add_flag("--no-control", wa.no_control, "Skip the identical-pair control row");
  wass->add_option("--out", wa.out, "Output CSV");

  CLI11_PARSE(app, argc, argv);

  if (compile->parsed()) return guarded([&] { return run_compile(ca); });
  if (analyze->parsed()) return guarded([&] { return run_analyze(aa); });
  if (train->parsed()) return guarded([&] { return run_train(ta); });
  return guarded([&] { return run_wasserstein_cmd(wa); });
}
