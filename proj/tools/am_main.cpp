// am: analogical-modeling engine CLI.
//
// Exit codes: 0 success, 1 usage, 2 data validation, 3 capacity exceeded.
// All randomized paths are driven by --seed; stdout is deterministic for a
// given invocation, diagnostics (timing) go to stderr.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "am/core.hpp"
#include "am/homogeneity.hpp"
#include "am/io.hpp"
#include "am/lattice.hpp"
#include "am/natstat.hpp"
#include "am/predict.hpp"
#include "am/rational.hpp"
#include "am/report.hpp"
#include "am/revgate.hpp"
#include "am/rng.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitCapacity = 3;

struct CommonOpts {
  std::string format = "text";
  std::uint64_t seed = 0;
  int max_vars = am::kDefaultMaxVars;
  bool no_include_matrix = false;

  am::EngineConfig config() const {
    am::EngineConfig cfg;
    cfg.max_vars = max_vars;
    cfg.retain_include_matrix = !no_include_matrix;
    cfg.seed = seed;
    return cfg;
  }
  bool json() const { return format == "json"; }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", opts.seed, "seed for randomized operations");
  cmd->add_option("--max-vars", opts.max_vars, "capacity guard on variable count");
  cmd->add_flag("--no-include-matrix", opts.no_include_matrix,
                "drop the per-occurrence include matrix");
}

struct GivenOpts {
  std::string spec;
  std::string file;
};

void add_given(CLI::App* cmd, GivenOpts& opts) {
  cmd->add_option("--given", opts.spec, "given context, e.g. \"3 1 2\"");
  cmd->add_option("--given-file", opts.file, "one-line file holding the given context");
}

am::GivenContext resolve_given(const GivenOpts& opts) {
  if (opts.spec.empty() == opts.file.empty())
    throw CLI::ValidationError("given", "exactly one of --given / --given-file is required");
  return opts.file.empty() ? am::parse_given(opts.spec) : am::load_given(opts.file);
}

void emit(const std::string& text) { std::cout << text; }

void emit(const am::Json& json) { std::cout << json.dump(2) << "\n"; }

// exits nonzero for the caller when violations exist
int violation_exit(const std::vector<am::Violation>& violations) {
  for (const am::Violation& v : violations)
    if (v.kind == am::Violation::Kind::capacity) return kExitCapacity;
  return violations.empty() ? kExitOk : kExitValidation;
}

class Timer {
 public:
  ~Timer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    std::cerr << "elapsed_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_predict(const std::string& dataset_path, const GivenOpts& given_opts,
                const CommonOpts& common) {
  Timer timer;
  const am::Dataset dataset = am::load_dataset(dataset_path);
  const am::GivenContext given = resolve_given(given_opts);
  am::require_valid(dataset, given, common.config());
  const am::RunReport report = am::make_run_report(dataset, given, common.config());
  if (common.json())
    emit(am::run_report_json(report));
  else
    emit(am::render_run_report_text(report));
  return kExitOk;
}

int run_trace(const std::string& dataset_path, const GivenOpts& given_opts,
              const CommonOpts& common) {
  Timer timer;
  const am::Dataset dataset = am::load_dataset(dataset_path);
  const am::GivenContext given = resolve_given(given_opts);
  am::EngineConfig cfg = common.config();
  cfg.retain_include_matrix = true;  // the staged tables show include bits
  am::require_valid(dataset, given, cfg);
  const std::vector<am::TraceSnapshot> snapshots = am::trace(dataset, given, cfg);
  if (common.json())
    emit(am::trace_json(snapshots, given));
  else
    emit(am::render_trace_text(snapshots, given));
  return kExitOk;
}

int run_validate(const std::string& dataset_path, const GivenOpts& given_opts,
                 const CommonOpts& common) {
  const am::Dataset dataset = am::load_dataset(dataset_path);
  const am::GivenContext given = resolve_given(given_opts);
  const std::vector<am::Violation> violations = am::validate(dataset, given, common.config());
  if (common.json())
    emit(am::violations_json(violations));
  else
    emit(am::render_violations_text(violations));
  return violation_exit(violations);
}

int run_check(const std::string& dataset_path, const GivenOpts& given_opts,
              const CommonOpts& common) {
  const am::Dataset dataset = am::load_dataset(dataset_path);
  const am::GivenContext given = resolve_given(given_opts);
  am::require_valid(dataset, given, common.config());
  const am::CrossCheckReport report = am::cross_check(dataset, given, common.config());
  if (common.json())
    emit(am::cross_check_json(report));
  else
    emit(am::render_cross_check_text(report));
  return kExitOk;
}

int run_gates(const CommonOpts& common) {
  if (common.json())
    emit(am::gates_json());
  else
    emit(am::render_gates_text());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analogical modeling engine"};
  app.require_subcommand(1);

  // predict
  auto* predict = app.add_subcommand("predict", "outcome distribution for a given context");
  std::string predict_dataset;
  GivenOpts predict_given;
  CommonOpts predict_common;
  predict->add_option("dataset", predict_dataset, "dataset file")->required();
  add_given(predict, predict_given);
  add_common(predict, predict_common);

  // trace
  auto* trace_cmd = app.add_subcommand("trace", "staged lattice tables, one per occurrence");
  std::string trace_dataset;
  GivenOpts trace_given;
  CommonOpts trace_common;
  trace_cmd->add_option("dataset", trace_dataset, "dataset file")->required();
  add_given(trace_cmd, trace_given);
  add_common(trace_cmd, trace_common);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a dataset/given pair");
  std::string validate_dataset;
  GivenOpts validate_given;
  CommonOpts validate_common;
  validate_cmd->add_option("dataset", validate_dataset, "dataset file")->required();
  add_given(validate_cmd, validate_given);
  add_common(validate_cmd, validate_common);

  // check
  auto* check_cmd =
      app.add_subcommand("check", "cross-check lattice flags against both homogeneity oracles");
  std::string check_dataset;
  GivenOpts check_given;
  CommonOpts check_common;
  check_cmd->add_option("dataset", check_dataset, "dataset file")->required();
  add_given(check_cmd, check_given);
  add_common(check_cmd, check_common);

  // gates
  auto* gates_cmd = app.add_subcommand("gates", "reversible gate truth tables");
  CommonOpts gates_common;
  add_common(gates_cmd, gates_common);

  // natstat
  auto* natstat = app.add_subcommand("natstat", "natural statistics under imperfect memory");
  natstat->require_subcommand(1);

  auto* decide = natstat->add_subcommand("decide", "most-frequent-outcome distribution");
  std::vector<std::string> decide_tokens;
  std::string decide_r = "1/2";
  CommonOpts decide_common;
  decide->add_option("outcomes", decide_tokens, "outcome tokens, e.g. s s s t");
  decide->add_option("--r", decide_r, "retention probability (rational or decimal)");
  add_common(decide, decide_common);

  auto* variance = natstat->add_subcommand("variance", "frequency-estimator variance");
  std::vector<std::string> variance_tokens;
  std::string variance_r = "1/2";
  std::string variance_target;
  bool variance_mc = false;
  std::uint64_t variance_trials = 100000;
  CommonOpts variance_common;
  variance->add_option("outcomes", variance_tokens, "outcome tokens");
  variance->add_option("--r", variance_r, "retention probability");
  variance->add_option("--target", variance_target, "outcome to estimate (default: first)");
  variance->add_flag("--monte-carlo", variance_mc, "sample subsets instead of enumerating");
  variance->add_option("--trials", variance_trials, "Monte Carlo trials");
  add_common(variance, variance_common);

  auto* imperfect =
      natstat->add_subcommand("predict-imperfect", "lattice prediction averaged over memory subsets");
  std::string imperfect_dataset;
  GivenOpts imperfect_given;
  std::string imperfect_r = "1/2";
  bool imperfect_mc = false;
  std::uint64_t imperfect_trials = 100000;
  CommonOpts imperfect_common;
  imperfect->add_option("dataset", imperfect_dataset, "dataset file")->required();
  add_given(imperfect, imperfect_given);
  imperfect->add_option("--r", imperfect_r, "retention probability");
  imperfect->add_flag("--monte-carlo", imperfect_mc, "sample subsets instead of enumerating");
  imperfect->add_option("--trials", imperfect_trials, "Monte Carlo trials");
  add_common(imperfect, imperfect_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (predict->parsed()) return run_predict(predict_dataset, predict_given, predict_common);
    if (trace_cmd->parsed()) return run_trace(trace_dataset, trace_given, trace_common);
    if (validate_cmd->parsed())
      return run_validate(validate_dataset, validate_given, validate_common);
    if (check_cmd->parsed()) return run_check(check_dataset, check_given, check_common);
    if (gates_cmd->parsed()) return run_gates(gates_common);
    if (natstat->parsed()) {
      if (decide->parsed()) {
        const am::MemoryModel model{am::parse_rational(decide_r)};
        const am::DecisionDistribution dist =
            am::exact_decision_distribution(decide_tokens, model);
        if (decide_common.json())
          emit(am::decision_json(decide_tokens, model.r, dist));
        else
          emit(am::render_decision_text(decide_tokens, model.r, dist));
        return kExitOk;
      }
      if (variance->parsed()) {
        const am::MemoryModel model{am::parse_rational(variance_r)};
        const am::SamplingMode mode =
            variance_mc ? am::SamplingMode::monte_carlo : am::SamplingMode::exact;
        am::Rng rng(variance_common.seed);
        const am::VarianceReport report = am::variance_experiment(
            variance_tokens, model, mode, variance_trials, rng, variance_target);
        const am::Outcome target =
            variance_target.empty() ? variance_tokens.front() : variance_target;
        if (variance_common.json())
          emit(am::variance_json(variance_tokens, model.r, target, mode, report));
        else
          emit(am::render_variance_text(variance_tokens, model.r, target, mode, report));
        return kExitOk;
      }
      if (imperfect->parsed()) {
        Timer timer;
        const am::Dataset dataset = am::load_dataset(imperfect_dataset);
        const am::GivenContext given = resolve_given(imperfect_given);
        const am::MemoryModel model{am::parse_rational(imperfect_r)};
        const am::SamplingMode mode =
            imperfect_mc ? am::SamplingMode::monte_carlo : am::SamplingMode::exact;
        am::Rng rng(imperfect_common.seed);
        const am::Distribution dist =
            am::predict_with_imperfect_memory(dataset, given, model, mode, imperfect_trials,
                                              rng, imperfect_common.config());
        if (imperfect_common.json())
          emit(am::imperfect_json(dataset, given, model.r, mode, imperfect_trials, dist));
        else
          emit(am::render_imperfect_text(dataset, given, model.r, mode, imperfect_trials, dist));
        return kExitOk;
      }
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const am::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const am::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
