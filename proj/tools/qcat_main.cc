// Copyright 2026 The qcat Authors
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

// Command line front end: run one experiment config, run a named preset,
// sweep a config list, or just verify the structural constraints of a
// config without simulating.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcat/experiments.h"

namespace {

struct CommonOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out_dir = "qcat-out";
  bool allow_noncausal = false;
  unsigned threads = 0;
  bool csv_only = false;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--seed", opts->seed, "Override the master seed");
  cmd->add_option("--trials", opts->trials, "Override the trial count");
  cmd->add_option("--out", opts->out_dir, "Output directory")
      ->capture_default_str();
  cmd->add_flag("--allow-noncausal", opts->allow_noncausal,
                "Run dynamics that violate the causality constraints");
  cmd->add_option("--threads", opts->threads,
                  "Worker threads (0 = hardware count)");
  cmd->add_flag("--csv-only", opts->csv_only,
                "Skip the metadata sidecar and plot script");
}

void apply_overrides(std::vector<qcat::ExperimentConfig>& configs,
                     const CommonOptions& opts) {
  for (auto& config : configs) {
    if (opts.seed) config.seed = *opts.seed;
    if (opts.trials) config.trials = *opts.trials;
    if (opts.allow_noncausal) config.allow_noncausal = true;
  }
}

int run_configs(std::vector<qcat::ExperimentConfig> configs,
                const CommonOptions& opts) {
  apply_overrides(configs, opts);
  const auto format = opts.csv_only ? qcat::ExportFormat::csv
                                    : qcat::ExportFormat::structured_metadata;
  // Configs are run one by one so a failing member does not discard the
  // results of the others; failures are reported together at the end.
  std::size_t written = 0;
  std::vector<std::string> failures;
  for (const auto& config : configs) {
    try {
      const qcat::RunResult result = qcat::run_experiment(config, opts.threads);
      qcat::export_result(result, opts.out_dir, format);
      ++written;
      std::printf("%-28s trials=%zu t_max=%zu wall=%.2fs",
                  result.config.name.c_str(), result.config.trials,
                  result.config.t_max, result.wall_seconds);
      if (auto it = result.scalars.find("conductivity");
          it != result.scalars.end()) {
        std::printf(" conductivity=%.6f", it->second);
      }
      if (result.aborted_trials > 0) {
        std::printf(" ABORTED_TRIALS=%zu", result.aborted_trials);
      }
      std::printf("\n");
    } catch (const std::exception& e) {
      failures.push_back(config.name + ": " + e.what());
    }
  }
  std::printf("wrote %zu result set(s) to %s\n", written, opts.out_dir.c_str());
  for (const std::string& failure : failures) {
    std::fprintf(stderr, "failed: %s\n", failure.c_str());
  }
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy quantum cellular automaton state-transfer simulator"};
  app.require_subcommand(1);

  CommonOptions run_opts, preset_opts, sweep_opts;
  std::string config_file, preset_name, sweep_file, verify_file;
  bool list_presets = false;

  CLI::App* run_cmd =
      app.add_subcommand("run", "Run a single experiment config file");
  run_cmd->add_option("config", config_file, "JSON config file")->required();
  add_common(run_cmd, &run_opts);

  CLI::App* preset_cmd =
      app.add_subcommand("preset", "Run a named figure-reproduction preset");
  preset_cmd->add_option("name", preset_name, "Preset name");
  preset_cmd->add_flag("--list", list_presets, "List preset names and exit");
  add_common(preset_cmd, &preset_opts);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Run every config in a sweep file");
  sweep_cmd->add_option("config", sweep_file, "JSON sweep file")->required();
  add_common(sweep_cmd, &sweep_opts);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Print the constraint report for a config without running");
  verify_cmd->add_option("config", verify_file, "JSON config file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return run_configs({qcat::load_config(config_file)}, run_opts);
    }
    if (preset_cmd->parsed()) {
      if (list_presets) {
        for (const std::string& name : qcat::preset_names()) {
          std::printf("%s\n", name.c_str());
        }
        return 0;
      }
      if (preset_name.empty()) {
        std::fprintf(stderr, "preset: give a name or --list\n");
        return 2;
      }
      return run_configs(qcat::preset(preset_name), preset_opts);
    }
    if (sweep_cmd->parsed()) {
      return run_configs(qcat::load_sweep(sweep_file), sweep_opts);
    }
    if (verify_cmd->parsed()) {
      const qcat::ExperimentConfig config = qcat::load_config(verify_file);
      const qcat::AutomatonSpec spec = config.automaton_spec();
      const qcat::CausalReport report = qcat::check_causal_class(spec);
      std::printf("%s", report.to_string().c_str());
      if (spec.topology.is_ring()) {
        std::printf("translational invariance residual: %g\n",
                    qcat::check_translational_invariance(spec));
      } else {
        std::printf(
            "translational invariance: n/a (open chain drops global "
            "invariance)\n");
      }
      for (qcat::Layer layer : {qcat::Layer::even, qcat::Layer::odd}) {
        const auto kraus = qcat::assemble_global_kraus(spec, layer);
        std::printf("%s layer completeness residual: %g\n",
                    layer == qcat::Layer::even ? "even" : "odd",
                    kraus.completeness_residual());
      }
      return report.class_constraints_ok || config.allow_noncausal ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
