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

#ifndef QCAT_EXPERIMENTS_H_
#define QCAT_EXPERIMENTS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/evolution.h"
#include "qcat/rng.h"

namespace qcat {

inline constexpr const char* kCodeVersion = "0.1.0";
inline constexpr int kConfigSchemaVersion = 1;

enum class InitialState { haar, single_excitation };

enum class ObservableKind { fidelity, mean_position, conductivity, diagnostics };

std::string observable_name(ObservableKind kind);

/// One Monte-Carlo run: dynamics parameters, transfer endpoints, horizon,
/// trial budget, seed, and the observables to record.
struct ExperimentConfig {
  std::string name = "run";
  Topology topology = Topology::chain(8);
  double p = 0.5;
  double q = 0.5;
  double xi = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  /// Pumping-noise strength; 0 switches pumping off. Nonzero values build
  /// the balanced kernel vectors of noise_vectors_T and give up causality,
  /// which run_experiment refuses without `allow_noncausal`.
  double pump_T = 0.0;
  std::array<double, 3> c_weights{1.0, 0.0, 0.0};
  std::size_t sender = 1;
  /// Defaults to the antipodal site: N on chains, N/2 + 1 on rings.
  std::optional<std::size_t> receiver;
  std::size_t t_max = 100;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<ObservableKind> observables{ObservableKind::fidelity};
  InitialState initial = InitialState::haar;
  bool allow_noncausal = false;

  std::size_t receiver_site() const;
  AutomatonSpec automaton_spec() const;
  void validate() const;
};

/// Per-time-step sample mean and standard error over trials.
struct SeriesStats {
  std::vector<double> mean;
  std::vector<double> stderr_of_mean;
};

struct RunResult {
  ExperimentConfig config;
  /// t = 0..t_max series keyed by observable name.
  std::map<std::string, SeriesStats> series;
  /// Scalar summaries (currently "conductivity").
  std::map<std::string, double> scalars;
  CausalReport constraint_report;
  double wall_seconds = 0.0;
  std::size_t aborted_trials = 0;
  std::vector<std::string> abort_messages;
};

/// Bloch-sphere-uniform qubit amplitudes (alpha, beta), global phase fixed
/// by alpha real and nonnegative.
std::pair<complexd, complexd> haar_qubit(TrialRng& rng);

/// Runs the configured Monte-Carlo experiment. Deterministic in
/// (config, seed) regardless of `threads`; trials use counter-based streams
/// and are reduced in index order. threads = 0 picks the hardware count.
RunResult run_experiment(const ExperimentConfig& config, unsigned threads = 1);

/// Runs each config in turn (trials parallelized within each run).
std::vector<RunResult> sweep(const std::vector<ExperimentConfig>& configs,
                             unsigned threads = 1);

enum class ExportFormat { csv, structured_metadata };

/// Writes <name>.csv with columns t,observable,mean,stderr. The
/// structured_metadata format adds a <name>.meta.json sidecar (config echo,
/// seed, constraint report, CSV checksum) and, when a fidelity series is
/// present, a <name>_plot.py script that renders it against the 2/3
/// classical bound.
void export_result(const RunResult& result,
                   const std::filesystem::path& out_dir,
                   ExportFormat format = ExportFormat::structured_metadata);

/// Figure-reproduction presets, runnable by name from the CLI.
std::vector<std::string> preset_names();
std::vector<ExperimentConfig> preset(const std::string& name);

/// JSON round trip for configs; rejects unknown keys and schema mismatches.
std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& file);
std::vector<ExperimentConfig> load_sweep(const std::filesystem::path& file);

/// FNV-1a 64-bit checksum, hex encoded; used to fingerprint exported CSVs.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace qcat

#endif  // QCAT_EXPERIMENTS_H_
