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

#include "qcat/experiments.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace qcat {

std::string observable_name(ObservableKind kind) {
  switch (kind) {
    case ObservableKind::fidelity:
      return "fidelity";
    case ObservableKind::mean_position:
      return "mean_position";
    case ObservableKind::conductivity:
      return "conductivity";
    case ObservableKind::diagnostics:
      return "diagnostics";
  }
  throw std::invalid_argument("observable_name: unknown kind");
}

std::size_t ExperimentConfig::receiver_site() const {
  if (receiver.has_value()) return *receiver;
  return topology.is_ring() ? topology.n_sites / 2 + 1 : topology.n_sites;
}

AutomatonSpec ExperimentConfig::automaton_spec() const {
  const LocalChannelParams params =
      LocalChannelParams::make(p, q, xi, phi1, phi2);
  PumpingVectors pumping;
  bool causal = true;
  if (pump_T > 0.0) {
    pumping = noise_vectors_T(xi, params.eta(), pump_T, topology.n_sites);
    causal = false;
  }
  return AutomatonSpec::make(topology, params, c_weights, pumping, causal);
}

void ExperimentConfig::validate() const {
  topology.validate();
  if (trials < 1) throw std::invalid_argument("config: trials >= 1 required");
  if (t_max < 1) throw std::invalid_argument("config: t_max >= 1 required");
  if (sender < 1 || sender > topology.n_sites) {
    throw std::invalid_argument("config: sender site out of range");
  }
  const std::size_t r = receiver_site();
  if (r < 1 || r > topology.n_sites) {
    throw std::invalid_argument("config: receiver site out of range");
  }
  if (observables.empty()) {
    throw std::invalid_argument("config: no observables requested");
  }
  (void)automaton_spec();
}

std::pair<complexd, complexd> haar_qubit(TrialRng& rng) {
  const double cos_theta = 1.0 - 2.0 * rng.next_unit();
  const double phi = 2.0 * std::numbers::pi * rng.next_unit();
  const double alpha = std::sqrt(0.5 * (1.0 + cos_theta));
  const double beta_mag = std::sqrt(0.5 * (1.0 - cos_theta));
  return {complexd{alpha, 0.0}, std::polar(beta_mag, phi)};
}

namespace {

struct TrialBuffers {
  // One row per trial, t_max + 1 samples per row; NaN rows mark aborts.
  std::vector<std::vector<double>> fidelity;
  std::vector<std::vector<double>> mean_position;
  std::vector<std::vector<double>> target_population;
  std::vector<std::vector<double>> vacuum_population;
  std::vector<std::vector<double>> trace_residual;
};

bool wants(const ExperimentConfig& config, ObservableKind kind) {
  return std::find(config.observables.begin(), config.observables.end(),
                   kind) != config.observables.end();
}

SeriesStats reduce_rows(const std::vector<std::vector<double>>& rows,
                        std::size_t n_steps) {
  SeriesStats stats;
  stats.mean.assign(n_steps, 0.0);
  stats.stderr_of_mean.assign(n_steps, 0.0);
  for (std::size_t t = 0; t < n_steps; ++t) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& row : rows) {
      if (!std::isnan(row[t])) {
        sum += row[t];
        ++count;
      }
    }
    if (count == 0) {
      stats.mean[t] = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const double mean = sum / static_cast<double>(count);
    stats.mean[t] = mean;
    if (count > 1) {
      double ss = 0.0;
      for (const auto& row : rows) {
        if (!std::isnan(row[t])) {
          const double d = row[t] - mean;
          ss += d * d;
        }
      }
      stats.stderr_of_mean[t] =
          std::sqrt(ss / (static_cast<double>(count) *
                          static_cast<double>(count - 1)));
    }
  }
  return stats;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config, unsigned threads) {
  const auto t_start = std::chrono::steady_clock::now();
  config.validate();

  const AutomatonSpec spec = config.automaton_spec();
  RunResult result;
  result.config = config;
  result.constraint_report = check_causal_class(spec);
  if (!result.constraint_report.class_constraints_ok &&
      !config.allow_noncausal) {
    throw std::invalid_argument(
        "run_experiment: dynamics violates the causality constraints; set "
        "allow_noncausal to run it anyway.\n" +
        result.constraint_report.to_string());
  }

  const AssembledAutomaton automaton = assemble(spec);
  const std::size_t n_steps = config.t_max + 1;
  const std::size_t receiver = config.receiver_site();

  const bool track_fidelity = wants(config, ObservableKind::fidelity);
  const bool track_position = wants(config, ObservableKind::mean_position);
  const bool track_target = wants(config, ObservableKind::conductivity) ||
                            wants(config, ObservableKind::diagnostics);
  const bool track_diag = wants(config, ObservableKind::diagnostics);

  TrialBuffers buffers;
  auto init_rows = [&](std::vector<std::vector<double>>& rows, bool active) {
    if (active) {
      rows.assign(config.trials,
                  std::vector<double>(
                      n_steps, std::numeric_limits<double>::quiet_NaN()));
    }
  };
  init_rows(buffers.fidelity, track_fidelity);
  init_rows(buffers.mean_position, track_position);
  init_rows(buffers.target_population, track_target);
  init_rows(buffers.vacuum_population, track_diag);
  init_rows(buffers.trace_residual, track_diag);

  std::mutex abort_mutex;
  std::size_t aborted = 0;
  std::vector<std::string> abort_messages;

  auto run_trial = [&](std::size_t trial) {
    TrialRng rng(config.seed, trial);
    complexd alpha{0.0, 0.0};
    complexd beta{1.0, 0.0};
    if (config.initial == InitialState::haar) {
      std::tie(alpha, beta) = haar_qubit(rng);
    }
    try {
      GlobalState state = GlobalState::embed_sender_state(
          alpha, beta, config.sender, config.topology.n_sites);
      for (std::size_t t = 0; t < n_steps; ++t) {
        if (t > 0) state = step(state, automaton);
        if (track_fidelity) {
          buffers.fidelity[trial][t] =
              transfer_fidelity(state, receiver, alpha, beta);
        }
        if (track_position) {
          buffers.mean_position[trial][t] = mean_excitation_position(state);
        }
        if (track_target) {
          buffers.target_population[trial][t] = state.site_population(receiver);
        }
        if (track_diag) {
          buffers.vacuum_population[trial][t] = state.vacuum_population();
          buffers.trace_residual[trial][t] =
              std::abs(trace(state.rho()) - complexd{1.0, 0.0});
        }
      }
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(abort_mutex);
      ++aborted;
      if (abort_messages.size() < 8) {
        abort_messages.push_back("trial " + std::to_string(trial) + ": " +
                                 e.what());
      }
      // Leave the rows as NaN; the reduction skips them.
    }
  };

  unsigned n_threads = threads == 0
                           ? std::max(1u, std::thread::hardware_concurrency())
                           : threads;
  n_threads = std::min<unsigned>(
      n_threads, static_cast<unsigned>(std::max<std::size_t>(1, config.trials)));
  if (n_threads <= 1 || config.trials < 2) {
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      run_trial(trial);
    }
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned worker = 0; worker < n_threads; ++worker) {
      pool.emplace_back([&, worker] {
        for (std::size_t trial = worker; trial < config.trials;
             trial += n_threads) {
          run_trial(trial);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  if (track_fidelity) {
    result.series["fidelity"] = reduce_rows(buffers.fidelity, n_steps);
  }
  if (track_position) {
    result.series["mean_position"] =
        reduce_rows(buffers.mean_position, n_steps);
  }
  if (track_target) {
    result.series["target_population"] =
        reduce_rows(buffers.target_population, n_steps);
  }
  if (track_diag) {
    result.series["vacuum_population"] =
        reduce_rows(buffers.vacuum_population, n_steps);
    result.series["trace_residual"] =
        reduce_rows(buffers.trace_residual, n_steps);
  }
  if (wants(config, ObservableKind::conductivity)) {
    const auto& pop = result.series.at("target_population").mean;
    double sum = 0.0;
    for (std::size_t t = 1; t < pop.size(); ++t) sum += pop[t];
    result.scalars["conductivity"] =
        sum / static_cast<double>(config.t_max);
  }

  result.aborted_trials = aborted;
  result.abort_messages = std::move(abort_messages);
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

std::vector<RunResult> sweep(const std::vector<ExperimentConfig>& configs,
                             unsigned threads) {
  if (configs.empty()) {
    throw std::invalid_argument("sweep: empty config list");
  }
  std::vector<RunResult> results;
  results.reserve(configs.size());
  std::string errors;
  for (const ExperimentConfig& config : configs) {
    try {
      results.push_back(run_experiment(config, threads));
    } catch (const std::exception& e) {
      errors += "  " + config.name + ": " + e.what() + "\n";
    }
  }
  if (!errors.empty()) {
    throw std::runtime_error("sweep: " +
                             std::to_string(configs.size() - results.size()) +
                             " of " + std::to_string(configs.size()) +
                             " configs failed:\n" + errors);
  }
  return results;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace qcat
