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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcat/experiments.h"

namespace qcat {

namespace {

constexpr double kPi = std::numbers::pi;

ExperimentConfig base_chain(std::size_t n) {
  ExperimentConfig c;
  c.topology = Topology::chain(n);
  c.c_weights = {1.0, 0.0, 0.0};
  c.seed = 20260809;
  return c;
}

ExperimentConfig base_ring(std::size_t n) {
  ExperimentConfig c = base_chain(n);
  c.topology = Topology::ring(n);
  return c;
}

/// Fidelity of transfer on the N=8 chain at p=q=0.5 for three phase
/// choices; (0,0) stalls near 1/2 while (0,pi) and (pi,0) beat the 2/3
/// classical bound.
std::vector<ExperimentConfig> fig3_phases() {
  std::vector<ExperimentConfig> configs;
  const std::array<std::pair<double, double>, 3> phases = {
      std::pair{0.0, 0.0}, std::pair{0.0, kPi}, std::pair{kPi, 0.0}};
  const std::array<const char*, 3> tags = {"phi_0_0", "phi_0_pi", "phi_pi_0"};
  for (std::size_t i = 0; i < phases.size(); ++i) {
    ExperimentConfig c = base_chain(8);
    c.name = std::string("fig3_phases_") + tags[i];
    c.p = c.q = 0.5;
    c.phi1 = phases[i].first;
    c.phi2 = phases[i].second;
    c.trials = 1000;
    c.t_max = 100;
    configs.push_back(c);
  }
  return configs;
}

/// Single-excitation conductivity to the last site of an N=6 chain versus
/// phi1+phi2, with and without dephasing. Total dephasing flattens the
/// phase dependence entirely.
std::vector<ExperimentConfig> fig3b_conductivity() {
  std::vector<ExperimentConfig> configs;
  const std::array<double, 3> xis = {0.0, 0.1, 1.0};
  const int n_phases = 13;
  for (double xi : xis) {
    for (int k = 0; k < n_phases; ++k) {
      const double phi_sum = 2.0 * kPi * k / (n_phases - 1);
      ExperimentConfig c = base_chain(6);
      c.name = "fig3b_xi" + std::to_string(xi).substr(0, 3) + "_k" +
               std::to_string(k);
      c.p = c.q = 0.5;
      c.xi = xi;
      c.phi1 = 0.0;
      c.phi2 = phi_sum;
      c.initial = InitialState::single_excitation;
      c.trials = 1;
      c.t_max = 160;
      c.observables = {ObservableKind::conductivity,
                       ObservableKind::mean_position};
      configs.push_back(c);
    }
  }
  return configs;
}

std::vector<ExperimentConfig> fig4a_chain_pq() {
  std::vector<ExperimentConfig> configs;
  const std::array<std::pair<double, double>, 3> pq = {
      std::pair{0.5, 0.5}, std::pair{0.7, 0.3}, std::pair{0.9, 0.1}};
  for (const auto& [p, q] : pq) {
    ExperimentConfig c = base_chain(8);
    c.name = "fig4a_p" + std::to_string(p).substr(0, 3) + "_q" +
             std::to_string(q).substr(0, 3);
    c.p = p;
    c.q = q;
    c.phi1 = 0.0;
    c.phi2 = kPi;
    c.trials = 1000;
    c.t_max = 100;
    configs.push_back(c);
  }
  return configs;
}

/// The two extreme dynamics: near-maximal damping (p=1, q=5e-3) and the
/// swap channel (p=q=1, plain phases).
std::vector<ExperimentConfig> fig4_extremes(bool ring) {
  std::vector<ExperimentConfig> configs;
  ExperimentConfig damping = ring ? base_ring(8) : base_chain(8);
  damping.name = ring ? "fig4d_damping" : "fig4b_damping";
  damping.p = 1.0;
  damping.q = 5e-3;
  damping.phi1 = 0.0;
  damping.phi2 = kPi;
  damping.trials = 1000;
  damping.t_max = 100;
  damping.observables = {ObservableKind::fidelity,
                         ObservableKind::conductivity};
  configs.push_back(damping);

  ExperimentConfig swap = ring ? base_ring(8) : base_chain(8);
  swap.name = ring ? "fig4d_swap" : "fig4b_swap";
  swap.p = swap.q = 1.0;
  swap.phi1 = swap.phi2 = 0.0;
  swap.trials = 1000;
  swap.t_max = 100;
  configs.push_back(swap);
  return configs;
}

std::vector<ExperimentConfig> fig4c_ring() {
  std::vector<ExperimentConfig> configs;
  for (double pq : {0.5, 0.7, 0.9}) {
    ExperimentConfig c = base_ring(8);
    c.name = "fig4c_pq" + std::to_string(pq).substr(0, 3);
    c.p = c.q = pq;
    c.phi1 = 0.0;
    c.phi2 = kPi;
    c.trials = 1000;
    c.t_max = 100;
    configs.push_back(c);
  }
  return configs;
}

/// Noise on the N=8 swap ring: noiseless baseline, dephasing only, and the
/// kernel pumping vectors at T=0.1 (which require xi > 0 to exist, so the
/// pumped variant carries the same small dephasing as its reference run).
/// The pumped dynamics drops causality and needs the override flag.
std::vector<ExperimentConfig> fig6_noise() {
  std::vector<ExperimentConfig> configs;

  ExperimentConfig noiseless = base_ring(8);
  noiseless.name = "fig6_noiseless";
  noiseless.p = noiseless.q = 1.0;
  noiseless.phi1 = noiseless.phi2 = 0.0;
  noiseless.trials = 1000;
  noiseless.t_max = 100;
  configs.push_back(noiseless);

  ExperimentConfig dephasing = noiseless;
  dephasing.name = "fig6_dephasing";
  dephasing.xi = 0.1;
  configs.push_back(dephasing);

  ExperimentConfig dephasing_strong = noiseless;
  dephasing_strong.name = "fig6_dephasing_strong";
  dephasing_strong.xi = 0.5;
  configs.push_back(dephasing_strong);

  ExperimentConfig pumped = noiseless;
  pumped.name = "fig6_pumped";
  pumped.xi = 0.1;
  pumped.pump_T = 0.1;
  configs.push_back(pumped);

  return configs;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig3_phases",       "fig3b_conductivity", "fig4a_chain_pq",
          "fig4b_extremes",    "fig4c_ring",         "fig4d_ring_extremes",
          "fig6_noise"};
}

std::vector<ExperimentConfig> preset(const std::string& name) {
  if (name == "fig3_phases") return fig3_phases();
  if (name == "fig3b_conductivity") return fig3b_conductivity();
  if (name == "fig4a_chain_pq") return fig4a_chain_pq();
  if (name == "fig4b_extremes") return fig4_extremes(false);
  if (name == "fig4c_ring") return fig4c_ring();
  if (name == "fig4d_ring_extremes") return fig4_extremes(true);
  if (name == "fig6_noise") return fig6_noise();
  throw std::invalid_argument("unknown preset '" + name +
                              "'; available: fig3_phases, "
                              "fig3b_conductivity, fig4a_chain_pq, "
                              "fig4b_extremes, fig4c_ring, "
                              "fig4d_ring_extremes, fig6_noise");
}

}  // namespace qcat
