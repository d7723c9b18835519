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

#include "qcat/evolution.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcat {

namespace {

void check_site(std::size_t x, std::size_t n_sites, const char* where) {
  if (x < 1 || x > n_sites) {
    throw std::invalid_argument(std::string(where) +
                                ": site index out of range");
  }
}

}  // namespace

GlobalState GlobalState::make(CMatrix rho, const StateTolerances& tol) {
  if (!rho.is_square() || rho.rows() < 2) {
    throw std::invalid_argument("GlobalState: need a square matrix over "
                                "{vacuum, site 1..N}");
  }
  if (!rho.all_finite()) {
    throw std::invalid_argument("GlobalState: non-finite entries");
  }
  const double herm = hermiticity_residual(rho);
  if (herm > tol.hermitian) {
    throw std::invalid_argument("GlobalState: Hermiticity violated by " +
                                std::to_string(herm));
  }
  const double trace_err = std::abs(trace(rho) - complexd{1.0, 0.0});
  if (trace_err > tol.trace) {
    throw std::invalid_argument("GlobalState: trace deviates from 1 by " +
                                std::to_string(trace_err));
  }
  const double min_eig = min_hermitian_eigenvalue(rho);
  if (min_eig < -tol.psd) {
    throw std::invalid_argument("GlobalState: negative eigenvalue " +
                                std::to_string(min_eig));
  }
  const std::size_t n_sites = rho.rows() - 1;
  return GlobalState(std::move(rho), n_sites);
}

GlobalState GlobalState::vacuum(std::size_t n_sites) {
  CMatrix rho(n_sites + 1, n_sites + 1);
  rho(0, 0) = 1.0;
  return GlobalState(std::move(rho), n_sites);
}

GlobalState GlobalState::embed_sender_state(complexd alpha, complexd beta,
                                            std::size_t sender,
                                            std::size_t n_sites) {
  check_site(sender, n_sites, "embed_sender_state");
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "embed_sender_state: sender amplitudes are not normalized");
  }
  CMatrix rho(n_sites + 1, n_sites + 1);
  rho(0, 0) = std::norm(alpha);
  rho(sender, sender) = std::norm(beta);
  rho(0, sender) = alpha * std::conj(beta);
  rho(sender, 0) = std::conj(rho(0, sender));
  return GlobalState(std::move(rho), n_sites);
}

double GlobalState::site_population(std::size_t x) const {
  check_site(x, n_sites_, "site_population");
  return rho_(x, x).real();
}

AssembledAutomaton assemble(const AutomatonSpec& spec) {
  return AssembledAutomaton{assemble_global_kraus(spec, Layer::even),
                            assemble_global_kraus(spec, Layer::odd),
                            spec.topology.n_sites};
}

GlobalState half_step(const GlobalState& state,
                      const AssembledAutomaton& automaton, Layer layer,
                      const StateTolerances& tol) {
  if (state.n_sites() != automaton.n_sites) {
    throw std::invalid_argument("half_step: lattice size mismatch");
  }
  const KrausSet& kraus =
      layer == Layer::even ? automaton.even : automaton.odd;
  return GlobalState::make(apply_channel(kraus, state.rho()), tol);
}

GlobalState step(const GlobalState& state, const AssembledAutomaton& automaton,
                 const StateTolerances& tol) {
  if (state.n_sites() != automaton.n_sites) {
    throw std::invalid_argument("step: lattice size mismatch");
  }
  CMatrix mid = apply_channel(automaton.even, state.rho());
  return GlobalState::make(apply_channel(automaton.odd, mid), tol);
}

GlobalState step(const GlobalState& state, const AutomatonSpec& spec) {
  return step(state, assemble(spec));
}

GlobalState half_step(const GlobalState& state, const AutomatonSpec& spec,
                      Layer layer) {
  return half_step(state, assemble(spec), layer);
}

CMatrix reduce_site(const GlobalState& state, std::size_t x) {
  check_site(x, state.n_sites(), "reduce_site");
  const CMatrix& rho = state.rho();
  CMatrix out(2, 2);
  complexd rest{0.0, 0.0};
  for (std::size_t l = 0; l <= state.n_sites(); ++l) {
    if (l != x) rest += rho(l, l);
  }
  out(0, 0) = rest;
  out(0, 1) = rho(0, x);
  out(1, 0) = rho(x, 0);
  out(1, 1) = rho(x, x);
  return out;
}

CMatrix reduce_neighborhood(const GlobalState& state, std::size_t x) {
  const std::size_t n = state.n_sites();
  check_site(x, n, "reduce_neighborhood");
  std::size_t y = x + 1;
  if (y > n) {
    y = 1;
    if (x != n) {
      throw std::invalid_argument("reduce_neighborhood: invalid first site");
    }
  }
  const CMatrix& rho = state.rho();
  CMatrix out(3, 3);
  complexd rest{0.0, 0.0};
  for (std::size_t l = 0; l <= n; ++l) {
    if (l != x && l != y) rest += rho(l, l);
  }
  out(0, 0) = rest;
  out(0, 1) = rho(0, x);
  out(0, 2) = rho(0, y);
  out(1, 0) = rho(x, 0);
  out(1, 1) = rho(x, x);
  out(1, 2) = rho(x, y);
  out(2, 0) = rho(y, 0);
  out(2, 1) = rho(y, x);
  out(2, 2) = rho(y, y);
  return out;
}

double transfer_fidelity(const GlobalState& state, std::size_t x,
                         complexd alpha, complexd beta) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "transfer_fidelity: reference amplitudes are not normalized");
  }
  const CMatrix rx = reduce_site(state, x);
  const complexd f = std::conj(alpha) * (rx(0, 0) * alpha + rx(0, 1) * beta) +
                     std::conj(beta) * (rx(1, 0) * alpha + rx(1, 1) * beta);
  return f.real();
}

double mean_excitation_position(const GlobalState& state) {
  const CMatrix& rho = state.rho();
  double total = 0.0;
  double weighted = 0.0;
  for (std::size_t nidx = 1; nidx <= state.n_sites(); ++nidx) {
    const double pop = rho(nidx, nidx).real();
    total += pop;
    weighted += static_cast<double>(nidx) * pop;
  }
  if (total <= 1e-15) {
    throw std::invalid_argument(
        "mean_excitation_position: no excitation weight on the lattice");
  }
  return weighted / total;
}

double conductivity(const std::vector<double>& target_populations) {
  if (target_populations.empty()) {
    throw std::invalid_argument("conductivity: empty trajectory");
  }
  double sum = 0.0;
  for (double x : target_populations) sum += x;
  return sum / static_cast<double>(target_populations.size());
}

double conductivity(const std::vector<GlobalState>& trajectory,
                    std::size_t target) {
  if (trajectory.empty()) {
    throw std::invalid_argument("conductivity: empty trajectory");
  }
  std::vector<double> pops;
  pops.reserve(trajectory.size());
  for (const GlobalState& s : trajectory) {
    pops.push_back(s.site_population(target));
  }
  return conductivity(pops);
}

}  // namespace qcat
