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

#ifndef QCAT_EVOLUTION_H_
#define QCAT_EVOLUTION_H_

#include <cstddef>
#include <vector>

#include "qcat/automaton.h"

namespace qcat {

/// Validation thresholds for global states. Violations abort the run rather
/// than being repaired; silent renormalization would mask channel bugs.
struct StateTolerances {
  double hermitian = 1e-12;
  double trace = 1e-12;
  double psd = 1e-9;
};

/// Density matrix over the basis {|0> vacuum, |1>, ..., |N>} where |n>
/// places the single excitation at site n.
class GlobalState {
 public:
  /// Validates Hermiticity, unit trace, and positivity, then wraps rho.
  static GlobalState make(CMatrix rho, const StateTolerances& tol = {});

  static GlobalState vacuum(std::size_t n_sites);

  /// Pure state alpha |0> + beta |sender>: the sender qubit carries
  /// alpha |g> + beta |e| against an otherwise empty lattice. Requires
  /// |alpha|^2 + |beta|^2 = 1 within 1e-12.
  static GlobalState embed_sender_state(complexd alpha, complexd beta,
                                        std::size_t sender,
                                        std::size_t n_sites);

  std::size_t n_sites() const { return n_sites_; }
  const CMatrix& rho() const { return rho_; }

  double vacuum_population() const { return rho_(0, 0).real(); }
  double site_population(std::size_t x) const;

 private:
  GlobalState(CMatrix rho, std::size_t n_sites)
      : rho_(std::move(rho)), n_sites_(n_sites) {}

  CMatrix rho_;
  std::size_t n_sites_ = 0;
};

/// Both layer channels of a spec, assembled once and reused across steps.
struct AssembledAutomaton {
  KrausSet even;
  KrausSet odd;
  std::size_t n_sites;
};

AssembledAutomaton assemble(const AutomatonSpec& spec);

/// One full automaton time step: even layer, then odd layer. The result is
/// re-validated against `tol`; a violation throws with diagnostics.
GlobalState step(const GlobalState& state, const AssembledAutomaton& automaton,
                 const StateTolerances& tol = {});
GlobalState step(const GlobalState& state, const AutomatonSpec& spec);

/// A single layer of the step.
GlobalState half_step(const GlobalState& state,
                      const AssembledAutomaton& automaton, Layer layer,
                      const StateTolerances& tol = {});
GlobalState half_step(const GlobalState& state, const AutomatonSpec& spec,
                      Layer layer);

/// Reduced state of qubit x:
///   [[sum_{l != x} rho_ll, rho_0x], [rho_0x^*, rho_xx]].
CMatrix reduce_site(const GlobalState& state, std::size_t x);

/// Reduced state of the neighborhood {x, y = x+1} (wrapping on rings):
/// 3x3 over {both ground, x excited, y excited}.
CMatrix reduce_neighborhood(const GlobalState& state, std::size_t x);

/// <psi| reduce_site(state, x) |psi> for |psi> = alpha |g> + beta |e>.
double transfer_fidelity(const GlobalState& state, std::size_t x,
                         complexd alpha, complexd beta);

/// sum_n n rho_nn / sum_n rho_nn over sites; throws when the lattice holds
/// no excitation weight.
double mean_excitation_position(const GlobalState& state);

/// Time-averaged target-site population over a trajectory (states at
/// t = 1..t_end).
double conductivity(const std::vector<GlobalState>& trajectory,
                    std::size_t target);
double conductivity(const std::vector<double>& target_populations);

}  // namespace qcat

#endif  // QCAT_EVOLUTION_H_
