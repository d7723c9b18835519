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

#ifndef QCAT_AUTOMATON_H_
#define QCAT_AUTOMATON_H_

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcat/channels.h"

namespace qcat {

enum class Boundary { open_chain, ring };

/// 1-D qubit lattice with sites 1..N; basis index 0 is the global vacuum.
/// N must be even and at least 4 so both partition layers are nonempty.
struct Topology {
  std::size_t n_sites = 4;
  Boundary boundary = Boundary::open_chain;

  static Topology chain(std::size_t n);
  static Topology ring(std::size_t n);

  bool is_ring() const { return boundary == Boundary::ring; }
  void validate() const;
};

/// Partition layer of one automaton step. The even layer couples pairs
/// (1,2), (3,4), ...; the odd layer couples (2,3), (4,5), ... plus (N,1) on
/// rings. A full step applies even first, then odd.
enum class Layer { even, odd };

/// Site pairs of a partition layer, 1-based, first = left member.
std::vector<std::pair<std::size_t, std::size_t>> layer_neighborhoods(
    const Topology& topology, Layer layer);

/// Vacuum scalars z_mu of the three global Kraus operators together with the
/// nonnegative relative weights c_mu they were derived from.
struct VacuumCoupling {
  std::array<complexd, 3> z{};
  std::array<double, 3> c_weights{};
};

/// Local excitation-pumping vectors w_mu = (w_mu^0, w_mu^1), one per Kraus
/// operator, replicated over every neighborhood of a layer.
struct PumpingVectors {
  std::array<std::array<complexd, 2>, 3> w{};

  bool is_zero(double tol = 0.0) const;
  /// sum_mu ||w_mu||^2
  double local_norm_sq() const;
};

/// Full description of one automaton: lattice, local channel parameters,
/// vacuum couplings, pumping vectors, and whether the causality constraints
/// on (z, w) are enforced at assembly time.
struct AutomatonSpec {
  Topology topology;
  LocalChannelParams params;
  VacuumCoupling coupling;
  PumpingVectors pumping;
  bool causal = true;

  /// Builds a validated spec. The vacuum scalars are normalized from
  /// c_weights so that sum_mu(|z_mu|^2 + (N/2) ||w_mu||^2) = 1. Throws if the
  /// pumping vectors violate the kernel condition
  /// sum_mu K_mu^{(l) dagger} w_mu = 0, or, when `causal` is set, either of
  ///   sum_mu w_mu^i = 0,  sum_mu z_mu w_mu^i = 0   (i = 0, 1).
  static AutomatonSpec make(Topology topology, LocalChannelParams params,
                            std::array<double, 3> c_weights,
                            PumpingVectors pumping = {}, bool causal = true);
};

/// z_mu = c_mu * s with s chosen so sum_mu(|z_mu|^2 + (N/2)||w_mu||^2) = 1.
/// Throws if all weights vanish or the pumping norm alone reaches 1.
VacuumCoupling normalize_coupling(const std::array<double, 3>& c_weights,
                                  const PumpingVectors& pumping,
                                  std::size_t n_sites);

/// The one-parameter family of pumping vectors in the kernel of
/// sum_mu K_mu^{(l) dagger} w_mu, scaled by T/sqrt(3N):
///   w_0^0 = w_0^1 = -T/sqrt(3N) sqrt((xi/2)/(1-xi/2))
///   w_1^0 =  T/sqrt(3N) (1-sqrt(eta)),   w_1^1 = -T/sqrt(3N)
///   w_2^0 = w_2^1 = T/sqrt(3N) sqrt(xi/2) sqrt(1-eta)
/// Every component lies in [-T/sqrt(3N), T/sqrt(3N)]. Requires xi > 0 when
/// T > 0 (at xi = 0 the first component's kernel membership degenerates) and
/// eta in [0, 1).
PumpingVectors noise_vectors_T(double xi, double eta, double T,
                               std::size_t n_sites);

/// Global (N+1)-dimensional Kraus set of one layer: entry (0,0) holds z_mu,
/// column 0 the pumping vector, and the site block is block diagonal with
/// the local triple on the layer's neighborhoods. On open chains the odd
/// layer leaves sites 1 and N idle (scalar 1 in K0, 0 in K1/K2) and uses
/// vacuum weights (1,0,0) renormalized against the layer's pumping norm.
KrausSet assemble_global_kraus(const AutomatonSpec& spec, Layer layer);

struct ConstraintLine {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

/// Result of checking the structural constraint set of a spec.
struct CausalReport {
  std::vector<ConstraintLine> lines;
  /// All constraint lines hold to 1e-12 (trace preservation, kernel
  /// condition, pumping replication, and the two causality lines).
  bool class_constraints_ok = false;
  /// Pumping identically zero. Only then is the half-step reduced state of a
  /// site an exact function of its neighborhood's prior reduced state; a
  /// nonzero w shifts site populations by rho_00 sum_mu |w_mu^a|^2 even when
  /// the linear constraint lines above hold.
  bool strictly_causal = false;

  std::string to_string() const;
};

CausalReport check_causal_class(const AutomatonSpec& spec);

/// Max-norm of sum_mu [shift^2, K_mu] over both layers, where shift is the
/// one-site lattice translation extended by 1 on the vacuum. Rings only;
/// open chains drop global translational invariance and are rejected.
double check_translational_invariance(const AutomatonSpec& spec);

/// Operational causality probe over randomized trials.
struct CausalityCheckReport {
  std::size_t trials = 0;
  /// Largest max-norm difference of post-half-step single-site reduced
  /// states between global states agreeing on that site's neighborhood.
  double max_measured_difference = 0.0;
  /// Largest deviation between the measured difference matrix and the
  /// closed-form prediction
  ///   [[-(d rho_00) S2, (d rho_00) Sz], [conj, (d rho_00) S2]]
  /// with S2 = sum_mu |w_mu^a|^2 and Sz = sum_mu z_mu conj(w_mu^a).
  double max_prediction_error = 0.0;

  std::string to_string() const;
};

/// For each trial: pick a random neighborhood, build two random global
/// states that agree on its reduced state but differ in vacuum population,
/// apply the half step coupling that neighborhood, and compare the reduced
/// state of each of its sites against the analytic prediction.
CausalityCheckReport check_causality_operational(const AutomatonSpec& spec,
                                                 std::size_t trials,
                                                 std::uint64_t seed);

namespace detail {

/// Assembles one layer from explicit vacuum scalars and full pumping
/// columns (pumping_columns[mu] has length N). Exposed so tests can build
/// deliberately inhomogeneous operators; the public assembly replicates one
/// local vector over all neighborhoods.
KrausSet assemble_layer(
    const Topology& topology, const LocalChannelParams& params,
    const std::array<complexd, 3>& z,
    const std::array<std::vector<complexd>, 3>& pumping_columns, Layer layer);

/// Max-norm of sum_mu [shift^2, K_mu] for one assembled layer.
double shift2_commutator_residual(const KrausSet& kraus, std::size_t n_sites);

}  // namespace detail

}  // namespace qcat

#endif  // QCAT_AUTOMATON_H_
