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

#ifndef QCAT_CHANNELS_H_
#define QCAT_CHANNELS_H_

#include <array>
#include <vector>

#include "qcat/matrix.h"

namespace qcat {

/// Parameters of the local map acting on one two-site neighborhood.
///
/// p is the hop probability across the pair in the transfer direction, q the
/// return probability, with the convention p >= q. The amplitude-damping
/// strength is not an independent knob: the local channel is trace preserving
/// only for eta = p - q, so eta is always derived. xi in [0, 1] is the
/// dephasing strength, phi1/phi2 the two free phases of the local unitary.
struct LocalChannelParams {
  double p = 0.5;
  double q = 0.5;
  double xi = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  double eta() const { return p - q; }

  /// Validates ranges (0 <= q <= p <= 1, 0 <= xi <= 1) and normalizes the
  /// phases into [0, 2*pi). Throws std::invalid_argument otherwise.
  static LocalChannelParams make(double p, double q, double xi, double phi1,
                                 double phi2);
};

/// 2x2 column-stochastic matrix [[1-p, q], [p, 1-q]].
struct StochasticMatrix2 {
  std::array<std::array<double, 2>, 2> m{};

  std::array<double, 2> apply(const std::array<double, 2>& v) const {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
  }
};

/// Ordered set of same-dimension Kraus operators. Construction rejects sets
/// that are not trace preserving: sum_mu K_mu^dagger K_mu must equal the
/// identity within `tol`.
class KrausSet {
 public:
  static KrausSet make(std::vector<CMatrix> ops, double tol = 1e-12);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return ops_.size(); }
  const std::vector<CMatrix>& ops() const { return ops_; }
  const CMatrix& op(std::size_t i) const { return ops_[i]; }

  /// Max-norm of sum_mu K_mu^dagger K_mu - identity.
  double completeness_residual() const;

 private:
  KrausSet(std::vector<CMatrix> ops, std::size_t dim)
      : ops_(std::move(ops)), dim_(dim) {}

  std::vector<CMatrix> ops_;
  std::size_t dim_ = 0;
};

StochasticMatrix2 stochastic_matrix(double p, double q);

/// Dephasing channel, three operators:
///   D0 = sqrt(1-xi) * 1,  D1 = sqrt(xi) (1+sz)/2,  D2 = sqrt(xi) (sz-1)/2.
/// Diagonals are fixed; off-diagonal elements are scaled by (1 - xi), with
/// xi = 1 erasing them completely.
KrausSet dephasing_kraus(double xi);

/// Amplitude damping of strength |eta|, two operators. For eta >= 0 the
/// population of the second basis state decays into the first; negative eta
/// selects the sigma_x-conjugated ("swapped") channel draining the first
/// state into the second. Coherences are scaled by sqrt(1-|eta|).
KrausSet amplitude_damping_kraus(double eta);

/// The local two-site unitary expressed through the hop probabilities:
///   U = (1-eta)^{-1/2} [[sqrt(1-p),            sqrt(q) e^{i phi2}       ],
///                       [sqrt(q) e^{i phi1},  -sqrt(1-p) e^{i(phi1+phi2)}]].
/// Throws for p = 1, q = 0, where 1 - eta vanishes and no unitary exists.
CMatrix local_unitary(const LocalChannelParams& params);

/// The composed local channel {K0, K1, K2}: unitary, then dephasing (in its
/// two-operator representation), then the swapped amplitude damping of
/// strength eta = p - q. Entries are evaluated in algebraically cancelled
/// form so the q -> 0, p -> 1 corner stays finite.
KrausSet local_kraus_triple(const LocalChannelParams& params);

/// Excited-state population after the completely dephased embedded map on
/// the diagonal state diag(m, 1-m): returns (1 - p - q) m + q, which is the
/// first component of stochastic_matrix(p, q) applied to (m, 1-m).
double embedded_stochastic_action(const LocalChannelParams& params, double m);

/// rho -> sum_mu K_mu rho K_mu^dagger.
CMatrix apply_channel(const KrausSet& channel, const CMatrix& rho);

/// Kraus set of outer after inner (all pairwise products).
KrausSet compose_channels(const KrausSet& outer, const KrausSet& inner);

/// Choi matrix sum_mu vec(K_mu) vec(K_mu)^dagger with column-stacking vec;
/// positive semidefinite iff the map is completely positive.
CMatrix choi_matrix(const KrausSet& channel);

}  // namespace qcat

#endif  // QCAT_CHANNELS_H_
