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

#include "qcat/channels.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qcat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool in_unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

double wrap_phase(double phi) {
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("LocalChannelParams: phase is not finite");
  }
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  return w;
}

complexd phase(double phi) { return std::polar(1.0, phi); }

}  // namespace

LocalChannelParams LocalChannelParams::make(double p, double q, double xi,
                                            double phi1, double phi2) {
  if (!in_unit_interval(p) || !in_unit_interval(q)) {
    throw std::invalid_argument(
        "LocalChannelParams: p and q must lie in [0, 1]");
  }
  if (p < q) {
    throw std::invalid_argument(
        "LocalChannelParams: transfer convention requires p >= q");
  }
  if (!in_unit_interval(xi)) {
    throw std::invalid_argument("LocalChannelParams: xi must lie in [0, 1]");
  }
  return LocalChannelParams{p, q, xi, wrap_phase(phi1), wrap_phase(phi2)};
}

KrausSet KrausSet::make(std::vector<CMatrix> ops, double tol) {
  if (ops.empty()) {
    throw std::invalid_argument("KrausSet: no operators given");
  }
  const std::size_t dim = ops.front().rows();
  for (const CMatrix& k : ops) {
    if (k.rows() != dim || k.cols() != dim) {
      throw std::invalid_argument("KrausSet: operators differ in dimension");
    }
    if (!k.all_finite()) {
      throw std::invalid_argument("KrausSet: operator has non-finite entries");
    }
  }
  KrausSet set(std::move(ops), dim);
  const double residual = set.completeness_residual();
  if (residual > tol) {
    throw std::invalid_argument(
        "KrausSet: trace preservation violated, sum K^dagger K deviates "
        "from identity by " +
        std::to_string(residual));
  }
  return set;
}

double KrausSet::completeness_residual() const {
  CMatrix acc(dim_, dim_);
  for (const CMatrix& k : ops_) {
    acc = acc + matmul(dagger(k), k);
  }
  return max_abs_diff(acc, CMatrix::identity(dim_));
}

StochasticMatrix2 stochastic_matrix(double p, double q) {
  if (!in_unit_interval(p) || !in_unit_interval(q)) {
    throw std::invalid_argument("stochastic_matrix: p, q must lie in [0, 1]");
  }
  StochasticMatrix2 t;
  t.m[0][0] = 1.0 - p;
  t.m[0][1] = q;
  t.m[1][0] = p;
  t.m[1][1] = 1.0 - q;
  return t;
}

KrausSet dephasing_kraus(double xi) {
  if (!in_unit_interval(xi)) {
    throw std::invalid_argument("dephasing_kraus: xi must lie in [0, 1]");
  }
  const double s0 = std::sqrt(1.0 - xi);
  const double s1 = std::sqrt(xi);
  CMatrix d0 = CMatrix::from_rows({{s0, 0.0}, {0.0, s0}});
  CMatrix d1 = CMatrix::from_rows({{s1, 0.0}, {0.0, 0.0}});
  CMatrix d2 = CMatrix::from_rows({{0.0, 0.0}, {0.0, -s1}});
  return KrausSet::make({d0, d1, d2});
}

KrausSet amplitude_damping_kraus(double eta) {
  if (!std::isfinite(eta) || eta < -1.0 || eta > 1.0) {
    throw std::invalid_argument(
        "amplitude_damping_kraus: eta must lie in [-1, 1]");
  }
  const double a = std::abs(eta);
  const double keep = std::sqrt(1.0 - a);
  const double move = std::sqrt(a);
  if (eta >= 0.0) {
    // Population flows |2> -> |1>.
    CMatrix l0 = CMatrix::from_rows({{1.0, 0.0}, {0.0, keep}});
    CMatrix l1 = CMatrix::from_rows({{0.0, move}, {0.0, 0.0}});
    return KrausSet::make({l0, l1});
  }
  // Swapped channel, population flows |1> -> |2>.
  CMatrix l0 = CMatrix::from_rows({{keep, 0.0}, {0.0, 1.0}});
  CMatrix l1 = CMatrix::from_rows({{0.0, 0.0}, {move, 0.0}});
  return KrausSet::make({l0, l1});
}

CMatrix local_unitary(const LocalChannelParams& params) {
  const double denom = 1.0 - params.p + params.q;  // = 1 - eta
  if (denom <= 0.0) {
    throw std::invalid_argument(
        "local_unitary: no unitary exists at p = 1, q = 0 (1 - eta = 0)");
  }
  const double c = std::sqrt((1.0 - params.p) / denom);
  const double s = std::sqrt(params.q / denom);
  CMatrix u(2, 2);
  u(0, 0) = c;
  u(0, 1) = s * phase(params.phi2);
  u(1, 0) = s * phase(params.phi1);
  u(1, 1) = -c * phase(params.phi1 + params.phi2);
  return u;
}

KrausSet local_kraus_triple(const LocalChannelParams& params) {
  const double p = params.p;
  const double q = params.q;
  const double xi = params.xi;
  const double eta = params.eta();
  const double denom = 1.0 - p + q;  // = 1 - eta
  const double w0 = 1.0 - xi / 2.0;
  const double w1 = xi / 2.0;

  if (denom <= 0.0) {
    // p = 1, q = 0: the pure-damping corner. The cancelled forms below hit
    // 0/0 here, but the channel itself has a finite limit.
    const complexd e1 = phase(params.phi1);
    const complexd e2 = phase(params.phi2);
    CMatrix k0(2, 2), k1(2, 2), k2(2, 2);
    k0(1, 0) = std::sqrt(w0) * e1;
    k1(1, 0) = -std::sqrt(w1) * e1;
    k2(1, 1) = e2;
    return KrausSet::make({k0, k1, k2});
  }

  const complexd e1 = phase(params.phi1);
  const complexd e2 = phase(params.phi2);
  const complexd e12 = phase(params.phi1 + params.phi2);

  // Every entry is sqrt of a product of bounded ratios; nothing blows up as
  // eta -> 1 (q -> 0 with p = 1).
  auto entry = [&](double weight, double num) {
    return std::sqrt(weight * num / denom);
  };

  CMatrix k0(2, 2);
  k0(0, 0) = std::sqrt(w0 * (1.0 - p));
  k0(0, 1) = std::sqrt(w0 * q) * e2;
  k0(1, 0) = entry(w0, q) * e1;
  k0(1, 1) = -entry(w0, 1.0 - p) * e12;

  CMatrix k1(2, 2);
  k1(0, 0) = std::sqrt(w1 * (1.0 - p));
  k1(0, 1) = std::sqrt(w1 * q) * e2;
  k1(1, 0) = -entry(w1, q) * e1;
  k1(1, 1) = entry(w1, 1.0 - p) * e12;

  CMatrix k2(2, 2);
  k2(1, 0) = entry(eta, 1.0 - p);
  k2(1, 1) = entry(eta, q) * e2;

  return KrausSet::make({k0, k1, k2});
}

double embedded_stochastic_action(const LocalChannelParams& params, double m) {
  if (!in_unit_interval(m)) {
    throw std::invalid_argument(
        "embedded_stochastic_action: m must lie in [0, 1]");
  }
  return (1.0 - params.p - params.q) * m + params.q;
}

CMatrix apply_channel(const KrausSet& channel, const CMatrix& rho) {
  if (rho.rows() != channel.dim() || rho.cols() != channel.dim()) {
    throw std::invalid_argument("apply_channel: state dimension mismatch");
  }
  CMatrix out(channel.dim(), channel.dim());
  for (const CMatrix& k : channel.ops()) {
    out = out + matmul(matmul(k, rho), dagger(k));
  }
  return out;
}

KrausSet compose_channels(const KrausSet& outer, const KrausSet& inner) {
  if (outer.dim() != inner.dim()) {
    throw std::invalid_argument("compose_channels: dimension mismatch");
  }
  std::vector<CMatrix> ops;
  ops.reserve(outer.size() * inner.size());
  for (const CMatrix& a : outer.ops()) {
    for (const CMatrix& b : inner.ops()) {
      ops.push_back(matmul(a, b));
    }
  }
  return KrausSet::make(std::move(ops));
}

CMatrix choi_matrix(const KrausSet& channel) {
  const std::size_t d = channel.dim();
  CMatrix choi(d * d, d * d);
  std::vector<complexd> v(d * d);
  for (const CMatrix& k : channel.ops()) {
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t r = 0; r < d; ++r) {
        v[c * d + r] = k(r, c);
      }
    }
    for (std::size_t i = 0; i < d * d; ++i) {
      for (std::size_t j = 0; j < d * d; ++j) {
        choi(i, j) += v[i] * std::conj(v[j]);
      }
    }
  }
  return choi;
}

}  // namespace qcat
