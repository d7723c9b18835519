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

#include "qcat/automaton.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcat/rng.h"

namespace qcat {

namespace {

constexpr double kConstraintTol = 1e-12;

/// sum_mu K_mu^{(l) dagger} w_mu, the two-component kernel condition.
std::array<complexd, 2> kernel_sum(const LocalChannelParams& params,
                                   const PumpingVectors& pumping) {
  const KrausSet triple = local_kraus_triple(params);
  std::array<complexd, 2> acc{complexd{0.0, 0.0}, complexd{0.0, 0.0}};
  for (std::size_t mu = 0; mu < 3; ++mu) {
    const CMatrix kd = dagger(triple.op(mu));
    for (std::size_t r = 0; r < 2; ++r) {
      acc[r] += kd(r, 0) * pumping.w[mu][0] + kd(r, 1) * pumping.w[mu][1];
    }
  }
  return acc;
}

double kernel_residual(const LocalChannelParams& params,
                       const PumpingVectors& pumping) {
  const auto acc = kernel_sum(params, pumping);
  return std::max(std::abs(acc[0]), std::abs(acc[1]));
}

/// max_i |sum_mu w_mu^i|
double pumping_sum_residual(const PumpingVectors& pumping) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    complexd s{0.0, 0.0};
    for (std::size_t mu = 0; mu < 3; ++mu) s += pumping.w[mu][i];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

/// max_i |sum_mu z_mu w_mu^i|
double coupling_orthogonality_residual(const VacuumCoupling& coupling,
                                       const PumpingVectors& pumping) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    complexd s{0.0, 0.0};
    for (std::size_t mu = 0; mu < 3; ++mu) s += coupling.z[mu] * pumping.w[mu][i];
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

double normalization_residual(const VacuumCoupling& coupling,
                              const PumpingVectors& pumping,
                              std::size_t n_sites) {
  double total = 0.0;
  for (std::size_t mu = 0; mu < 3; ++mu) {
    total += std::norm(coupling.z[mu]);
  }
  total += 0.5 * static_cast<double>(n_sites) * pumping.local_norm_sq();
  return std::abs(total - 1.0);
}

CMatrix shift2_matrix(std::size_t n_sites) {
  CMatrix s(n_sites + 1, n_sites + 1);
  s(0, 0) = 1.0;
  for (std::size_t n = 1; n <= n_sites; ++n) {
    const std::size_t m = ((n - 1 + 2) % n_sites) + 1;
    s(m, n) = 1.0;
  }
  return s;
}

/// [[sum_{l != x} rho_ll, rho_0x], [rho_x0, rho_xx]]
CMatrix site_reduction(const CMatrix& rho, std::size_t x) {
  CMatrix out(2, 2);
  complexd rest{0.0, 0.0};
  for (std::size_t l = 0; l < rho.rows(); ++l) {
    if (l != x) rest += rho(l, l);
  }
  out(0, 0) = rest;
  out(0, 1) = rho(0, x);
  out(1, 0) = rho(x, 0);
  out(1, 1) = rho(x, x);
  return out;
}

}  // namespace

Topology Topology::chain(std::size_t n) {
  Topology t{n, Boundary::open_chain};
  t.validate();
  return t;
}

Topology Topology::ring(std::size_t n) {
  Topology t{n, Boundary::ring};
  t.validate();
  return t;
}

void Topology::validate() const {
  if (n_sites < 4 || n_sites % 2 != 0) {
    throw std::invalid_argument(
        "Topology: lattice size must be even and at least 4");
  }
}

std::vector<std::pair<std::size_t, std::size_t>> layer_neighborhoods(
    const Topology& topology, Layer layer) {
  topology.validate();
  const std::size_t n = topology.n_sites;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (layer == Layer::even) {
    for (std::size_t a = 1; a + 1 <= n; a += 2) pairs.emplace_back(a, a + 1);
  } else {
    for (std::size_t a = 2; a + 1 <= n; a += 2) pairs.emplace_back(a, a + 1);
    if (topology.is_ring()) pairs.emplace_back(n, 1);
  }
  return pairs;
}

bool PumpingVectors::is_zero(double tol) const {
  for (const auto& wmu : w) {
    for (const complexd& c : wmu) {
      if (std::abs(c) > tol) return false;
    }
  }
  return true;
}

double PumpingVectors::local_norm_sq() const {
  double total = 0.0;
  for (const auto& wmu : w) {
    for (const complexd& c : wmu) total += std::norm(c);
  }
  return total;
}

VacuumCoupling normalize_coupling(const std::array<double, 3>& c_weights,
                                  const PumpingVectors& pumping,
                                  std::size_t n_sites) {
  double weight_sq = 0.0;
  for (double c : c_weights) {
    if (!std::isfinite(c) || c < 0.0) {
      throw std::invalid_argument(
          "normalize_coupling: weights must be nonnegative");
    }
    weight_sq += c * c;
  }
  if (weight_sq == 0.0) {
    throw std::invalid_argument("normalize_coupling: all weights are zero");
  }
  const double pump_norm =
      0.5 * static_cast<double>(n_sites) * pumping.local_norm_sq();
  if (pump_norm >= 1.0) {
    throw std::invalid_argument(
        "normalize_coupling: pumping norm alone reaches 1, no vacuum weight "
        "left");
  }
  const double s = std::sqrt((1.0 - pump_norm) / weight_sq);
  VacuumCoupling out;
  out.c_weights = c_weights;
  for (std::size_t mu = 0; mu < 3; ++mu) out.z[mu] = c_weights[mu] * s;
  return out;
}

PumpingVectors noise_vectors_T(double xi, double eta, double T,
                               std::size_t n_sites) {
  if (!std::isfinite(T) || T < 0.0) {
    throw std::invalid_argument("noise_vectors_T: T must be nonnegative");
  }
  PumpingVectors out;
  if (T == 0.0) return out;
  if (!(xi > 0.0) || xi > 1.0) {
    throw std::invalid_argument(
        "noise_vectors_T: requires 0 < xi <= 1 when T > 0");
  }
  if (!(eta >= 0.0) || eta >= 1.0) {
    throw std::invalid_argument("noise_vectors_T: requires 0 <= eta < 1");
  }
  const double s = T / std::sqrt(3.0 * static_cast<double>(n_sites));
  const double half = xi / 2.0;
  out.w[0][0] = out.w[0][1] = -s * std::sqrt(half / (1.0 - half));
  out.w[1][0] = s * (1.0 - std::sqrt(eta));
  out.w[1][1] = -s;
  out.w[2][0] = out.w[2][1] = s * std::sqrt(half) * std::sqrt(1.0 - eta);
  return out;
}

AutomatonSpec AutomatonSpec::make(Topology topology, LocalChannelParams params,
                                  std::array<double, 3> c_weights,
                                  PumpingVectors pumping, bool causal) {
  topology.validate();
  AutomatonSpec spec;
  spec.topology = topology;
  spec.params = params;
  spec.pumping = pumping;
  spec.coupling = normalize_coupling(c_weights, pumping, topology.n_sites);
  spec.causal = causal;

  if (!pumping.is_zero()) {
    const double kr = kernel_residual(params, pumping);
    if (kr > kConstraintTol) {
      throw std::invalid_argument(
          "AutomatonSpec: pumping kernel condition violated, "
          "sum_mu K_mu^dagger w_mu has norm " +
          std::to_string(kr));
    }
  }
  if (causal) {
    const double sum_res = pumping_sum_residual(pumping);
    if (sum_res > kConstraintTol) {
      throw std::invalid_argument(
          "AutomatonSpec: causality requires sum_mu w_mu = 0, residual " +
          std::to_string(sum_res));
    }
    const double orth_res =
        coupling_orthogonality_residual(spec.coupling, pumping);
    if (orth_res > kConstraintTol) {
      throw std::invalid_argument(
          "AutomatonSpec: causality requires sum_mu z_mu w_mu = 0, residual " +
          std::to_string(orth_res));
    }
  }
  return spec;
}

namespace detail {

KrausSet assemble_layer(
    const Topology& topology, const LocalChannelParams& params,
    const std::array<complexd, 3>& z,
    const std::array<std::vector<complexd>, 3>& pumping_columns, Layer layer) {
  const std::size_t n = topology.n_sites;
  for (const auto& col : pumping_columns) {
    if (col.size() != n) {
      throw std::invalid_argument(
          "assemble_layer: pumping column has wrong length");
    }
  }
  const KrausSet triple = local_kraus_triple(params);
  const auto pairs = layer_neighborhoods(topology, layer);
  const bool chain_odd = layer == Layer::odd && !topology.is_ring();

  std::vector<CMatrix> ops;
  ops.reserve(3);
  for (std::size_t mu = 0; mu < 3; ++mu) {
    CMatrix k(n + 1, n + 1);
    k(0, 0) = z[mu];
    for (std::size_t site = 1; site <= n; ++site) {
      k(site, 0) = pumping_columns[mu][site - 1];
    }
    const CMatrix& local = triple.op(mu);
    for (const auto& [a, b] : pairs) {
      k(a, a) = local(0, 0);
      k(a, b) = local(0, 1);
      k(b, a) = local(1, 0);
      k(b, b) = local(1, 1);
    }
    if (chain_odd) {
      // Idle boundary sites carry plain scalars: 1 in the first operator,
      // 0 elsewhere, so the layer stays trace preserving.
      const complexd scalar = mu == 0 ? complexd{1.0, 0.0} : complexd{0.0, 0.0};
      k(1, 1) = scalar;
      k(n, n) = scalar;
    }
    ops.push_back(std::move(k));
  }
  return KrausSet::make(std::move(ops));
}

double shift2_commutator_residual(const KrausSet& kraus, std::size_t n_sites) {
  if (kraus.dim() != n_sites + 1) {
    throw std::invalid_argument(
        "shift2_commutator_residual: dimension mismatch");
  }
  const CMatrix s = shift2_matrix(n_sites);
  CMatrix acc(n_sites + 1, n_sites + 1);
  for (const CMatrix& k : kraus.ops()) {
    acc = acc + (matmul(s, k) - matmul(k, s));
  }
  return max_abs(acc);
}

}  // namespace detail

KrausSet assemble_global_kraus(const AutomatonSpec& spec, Layer layer) {
  spec.topology.validate();
  const std::size_t n = spec.topology.n_sites;
  const auto pairs = layer_neighborhoods(spec.topology, layer);
  const bool chain_odd = layer == Layer::odd && !spec.topology.is_ring();

  if (!spec.pumping.is_zero()) {
    const double kr = kernel_residual(spec.params, spec.pumping);
    if (kr > kConstraintTol) {
      throw std::invalid_argument(
          "assemble_global_kraus: pumping kernel condition violated, "
          "residual " +
          std::to_string(kr));
    }
    if (spec.causal) {
      if (pumping_sum_residual(spec.pumping) > kConstraintTol ||
          coupling_orthogonality_residual(spec.coupling, spec.pumping) >
              kConstraintTol) {
        throw std::invalid_argument(
            "assemble_global_kraus: causality constraints on (z, w) "
            "violated");
      }
    }
  }

  std::array<complexd, 3> z;
  if (chain_odd) {
    // Boundary sites drop one neighborhood, so the vacuum weight is pinned
    // to the first operator and renormalized against this layer's pumping.
    const double pump_norm = static_cast<double>(pairs.size()) *
                             spec.pumping.local_norm_sq();
    if (pump_norm >= 1.0) {
      throw std::invalid_argument(
          "assemble_global_kraus: pumping norm alone reaches 1 on the odd "
          "chain layer");
    }
    z = {complexd{std::sqrt(1.0 - pump_norm), 0.0}, complexd{0.0, 0.0},
         complexd{0.0, 0.0}};
  } else {
    z = spec.coupling.z;
    double total = 0.0;
    for (std::size_t mu = 0; mu < 3; ++mu) total += std::norm(z[mu]);
    total += static_cast<double>(pairs.size()) * spec.pumping.local_norm_sq();
    if (std::abs(total - 1.0) > kConstraintTol) {
      throw std::invalid_argument(
          "assemble_global_kraus: vacuum-coupling normalization violated, "
          "sum_mu(|z_mu|^2 + (N/2)||w_mu||^2) deviates from 1 by " +
          std::to_string(std::abs(total - 1.0)));
    }
  }

  std::array<std::vector<complexd>, 3> columns;
  for (std::size_t mu = 0; mu < 3; ++mu) {
    columns[mu].assign(n, complexd{0.0, 0.0});
    for (const auto& [a, b] : pairs) {
      columns[mu][a - 1] = spec.pumping.w[mu][0];
      columns[mu][b - 1] = spec.pumping.w[mu][1];
    }
  }
  return detail::assemble_layer(spec.topology, spec.params, z, columns, layer);
}

CausalReport check_causal_class(const AutomatonSpec& spec) {
  CausalReport report;
  auto add = [&](const std::string& name, double residual) {
    report.lines.push_back(
        {name, residual, residual <= kConstraintTol});
  };

  add("local trace preservation",
      local_kraus_triple(spec.params).completeness_residual());
  // The representation replicates one local vector per operator over all
  // neighborhoods and has no dissipation entries, so these two lines hold
  // structurally.
  add("pumping replication", 0.0);
  add("dissipation vectors vanish", 0.0);
  add("vacuum-coupling normalization",
      normalization_residual(spec.coupling, spec.pumping,
                             spec.topology.n_sites));
  add("pumping kernel condition", kernel_residual(spec.params, spec.pumping));
  add("pumping component sums (causality)",
      pumping_sum_residual(spec.pumping));
  add("vacuum-pumping orthogonality (causality)",
      coupling_orthogonality_residual(spec.coupling, spec.pumping));

  report.class_constraints_ok = true;
  for (const ConstraintLine& line : report.lines) {
    report.class_constraints_ok = report.class_constraints_ok && line.pass;
  }
  report.strictly_causal = spec.pumping.is_zero(1e-15);
  return report;
}

std::string CausalReport::to_string() const {
  std::ostringstream os;
  for (const ConstraintLine& line : lines) {
    os << (line.pass ? "  [ok]   " : "  [FAIL] ") << line.name
       << "  residual = " << line.residual << "\n";
  }
  os << (class_constraints_ok ? "constraint class: satisfied"
                              : "constraint class: violated")
     << "\n";
  os << (strictly_causal
             ? "strict causality: pumping off, half-step reduced states are "
               "neighborhood-local"
             : "strict causality: pumping active, site populations acquire a "
               "vacuum-dependent shift")
     << "\n";
  return os.str();
}

double check_translational_invariance(const AutomatonSpec& spec) {
  if (!spec.topology.is_ring()) {
    throw std::invalid_argument(
        "check_translational_invariance: open chains drop global "
        "translational invariance; rings only");
  }
  double worst = 0.0;
  for (Layer layer : {Layer::even, Layer::odd}) {
    const KrausSet kraus = assemble_global_kraus(spec, layer);
    worst = std::max(
        worst, detail::shift2_commutator_residual(kraus, spec.topology.n_sites));
  }
  return worst;
}

std::string CausalityCheckReport::to_string() const {
  std::ostringstream os;
  os << "trials: " << trials
     << "  max measured reduced-state difference: " << max_measured_difference
     << "  max deviation from analytic prediction: " << max_prediction_error;
  return os.str();
}

CausalityCheckReport check_causality_operational(const AutomatonSpec& spec,
                                                 std::size_t trials,
                                                 std::uint64_t seed) {
  if (trials < 1) {
    throw std::invalid_argument("check_causality_operational: trials >= 1");
  }
  const std::size_t n = spec.topology.n_sites;
  const std::size_t dim = n + 1;
  const KrausSet even = assemble_global_kraus(spec, Layer::even);
  const KrausSet odd = assemble_global_kraus(spec, Layer::odd);
  const auto even_pairs = layer_neighborhoods(spec.topology, Layer::even);
  const auto odd_pairs = layer_neighborhoods(spec.topology, Layer::odd);

  CausalityCheckReport report;
  report.trials = trials;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial);
    const bool use_even = rng.next_index(2) == 0;
    const auto& pairs = use_even ? even_pairs : odd_pairs;
    const KrausSet& kraus = use_even ? even : odd;
    const auto [a, b] = pairs[rng.next_index(pairs.size())];

    // Random pure state shared by both sides, plus a population delta that
    // sits on the vacuum in one state and on a spectator site in the other.
    // Both global states then have identical neighborhood reduced states.
    std::vector<complexd> psi(dim);
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      psi[i] = complexd{rng.next_symmetric(), rng.next_symmetric()};
      norm_sq += std::norm(psi[i]);
    }
    if (norm_sq < 1e-12) {
      psi.assign(dim, complexd{0.0, 0.0});
      psi[0] = 1.0;
      norm_sq = 1.0;
    }
    const double delta = 0.05 + 0.2 * rng.next_unit();
    std::size_t spectator = 1 + rng.next_index(n);
    while (spectator == a || spectator == b) {
      spectator = 1 + rng.next_index(n);
    }

    CMatrix rho_vac(dim, dim);
    CMatrix rho_site(dim, dim);
    const double scale = (1.0 - delta) / norm_sq;
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const complexd v = scale * psi[i] * std::conj(psi[j]);
        rho_vac(i, j) = v;
        rho_site(i, j) = v;
      }
    }
    rho_vac(0, 0) += delta;
    rho_site(spectator, spectator) += delta;

    const CMatrix out_vac = apply_channel(kraus, rho_vac);
    const CMatrix out_site = apply_channel(kraus, rho_site);

    for (const std::size_t x : {a, b}) {
      const CMatrix measured =
          site_reduction(out_vac, x) - site_reduction(out_site, x);

      // Closed-form difference: only the vacuum populations differ, and they
      // enter the new site reduced state through the pumping column.
      complexd s2{0.0, 0.0};
      complexd sz{0.0, 0.0};
      for (std::size_t mu = 0; mu < 3; ++mu) {
        const complexd w_comp = kraus.op(mu)(x, 0);
        s2 += w_comp * std::conj(w_comp);
        sz += kraus.op(mu)(0, 0) * std::conj(w_comp);
      }
      CMatrix predicted(2, 2);
      predicted(0, 0) = -delta * s2;
      predicted(0, 1) = delta * sz;
      predicted(1, 0) = std::conj(predicted(0, 1));
      predicted(1, 1) = delta * s2;

      report.max_measured_difference =
          std::max(report.max_measured_difference, max_abs(measured));
      report.max_prediction_error = std::max(
          report.max_prediction_error, max_abs_diff(measured, predicted));
    }
  }
  return report;
}

}  // namespace qcat
