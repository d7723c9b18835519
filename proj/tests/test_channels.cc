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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "oracles.h"
#include "qcat/channels.h"

using qcat::CMatrix;
using qcat::complexd;
using qcat::KrausSet;
using qcat::LocalChannelParams;
using qcat::TrialRng;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix diag2(double a, double b) {
  return CMatrix::from_rows({{a, 0.0}, {0.0, b}});
}

LocalChannelParams params(double p, double q, double xi = 0.0,
                          double phi1 = 0.0, double phi2 = 0.0) {
  return LocalChannelParams::make(p, q, xi, phi1, phi2);
}

/// Channel as the map rho -> sum K rho K^dagger on a basis of inputs.
bool channels_agree(const KrausSet& a, const KrausSet& b, double tol) {
  return qcat::max_abs_diff(qcat::choi_matrix(a), qcat::choi_matrix(b)) < tol;
}

std::vector<std::pair<double, double>> pq_grid() {
  std::vector<std::pair<double, double>> grid;
  for (int pi = 0; pi <= 10; ++pi) {
    for (int qi = 0; qi <= pi; ++qi) {
      grid.emplace_back(pi / 10.0, qi / 10.0);
    }
  }
  return grid;
}

}  // namespace

TEST_CASE("stochastic matrix entries") {
  const auto t = qcat::stochastic_matrix(0.3, 0.1);
  CHECK(t.m[0][0] == doctest::Approx(0.7));
  CHECK(t.m[0][1] == doctest::Approx(0.1));
  CHECK(t.m[1][0] == doctest::Approx(0.3));
  CHECK(t.m[1][1] == doctest::Approx(0.9));

  const auto id = qcat::stochastic_matrix(0.0, 0.0);
  CHECK(id.m[0][0] == 1.0);
  CHECK(id.m[1][1] == 1.0);

  const auto swap = qcat::stochastic_matrix(1.0, 1.0);
  CHECK(swap.m[0][0] == 0.0);
  CHECK(swap.m[0][1] == 1.0);

  const auto v = t.apply({1.0, 0.0});
  CHECK(v[0] == doctest::Approx(0.7));
  CHECK(v[1] == doctest::Approx(0.3));

  CHECK_THROWS_AS(qcat::stochastic_matrix(1.2, 0.0), std::invalid_argument);
}

TEST_CASE("dephasing at xi=0 is the identity map") {
  TrialRng rng(21, 0);
  const CMatrix rho = qcat::testing::random_density(rng, 2);
  const CMatrix out = qcat::apply_channel(qcat::dephasing_kraus(0.0), rho);
  CHECK(qcat::max_abs_diff(out, rho) < 1e-15);
}

TEST_CASE("total dephasing erases off-diagonal elements") {
  const CMatrix rho =
      CMatrix::from_rows({{0.4, complexd{0.2, 0.3}}, {complexd{0.2, -0.3}, 0.6}});
  const CMatrix out = qcat::apply_channel(qcat::dephasing_kraus(1.0), rho);
  CHECK(qcat::max_abs_diff(out, diag2(0.4, 0.6)) < 1e-15);
}

TEST_CASE("dephasing scales coherences by 1 - xi") {
  // The three-operator set is D0 = sqrt(1-xi) 1, D1 = sqrt(xi) diag(1,0),
  // D2 = sqrt(xi) diag(0,-1); only D0 reaches the off-diagonal, so an
  // off-diagonal element picks up exactly (1 - xi). At xi = 0.36 that is
  // 0.64.
  const double xi = 0.36;
  const KrausSet deph = qcat::dephasing_kraus(xi);
  CHECK(qcat::max_abs_diff(deph.op(0), diag2(0.8, 0.8)) < 1e-15);
  CHECK(qcat::max_abs_diff(deph.op(1), diag2(0.6, 0.0)) < 1e-15);
  CHECK(qcat::max_abs_diff(deph.op(2), diag2(0.0, -0.6)) < 1e-15);

  // Unit off-diagonal input makes the damping factor directly visible.
  const CMatrix rho = CMatrix::from_rows({{0.5, 1.0}, {1.0, 0.5}});
  const CMatrix out = qcat::apply_channel(deph, rho);
  CHECK(out(0, 1).real() == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(out(0, 0).real() == doctest::Approx(0.5));
  CHECK_THROWS_AS(qcat::dephasing_kraus(1.5), std::invalid_argument);
}

TEST_CASE("amplitude damping moves population and damps coherences") {
  TrialRng rng(22, 0);
  const CMatrix rho = qcat::testing::random_density(rng, 2);
  CHECK(qcat::max_abs_diff(
            qcat::apply_channel(qcat::amplitude_damping_kraus(0.0), rho),
            rho) < 1e-15);

  // Full decay of the second state's population.
  CHECK(qcat::max_abs_diff(
            qcat::apply_channel(qcat::amplitude_damping_kraus(1.0),
                                diag2(0.0, 1.0)),
            diag2(1.0, 0.0)) < 1e-15);

  // eta = 0.5 moves half the population; computed by direct Kraus
  // application: L0 diag(0,1) L0^dag = diag(0, 0.5), L1 ... = diag(0.5, 0).
  CHECK(qcat::max_abs_diff(
            qcat::apply_channel(qcat::amplitude_damping_kraus(0.5),
                                diag2(0.0, 1.0)),
            diag2(0.5, 0.5)) < 1e-15);

  // Swapped channel drains the first state instead.
  CHECK(qcat::max_abs_diff(
            qcat::apply_channel(qcat::amplitude_damping_kraus(-0.5),
                                diag2(1.0, 0.0)),
            diag2(0.5, 0.5)) < 1e-15);

  const CMatrix coh = CMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  const CMatrix out = qcat::apply_channel(qcat::amplitude_damping_kraus(0.19), coh);
  CHECK(out(0, 1).real() == doctest::Approx(0.5 * std::sqrt(0.81)));

  CHECK_THROWS_AS(qcat::amplitude_damping_kraus(1.5), std::invalid_argument);
}

TEST_CASE("local unitary special values") {
  // p = q = 0.5, no phases: the Hadamard.
  const CMatrix u = qcat::local_unitary(params(0.5, 0.5));
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(qcat::max_abs_diff(
            u, CMatrix::from_rows({{r, r}, {r, -r}})) < 1e-15);

  // p = q = 1: a plain swap.
  const CMatrix swap = qcat::local_unitary(params(1.0, 1.0));
  CHECK(qcat::max_abs_diff(
            swap, CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})) < 1e-15);
}

TEST_CASE("local unitary is unitary across the parameter range") {
  TrialRng rng(23, 0);
  for (const auto& [p, q] : pq_grid()) {
    if (p == 1.0 && q == 0.0) continue;
    const auto prm = params(p, q, 0.0, 2.0 * kPi * rng.next_unit(),
                            2.0 * kPi * rng.next_unit());
    const CMatrix u = qcat::local_unitary(prm);
    CHECK(qcat::max_abs_diff(qcat::matmul(qcat::dagger(u), u),
                             CMatrix::identity(2)) < 1e-12);
  }
  CHECK_THROWS_AS(qcat::local_unitary(params(1.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("unitary mixing angle matches the hop probabilities") {
  // cos(2 theta) must come out as (1-p-q)/(1-|q-p|) when theta is read off
  // the (0,0) entry of the unitary.
  for (const auto& [p, q] : pq_grid()) {
    if (p == 1.0 && q == 0.0) continue;
    if (p == 1.0 && q == 1.0) continue;  // theta = pi/2 edge; cos2theta = -1
    const CMatrix u = qcat::local_unitary(params(p, q));
    const double theta = std::acos(std::abs(u(0, 0)));
    const double expected = (1.0 - p - q) / (1.0 - std::abs(q - p));
    CHECK(std::cos(2.0 * theta) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("purely unitary parameters collapse the triple to the unitary") {
  const auto prm = params(0.5, 0.5, 0.0, 0.3, 1.7);
  const KrausSet triple = qcat::local_kraus_triple(prm);
  CHECK(qcat::max_abs(triple.op(1)) == 0.0);
  CHECK(qcat::max_abs(triple.op(2)) == 0.0);
  CHECK(qcat::max_abs_diff(triple.op(0), qcat::local_unitary(prm)) < 1e-15);
}

TEST_CASE("triple is complete across the parameter grid") {
  for (const auto& [p, q] : pq_grid()) {
    for (double xi : {0.0, 0.3, 1.0}) {
      const KrausSet triple =
          qcat::local_kraus_triple(params(p, q, xi, 0.4, 2.2));
      CHECK(triple.completeness_residual() < 1e-12);
    }
  }
}

TEST_CASE("triple stays finite in the strong-damping corner") {
  const KrausSet triple = qcat::local_kraus_triple(params(1.0, 5e-3));
  for (const CMatrix& k : triple.ops()) CHECK(k.all_finite());
  CHECK(triple.completeness_residual() < 1e-12);

  // Exact p = 1, q = 0 has a finite limiting channel as well.
  const KrausSet corner = qcat::local_kraus_triple(params(1.0, 0.0));
  CHECK(corner.completeness_residual() < 1e-12);
  const CMatrix out = qcat::apply_channel(corner, diag2(1.0, 0.0));
  CHECK(qcat::max_abs_diff(out, diag2(0.0, 1.0)) < 1e-15);
}

TEST_CASE("triple equals damping after dephasing after the unitary") {
  // The three printed operators are a compact representation of
  // (swapped amplitude damping, strength p-q) o (dephasing xi) o U.
  TrialRng rng(24, 0);
  for (int draw = 0; draw < 30; ++draw) {
    const double p = rng.next_unit();
    const double q = p * rng.next_unit();
    const double xi = rng.next_unit();
    const auto prm = params(p, q, xi, 2.0 * kPi * rng.next_unit(),
                            2.0 * kPi * rng.next_unit());
    if (1.0 - prm.p + prm.q <= 1e-12) continue;
    const KrausSet triple = qcat::local_kraus_triple(prm);
    const KrausSet unitary = KrausSet::make({qcat::local_unitary(prm)});
    const KrausSet composed = qcat::compose_channels(
        qcat::amplitude_damping_kraus(-prm.eta()),
        qcat::compose_channels(qcat::dephasing_kraus(prm.xi), unitary));
    CHECK(channels_agree(triple, composed, 1e-12));
  }
}

TEST_CASE("embedded stochastic action") {
  CHECK(qcat::embedded_stochastic_action(params(0.0, 0.0), 0.37) ==
        doctest::Approx(0.37));
  CHECK(qcat::embedded_stochastic_action(params(0.8, 0.2), 1.0) ==
        doctest::Approx(1.0 - 0.8));
  CHECK(qcat::embedded_stochastic_action(params(0.6, 0.2), 0.5) ==
        doctest::Approx(0.3));
  CHECK_THROWS_AS(qcat::embedded_stochastic_action(params(0.5, 0.5), 1.2),
                  std::invalid_argument);
}

TEST_CASE("doubly stochastic case: dephased unitary reproduces T_{p,p}") {
  for (double p : {0.0, 0.2, 0.5, 0.8, 1.0}) {
    const auto prm = params(p, p, 0.0, 1.1, 0.7);
    const CMatrix u = qcat::local_unitary(prm);
    const KrausSet total_dephasing = qcat::dephasing_kraus(1.0);
    for (double m : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const CMatrix rotated =
          qcat::matmul(qcat::matmul(u, diag2(m, 1.0 - m)), qcat::dagger(u));
      const CMatrix out = qcat::apply_channel(total_dephasing, rotated);
      const auto v = qcat::stochastic_matrix(p, p).apply({m, 1.0 - m});
      CHECK(std::abs(out(0, 0).real() - v[0]) < 1e-13);
      CHECK(std::abs(out(1, 1).real() - v[1]) < 1e-13);
    }
  }
}

TEST_CASE("general case: damped dephased unitary reproduces T_{p,q}") {
  for (const auto& [p, q] : pq_grid()) {
    if (p == 1.0 && q == 0.0) continue;
    const auto prm = params(p, q, 0.0, 0.9, 2.3);
    const CMatrix u = qcat::local_unitary(prm);
    const KrausSet damping = qcat::amplitude_damping_kraus(-prm.eta());
    const KrausSet total_dephasing = qcat::dephasing_kraus(1.0);
    for (double m : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const CMatrix rotated =
          qcat::matmul(qcat::matmul(u, diag2(m, 1.0 - m)), qcat::dagger(u));
      const CMatrix out =
          qcat::apply_channel(damping, qcat::apply_channel(total_dephasing, rotated));
      const double expected = qcat::embedded_stochastic_action(prm, m);
      CHECK(std::abs(out(0, 0).real() - expected) < 1e-13);
      const auto v = qcat::stochastic_matrix(p, q).apply({m, 1.0 - m});
      CHECK(std::abs(out(0, 0).real() - v[0]) < 1e-13);
    }
  }
}

TEST_CASE("embedded action matches the full composed channel on diagonals") {
  const auto prm = params(0.6, 0.2, 1.0, 0.5, 1.9);
  const KrausSet triple = qcat::local_kraus_triple(prm);
  for (double m : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    const CMatrix out = qcat::apply_channel(triple, diag2(m, 1.0 - m));
    CHECK(std::abs(out(0, 0).real() -
                   qcat::embedded_stochastic_action(prm, m)) < 1e-13);
  }
}

TEST_CASE("total dephasing makes the triple a classical map") {
  TrialRng rng(25, 0);
  for (const auto& [p, q] : pq_grid()) {
    const auto prm = params(p, q, 1.0, 1.3, 0.2);
    const KrausSet triple = qcat::local_kraus_triple(prm);

    // No output coherence survives, whatever the input.
    const CMatrix rho = qcat::testing::random_density(rng, 2);
    const CMatrix out = qcat::apply_channel(triple, rho);
    CHECK(std::abs(out(0, 1)) < 1e-13);
    CHECK(std::abs(out(1, 0)) < 1e-13);

    // Diagonal inputs evolve by the stochastic matrix.
    for (double m : {0.0, 0.5, 1.0}) {
      const CMatrix dout = qcat::apply_channel(triple, diag2(m, 1.0 - m));
      const auto v = qcat::stochastic_matrix(p, q).apply({m, 1.0 - m});
      CHECK(std::abs(dout(0, 0).real() - v[0]) < 1e-13);
      CHECK(std::abs(dout(1, 1).real() - v[1]) < 1e-13);
    }
  }
}

TEST_CASE("every constructed set is trace preserving and completely positive") {
  TrialRng rng(26, 0);
  std::vector<KrausSet> sets;
  sets.push_back(qcat::dephasing_kraus(0.3));
  sets.push_back(qcat::amplitude_damping_kraus(0.7));
  sets.push_back(qcat::amplitude_damping_kraus(-0.4));
  for (int draw = 0; draw < 10; ++draw) {
    const double p = rng.next_unit();
    const double q = p * rng.next_unit();
    sets.push_back(qcat::local_kraus_triple(
        params(p, q, rng.next_unit(), 2.0 * kPi * rng.next_unit(),
               2.0 * kPi * rng.next_unit())));
  }
  for (const KrausSet& set : sets) {
    CHECK(set.completeness_residual() < 1e-12);
    CHECK(qcat::min_hermitian_eigenvalue(qcat::choi_matrix(set)) > -1e-9);
  }
}

TEST_CASE("kraus sets reject incomplete operator collections") {
  // {I/2} alone is not trace preserving.
  CHECK_THROWS_WITH_AS(
      KrausSet::make({complexd{0.5, 0.0} * CMatrix::identity(2)}),
      doctest::Contains("trace preservation"), std::invalid_argument);
  CHECK_THROWS_AS(KrausSet::make({}), std::invalid_argument);
  CHECK_THROWS_AS(KrausSet::make({CMatrix::identity(2), CMatrix::identity(3)}),
                  std::invalid_argument);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(params(0.3, 0.5), std::invalid_argument);  // p < q
  CHECK_THROWS_AS(params(1.2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(params(0.5, 0.2, 1.4), std::invalid_argument);
  // Phases are wrapped into [0, 2 pi).
  const auto prm = params(0.5, 0.2, 0.0, -kPi, 5.0 * kPi);
  CHECK(prm.phi1 == doctest::Approx(kPi));
  CHECK(prm.phi2 == doctest::Approx(kPi));
}
