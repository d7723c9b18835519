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
#include <stdexcept>

#include "qcat/classical.h"
#include "qcat/rng.h"

using qcat::classical::markov_step;
using qcat::classical::pair_layer;
using qcat::classical::ProbVector;
using qcat::classical::WalkLayer;

namespace {

ProbVector delta(std::size_t n_sites, std::size_t site) {
  ProbVector v(n_sites + 1, 0.0);
  v[site] = 1.0;
  return v;
}

double total(const ProbVector& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("zero hop probabilities leave the distribution unchanged") {
  const ProbVector v = {0.2, 0.3, 0.1, 0.25, 0.15};
  const ProbVector out = markov_step(v, 0.0, 0.0, false);
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(out[i] == doctest::Approx(v[i]));
  }
}

TEST_CASE("deterministic hopping on a ring advances two sites per step") {
  // Even layer swaps (1,2), odd layer swaps (2,3): site 1 -> 3.
  ProbVector v = delta(4, 1);
  v = markov_step(v, 1.0, 1.0, true);
  CHECK(v[3] == doctest::Approx(1.0));
  // And onward around the ring: 3 -> 4 -> 1.
  v = markov_step(v, 1.0, 1.0, true);
  CHECK(v[1] == doctest::Approx(1.0));
}

TEST_CASE("single even layer splits a site-1 excitation evenly at p=q=1/2") {
  const ProbVector out =
      pair_layer(delta(4, 1), 0.5, 0.5, false, WalkLayer::even);
  CHECK(out[0] == doctest::Approx(0.0));
  CHECK(out[1] == doctest::Approx(0.5));
  CHECK(out[2] == doctest::Approx(0.5));
  CHECK(out[3] == doctest::Approx(0.0));
  CHECK(out[4] == doctest::Approx(0.0));
}

TEST_CASE("chain boundary sites idle in the odd layer") {
  const ProbVector out =
      pair_layer(delta(4, 1), 1.0, 1.0, false, WalkLayer::odd);
  CHECK(out[1] == doctest::Approx(1.0));
  const ProbVector out_n =
      pair_layer(delta(4, 4), 1.0, 1.0, false, WalkLayer::odd);
  CHECK(out_n[4] == doctest::Approx(1.0));
}

TEST_CASE("no-excitation probability never moves") {
  ProbVector v = {0.4, 0.6, 0.0, 0.0, 0.0, 0.0, 0.0};
  for (int t = 0; t < 20; ++t) {
    v = markov_step(v, 0.8, 0.3, true);
    CHECK(v[0] == doctest::Approx(0.4));
  }
}

TEST_CASE("probability is conserved and stays nonnegative") {
  qcat::TrialRng rng(31, 0);
  for (int draw = 0; draw < 10; ++draw) {
    const std::size_t n = 4 + 2 * rng.next_index(3);
    ProbVector v(n + 1);
    double s = 0.0;
    for (double& x : v) {
      x = rng.next_unit();
      s += x;
    }
    for (double& x : v) x /= s;
    const double p = rng.next_unit();
    const double q = p * rng.next_unit();
    const bool ring = rng.next_index(2) == 0;
    for (int t = 0; t < 30; ++t) {
      v = markov_step(v, p, q, ring);
      CHECK(total(v) == doctest::Approx(1.0).epsilon(1e-12));
      for (double x : v) CHECK(x >= -1e-15);
    }
  }
}

TEST_CASE("uniform distribution is stationary for unbiased walks on rings") {
  for (double p : {0.2, 0.5, 0.9}) {
    const std::size_t n = 6;
    ProbVector v(n + 1, 0.0);
    for (std::size_t i = 1; i <= n; ++i) v[i] = 1.0 / static_cast<double>(n);
    const ProbVector out = markov_step(v, p, p, true);
    for (std::size_t i = 0; i <= n; ++i) {
      CHECK(std::abs(out[i] - v[i]) < 1e-12);
    }
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(markov_step({0.5, 0.2}, 0.5, 0.5, false),
                  std::invalid_argument);  // does not sum to 1
  CHECK_THROWS_AS(markov_step({0.5, 0.5}, 1.5, 0.5, false),
                  std::invalid_argument);  // bad probability
  CHECK_THROWS_AS(markov_step({0.2, 0.3, 0.3, 0.2}, 0.5, 0.5, false),
                  std::invalid_argument);  // odd lattice
}
