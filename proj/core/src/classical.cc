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

#include "qcat/classical.h"

#include <cmath>
#include <stdexcept>

namespace qcat::classical {

namespace {

void check_hop_probability(double p, double q) {
  if (!std::isfinite(p) || !std::isfinite(q) || p < 0.0 || p > 1.0 ||
      q < 0.0 || q > 1.0) {
    throw std::invalid_argument("markov_step: p, q must lie in [0, 1]");
  }
}

}  // namespace

void validate_prob_vector(const ProbVector& v, double tol) {
  if (v.size() < 2) {
    throw std::invalid_argument("ProbVector: need at least one site");
  }
  double sum = 0.0;
  for (double x : v) {
    if (!std::isfinite(x) || x < -tol) {
      throw std::invalid_argument("ProbVector: negative or non-finite entry");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw std::invalid_argument("ProbVector: entries do not sum to 1");
  }
}

ProbVector pair_layer(const ProbVector& v, double p, double q, bool ring,
                      WalkLayer layer) {
  validate_prob_vector(v);
  check_hop_probability(p, q);
  const std::size_t n = v.size() - 1;
  if (n % 2 != 0) {
    throw std::invalid_argument("pair_layer: lattice size must be even");
  }
  ProbVector out = v;
  auto hop = [&](std::size_t a, std::size_t b) {
    const double va = v[a];
    const double vb = v[b];
    out[a] = (1.0 - p) * va + q * vb;
    out[b] = p * va + (1.0 - q) * vb;
  };
  if (layer == WalkLayer::even) {
    for (std::size_t a = 1; a + 1 <= n; a += 2) hop(a, a + 1);
  } else {
    for (std::size_t a = 2; a + 1 <= n; a += 2) hop(a, a + 1);
    if (ring) hop(n, 1);
  }
  return out;
}

ProbVector markov_step(const ProbVector& v, double p, double q, bool ring) {
  ProbVector mid = pair_layer(v, p, q, ring, WalkLayer::even);
  return pair_layer(mid, p, q, ring, WalkLayer::odd);
}

}  // namespace qcat::classical
