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

#ifndef QCAT_CLASSICAL_H_
#define QCAT_CLASSICAL_H_

#include <cstddef>
#include <vector>

// Partitioned classical random walk on the lattice. This is deliberately an
// independent implementation: it never touches the Kraus machinery, so it can
// serve as an oracle for the fully dephased quantum dynamics.
namespace qcat::classical {

/// Occupation probabilities over {no excitation, site 1, ..., site N}:
/// v[0] is the no-excitation probability, v[1..N] the site populations.
using ProbVector = std::vector<double>;

enum class WalkLayer { even, odd };

/// Throws std::invalid_argument unless entries are nonnegative and sum to 1
/// within tol.
void validate_prob_vector(const ProbVector& v, double tol = 1e-12);

/// Applies the two-site transition [[1-p, q], [p, 1-q]] on each pair of one
/// partition layer. Even pairs are (1,2), (3,4), ...; odd pairs are (2,3),
/// (4,5), ... with the (N,1) pair present only on rings. Chain boundary
/// sites idle in the odd layer; v[0] is never touched.
ProbVector pair_layer(const ProbVector& v, double p, double q, bool ring,
                      WalkLayer layer);

/// One full walk step: even layer, then odd layer.
ProbVector markov_step(const ProbVector& v, double p, double q, bool ring);

}  // namespace qcat::classical

#endif  // QCAT_CLASSICAL_H_
