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

#ifndef QCAT_MATRIX_H_
#define QCAT_MATRIX_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcat {

using complexd = std::complex<double>;

/// Dense complex matrix, row-major storage. This is the whole linear-algebra
/// surface the simulator relies on: the lattices in play are tiny (a few
/// hundred sites at the very most), so everything is dense and double
/// precision.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, complexd{0.0, 0.0}) {}

  static CMatrix identity(std::size_t n);
  static CMatrix from_rows(
      std::initializer_list<std::initializer_list<complexd>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  complexd& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const complexd& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<complexd>& data() const { return data_; }
  std::vector<complexd>& data() { return data_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complexd> data_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix dagger(const CMatrix& a);
std::complex<double> trace(const CMatrix& a);

/// True iff `a` is Hermitian within `tol` in max norm and its spectrum sits
/// above -tol. Eigenvalues come from a selfadjoint solver applied to the
/// symmetrized matrix.
bool is_hermitian_psd(const CMatrix& a, double tol = 1e-9);

/// Smallest eigenvalue of the symmetrized matrix (a + a^dagger)/2.
double min_hermitian_eigenvalue(const CMatrix& a);

/// Max-norm of a - a^dagger.
double hermiticity_residual(const CMatrix& a);

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(complexd scale, const CMatrix& a);

double max_abs(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace qcat

#endif  // QCAT_MATRIX_H_
