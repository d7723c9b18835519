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

#include "qcat/matrix.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace qcat {

namespace {

using EigenCMatrix =
    Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const EigenCMatrix>;
using MutMap = Eigen::Map<EigenCMatrix>;

ConstMap map_of(const CMatrix& m) {
  return ConstMap(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                  static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::from_rows(
    std::initializer_list<std::initializer_list<complexd>> rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.begin()->size();
  CMatrix m(n_rows, n_cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n_cols) {
      throw std::invalid_argument("CMatrix::from_rows: ragged rows");
    }
    std::size_t c = 0;
    for (const complexd& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

bool CMatrix::all_finite() const {
  for (const complexd& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: inner dimensions do not match");
  }
  CMatrix out(a.rows(), b.cols());
  MutMap(out.data().data(), static_cast<Eigen::Index>(out.rows()),
         static_cast<Eigen::Index>(out.cols()))
      .noalias() = map_of(a) * map_of(b);
  return out;
}

CMatrix dagger(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(c, r) = std::conj(a(r, c));
    }
  }
  return out;
}

complexd trace(const CMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("trace: matrix is not square");
  }
  complexd t{0.0, 0.0};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double hermiticity_residual(const CMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("hermiticity_residual: matrix is not square");
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
    }
  }
  return worst;
}

double min_hermitian_eigenvalue(const CMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument(
        "min_hermitian_eigenvalue: matrix is not square");
  }
  if (a.rows() == 0) {
    throw std::invalid_argument("min_hermitian_eigenvalue: empty matrix");
  }
  EigenCMatrix m = map_of(a);
  EigenCMatrix sym = 0.5 * (m + m.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<EigenCMatrix> solver(
      sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("min_hermitian_eigenvalue: eigensolver failed");
  }
  return solver.eigenvalues().minCoeff();
}

bool is_hermitian_psd(const CMatrix& a, double tol) {
  if (!a.is_square()) {
    throw std::invalid_argument("is_hermitian_psd: matrix is not square");
  }
  if (!a.all_finite()) return false;
  if (hermiticity_residual(a) > tol) return false;
  return min_hermitian_eigenvalue(a) >= -tol;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator+: shape mismatch");
  }
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = a.data()[i] + b.data()[i];
  }
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("operator-: shape mismatch");
  }
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = a.data()[i] - b.data()[i];
  }
  return out;
}

CMatrix operator*(complexd scale, const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = scale * a.data()[i];
  }
  return out;
}

double max_abs(const CMatrix& a) {
  double worst = 0.0;
  for (const complexd& v : a.data()) worst = std::max(worst, std::abs(v));
  return worst;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

}  // namespace qcat
