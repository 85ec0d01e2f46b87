// Copyright 2026 The cliffdesc Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "cliffdesc/errors.hpp"
#include "cliffdesc/exact_scalar.hpp"

namespace cliffdesc {

/// Dense square matrix over a user-chosen scalar. ExactMatrix is the exact
/// instantiation used throughout the algebra layer; MatrixXcd covers the
/// floating layer.
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactMatrix = Matrix<ExactScalar>;

/// Exact product with an explicit conformability check.
inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions disagree (" +
                         std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  }
  return a * b;
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b, so the left
/// factor retains the coarse structure.  Arguments are materialized once (see
/// exact_equal).
template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                       const Eigen::MatrixBase<DerivedB>& b) {
  decltype(auto) ea = a.derived().eval();
  decltype(auto) eb = b.derived().eval();
  Matrix<typename DerivedA::Scalar> out(ea.rows() * eb.rows(),
                                        ea.cols() * eb.cols());
  for (Eigen::Index i = 0; i < ea.rows(); ++i) {
    for (Eigen::Index j = 0; j < ea.cols(); ++j) {
      out.block(i * eb.rows(), j * eb.cols(), eb.rows(), eb.cols()) =
          ea(i, j) * eb;
    }
  }
  return out;
}

/// Conjugate transpose, materialized.
inline ExactMatrix adjoint(const ExactMatrix& a) { return a.adjoint(); }

/// Sum of diagonal entries.
inline ExactScalar trace(const ExactMatrix& a) { return a.trace(); }

/// Entrywise structural equality; shapes must match.  Expression arguments
/// are materialized once up front: per-coefficient access on an Eigen
/// product re-evaluates the whole product each call.
template <typename DerivedA, typename DerivedB>
bool exact_equal(const Eigen::MatrixBase<DerivedA>& a,
                 const Eigen::MatrixBase<DerivedB>& b) {
  decltype(auto) ea = a.derived().eval();
  decltype(auto) eb = b.derived().eval();
  if (ea.rows() != eb.rows() || ea.cols() != eb.cols()) return false;
  for (Eigen::Index i = 0; i < ea.rows(); ++i) {
    for (Eigen::Index j = 0; j < ea.cols(); ++j) {
      if (!(ea(i, j) == eb(i, j))) return false;
    }
  }
  return true;
}

inline ExactMatrix exact_identity(Eigen::Index n) {
  return ExactMatrix::Identity(n, n);
}

inline ExactMatrix exact_zero(Eigen::Index n) {
  return ExactMatrix::Zero(n, n);
}

/// Antidiagonal matrix of ones, J(i, n-1-i) = 1.
inline ExactMatrix exchange_matrix(Eigen::Index n) {
  ExactMatrix j = ExactMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) j(i, n - 1 - i) = 1;
  return j;
}

inline ExactMatrix pauli1() {
  ExactMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ExactMatrix pauli2() {
  ExactMatrix m(2, 2);
  m << ExactScalar(0), ExactScalar(0, -1), ExactScalar(0, 1), ExactScalar(0);
  return m;
}

inline ExactMatrix pauli3() {
  ExactMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline bool commute(const ExactMatrix& a, const ExactMatrix& b) {
  return exact_equal(a * b, b * a);
}

inline bool anticommute(const ExactMatrix& a, const ExactMatrix& b) {
  return exact_equal(ExactMatrix(a * b), ExactMatrix(-(b * a)));
}

/// Exactly one nonzero entry per row and per column.
inline bool is_monomial(const ExactMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    int in_row = 0;
    int in_col = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) ++in_row;
      if (!a(j, i).is_zero()) ++in_col;
    }
    if (in_row != 1 || in_col != 1) return false;
  }
  return true;
}

/// Every entry in {0, 1, -1, i, -i}.
inline bool entries_quarter_phase(const ExactMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !a(i, j).quarter_phase().has_value()) {
        return false;
      }
    }
  }
  return true;
}

inline Eigen::MatrixXcd to_complex(const ExactMatrix& a) {
  Eigen::MatrixXcd out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_complex();
  }
  return out;
}

/// Compact single-line rendering for diagnostics, rows separated by ';'.
inline std::string to_string(const ExactMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (i) os << "; ";
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (j) os << " ";
      os << a(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

/// Order-independent entry hash for closure bookkeeping.
inline std::size_t hash_value(const ExactMatrix& a) {
  std::size_t h = std::hash<long long>{}(static_cast<long long>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      h ^= hash_value(a(i, j)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

}  // namespace cliffdesc
