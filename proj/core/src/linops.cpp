// Copyright 2026 The relinfo authors
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

#include "relinfo/linops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace relinfo {

namespace {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void require_square(const Matrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorKind::InvalidArgument,
                "operator must be a nonempty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void check_hermitian(const Matrix& m) {
  double dev = max_abs(m - m.adjoint());
  if (dev > kOpCheckTol) {
    throw Error(ErrorKind::NotHermitian,
                "matrix is not hermitian: max |M - M^dag| = " + std::to_string(dev));
  }
}

void check_unitary(const Matrix& m) {
  Matrix gram = m.adjoint() * m;
  gram -= Matrix::Identity(m.rows(), m.cols());
  double dev = max_abs(gram);
  if (dev > kOpCheckTol) {
    throw Error(ErrorKind::NotUnitary,
                "matrix is not unitary: max |M^dag M - 1| = " + std::to_string(dev));
  }
}

void check_density(const Matrix& m) {
  check_hermitian(m);
  Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kOpCheckTol) {
    throw Error(ErrorKind::NotDensity,
                "density operator must have unit trace, got " + std::to_string(tr.real()));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  double lo = solver.eigenvalues().minCoeff();
  if (lo < -kOpCheckTol) {
    throw Error(ErrorKind::NotDensity,
                "density operator must be positive semidefinite, smallest eigenvalue " +
                    std::to_string(lo));
  }
}

void check_projector(const Matrix& m) {
  check_hermitian(m);
  double dev = max_abs(Matrix(m * m) - m);
  if (dev > kOpCheckTol) {
    throw Error(ErrorKind::NotProjector,
                "matrix is not idempotent: max |M^2 - M| = " + std::to_string(dev));
  }
}

/// Kind of a Kronecker product given the factor kinds.
OpKind tensor_kind(OpKind a, OpKind b) {
  if (a == b) return a;
  auto hermitian_family = [](OpKind k) {
    return k == OpKind::Hermitian || k == OpKind::Density || k == OpKind::Projector;
  };
  if (hermitian_family(a) && hermitian_family(b)) return OpKind::Hermitian;
  return OpKind::General;
}

} // namespace

Operator::Operator(Matrix m, OpKind kind) : entries_(std::move(m)), kind_(kind) {
  require_square(entries_);
  switch (kind_) {
    case OpKind::General:
      break;
    case OpKind::Hermitian:
      check_hermitian(entries_);
      break;
    case OpKind::Unitary:
      check_unitary(entries_);
      break;
    case OpKind::Density:
      check_density(entries_);
      break;
    case OpKind::Projector:
      check_projector(entries_);
      break;
  }
}

Operator Operator::identity(Index dim) {
  return Operator(Matrix::Identity(dim, dim), OpKind::Projector);
}

Operator Operator::zero(Index dim) {
  return Operator(Matrix::Zero(dim, dim), OpKind::Projector);
}

Operator Operator::adjoint() const {
  return Operator(entries_.adjoint(), kind_);
}

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw Error(ErrorKind::InvalidArgument, "state vector must be nonempty");
  }
  double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kOpCheckTol) {
    throw Error(ErrorKind::NotNormalized,
                "state vector norm is " + std::to_string(norm) + ", expected 1");
  }
}

StateVector StateVector::basis(Index dim, Index k) {
  if (k < 0 || k >= dim) {
    throw Error(ErrorKind::InvalidArgument,
                "basis index " + std::to_string(k) + " out of range for dim " +
                    std::to_string(dim));
  }
  Vector v = Vector::Zero(dim);
  v(k) = Complex(1.0, 0.0);
  return StateVector(std::move(v));
}

StateVector StateVector::normalized(Vector amplitudes, double tol) {
  double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw Error(ErrorKind::NotNormalized,
                "state norm is " + std::to_string(norm) + ", outside tolerance " +
                    std::to_string(tol));
  }
  if (norm == 0.0) {
    throw Error(ErrorKind::NotNormalized, "state has zero norm");
  }
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

Operator tensor(const Operator& a, const Operator& b) {
  Index da = a.dim(), db = b.dim();
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.entries()(i, j) * b.entries();
    }
  }
  return Operator(std::move(out), tensor_kind(a.kind(), b.kind()));
}

Operator tensor(std::span<const Operator> factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::InvalidArgument, "tensor product needs at least one factor");
  }
  Operator acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
  return acc;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  Index da = a.dim(), db = b.dim();
  Vector out(da * db);
  for (Index i = 0; i < da; ++i) {
    out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(std::move(out));
}

StateVector tensor(std::span<const StateVector> factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::InvalidArgument, "tensor product needs at least one factor");
  }
  StateVector acc = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i]);
  return acc;
}

Operator pure_density(const StateVector& psi) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  return Operator(std::move(m), OpKind::Density);
}

Operator pure_projector(const StateVector& psi) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  return Operator(std::move(m), OpKind::Projector);
}

StateVector evolve(const Operator& u, const StateVector& psi) {
  if (u.kind() != OpKind::Unitary) {
    throw Error(ErrorKind::NotUnitary, "evolve requires a Unitary operator");
  }
  if (u.dim() != psi.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator dim " + std::to_string(u.dim()) + " vs state dim " +
                    std::to_string(psi.dim()));
  }
  return StateVector(u.entries() * psi.amplitudes());
}

Complex trace(const Operator& m) { return m.entries().trace(); }

Complex trace_product(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "trace_product dims " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
  // tr(AB) = sum_ij A_ij B_ji
  return (a.entries().array() * b.entries().transpose().array()).sum();
}

double commutator_norm(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "commutator dims " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
  Matrix c = a.entries() * b.entries() - b.entries() * a.entries();
  return max_abs(c);
}

Operator partial_trace(const Operator& m, const std::vector<Index>& dims,
                       const std::vector<std::size_t>& keep) {
  Index total = 1;
  for (Index d : dims) {
    if (d <= 0) throw Error(ErrorKind::InvalidArgument, "factor dimensions must be positive");
    total *= d;
  }
  if (total != m.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "factor dimensions multiply to " + std::to_string(total) +
                    " but the operator has dim " + std::to_string(m.dim()));
  }
  if (keep.empty()) {
    throw Error(ErrorKind::InvalidArgument, "partial_trace must keep at least one factor");
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= dims.size() || (i > 0 && keep[i] <= keep[i - 1])) {
      throw Error(ErrorKind::InvalidArgument,
                  "keep positions must be strictly increasing factor indices");
    }
  }

  std::vector<std::size_t> traced;
  for (std::size_t f = 0; f < dims.size(); ++f) {
    if (!std::binary_search(keep.begin(), keep.end(), f)) traced.push_back(f);
  }

  // Row-major strides of each factor inside the full index.
  std::vector<Index> stride(dims.size());
  Index s = 1;
  for (std::size_t f = dims.size(); f-- > 0;) {
    stride[f] = s;
    s *= dims[f];
  }

  Index keep_dim = 1;
  for (std::size_t f : keep) keep_dim *= dims[f];
  Index traced_dim = 1;
  for (std::size_t f : traced) traced_dim *= dims[f];

  // Offset of a mixed-radix index over the given factors into the full space.
  auto offset = [&](const std::vector<std::size_t>& factors, Index mixed) {
    Index off = 0;
    for (std::size_t i = factors.size(); i-- > 0;) {
      std::size_t f = factors[i];
      off += (mixed % dims[f]) * stride[f];
      mixed /= dims[f];
    }
    return off;
  };

  Matrix out = Matrix::Zero(keep_dim, keep_dim);
  for (Index tr = 0; tr < traced_dim; ++tr) {
    Index t_off = offset(traced, tr);
    for (Index r = 0; r < keep_dim; ++r) {
      Index r_off = offset(keep, r) + t_off;
      for (Index c = 0; c < keep_dim; ++c) {
        out(r, c) += m.entries()(r_off, offset(keep, c) + t_off);
      }
    }
  }

  OpKind kind = OpKind::General;
  if (m.kind() == OpKind::Density) {
    kind = OpKind::Density;
  } else if (m.kind() == OpKind::Hermitian || m.kind() == OpKind::Projector) {
    kind = OpKind::Hermitian;
  }
  return Operator(std::move(out), kind);
}

std::vector<Eigenspace> eig_hermitian(const Operator& m) {
  if (m.kind() != OpKind::Hermitian && m.kind() != OpKind::Density &&
      m.kind() != OpKind::Projector) {
    throw Error(ErrorKind::NotHermitian, "eig_hermitian requires a hermitian-family operator");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidArgument, "eigendecomposition failed to converge");
  }
  const auto& vals = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();

  double radius = std::max(std::abs(vals(0)), std::abs(vals(vals.size() - 1)));
  double merge_gap = kEigMergeTol * radius;

  std::vector<Eigenspace> out;
  Index start = 0;
  while (start < vals.size()) {
    Index stop = start + 1;
    while (stop < vals.size() && vals(stop) - vals(stop - 1) <= merge_gap) ++stop;
    Matrix block = vecs.middleCols(start, stop - start);
    double value = vals.segment(start, stop - start).mean();
    out.push_back(Eigenspace{value, Operator(block * block.adjoint(), OpKind::Projector)});
    start = stop;
  }
  return out;
}

std::vector<double> eigenvalues_hermitian(const Operator& m) {
  if (m.kind() != OpKind::Hermitian && m.kind() != OpKind::Density &&
      m.kind() != OpKind::Projector) {
    throw Error(ErrorKind::NotHermitian, "eigenvalues_hermitian requires a hermitian-family operator");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidArgument, "eigendecomposition failed to converge");
  }
  const auto& vals = solver.eigenvalues();
  return std::vector<double>(vals.data(), vals.data() + vals.size());
}

Operator expm_unitary(const Operator& h, double t, int sign) {
  if (h.kind() != OpKind::Hermitian && h.kind() != OpKind::Density &&
      h.kind() != OpKind::Projector) {
    throw Error(ErrorKind::NotHermitian, "expm_unitary requires a hermitian-family generator");
  }
  if (sign != 1 && sign != -1) {
    throw Error(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::InvalidArgument, "eigendecomposition failed to converge");
  }
  const auto& vals = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  Vector phases(vals.size());
  for (Index k = 0; k < vals.size(); ++k) {
    double angle = -static_cast<double>(sign) * vals(k) * t;
    phases(k) = Complex(std::cos(angle), std::sin(angle));
  }
  Matrix u = vecs * phases.asDiagonal() * vecs.adjoint();
  return Operator(std::move(u), OpKind::Unitary);
}

} // namespace relinfo
