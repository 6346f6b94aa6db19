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

#ifndef RELINFO_LINOPS_HPP
#define RELINFO_LINOPS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "relinfo/error.hpp"

namespace relinfo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Structural tag attached to an Operator. The tag is checked against the
/// entries at construction time, so holding an Operator of a given kind is
/// a guarantee about its matrix.
enum class OpKind {
  General,   ///< any square matrix
  Hermitian, ///< max |M - M^dag| <= 1e-10 entrywise
  Unitary,   ///< max |M^dag M - 1| <= 1e-10 entrywise
  Density,   ///< hermitian, trace within 1e-10 of 1, eigenvalues >= -1e-10
  Projector, ///< hermitian, max |M^2 - M| <= 1e-10 entrywise
};

/// Entrywise tolerance for the structural checks above.
inline constexpr double kOpCheckTol = 1e-10;

/// Immutable dense complex matrix with a validated structural kind.
class Operator {
 public:
  /// Validates `m` against `kind` and throws Error on failure.
  Operator(Matrix m, OpKind kind);

  static Operator general(Matrix m) { return Operator(std::move(m), OpKind::General); }
  static Operator hermitian(Matrix m) { return Operator(std::move(m), OpKind::Hermitian); }
  static Operator unitary(Matrix m) { return Operator(std::move(m), OpKind::Unitary); }
  static Operator density(Matrix m) { return Operator(std::move(m), OpKind::Density); }
  static Operator projector(Matrix m) { return Operator(std::move(m), OpKind::Projector); }
  static Operator identity(Index dim);
  static Operator zero(Index dim);

  Index dim() const { return entries_.rows(); }
  OpKind kind() const { return kind_; }
  const Matrix& entries() const { return entries_; }
  Complex operator()(Index r, Index c) const { return entries_(r, c); }

  /// Conjugate transpose, preserving the kind (all kinds are closed under it).
  Operator adjoint() const;

 private:
  Matrix entries_;
  OpKind kind_;
};

/// Normalized complex amplitude vector (norm within 1e-10 of 1).
class StateVector {
 public:
  explicit StateVector(Vector amplitudes);

  /// Computational basis vector |k> in `dim` dimensions.
  static StateVector basis(Index dim, Index k);

  /// Builds a state from possibly unnormalized amplitudes; throws if the
  /// norm differs from 1 by more than `tol`, otherwise renormalizes exactly.
  static StateVector normalized(Vector amplitudes, double tol);

  Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator()(Index k) const { return amplitudes_(k); }

 private:
  Vector amplitudes_;
};

/// Kronecker product. The kind tag propagates when it survives the product
/// (same kind on both sides; mixed hermitian-family inputs give Hermitian).
Operator tensor(const Operator& a, const Operator& b);
Operator tensor(std::span<const Operator> factors);

StateVector tensor(const StateVector& a, const StateVector& b);
StateVector tensor(std::span<const StateVector> factors);

/// |psi><psi| as a density operator (also a projector; Density is the more
/// useful tag downstream).
Operator pure_density(const StateVector& psi);

/// Rank-1 projector |psi><psi|.
Operator pure_projector(const StateVector& psi);

/// U |psi>. Requires a Unitary operator so normalization is preserved.
StateVector evolve(const Operator& u, const StateVector& psi);

Complex trace(const Operator& m);

/// tr(a b) without forming the product.
Complex trace_product(const Operator& a, const Operator& b);

/// Largest entrywise |[a, b]|; 0 means the operators commute exactly.
double commutator_norm(const Operator& a, const Operator& b);

/// Traces out the tensor factors NOT listed in `keep`. `dims` are the factor
/// dimensions in tensor order (their product must equal m.dim()); `keep`
/// holds strictly increasing factor positions. Density inputs stay Density,
/// everything else degrades to Hermitian or General.
Operator partial_trace(const Operator& m, const std::vector<Index>& dims,
                       const std::vector<std::size_t>& keep);

/// One eigenspace of a hermitian operator: the (possibly degenerate)
/// eigenvalue together with the orthogonal projector onto the eigenspace.
struct Eigenspace {
  double eigenvalue;
  Operator projector;
};

/// Relative gap below which adjacent eigenvalues are merged into a single
/// eigenspace, as a fraction of the spectral radius.
inline constexpr double kEigMergeTol = 1e-9;

/// Spectral decomposition of a hermitian operator. Eigenvalues ascend and
/// adjacent values closer than kEigMergeTol * spectral radius are merged,
/// so degenerate eigenvalues come back as one Eigenspace of full rank.
/// The projectors are mutually orthogonal and sum to the identity.
std::vector<Eigenspace> eig_hermitian(const Operator& m);

/// Eigenvalues of a hermitian operator, ascending, without merging.
std::vector<double> eigenvalues_hermitian(const Operator& m);

/// exp(-i h t) for hermitian h, computed spectrally. `sign` = -1 gives the
/// inverse exp(+i h t).
Operator expm_unitary(const Operator& h, double t, int sign = 1);

} // namespace relinfo

#endif // RELINFO_LINOPS_HPP
