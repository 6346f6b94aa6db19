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

#include <cmath>
#include <functional>

#include <doctest.h>

#include "relinfo/linops.hpp"
#include "relinfo/observables.hpp"
#include "relinfo/rng.hpp"

using namespace relinfo;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

Matrix hadamard() {
  Matrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << Complex(s, 0), Complex(s, 0), Complex(s, 0), Complex(-s, 0);
  return h;
}

} // namespace

TEST_CASE("operator constructors validate their kind") {
  CHECK(Operator::hermitian(pauli_x().entries()).kind() == OpKind::Hermitian);
  CHECK(Operator::unitary(hadamard()).kind() == OpKind::Unitary);

  Matrix skew(2, 2);
  skew << Complex(0, 0), Complex(1, 0), Complex(2, 0), Complex(0, 0);
  CHECK(kind_of([&] { Operator::hermitian(skew); }) == ErrorKind::NotHermitian);
  CHECK(kind_of([&] { Operator::unitary(2.0 * hadamard()); }) == ErrorKind::NotUnitary);

  Matrix half = 0.5 * Matrix::Identity(2, 2);
  CHECK(Operator::density(half).kind() == OpKind::Density);
  CHECK(kind_of([&] { Operator::density(Matrix::Identity(2, 2)); }) == ErrorKind::NotDensity);
  Matrix neg(2, 2);
  neg << Complex(1.5, 0), Complex(0, 0), Complex(0, 0), Complex(-0.5, 0);
  CHECK(kind_of([&] { Operator::density(neg); }) == ErrorKind::NotDensity);

  Matrix p0 = Matrix::Zero(2, 2);
  p0(0, 0) = Complex(1, 0);
  CHECK(Operator::projector(p0).kind() == OpKind::Projector);
  CHECK(kind_of([&] { Operator::projector(0.5 * p0); }) == ErrorKind::NotProjector);

  CHECK(Operator::identity(3).entries().isApprox(Matrix::Identity(3, 3)));
  CHECK(Operator::zero(3).entries().isZero());
  CHECK(Operator::identity(3).dim() == 3);
}

TEST_CASE("state vectors are unit rays") {
  StateVector e2 = StateVector::basis(4, 2);
  CHECK(e2.dim() == 4);
  CHECK(e2(2) == Complex(1, 0));
  CHECK(e2(0) == Complex(0, 0));
  CHECK(kind_of([] { StateVector::basis(4, 4); }) == ErrorKind::InvalidArgument);

  Vector v(2);
  v << Complex(0.6, 0), Complex(0, 0.8);
  StateVector psi = StateVector::normalized(v, 1e-9);
  CHECK(psi(1) == Complex(0, 0.8));

  Vector off(2);
  off << Complex(1, 0), Complex(1, 0);
  CHECK(kind_of([&] { StateVector::normalized(off, 1e-9); }) == ErrorKind::NotNormalized);
  CHECK(kind_of([&] { StateVector::normalized(Vector::Zero(2), 1e-9); }) ==
        ErrorKind::NotNormalized);
}

TEST_CASE("tensor products combine factors in row-major digit order") {
  Operator zi = tensor(pauli_z(), Operator::identity(2));
  CHECK(zi.dim() == 4);
  CHECK(zi.entries()(0, 0) == Complex(1, 0));
  CHECK(zi.entries()(3, 3) == Complex(-1, 0));

  StateVector a = StateVector::basis(2, 1);
  StateVector b = StateVector::basis(3, 2);
  StateVector ab = tensor(a, b);
  CHECK(ab.dim() == 6);
  CHECK(ab(1 * 3 + 2) == Complex(1, 0));

  const Operator ops[] = {pauli_z(), Operator::identity(2), pauli_z()};
  Operator zzz = tensor(ops);
  CHECK(zzz.dim() == 8);
  CHECK(zzz.entries()(5, 5) == Complex(-1, 0) * Complex(-1, 0));
  CHECK(zzz.entries()(4, 4) == Complex(-1, 0));
}

TEST_CASE("pure densities and projectors agree on unit vectors") {
  Vector v(2);
  v << Complex(1.0 / std::sqrt(2.0), 0), Complex(0, 1.0 / std::sqrt(2.0));
  StateVector psi = StateVector::normalized(v, 1e-9);
  Operator rho = pure_density(psi);
  CHECK(rho.kind() == OpKind::Density);
  CHECK(trace(rho).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.entries().isApprox(pure_projector(psi).entries(), 1e-12));
  CHECK(std::abs(rho.entries()(0, 1) - Complex(0, -0.5)) <= 1e-15);
}

TEST_CASE("evolution applies the unitary") {
  StateVector zero = StateVector::basis(2, 0);
  StateVector plus = evolve(Operator::unitary(hadamard()), zero);
  CHECK(plus(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(plus(1).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("trace helpers match direct sums") {
  Rng rng(31);
  Operator rho = rng.density(4);
  Operator h = Operator::hermitian(rng.hermitian(4).entries());
  Complex direct = (rho.entries() * h.entries()).trace();
  CHECK(std::abs(trace_product(rho, h) - direct) <= 1e-12);
  CHECK(std::abs(trace(rho) - Complex(1, 0)) <= 1e-12);
}

TEST_CASE("commutator norm flags non-commuting pairs") {
  CHECK(commutator_norm(pauli_x(), pauli_x()) == 0.0);
  // [X, Z] = -2iY has max entry magnitude 2.
  CHECK(commutator_norm(pauli_x(), pauli_z()) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(kind_of([] { commutator_norm(pauli_x(), Operator::identity(3)); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("partial trace reduces product and entangled states") {
  // Bell pair: both marginals maximally mixed.
  Vector bell(4);
  bell << Complex(1.0 / std::sqrt(2.0), 0), Complex(0, 0), Complex(0, 0),
      Complex(1.0 / std::sqrt(2.0), 0);
  Operator rho = pure_density(StateVector::normalized(bell, 1e-9));
  Operator left = partial_trace(rho, {2, 2}, {0});
  CHECK(left.entries().isApprox(0.5 * Matrix::Identity(2, 2), 1e-12));

  // |0><0| x |2><2| on 2x3: keeping either axis returns the factor.
  Operator prod = pure_density(tensor(StateVector::basis(2, 0), StateVector::basis(3, 2)));
  Operator first = partial_trace(prod, {2, 3}, {0});
  CHECK(first.entries()(0, 0) == Complex(1, 0));
  Operator second = partial_trace(prod, {2, 3}, {1});
  CHECK(second.entries()(2, 2) == Complex(1, 0));

  // Keeping both middle axes of a 2x2x2 chain preserves the reduced pair.
  Rng rng(7);
  Operator big = rng.density(8);
  Operator pair = partial_trace(big, {2, 2, 2}, {0, 2});
  CHECK(pair.dim() == 4);
  CHECK(std::abs(trace(pair) - Complex(1, 0)) <= 1e-12);

  CHECK(kind_of([&] { partial_trace(big, {2, 2}, {0}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { partial_trace(big, {2, 2, 2}, {3}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("hermitian eigendecomposition merges degenerate eigenvalues") {
  std::vector<Eigenspace> spaces = eig_hermitian(pauli_z());
  REQUIRE(spaces.size() == 2);
  CHECK(spaces[0].eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(spaces[1].eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spaces[0].projector.entries()(1, 1) == Complex(1, 0));
  CHECK(spaces[1].projector.entries()(0, 0) == Complex(1, 0));

  std::vector<Eigenspace> flat = eig_hermitian(Operator::identity(3));
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].projector.entries().isApprox(Matrix::Identity(3, 3), 1e-12));

  // Splitting below the relative tolerance still counts as one eigenspace.
  Matrix near = Matrix::Identity(2, 2);
  near(1, 1) = Complex(1.0 + 1e-12, 0.0);
  CHECK(eig_hermitian(Operator::hermitian(near)).size() == 1);

  // Projector completeness on a random hermitian operator.
  Rng rng(11);
  Operator h = Operator::hermitian(rng.hermitian(5).entries());
  Matrix sum = Matrix::Zero(5, 5);
  Matrix recon = Matrix::Zero(5, 5);
  for (const auto& es : eig_hermitian(h)) {
    sum += es.projector.entries();
    recon += es.eigenvalue * es.projector.entries();
  }
  CHECK(sum.isApprox(Matrix::Identity(5, 5), 1e-9));
  CHECK(recon.isApprox(h.entries(), 1e-9));
}

TEST_CASE("matrix exponential produces the rotation unitary") {
  Operator u = expm_unitary(pauli_z(), 3.14159265358979323846 / 2.0);
  CHECK(std::abs(u.entries()(0, 0) - Complex(0, -1)) <= 1e-12);
  CHECK(std::abs(u.entries()(1, 1) - Complex(0, 1)) <= 1e-12);

  Operator back = expm_unitary(pauli_z(), 3.14159265358979323846 / 2.0, -1);
  CHECK((u.entries() * back.entries()).isApprox(Matrix::Identity(2, 2), 1e-12));

  CHECK(expm_unitary(Operator::hermitian(Matrix::Zero(3, 3)), 2.0)
            .entries()
            .isApprox(Matrix::Identity(3, 3), 1e-12));
  CHECK(kind_of([] { expm_unitary(pauli_z(), 1.0, 2); }) == ErrorKind::InvalidArgument);
}
