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

#include <functional>

#include <doctest.h>

#include "relinfo/observables.hpp"

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

Matrix diag3(double a, double b, double c) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = Complex(a, 0);
  m(1, 1) = Complex(b, 0);
  m(2, 2) = Complex(c, 0);
  return m;
}

} // namespace

TEST_CASE("pauli operators have the standard entries") {
  CHECK(pauli_x().entries()(0, 1) == Complex(1, 0));
  CHECK(pauli_x().entries()(1, 0) == Complex(1, 0));
  CHECK(pauli_y().entries()(0, 1) == Complex(0, -1));
  CHECK(pauli_y().entries()(1, 0) == Complex(0, 1));
  CHECK(pauli_z().entries()(0, 0) == Complex(1, 0));
  CHECK(pauli_z().entries()(1, 1) == Complex(-1, 0));
}

TEST_CASE("diagonalizing path orders outcomes by ascending eigenvalue") {
  Observable z = make_observable("Z", pauli_z());
  REQUIRE(z.n_outcomes() == 2);
  CHECK(z.outcome(0).eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(z.outcome(1).eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(z.outcome(0).label == "-1");
  CHECK(z.outcome(1).label == "+1");
  CHECK(z.outcome(0).projector.entries()(1, 1) == Complex(1, 0));
  CHECK(z.outcome(1).projector.entries()(0, 0) == Complex(1, 0));
  CHECK(z.outcome_index("+1") == 1);
  CHECK_THROWS_AS((void)z.outcome_index("+2"), Error);

  Observable num = make_observable("N", Operator::hermitian(diag3(0, 1, 2)));
  CHECK(num.outcome(0).label == "+0");
  CHECK(num.outcome(2).label == "+2");

  // Degenerate eigenvalues collapse into one outcome.
  Observable flat = make_observable("1", Operator::identity(2));
  REQUIRE(flat.n_outcomes() == 1);
  CHECK(flat.outcome(0).projector.entries().isApprox(Matrix::Identity(2, 2), 1e-12));

  Observable parity = make_observable("P", Operator::hermitian(diag3(1, -1, 1)));
  REQUIRE(parity.n_outcomes() == 2);
  CHECK(parity.outcome(1).projector.entries().isApprox(diag3(1, 0, 1), 1e-12));
}

TEST_CASE("declared path keeps declaration order and validates the resolution") {
  std::vector<Outcome> sectors{
      Outcome{1.0, Operator::projector(diag3(1, 0, 1)), "even"},
      Outcome{-1.0, Operator::projector(diag3(0, 1, 0)), "odd"},
  };
  Observable parity = make_observable("parity", sectors);
  CHECK(parity.outcome(0).label == "even");
  CHECK(parity.outcome_index("odd") == 1);
  CHECK(parity.op().entries().isApprox(diag3(1, -1, 1), 1e-12));

  // Overlapping projectors are not a resolution.
  std::vector<Outcome> overlap{
      Outcome{1.0, Operator::projector(diag3(1, 1, 0)), "a"},
      Outcome{0.0, Operator::projector(diag3(0, 1, 1)), "b"},
  };
  CHECK_THROWS_AS(make_observable("bad", overlap), Error);

  // Incomplete projectors are rejected too.
  std::vector<Outcome> gap{
      Outcome{1.0, Operator::projector(diag3(1, 0, 0)), "a"},
      Outcome{0.0, Operator::projector(diag3(0, 1, 0)), "b"},
  };
  CHECK_THROWS_AS(make_observable("bad", gap), Error);

  // Repeated eigenvalues would make outcomes indistinguishable.
  std::vector<Outcome> repeat{
      Outcome{1.0, Operator::projector(diag3(1, 0, 0)), "a"},
      Outcome{1.0, Operator::projector(diag3(0, 1, 1)), "b"},
  };
  CHECK_THROWS_AS(make_observable("bad", repeat), Error);

  CHECK_THROWS_AS(make_observable("bad", std::vector<Outcome>{}), Error);
}

TEST_CASE("commutation check is tolerance-aware") {
  Observable z = make_observable("Z", pauli_z());
  Observable x = make_observable("X", pauli_x());
  CHECK(commutes(z, z));
  CHECK_FALSE(commutes(z, x));
  CHECK(commutes(z, x, 2.5));  // the commutator has entries of magnitude 2

  std::vector<Index> dims{2, 2};
  Observable z0 = lift_observable(z, dims, 0);
  Observable x1 = lift_observable(x, dims, 1);
  CHECK(commutes(z0, x1));
  CHECK(kind_of([&] { (void)commutes(z, z0); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("lifting embeds the operator and every outcome projector") {
  std::vector<Index> dims{2, 3};
  Observable z = make_observable("Z", pauli_z());
  Observable z0 = lift_observable(z, dims, 0);
  CHECK(z0.dim() == 6);
  CHECK(z0.name() == "Z");
  REQUIRE(z0.n_outcomes() == 2);
  CHECK(z0.outcome(0).label == "-1");
  CHECK(z0.outcome(0).eigenvalue == doctest::Approx(-1.0).epsilon(1e-12));
  // minus eigenspace of Z x 1 covers basis states 3, 4, 5
  CHECK(z0.outcome(0).projector.entries()(3, 3) == Complex(1, 0));
  CHECK(z0.outcome(0).projector.entries()(0, 0) == Complex(0, 0));
  CHECK(z0.op().entries()(5, 5) == Complex(-1, 0));

  Observable p1 = lift_observable(pointer_observable("R", 3), dims, 1);
  CHECK(p1.op().entries()(5, 5) == Complex(2, 0));
  CHECK(kind_of([&] { lift_observable(z, dims, 1); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { lift_observable(z, dims, 2); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("classical subsystems demand pairwise compatibility") {
  std::vector<Index> dims{2, 2};
  Observable z0 = lift_observable(make_observable("Z0", pauli_z()), dims, 0);
  Observable x1 = lift_observable(make_observable("X1", pauli_x()), dims, 1);
  Observable x0 = lift_observable(make_observable("X0", pauli_x()), dims, 0);

  ClassicalSubsystem cs = make_classical_subsystem("C", {z0, x1});
  CHECK(cs.name() == "C");
  CHECK(cs.size() == 2);
  CHECK(cs.dim() == 4);
  CHECK(cs.members()[1].name() == "X1");

  try {
    make_classical_subsystem("broken", {z0, x0});
    FAIL("expected NonCommuting");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCommuting);
    CHECK(std::string(e.what()).find("Z0") != std::string::npos);
    CHECK(std::string(e.what()).find("X0") != std::string::npos);
  }
  CHECK_THROWS_AS(make_classical_subsystem("empty", {}), Error);
}

TEST_CASE("pointer observables label the register basis") {
  Observable r = pointer_observable("R", 3);
  REQUIRE(r.n_outcomes() == 3);
  CHECK(r.outcome(0).label == "0");
  CHECK(r.outcome(2).label == "2");
  CHECK(r.outcome(2).eigenvalue == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.outcome(1).projector.entries()(1, 1) == Complex(1, 0));

  Observable named = pointer_observable("F", 3, {"ready", "saw0", "saw1"});
  CHECK(named.outcome(1).label == "saw0");
  CHECK(named.outcome_index("saw1") == 2);
  CHECK_THROWS_AS(pointer_observable("F", 3, {"only", "two"}), Error);
  CHECK_THROWS_AS(pointer_observable("F", 0), Error);
}
