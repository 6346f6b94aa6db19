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
#include <sstream>

#include <nlohmann/json.hpp>

#include <doctest.h>

#include "relinfo/dynamics.hpp"

using namespace relinfo;

namespace {

constexpr double kPi = 3.14159265358979323846;
// H(1/4, 3/4) = 2 - (3/4) log2 3
constexpr double kHQuarter = 0.8112781244591328;

struct Setup {
  Observable target = pointer_observable("A", 2, {"a0", "a1"});
  Observable target_full = lift_observable(target, {2, 3}, 0);
  Observable record_full =
      lift_observable(pointer_observable("B", 3, {"ready", "saw0", "saw1"}), {2, 3}, 1);
  ClassicalSubsystem cb = make_classical_subsystem("CB", {record_full});
  Operator h = measurement_hamiltonian(target, 3, PointerScheme{0, {1, 2}}, 1.0);

  Operator skewed_start() const {
    Vector v = Vector::Zero(6);
    v(0) = Complex(0.5, 0.0);                 // |a0, ready>
    v(3) = Complex(std::sqrt(0.75), 0.0);     // |a1, ready>
    return pure_density(StateVector::normalized(v, 1e-9));
  }
};

} // namespace

TEST_CASE("the coupling writes each outcome to its record slot") {
  Setup s;
  CHECK(s.h.dim() == 6);
  CHECK(s.h.kind() == OpKind::Hermitian);

  // Starting sharp at a0: after a quarter period the pointer reads saw0.
  Vector v = Vector::Zero(6);
  v(0) = Complex(1, 0);
  StateVector start = StateVector::normalized(v, 1e-9);
  StateVector end = evolve(expm_unitary(s.h, kPi / 2.0), start);
  CHECK(std::abs(end(1)) == doctest::Approx(1.0).epsilon(1e-9));  // |a0, saw0>

  // Starting at a1 the record lands on saw1 instead.
  Vector w = Vector::Zero(6);
  w(3) = Complex(1, 0);
  StateVector end1 = evolve(expm_unitary(s.h, kPi / 2.0), StateVector::normalized(w, 1e-9));
  CHECK(std::abs(end1(5)) == doctest::Approx(1.0).epsilon(1e-9));  // |a1, saw1>

  // A half period later the pointer swings back through ready.
  StateVector full = evolve(expm_unitary(s.h, kPi), start);
  CHECK(std::abs(full(0)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("pointer schemes are validated") {
  Observable a = pointer_observable("A", 2);
  CHECK_THROWS_AS(measurement_hamiltonian(a, 3, PointerScheme{0, {0, 2}}, 1.0), Error);
  CHECK_THROWS_AS(measurement_hamiltonian(a, 3, PointerScheme{0, {1, 1}}, 1.0), Error);
  CHECK_THROWS_AS(measurement_hamiltonian(a, 3, PointerScheme{0, {1}}, 1.0), Error);
  CHECK_THROWS_AS(measurement_hamiltonian(a, 2, PointerScheme{0, {1, 2}}, 1.0), Error);
  CHECK_THROWS_AS(measurement_hamiltonian(a, 3, PointerScheme{0, {1, 2}}, 0.0), Error);
  CHECK_THROWS_AS(measurement_hamiltonian(a, 3, PointerScheme{0, {1, 2}}, -1.0), Error);
}

TEST_CASE("uniform_times spans zero to the duration inclusive") {
  std::vector<double> t = uniform_times(5, 1.0);
  REQUIRE(t.size() == 5);
  CHECK(t[0] == 0.0);
  CHECK(t[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(t[4] == 1.0);
  CHECK_THROWS_AS(uniform_times(1, 1.0), Error);
  CHECK_THROWS_AS(uniform_times(5, 0.0), Error);
}

TEST_CASE("a sweep follows the rotation-angle law") {
  Setup s;
  Operator rho0 = s.skewed_start();
  std::vector<double> times = uniform_times(51, kPi / 2.0);
  const WatchSpec watch[] = {WatchSpec{s.cb, s.target_full}};
  Sweep sweep = run_sweep(rho0, s.h, watch, times, 1.0);

  REQUIRE(sweep.samples.size() == 51);
  CHECK(sweep.omega == 1.0);
  CHECK(sweep.duration == doctest::Approx(kPi / 2.0).epsilon(1e-15));

  for (std::size_t k = 0; k < sweep.samples.size(); ++k) {
    const SweepSample& sample = sweep.samples[k];
    REQUIRE(sample.reports.size() == 1);
    const InfoReport& report = sample.reports[0];
    double law = std::sin(sample.t) * std::sin(sample.t) * kHQuarter;
    CHECK(std::abs(report.mutual - law) <= 1e-9);
    // The measured variable's own distribution never moves.
    CHECK(std::abs(report.information - (1.0 - kHQuarter)) <= 1e-9);
    // Identity between the relative, own, and shared parts.
    CHECK(std::abs(report.relative - report.information - report.mutual) <= 1e-9);
  }
  CHECK(std::abs(sweep.samples.front().reports[0].mutual) <= 1e-12);
  CHECK(std::abs(sweep.samples.back().reports[0].mutual - kHQuarter) <= 1e-9);
  CHECK(std::abs(sweep.samples.back().reports[0].relative - 1.0) <= 1e-9);

  // Unwritten record values are unsupported at the start; at the quarter
  // period the pointer has fully left ready instead.
  CHECK(sweep.samples.front().reports[0].unsupported.size() == 2);
  REQUIRE(sweep.samples.back().reports[0].unsupported.size() == 1);
  CHECK(sweep.samples.back().reports[0].unsupported[0] == "ready");
  CHECK(sweep.samples[25].reports[0].unsupported.empty());
}

TEST_CASE("sweeps reject a broken time grid") {
  Setup s;
  Operator rho0 = s.skewed_start();
  const WatchSpec watch[] = {WatchSpec{s.cb, s.target_full}};
  const double not_from_zero[] = {0.1, 0.2};
  CHECK_THROWS_AS(run_sweep(rho0, s.h, watch, not_from_zero, 1.0), Error);
  const double not_increasing[] = {0.0, 0.2, 0.2};
  CHECK_THROWS_AS(run_sweep(rho0, s.h, watch, not_increasing, 1.0), Error);
}

TEST_CASE("omega rescales the quarter period") {
  Setup s;
  Observable a = pointer_observable("A", 2, {"a0", "a1"});
  Operator h2 = measurement_hamiltonian(a, 3, PointerScheme{0, {1, 2}}, 2.0);
  Operator rho0 = s.skewed_start();
  std::vector<double> times = uniform_times(9, kPi / 4.0);
  const WatchSpec watch[] = {WatchSpec{s.cb, s.target_full}};
  Sweep sweep = run_sweep(rho0, h2, watch, times, 2.0);
  CHECK(std::abs(sweep.samples.back().reports[0].mutual - kHQuarter) <= 1e-9);
}

TEST_CASE("the full-rank variant supports every outcome") {
  Setup s;
  Operator rho0 = s.skewed_start();
  Operator reg = full_rank_variant(rho0, 1e-6);
  CHECK(std::abs(trace(reg) - Complex(1, 0)) <= 1e-12);
  for (const auto& es : eig_hermitian(reg)) {
    CHECK(es.eigenvalue >= 1e-6 / 6.0 - 1e-15);
  }

  const WatchSpec watch[] = {WatchSpec{s.cb, s.target_full}};
  std::vector<double> times = uniform_times(5, kPi / 2.0);
  Sweep sweep = run_sweep(reg, s.h, watch, times, 1.0);
  CHECK(sweep.samples.front().reports[0].unsupported.empty());
  double start = sweep.samples.front().reports[0].relative;
  CHECK(std::isfinite(start));
  CHECK(start < 1.0);

  CHECK_THROWS_AS(full_rank_variant(rho0, -0.1), Error);
  CHECK_THROWS_AS(full_rank_variant(rho0, 1.0), Error);
}

TEST_CASE("sweep csv lists one row per sample") {
  Setup s;
  const WatchSpec watch[] = {WatchSpec{s.cb, s.target_full}};
  std::vector<double> times = uniform_times(4, kPi / 2.0);
  Sweep sweep = run_sweep(s.skewed_start(), s.h, watch, times, 1.0);

  std::string csv = sweep_csv(sweep);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,omega_t,I_mutual_bits,I_relative_bits,I_target_bits");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 4);
  CHECK(csv.substr(csv.find('\n') + 1, 2) == "0,");

  std::ostringstream out;
  sweep_csv(sweep, 0, out);
  CHECK(out.str() == csv);
  CHECK_THROWS_AS(sweep_csv(sweep, 1), Error);
}
