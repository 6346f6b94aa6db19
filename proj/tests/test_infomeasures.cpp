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

#include <nlohmann/json.hpp>

#include <doctest.h>

#include "relinfo/infomeasures.hpp"
#include "relinfo/observables.hpp"
#include "relinfo/rng.hpp"

using namespace relinfo;

namespace {

// Entropy oracles evaluated independently:
//   H(1/4, 3/4)        = 2 - (3/4) log2 3
//   H(0.9999, 0.0001)  computed with long-double arithmetic
constexpr double kLog2Three = 1.5849625007211562;
constexpr double kHQuarter = 0.8112781244591328;
constexpr double kIQuarter = 0.18872187554086717;

VariableAxis axis(std::string name, std::size_t n) {
  VariableAxis a;
  a.name = std::move(name);
  for (std::size_t k = 0; k < n; ++k) {
    a.eigenvalues.push_back(static_cast<double>(k));
    a.labels.push_back(std::to_string(k));
  }
  return a;
}

JointDistribution bell_table() {
  return JointDistribution({axis("A", 2), axis("B", 2)}, {0.5, 0.0, 0.0, 0.5});
}

JointDistribution random_table(Rng& rng, std::size_t na, std::size_t nb) {
  std::vector<double> p = rng.distribution(na * nb);
  return JointDistribution({axis("A", na), axis("B", nb)}, std::move(p));
}

} // namespace

TEST_CASE("shannon entropy in bits") {
  const double half[] = {0.5, 0.5};
  CHECK(shannon_entropy(half) == doctest::Approx(1.0).epsilon(1e-12));
  const double quarter[] = {0.25, 0.75};
  CHECK(shannon_entropy(quarter) == doctest::Approx(kHQuarter).epsilon(1e-12));
  const double point[] = {1.0, 0.0};
  CHECK(shannon_entropy(point) == 0.0);
  const double six[] = {1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6};
  CHECK(shannon_entropy(six) == doctest::Approx(1.0 + kLog2Three).epsilon(1e-12));
  const double off[] = {0.5, 0.2};
  CHECK_THROWS_AS((void)shannon_entropy(off), Error);
}

TEST_CASE("information is the gap to the uniform maximum") {
  JointDistribution skew({axis("A", 2)}, {0.25, 0.75});
  CHECK(max_information(skew, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(shannon_entropy(skew, 0) == doctest::Approx(kHQuarter).epsilon(1e-12));
  CHECK(information(skew, 0) == doctest::Approx(kIQuarter).epsilon(1e-12));

  JointDistribution uniform({axis("A", 3)}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(max_information(uniform, 0) == doctest::Approx(kLog2Three).epsilon(1e-12));
  CHECK(information(uniform, 0) == doctest::Approx(0.0).epsilon(1e-12));

  JointDistribution point({axis("A", 4)}, {0.0, 1.0, 0.0, 0.0});
  CHECK(information(point, 0) == doctest::Approx(2.0).epsilon(1e-12));

  JointDistribution bell = bell_table();
  CHECK(joint_entropy(bell) == doctest::Approx(1.0).epsilon(1e-12));
  const std::size_t both[] = {0, 1};
  CHECK(information(bell, both) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conditional information is evaluated at one outcome") {
  JointDistribution bell = bell_table();
  CHECK(conditional_information(bell, 1, 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(conditional_information(bell, 1, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));

  JointDistribution zero_row({axis("A", 2), axis("B", 2)}, {0.5, 0.5, 0.0, 0.0});
  CHECK(conditional_information(zero_row, 1, 0, 0) == doctest::Approx(0.0).epsilon(1e-12));
  try {
    conditional_information(zero_row, 1, 0, 1);
    FAIL("expected NullSupport");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NullSupport);
  }
}

TEST_CASE("relative information averages the supported conditionals") {
  JointDistribution bell = bell_table();
  CHECK(relative_information(bell, 1, 0) == doctest::Approx(1.0).epsilon(1e-12));

  JointDistribution indep({axis("A", 2), axis("B", 2)}, {0.25, 0.25, 0.25, 0.25});
  CHECK(relative_information(indep, 1, 0) == doctest::Approx(0.0).epsilon(1e-12));

  // Half the mass pins B, half leaves it uniform: expectation is 1/2 bit.
  JointDistribution mixed({axis("A", 2), axis("B", 2)}, {0.5, 0.0, 0.25, 0.25});
  CHECK(relative_information(mixed, 1, 0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("closed form and sliced relative information agree") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t na = 2 + rng.integer(3);
    std::size_t nb = 2 + rng.integer(3);
    JointDistribution jd = random_table(rng, na, nb);
    double sliced = relative_information(jd, 1, 0);
    double closed = relative_information_closed_form(jd, 1, 0);
    CHECK(std::abs(sliced - closed) <= 1e-9);
  }
}

TEST_CASE("relative information satisfies the additive identity") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t na = 2 + rng.integer(3);
    std::size_t nb = 2 + rng.integer(3);
    JointDistribution jd = random_table(rng, na, nb);
    double lhs = relative_information(jd, 1, 0);
    double rhs = information(jd, 1) + mutual_information(jd, 0, 1);
    CHECK(std::abs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("chains condition on the fused variable") {
  // C copies A; B is independent noise.
  JointDistribution jd({axis("A", 2), axis("B", 2), axis("C", 2)},
                       {0.25, 0.0, 0.25, 0.0, 0.0, 0.25, 0.0, 0.25});
  const std::size_t chain[] = {0, 1};
  CHECK(relative_information(jd, 2, chain) == doctest::Approx(1.0).epsilon(1e-12));
  const std::size_t noise[] = {1};
  CHECK(relative_information(jd, 2, noise) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("mutual information is symmetric and bounded") {
  JointDistribution bell = bell_table();
  CHECK(mutual_information(bell, 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mutual_information(bell, 1, 0) == doctest::Approx(1.0).epsilon(1e-12));

  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    JointDistribution jd = random_table(rng, 2 + rng.integer(3), 2 + rng.integer(3));
    double m = mutual_information(jd, 0, 1);
    CHECK(m >= -1e-12);
    CHECK(std::abs(m - mutual_information(jd, 1, 0)) <= 1e-12);
  }

  // Group overload on a 3-axis table: {A} vs {B, C}.
  JointDistribution jd({axis("A", 2), axis("B", 2), axis("C", 2)},
                       {0.25, 0.0, 0.25, 0.0, 0.0, 0.25, 0.0, 0.25});
  const std::size_t a[] = {0};
  const std::size_t bc[] = {1, 2};
  CHECK(mutual_information(jd, a, bc) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("von Neumann entropy and quantum mutual information") {
  CHECK(von_neumann_entropy(pure_density(StateVector::basis(2, 0))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(Operator::density(0.5 * Matrix::Identity(2, 2))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(Operator::density(0.25 * Matrix::Identity(4, 4))) ==
        doctest::Approx(2.0).epsilon(1e-12));

  Matrix skewed = Matrix::Zero(2, 2);
  skewed(0, 0) = Complex(0.25, 0);
  skewed(1, 1) = Complex(0.75, 0);
  CHECK(von_neumann_entropy(Operator::density(skewed)) ==
        doctest::Approx(kHQuarter).epsilon(1e-12));

  Vector bell(4);
  const double s = 1.0 / std::sqrt(2.0);
  bell << Complex(s, 0), Complex(0, 0), Complex(0, 0), Complex(s, 0);
  Operator phi = pure_density(StateVector::normalized(bell, 1e-9));
  CHECK(quantum_mutual_information(phi, {2, 2}, {0}) == doctest::Approx(2.0).epsilon(1e-9));

  Operator prod = pure_density(tensor(StateVector::basis(2, 0), StateVector::basis(2, 1)));
  CHECK(quantum_mutual_information(prod, {2, 2}, {0}) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("info reports gather every measure for one target") {
  JointDistribution bell = bell_table();
  const std::size_t chain[] = {0};
  InfoReport report = info_report(bell, 1, chain);
  CHECK(report.target == "B");
  CHECK(report.given == "A");
  CHECK(report.i_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.entropy == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.information == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(report.relative == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.mutual == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(report.conditional.size() == 2);
  CHECK(report.conditional[0].first == "0");
  CHECK(report.conditional[0].second == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(report.unsupported.empty());

  JointDistribution zero_row({axis("A", 2), axis("B", 2)}, {0.5, 0.5, 0.0, 0.0});
  InfoReport gaps = info_report(zero_row, 1, chain);
  REQUIRE(gaps.unsupported.size() == 1);
  CHECK(gaps.unsupported[0] == "1");
  CHECK(gaps.conditional.size() == 1);

  nlohmann::json j = to_json(report);
  CHECK(j["i_max"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j["relative"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(j.contains("conditional"));
}
