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

// Microbenchmarks for the hot paths: spectral decomposition, Born
// statistics, the information measures, sweep evolution, and the scenario
// parser. All inputs are seeded deterministically so runs are comparable.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <benchmark/benchmark.h>

#include "relinfo/distributions.hpp"
#include "relinfo/dynamics.hpp"
#include "relinfo/infomeasures.hpp"
#include "relinfo/linops.hpp"
#include "relinfo/observables.hpp"
#include "relinfo/sdl.hpp"

namespace {

using namespace relinfo;

Operator random_hermitian(Index dim, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix r(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) r(i, j) = Complex(u(gen), u(gen));
  Matrix h = 0.5 * (r + r.adjoint());
  return Operator::hermitian(std::move(h));
}

void bm_eig_hermitian(benchmark::State& state) {
  const Operator h = random_hermitian(state.range(0), 0x5eed);
  for (auto _ : state) {
    auto spaces = eig_hermitian(h);
    benchmark::DoNotOptimize(spaces);
  }
}
BENCHMARK(bm_eig_hermitian)->RangeMultiplier(2)->Range(8, 64);

void bm_expm_unitary(benchmark::State& state) {
  const Operator h = random_hermitian(state.range(0), 0x5eed);
  for (auto _ : state) {
    Operator u = expm_unitary(h, 0.7);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(bm_expm_unitary)->RangeMultiplier(2)->Range(8, 64);

// Three-qubit GHZ state with one pointer variable per qubit.
void bm_born_joint(benchmark::State& state) {
  const std::vector<Index> dims{2, 2, 2};
  Vector amps = Vector::Zero(8);
  amps(0) = amps(7) = 1.0 / std::sqrt(2.0);
  const Operator rho = pure_density(StateVector(std::move(amps)));
  const Observable z = make_observable("Z", pauli_z());
  std::vector<Observable> vars;
  for (std::size_t k = 0; k < 3; ++k) vars.push_back(lift_observable(z, dims, k));
  for (auto _ : state) {
    JointDistribution jd = born_joint(rho, vars);
    benchmark::DoNotOptimize(jd);
  }
}
BENCHMARK(bm_born_joint);

void bm_relative_information(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(0xd157 + n);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<VariableAxis> axes;
  for (std::size_t v = 0; v < 3; ++v) {
    VariableAxis ax;
    ax.name = std::string(1, static_cast<char>('a' + v));
    for (std::size_t k = 0; k < n; ++k) {
      ax.eigenvalues.push_back(static_cast<double>(k));
      ax.labels.push_back(std::to_string(k));
    }
    axes.push_back(std::move(ax));
  }
  std::vector<double> table(n * n * n);
  double total = 0.0;
  for (double& p : table) total += (p = u(gen));
  for (double& p : table) p /= total;
  const JointDistribution jd(std::move(axes), std::move(table));
  for (auto _ : state) {
    double bits = relative_information(jd, 0, 1);
    benchmark::DoNotOptimize(bits);
  }
}
BENCHMARK(bm_relative_information)->Arg(4)->Arg(8)->Arg(16);

// Qubit copied into a three-level pointer, conditional report at each step.
void bm_run_sweep(benchmark::State& state) {
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  const std::vector<Index> dims{2, 3};
  const Observable z = make_observable("Z", pauli_z());
  const Observable z_full = lift_observable(z, dims, 0);
  const Observable ptr = pointer_observable("P", 3, {"ready", "saw0", "saw1"});
  const Observable ptr_full = lift_observable(ptr, dims, 1);
  const auto chain = make_classical_subsystem("CP", {ptr_full});
  const Operator h = measurement_hamiltonian(z, 3, PointerScheme{0, {1, 2}}, 1.0);
  Vector amps = Vector::Zero(6);
  amps(0) = 0.5;
  amps(3) = std::sqrt(3.0) / 2.0;
  const Operator rho0 = pure_density(StateVector(std::move(amps)));
  const std::vector<WatchSpec> watches{{chain, z_full}};
  const auto times = uniform_times(samples, std::numbers::pi / 2.0);
  for (auto _ : state) {
    Sweep sweep = run_sweep(rho0, h, watches, times, 1.0);
    benchmark::DoNotOptimize(sweep);
  }
}
BENCHMARK(bm_run_sweep)->Arg(16)->Arg(64);

constexpr std::string_view kParseSource = R"(# paired registers with cross checks
system Q 2
system R 2 left right

state phi on Q,R = 1/sqrt(2)|0,left> + 1/sqrt(2)|1,right>

obs ZQ Q pauli Z
obs ZR R pointer
classical CR = { ZR }

step set_state phi
step report CR targets ZQ

assert mutual ZQ ZR = 1
assert relative ZQ given CR = 1
assert relfact ZQ given CR = yes
assert prob ZQ,ZR at +1,left = 0.5
)";

void bm_sdl_parse(benchmark::State& state) {
  for (auto _ : state) {
    sdl::ParseResult result = sdl::parse(kParseSource);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(bm_sdl_parse);

}  // namespace

BENCHMARK_MAIN();
