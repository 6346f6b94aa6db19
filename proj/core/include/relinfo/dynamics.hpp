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

#ifndef RELINFO_DYNAMICS_HPP
#define RELINFO_DYNAMICS_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "relinfo/facts.hpp"

namespace relinfo {

/// How a pointer register records the outcomes of a measured variable: the
/// ready state it starts in and the basis state each outcome gets written
/// to. Record slots must be distinct and distinct from ready, so the pointer
/// needs strictly more basis states than the variable has outcomes.
struct PointerScheme {
  Index ready = 0;
  std::vector<Index> record;
};

/// Coupling Hamiltonian that rotates the pointer from its ready state toward
/// the record state matching each outcome of `target`, at angular rate
/// `omega`. Acts on the product space (target's space) x (pointer register);
/// a quarter period pi / (2 omega) completes the measurement.
Operator measurement_hamiltonian(const Observable& target, Index pointer_dim,
                                 const PointerScheme& scheme, double omega);

/// One conditioning subsystem plus one target variable to track during a
/// sweep. Both must act on the full product space.
struct WatchSpec {
  ClassicalSubsystem subsystem;
  Observable target;
};

struct SweepSample {
  double t = 0.0;
  Operator state;
  std::vector<InfoReport> reports;  ///< one per watch, in watch order
};

struct Sweep {
  double omega = 0.0;
  double duration = 0.0;
  std::vector<double> times;
  std::vector<SweepSample> samples;
};

/// `n` evenly spaced times from 0 to `duration` inclusive; n >= 2.
std::vector<double> uniform_times(std::size_t n, double duration);

/// Evolves `rho0` under exp(-i h t) at each time and evaluates every watch.
/// Times must start at exactly 0 and increase strictly; `omega` is carried
/// into the result for reporting.
Sweep run_sweep(const Operator& rho0, const Operator& h, std::span<const WatchSpec> watches,
                std::span<const double> times, double omega);

/// Mixes a state with the maximally mixed state: (1-eps) rho + eps 1/d.
/// Makes every outcome supported so conditioning never hits null support.
Operator full_rank_variant(const Operator& rho0, double epsilon);

/// CSV with header t,omega_t,I_mutual_bits,I_relative_bits,I_target_bits and
/// one row per sample at 12 significant digits, for the given watch.
std::string sweep_csv(const Sweep& sweep, std::size_t watch = 0);
void sweep_csv(const Sweep& sweep, std::size_t watch, std::ostream& out);

} // namespace relinfo

#endif // RELINFO_DYNAMICS_HPP
