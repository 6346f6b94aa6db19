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

#include "relinfo/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <sstream>

namespace relinfo {

Operator measurement_hamiltonian(const Observable& target, Index pointer_dim,
                                 const PointerScheme& scheme, double omega) {
  if (!(omega > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "coupling rate must be positive");
  }
  const Index n_outcomes = static_cast<Index>(target.n_outcomes());
  if (pointer_dim <= n_outcomes) {
    throw Error(ErrorKind::InvalidArgument,
                "pointer needs more basis states than the variable has outcomes: " +
                    std::to_string(pointer_dim) + " <= " + std::to_string(n_outcomes));
  }
  if (scheme.ready < 0 || scheme.ready >= pointer_dim) {
    throw Error(ErrorKind::InvalidArgument, "ready state out of range");
  }
  if (static_cast<Index>(scheme.record.size()) != n_outcomes) {
    throw Error(ErrorKind::InvalidArgument,
                "need exactly one record slot per outcome, got " +
                    std::to_string(scheme.record.size()) + " for " +
                    std::to_string(n_outcomes));
  }
  for (std::size_t n = 0; n < scheme.record.size(); ++n) {
    Index slot = scheme.record[n];
    if (slot < 0 || slot >= pointer_dim) {
      throw Error(ErrorKind::InvalidArgument, "record slot out of range");
    }
    if (slot == scheme.ready) {
      throw Error(ErrorKind::InvalidArgument, "record slots must differ from the ready state");
    }
    for (std::size_t m = 0; m < n; ++m) {
      if (scheme.record[m] == slot) {
        throw Error(ErrorKind::InvalidArgument, "record slots must be distinct");
      }
    }
  }

  // Per outcome n: omega * P_n (x) i(|b_n><r| - |r><b_n|). Each pointer block
  // generates a rotation from ready toward the outcome's record slot.
  const Index sys_dim = target.dim();
  Matrix h = Matrix::Zero(sys_dim * pointer_dim, sys_dim * pointer_dim);
  for (Index n = 0; n < n_outcomes; ++n) {
    Matrix block = Matrix::Zero(pointer_dim, pointer_dim);
    block(scheme.record[n], scheme.ready) = Complex(0.0, 1.0);
    block(scheme.ready, scheme.record[n]) = Complex(0.0, -1.0);
    const Matrix& proj = target.outcome(static_cast<std::size_t>(n)).projector.entries();
    for (Index i = 0; i < sys_dim; ++i) {
      for (Index j = 0; j < sys_dim; ++j) {
        if (proj(i, j) == Complex(0.0, 0.0)) continue;
        h.block(i * pointer_dim, j * pointer_dim, pointer_dim, pointer_dim) +=
            omega * proj(i, j) * block;
      }
    }
  }
  return Operator::hermitian(std::move(h));
}

std::vector<double> uniform_times(std::size_t n, double duration) {
  if (n < 2) {
    throw Error(ErrorKind::InvalidArgument, "a sweep needs at least two samples");
  }
  if (!(duration > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "sweep duration must be positive");
  }
  std::vector<double> times(n);
  for (std::size_t k = 0; k < n; ++k) {
    times[k] = duration * static_cast<double>(k) / static_cast<double>(n - 1);
  }
  times.front() = 0.0;
  times.back() = duration;
  return times;
}

Sweep run_sweep(const Operator& rho0, const Operator& h, std::span<const WatchSpec> watches,
                std::span<const double> times, double omega) {
  if (rho0.kind() != OpKind::Density) {
    throw Error(ErrorKind::NotDensity, "sweeps start from a density operator");
  }
  if (rho0.dim() != h.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state dim " + std::to_string(rho0.dim()) + " vs generator dim " +
                    std::to_string(h.dim()));
  }
  if (times.empty() || times.front() != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "sweep times must start at exactly 0");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (times[k] <= times[k - 1]) {
      throw Error(ErrorKind::InvalidArgument, "sweep times must increase strictly");
    }
  }
  for (const auto& w : watches) {
    if (w.subsystem.dim() != rho0.dim() || w.target.dim() != rho0.dim()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "watch '" + w.target.name() + "' does not act on the full space");
    }
  }

  Sweep sweep;
  sweep.omega = omega;
  sweep.duration = times.back();
  sweep.times.assign(times.begin(), times.end());

  for (double t : times) {
    Operator u = expm_unitary(h, t);
    Matrix m = u.entries() * rho0.entries() * u.entries().adjoint();
    m = (m + Matrix(m.adjoint())) / 2.0;  // scrub rounding off hermiticity
    SweepSample sample{t, Operator::density(std::move(m)), {}};
    for (const auto& w : watches) {
      JointDistribution jd = born_joint(sample.state, w.subsystem, w.target);
      std::size_t target = jd.n_vars() - 1;
      std::vector<std::size_t> chain(target);
      std::iota(chain.begin(), chain.end(), 0);
      sample.reports.push_back(info_report(jd, target, chain));
    }
    sweep.samples.push_back(std::move(sample));
  }
  return sweep;
}

Operator full_rank_variant(const Operator& rho0, double epsilon) {
  if (rho0.kind() != OpKind::Density) {
    throw Error(ErrorKind::NotDensity, "full_rank_variant needs a density operator");
  }
  if (!(epsilon > 0.0) || epsilon >= 1.0) {
    throw Error(ErrorKind::InvalidArgument, "epsilon must lie strictly between 0 and 1");
  }
  const Index d = rho0.dim();
  Matrix m = (1.0 - epsilon) * rho0.entries();
  m += (epsilon / static_cast<double>(d)) * Matrix::Identity(d, d);
  return Operator::density(std::move(m));
}

void sweep_csv(const Sweep& sweep, std::size_t watch, std::ostream& out) {
  if (!sweep.samples.empty() && watch >= sweep.samples.front().reports.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "sweep has no watch " + std::to_string(watch));
  }
  out << "t,omega_t,I_mutual_bits,I_relative_bits,I_target_bits\n";
  char buf[256];
  for (const auto& sample : sweep.samples) {
    const InfoReport& r = sample.reports.at(watch);
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g\n", sample.t,
                  sweep.omega * sample.t, r.mutual, r.relative, r.information);
    out << buf;
  }
}

std::string sweep_csv(const Sweep& sweep, std::size_t watch) {
  std::ostringstream out;
  sweep_csv(sweep, watch, out);
  return out.str();
}

} // namespace relinfo
