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

#include "relinfo/props.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "relinfo/facts.hpp"

namespace relinfo {

nlohmann::json matrix_to_json(const Matrix& m) {
  std::vector<double> re, im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  Index rows = j.at("rows").get<Index>();
  Index cols = j.at("cols").get<Index>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (re.size() != static_cast<std::size_t>(rows * cols) || im.size() != re.size()) {
    throw Error(ErrorKind::Io, "matrix_from_json: entry count does not match shape");
  }
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c, ++k) {
      m(r, c) = Complex(re[k].get<double>(), im[k].get<double>());
    }
  }
  return m;
}

nlohmann::json observable_to_json(const Observable& obs) {
  return nlohmann::json{{"name", obs.name()}, {"op", matrix_to_json(obs.op().entries())}};
}

Observable observable_from_json(const nlohmann::json& j) {
  return make_observable(j.at("name").get<std::string>(),
                         Operator::hermitian(matrix_from_json(j.at("op"))));
}

CompatiblePair random_compatible_pair(Rng& rng, Index dim) {
  Operator u = rng.unitary(dim);
  auto spectrum = [&] {
    Vector d(dim);
    while (true) {
      std::set<long> seen;
      for (Index k = 0; k < dim; ++k) {
        long v = static_cast<long>(rng.integer(static_cast<std::uint64_t>(dim)));
        d(k) = Complex(static_cast<double>(v), 0.0);
        seen.insert(v);
      }
      if (seen.size() >= 2) return d;
    }
  };
  auto shared_basis_obs = [&](const char* name) {
    Matrix m = u.entries() * spectrum().asDiagonal() * u.entries().adjoint();
    m = (m + Matrix(m.adjoint())) / 2.0;
    return make_observable(name, Operator::hermitian(std::move(m)));
  };
  Observable a = shared_basis_obs("A");
  Observable b = shared_basis_obs("B");
  return CompatiblePair{rng.density(dim), std::move(a), std::move(b)};
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

std::string describe(double measured, double bound, const char* relation) {
  std::ostringstream os;
  os.precision(15);
  os << measured << " " << relation << " " << bound << " violated";
  return os.str();
}

JointDistribution table_from_json(const nlohmann::json& j) {
  std::size_t na = j.at("na").get<std::size_t>();
  std::size_t nb = j.at("nb").get<std::size_t>();
  std::vector<double> p = j.at("p").get<std::vector<double>>();
  auto axis = [](std::string name, std::size_t n) {
    VariableAxis ax;
    ax.name = name;
    for (std::size_t k = 0; k < n; ++k) {
      ax.eigenvalues.push_back(static_cast<double>(k));
      ax.labels.push_back(name + std::to_string(k));
    }
    return ax;
  };
  return JointDistribution({axis("a", na), axis("b", nb)}, std::move(p));
}

nlohmann::json random_table_inputs(Rng& rng) {
  std::size_t na = 2 + rng.integer(3);
  std::size_t nb = 2 + rng.integer(3);
  return nlohmann::json{{"na", na}, {"nb", nb}, {"p", rng.distribution(na * nb)}};
}

nlohmann::json quantum_pair_inputs(Rng& rng, Index dim) {
  CompatiblePair pair = random_compatible_pair(rng, dim);
  return nlohmann::json{{"rho", matrix_to_json(pair.rho.entries())},
                        {"a", observable_to_json(pair.a)},
                        {"b", observable_to_json(pair.b)}};
}

struct QuantumPair {
  Operator rho;
  Observable a;
  Observable b;
};

QuantumPair quantum_pair_from(const nlohmann::json& j) {
  return QuantumPair{Operator::density(matrix_from_json(j.at("rho"))),
                     observable_from_json(j.at("a")), observable_from_json(j.at("b"))};
}

using Failure = std::optional<std::string>;

// --- mutual_information_symmetric ---------------------------------------

nlohmann::json gen_mutual_symmetric(Rng& rng, std::size_t) {
  Index da = 2 + static_cast<Index>(rng.integer(2));
  Index db = 2 + static_cast<Index>(rng.integer(2));
  std::vector<Index> dims{da, db};
  Observable a = lift_observable(make_observable("A", rng.hermitian(da)), dims, 0);
  Observable b = lift_observable(make_observable("B", rng.hermitian(db)), dims, 1);
  return nlohmann::json{{"rho", matrix_to_json(rng.density(da * db).entries())},
                        {"a", observable_to_json(a)},
                        {"b", observable_to_json(b)}};
}

Failure eval_mutual_symmetric(const nlohmann::json& j, double tol) {
  QuantumPair in = quantum_pair_from(j);
  const Observable ab[] = {in.a, in.b};
  const Observable ba[] = {in.b, in.a};
  JointDistribution jd1 = born_joint(in.rho, ab);
  JointDistribution jd2 = born_joint(in.rho, ba);
  double m1 = mutual_information(jd1, 0, 1);
  double m2 = mutual_information(jd2, 0, 1);
  if (std::abs(m1 - m2) > tol) return describe(m1, m2, "==");
  const std::size_t left[] = {0};
  const std::size_t right[] = {1};
  double mg = mutual_information(jd1, left, right);
  if (std::abs(m1 - mg) > tol) return describe(m1, mg, "==");
  return std::nullopt;
}

// --- relative_information_asymmetric -------------------------------------

nlohmann::json gen_relative_asymmetric(Rng& rng, std::size_t trial) {
  if (trial == 0) {
    // One side is a point mass, the other maximally mixed: the two
    // directions of relative information differ by a full bit.
    std::vector<Index> dims{2, 4};
    Matrix rho = Matrix::Zero(8, 8);
    for (Index k = 0; k < 4; ++k) rho(k, k) = Complex(0.25, 0.0);
    Observable a = lift_observable(make_observable("A", pauli_z()), dims, 0);
    Observable b = lift_observable(pointer_observable("B", 4), dims, 1);
    return nlohmann::json{{"rho", matrix_to_json(rho)},
                          {"a", observable_to_json(a)},
                          {"b", observable_to_json(b)},
                          {"min_gap", 0.9}};
  }
  return random_table_inputs(rng);
}

Failure eval_relative_asymmetric(const nlohmann::json& j, double tol) {
  JointDistribution jd =
      j.contains("p") ? table_from_json(j)
                      : [&] {
                          QuantumPair in = quantum_pair_from(j);
                          const Observable pair[] = {in.a, in.b};
                          return born_joint(in.rho, pair);
                        }();
  double r_ab = relative_information(jd, 0, 1);
  double r_ba = relative_information(jd, 1, 0);
  double i_a = information(jd, 0);
  double i_b = information(jd, 1);
  if (std::abs((r_ab - r_ba) - (i_a - i_b)) > tol) {
    return describe(r_ab - r_ba, i_a - i_b, "==");
  }
  if (j.contains("min_gap") && r_ab - r_ba < j["min_gap"].get<double>()) {
    return describe(r_ab - r_ba, j["min_gap"].get<double>(), ">=");
  }
  return std::nullopt;
}

// --- conditioning_never_hurts ---------------------------------------------

nlohmann::json gen_conditioning_never_hurts(Rng& rng, std::size_t) {
  return quantum_pair_inputs(rng, 3 + static_cast<Index>(rng.integer(4)));
}

Failure eval_conditioning_never_hurts(const nlohmann::json& j, double tol) {
  QuantumPair in = quantum_pair_from(j);
  const Observable pair[] = {in.a, in.b};
  JointDistribution jd = born_joint(in.rho, pair);
  double rel = relative_information(jd, 0, 1);
  double own = information(jd, 0);
  if (rel < own - tol) return describe(rel, own, ">=");
  return std::nullopt;
}

// --- mutual_information_bounded --------------------------------------------

nlohmann::json gen_mutual_bounded(Rng& rng, std::size_t trial) {
  if (trial == 0) {
    // Maximally entangled pair measured in matching bases saturates the
    // bound, which must force a relative fact in both directions.
    std::vector<Index> dims{2, 2};
    Matrix rho = Matrix::Zero(4, 4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = Complex(0.5, 0.0);
    Observable a = lift_observable(make_observable("A", pauli_z()), dims, 0);
    Observable b = lift_observable(make_observable("B", pauli_z()), dims, 1);
    return nlohmann::json{{"rho", matrix_to_json(rho)},
                          {"a", observable_to_json(a)},
                          {"b", observable_to_json(b)},
                          {"saturating", true}};
  }
  if (trial == 1) {
    return nlohmann::json{
        {"na", 2}, {"nb", 2}, {"p", std::vector<double>{0.5, 0.0, 0.0, 0.5}},
        {"saturating", true}};
  }
  return quantum_pair_inputs(rng, 3 + static_cast<Index>(rng.integer(4)));
}

Failure eval_mutual_bounded(const nlohmann::json& j, double tol) {
  JointDistribution jd =
      j.contains("p") ? table_from_json(j)
                      : [&] {
                          QuantumPair in = quantum_pair_from(j);
                          const Observable pair[] = {in.a, in.b};
                          return born_joint(in.rho, pair);
                        }();
  double m = mutual_information(jd, 0, 1);
  double cap = std::min(max_information(jd, 0), max_information(jd, 1));
  if (m > cap + tol) return describe(m, cap, "<=");
  if (j.value("saturating", false)) {
    if (std::abs(m - cap) > tol) return describe(m, cap, "==");
    if (is_relative_fact(jd, 0, std::size_t{1}, 1e-6).status != FactStatus::RelativeFact) {
      return "saturated bound without a relative fact";
    }
  }
  return std::nullopt;
}

// --- facts_carry_no_mutual_information --------------------------------------

nlohmann::json gen_facts_no_mutual(Rng& rng, std::size_t) {
  Index dim = 3 + static_cast<Index>(rng.integer(4));
  CompatiblePair pair = random_compatible_pair(rng, dim);
  JointDistribution jd = born_single(pair.rho, pair.a);
  std::size_t pick = rng.integer(pair.a.n_outcomes());
  std::size_t cell[] = {pick};
  if (jd.probability(cell) <= 1e-6) {
    double best = -1.0;
    for (std::size_t k = 0; k < pair.a.n_outcomes(); ++k) {
      std::size_t c[] = {k};
      if (jd.probability(c) > best) {
        best = jd.probability(c);
        pick = k;
      }
    }
  }
  return nlohmann::json{{"rho", matrix_to_json(pair.rho.entries())},
                        {"a", observable_to_json(pair.a)},
                        {"b", observable_to_json(pair.b)},
                        {"outcome", pick}};
}

Failure eval_facts_no_mutual(const nlohmann::json& j, double tol) {
  QuantumPair in = quantum_pair_from(j);
  std::size_t pick = j.at("outcome").get<std::size_t>();
  const Matrix& p = in.a.outcome(pick).projector.entries();
  double w = trace_product(in.a.outcome(pick).projector, in.rho).real();
  Matrix reduced = p * in.rho.entries() * p / w;
  reduced = (reduced + Matrix(reduced.adjoint())) / 2.0;
  Operator rho_post = Operator::density(std::move(reduced));
  const Observable pair[] = {in.a, in.b};
  JointDistribution jd = born_joint(rho_post, pair);
  if (is_fact(jd, 0, 1e-6).status != FactStatus::Fact) return "projection did not produce a fact";
  double m = mutual_information(jd, 0, 1);
  if (m > tol) return describe(m, 0.0, "==");
  return std::nullopt;
}

// --- aggregate_max_iff_pointwise_max -----------------------------------------

nlohmann::json gen_aggregate_pointwise(Rng& rng, std::size_t trial) {
  std::size_t na = 2 + rng.integer(3);
  std::size_t nb = 2 + rng.integer(3);
  bool sharp = trial % 2 == 0;
  std::vector<double> p(na * nb, 0.0);
  if (sharp) {
    std::vector<double> q = rng.distribution(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      std::size_t a = rng.integer(na);
      p[a * nb + b] = q[b];
    }
  } else {
    p = rng.distribution(na * nb);
  }
  return nlohmann::json{{"na", na}, {"nb", nb}, {"p", p}, {"sharp", sharp}};
}

Failure eval_aggregate_pointwise(const nlohmann::json& j, double tol) {
  JointDistribution jd = table_from_json(j);
  double aggregate = relative_information(jd, 0, 1);
  double cap = max_information(jd, 0);
  const std::size_t keep[] = {1};
  JointDistribution pb = marginal(jd, keep);
  double lo = cap + 1.0, hi = -1.0;
  for (std::size_t b = 0; b < pb.axis(0).size(); ++b) {
    std::size_t cell[] = {b};
    if (pb.probability(cell) <= kSupportFloor) continue;
    double at = conditional_information(jd, 0, 1, b);
    lo = std::min(lo, at);
    hi = std::max(hi, at);
  }
  if (aggregate < lo - tol || aggregate > hi + tol) {
    return describe(aggregate, lo, "between pointwise extremes");
  }
  if (j.value("sharp", false)) {
    if (std::abs(aggregate - cap) > tol) return describe(aggregate, cap, "==");
    if (std::abs(hi - cap) > tol || std::abs(lo - cap) > tol) {
      return describe(lo, cap, "== (pointwise)");
    }
  }
  return std::nullopt;
}

// --- self_conditioning_saturates ---------------------------------------------

nlohmann::json gen_self_conditioning(Rng& rng, std::size_t) {
  Index dim = 2 + static_cast<Index>(rng.integer(5));
  Index rank = 1 + static_cast<Index>(rng.integer(static_cast<std::uint64_t>(dim)));
  return nlohmann::json{
      {"rho", matrix_to_json(rng.density(dim, rank).entries())},
      {"a", observable_to_json(make_observable("A", rng.hermitian(dim)))}};
}

Failure eval_self_conditioning(const nlohmann::json& j, double tol) {
  Operator rho = Operator::density(matrix_from_json(j.at("rho")));
  Observable a = observable_from_json(j.at("a"));
  const Observable pair[] = {a, a};
  JointDistribution jd = born_joint(rho, pair);
  double rel = relative_information(jd, 1, 0);
  double cap = max_information(jd, 1);
  if (std::abs(rel - cap) > tol) return describe(rel, cap, "==");
  return std::nullopt;
}

// --- co_measurement_invariance -------------------------------------------------

nlohmann::json gen_co_measurement(Rng& rng, std::size_t) {
  Index half = 2 + static_cast<Index>(rng.integer(2));
  Index dim = 2 * half;
  Operator u = rng.unitary(dim);
  Vector coarse(dim), fine(dim);
  for (Index k = 0; k < dim; ++k) {
    coarse(k) = Complex(static_cast<double>(k / 2), 0.0);
    fine(k) = Complex(static_cast<double>(k), 0.0);
  }
  Matrix r = Matrix::Zero(dim, dim);
  for (Index blk = 0; blk < half; ++blk) {
    Matrix g(2, 2);
    for (Index i = 0; i < 2; ++i) {
      for (Index c = 0; c < 2; ++c) g(i, c) = rng.complex_gaussian();
    }
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    r.block(2 * blk, 2 * blk, 2, 2) = q;
  }
  auto conjugate = [&](const Matrix& basis, const Vector& d) {
    Matrix m = basis * d.asDiagonal() * basis.adjoint();
    return Matrix((m + Matrix(m.adjoint())) / 2.0);
  };
  Matrix ub = u.entries() * r;
  return nlohmann::json{
      {"rho", matrix_to_json(rng.density(dim).entries())},
      {"a", observable_to_json(make_observable("A", Operator::hermitian(conjugate(u.entries(), coarse))))},
      {"b", observable_to_json(make_observable("B", Operator::hermitian(conjugate(u.entries(), fine))))},
      {"c", observable_to_json(make_observable("C", Operator::hermitian(conjugate(ub, fine))))}};
}

Failure eval_co_measurement(const nlohmann::json& j, double tol) {
  Operator rho = Operator::density(matrix_from_json(j.at("rho")));
  Observable a = observable_from_json(j.at("a"));
  Observable b = observable_from_json(j.at("b"));
  Observable c = observable_from_json(j.at("c"));
  if (!commutes(a, b) || !commutes(a, c)) return "companions do not commute with the target";
  double alone = information(born_single(rho, a), 0);
  const Observable with_b[] = {a, b};
  const Observable with_c[] = {a, c};
  double beside_b = information(born_joint(rho, with_b), 0);
  double beside_c = information(born_joint(rho, with_c), 0);
  if (std::abs(alone - beside_b) > tol) return describe(beside_b, alone, "==");
  if (std::abs(alone - beside_c) > tol) return describe(beside_c, alone, "==");
  return std::nullopt;
}

// --- classical_bounded_by_quantum ------------------------------------------------

nlohmann::json gen_classical_vs_quantum(Rng& rng, std::size_t) {
  Index da = 2 + static_cast<Index>(rng.integer(2));
  Index db = 2 + static_cast<Index>(rng.integer(2));
  std::vector<Index> dims{da, db};
  Index rank = 1 + static_cast<Index>(rng.integer(static_cast<std::uint64_t>(da * db)));
  return nlohmann::json{
      {"da", da},
      {"db", db},
      {"rho", matrix_to_json(rng.density(da * db, rank).entries())},
      {"a", observable_to_json(make_observable("A", rng.hermitian(da)))},
      {"b", observable_to_json(make_observable("B", rng.hermitian(db)))}};
}

Failure eval_classical_vs_quantum(const nlohmann::json& j, double tol) {
  Index da = j.at("da").get<Index>();
  Index db = j.at("db").get<Index>();
  std::vector<Index> dims{da, db};
  Operator rho = Operator::density(matrix_from_json(j.at("rho")));
  Observable a = lift_observable(observable_from_json(j.at("a")), dims, 0);
  Observable b = lift_observable(observable_from_json(j.at("b")), dims, 1);
  const Observable pair[] = {a, b};
  double classical = mutual_information(born_joint(rho, pair), 0, 1);
  double quantum = quantum_mutual_information(rho, dims, {0});
  if (classical > quantum + tol) return describe(classical, quantum, "<=");
  return std::nullopt;
}

// --- pure_state_mutual_bound --------------------------------------------------------

nlohmann::json gen_pure_mutual(Rng& rng, std::size_t) {
  Index da = 2 + static_cast<Index>(rng.integer(2));
  Index db = 2 + static_cast<Index>(rng.integer(2));
  Matrix psi = rng.pure_state(da * db).amplitudes();
  return nlohmann::json{
      {"da", da},
      {"db", db},
      {"psi", matrix_to_json(psi)},
      {"a", observable_to_json(make_observable("A", rng.hermitian(da)))},
      {"b", observable_to_json(make_observable("B", rng.hermitian(db)))}};
}

Failure eval_pure_mutual(const nlohmann::json& j, double tol) {
  Index da = j.at("da").get<Index>();
  Index db = j.at("db").get<Index>();
  std::vector<Index> dims{da, db};
  Matrix amp = matrix_from_json(j.at("psi"));
  Operator rho = pure_density(StateVector::normalized(Vector(amp.col(0)), 1e-9));
  Observable a = lift_observable(observable_from_json(j.at("a")), dims, 0);
  Observable b = lift_observable(observable_from_json(j.at("b")), dims, 1);
  const Observable pair[] = {a, b};
  double classical = mutual_information(born_joint(rho, pair), 0, 1);
  double quantum = quantum_mutual_information(rho, dims, {0});
  if (classical > quantum / 2.0 + tol) return describe(classical, quantum / 2.0, "<=");
  return std::nullopt;
}

struct PropertyDef {
  const char* name;
  nlohmann::json (*gen)(Rng&, std::size_t);
  Failure (*eval)(const nlohmann::json&, double);
};

constexpr PropertyDef kProperties[] = {
    {"mutual_information_symmetric", gen_mutual_symmetric, eval_mutual_symmetric},
    {"relative_information_asymmetric", gen_relative_asymmetric, eval_relative_asymmetric},
    {"conditioning_never_hurts", gen_conditioning_never_hurts, eval_conditioning_never_hurts},
    {"mutual_information_bounded", gen_mutual_bounded, eval_mutual_bounded},
    {"facts_carry_no_mutual_information", gen_facts_no_mutual, eval_facts_no_mutual},
    {"aggregate_max_iff_pointwise_max", gen_aggregate_pointwise, eval_aggregate_pointwise},
    {"self_conditioning_saturates", gen_self_conditioning, eval_self_conditioning},
    {"co_measurement_invariance", gen_co_measurement, eval_co_measurement},
    {"classical_bounded_by_quantum", gen_classical_vs_quantum, eval_classical_vs_quantum},
    {"pure_state_mutual_bound", gen_pure_mutual, eval_pure_mutual},
};

const PropertyDef& find_property(const std::string& name) {
  for (const auto& def : kProperties) {
    if (name == def.name) return def;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown property: " + name);
}

} // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& def : kProperties) v.emplace_back(def.name);
    return v;
  }();
  return names;
}

PropertyResult run_property(const std::string& name, const PropsConfig& config) {
  const PropertyDef& def = find_property(name);
  PropertyResult result;
  result.name = name;
  result.trials = config.trials;
  Rng rng(config.seed ^ fnv1a(name));
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    nlohmann::json inputs = def.gen(rng, trial);
    Failure failure;
    try {
      failure = def.eval(inputs, config.tol);
    } catch (const Error& e) {
      failure = std::string("error: ") + e.what();
    }
    if (failure) {
      ++result.failures;
      if (result.counterexample.is_null()) {
        result.counterexample = nlohmann::json{{"property", name},
                                               {"trial", trial},
                                               {"seed", config.seed},
                                               {"tol", config.tol},
                                               {"inputs", std::move(inputs)},
                                               {"failure", *failure}};
      }
    }
  }
  return result;
}

std::vector<PropertyResult> run_property_suite(const PropsConfig& config) {
  std::vector<PropertyResult> results;
  for (const auto& name : property_names()) results.push_back(run_property(name, config));
  return results;
}

PropertyResult replay_counterexample(const nlohmann::json& counterexample) {
  const std::string name = counterexample.at("property").get<std::string>();
  const PropertyDef& def = find_property(name);
  double tol = counterexample.value("tol", PropsConfig{}.tol);
  PropertyResult result;
  result.name = name;
  result.trials = 1;
  Failure failure;
  try {
    failure = def.eval(counterexample.at("inputs"), tol);
  } catch (const Error& e) {
    failure = std::string("error: ") + e.what();
  }
  if (failure) {
    result.failures = 1;
    result.counterexample = counterexample;
    result.counterexample["failure"] = *failure;
  }
  return result;
}

nlohmann::json to_json(const std::vector<PropertyResult>& results) {
  bool pass = true;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : results) {
    pass = pass && r.pass();
    list.push_back({{"name", r.name},
                    {"trials", r.trials},
                    {"failures", r.failures},
                    {"pass", r.pass()},
                    {"counterexample", r.counterexample}});
  }
  return nlohmann::json{
      {"schema_version", 1}, {"kind", "props"}, {"pass", pass}, {"results", list}};
}

} // namespace relinfo
