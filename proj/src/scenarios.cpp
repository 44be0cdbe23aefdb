// Copyright 2026 the autotherm authors
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

#include "autotherm/scenarios.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace autotherm {

namespace {

// Deterministic scalar draws on top of mt19937_64; the stdlib distributions
// are implementation-defined, these are not.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double normal(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = normal(rng);
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng)) / std::sqrt(2.0);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return 0.5 * (m + m.adjoint().eval());
}

// Spectral-norm-1 random Hermitian factor.
ComplexMatrix random_unit_hermitian(std::mt19937_64& rng, int dim) {
  ComplexMatrix m = random_hermitian(rng, dim);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  const double norm =
      std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(dim - 1)));
  return m / norm;
}

// Random local Hamiltonian with spectral range in [0.8, 2.0] and ground
// energy shifted to 0.
ComplexMatrix random_local_hamiltonian(std::mt19937_64& rng, int dim) {
  ComplexMatrix m = random_hermitian(rng, dim);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  const double range = es.eigenvalues()(dim - 1) - es.eigenvalues()(0);
  const double target = uniform_in(rng, 0.8, 2.0);
  m *= target / range;
  const double ground = es.eigenvalues()(0) * target / range;
  return m - ground * ComplexMatrix::Identity(dim, dim);
}

std::string subsystem_label(int index) {
  std::string label;
  int v = index;
  do {
    label.insert(label.begin(), static_cast<char>('A' + v % 26));
    v = v / 26 - 1;
  } while (v >= 0);
  return label;
}

CouplingSpec sigma_x_pair(const std::string& left, const std::string& right,
                          double strength) {
  CouplingTermSpec term;
  term.factors[left] = LocalFactorSpec{true, "sigma_x", {}};
  term.factors[right] = LocalFactorSpec{true, "sigma_x", {}};
  return CouplingSpec{strength, {term}};
}

}  // namespace

HamiltonianSpec HamiltonianSpec::qubit(double omega) {
  HamiltonianSpec s;
  s.kind = Kind::Qubit;
  s.omega = omega;
  s.levels = 2;
  return s;
}

HamiltonianSpec HamiltonianSpec::oscillator(int levels, double omega) {
  HamiltonianSpec s;
  s.kind = Kind::Oscillator;
  s.omega = omega;
  s.levels = levels;
  return s;
}

HamiltonianSpec HamiltonianSpec::explicit_matrix(ComplexMatrix m) {
  HamiltonianSpec s;
  s.kind = Kind::Explicit;
  s.matrix = std::move(m);
  return s;
}

InitialSpec InitialSpec::ground() { return InitialSpec{}; }

InitialSpec InitialSpec::gibbs(double beta) {
  InitialSpec s;
  s.kind = Kind::Gibbs;
  s.beta = beta;
  return s;
}

InitialSpec InitialSpec::pure(ComplexVector amplitudes) {
  InitialSpec s;
  s.kind = Kind::Pure;
  s.amplitudes = std::move(amplitudes);
  return s;
}

InitialSpec InitialSpec::explicit_matrix(ComplexMatrix m) {
  InitialSpec s;
  s.kind = Kind::Matrix;
  s.matrix = std::move(m);
  return s;
}

TimeGridSpec TimeGridSpec::linspace(double start, double stop, int points) {
  TimeGridSpec g;
  g.start = start;
  g.stop = stop;
  g.points = points;
  return g;
}

TimeGridSpec TimeGridSpec::from_times(std::vector<double> times) {
  TimeGridSpec g;
  g.is_explicit = true;
  g.explicit_times = std::move(times);
  return g;
}

HermitianOperator build_hamiltonian(const SubsystemSpec& spec) {
  switch (spec.hamiltonian.kind) {
    case HamiltonianSpec::Kind::Qubit: {
      if (spec.dim != 2) {
        throw std::invalid_argument("subsystem '" + spec.label +
                                    "': qubit Hamiltonian requires dim = 2");
      }
      return HermitianOperator::diagonal({0.0, spec.hamiltonian.omega});
    }
    case HamiltonianSpec::Kind::Oscillator: {
      if (spec.hamiltonian.levels != spec.dim) {
        throw std::invalid_argument("subsystem '" + spec.label +
                                    "': oscillator levels must equal dim");
      }
      std::vector<double> diag(spec.dim);
      for (int n = 0; n < spec.dim; ++n) diag[n] = spec.hamiltonian.omega * n;
      return HermitianOperator::diagonal(diag);
    }
    case HamiltonianSpec::Kind::Explicit: {
      if (spec.hamiltonian.matrix.rows() != spec.dim ||
          spec.hamiltonian.matrix.cols() != spec.dim) {
        throw std::invalid_argument("subsystem '" + spec.label +
                                    "': explicit Hamiltonian size does not match dim");
      }
      return HermitianOperator(spec.hamiltonian.matrix);
    }
  }
  throw std::logic_error("unreachable");
}

DensityMatrix build_initial_state(const SubsystemSpec& spec, const HermitianOperator& h) {
  switch (spec.initial.kind) {
    case InitialSpec::Kind::Ground:
      return gibbs_state(h, kInfiniteBeta).state;
    case InitialSpec::Kind::Gibbs:
      return gibbs_state(h, spec.initial.beta).state;
    case InitialSpec::Kind::Pure:
      if (spec.initial.amplitudes.size() != spec.dim) {
        throw std::invalid_argument("subsystem '" + spec.label +
                                    "': pure-state amplitude count does not match dim");
      }
      return DensityMatrix::pure(spec.initial.amplitudes);
    case InitialSpec::Kind::Matrix:
      if (spec.initial.matrix.rows() != spec.dim) {
        throw std::invalid_argument("subsystem '" + spec.label +
                                    "': initial matrix size does not match dim");
      }
      return DensityMatrix(spec.initial.matrix);
  }
  throw std::logic_error("unreachable");
}

CompositeSystem build_system(const Scenario& scenario) {
  if (scenario.subsystems.empty()) {
    throw std::invalid_argument("scenario has no subsystems");
  }
  std::vector<Subsystem> subsystems;
  std::vector<int> dims;
  for (const auto& spec : scenario.subsystems) {
    subsystems.push_back(Subsystem{spec.label, build_hamiltonian(spec)});
    dims.push_back(spec.dim);
  }

  std::vector<HermitianOperator> couplings;
  for (std::size_t k = 0; k < scenario.couplings.size(); ++k) {
    const CouplingSpec& cs = scenario.couplings[k];
    long total = 1;
    for (int d : dims) total *= d;
    ComplexMatrix v = ComplexMatrix::Zero(total, total);
    for (const auto& term : cs.terms) {
      std::map<int, ComplexMatrix> factors;
      for (const auto& [label, factor] : term.factors) {
        int site = -1;
        for (std::size_t s = 0; s < scenario.subsystems.size(); ++s) {
          if (scenario.subsystems[s].label == label) site = static_cast<int>(s);
        }
        if (site < 0) {
          throw std::invalid_argument("coupling factor names unknown subsystem '" + label +
                                      "'");
        }
        factors[site] = factor.named ? local_operator(factor.name, dims[site]) : factor.matrix;
      }
      v += term.coeff * product_embed(factors, dims);
    }
    v *= cs.strength;
    const double asym = (v - v.adjoint().eval()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) {
      std::ostringstream oss;
      oss << "coupling " << k << " is not Hermitian (asymmetry " << asym
          << "); add the conjugate term";
      throw std::invalid_argument(oss.str());
    }
    couplings.emplace_back(std::move(v));
  }
  return CompositeSystem(std::move(subsystems), std::move(couplings));
}

std::vector<DensityMatrix> build_initial_states(const Scenario& scenario,
                                                const CompositeSystem& system) {
  std::vector<DensityMatrix> locals;
  for (std::size_t s = 0; s < scenario.subsystems.size(); ++s) {
    locals.push_back(
        build_initial_state(scenario.subsystems[s], system.subsystems()[s].hamiltonian));
  }
  return locals;
}

std::vector<double> build_times(const TimeGridSpec& grid) {
  if (grid.is_explicit) return grid.explicit_times;
  if (grid.points < 2 || !(grid.stop > grid.start)) {
    throw std::invalid_argument("time grid needs stop > start and at least 2 points");
  }
  std::vector<double> times(grid.points);
  const double step = (grid.stop - grid.start) / (grid.points - 1);
  for (int i = 0; i < grid.points; ++i) times[i] = grid.start + step * i;
  return times;
}

std::vector<std::string> preset_names() {
  return {"ex1_ground_ground", "ex2_pure_pure", "three_body_chain", "random(seed,d1,d2,...)"};
}

Scenario preset(const std::string& name) {
  if (name == "ex1_ground_ground") {
    Scenario sc;
    sc.name = name;
    sc.subsystems = {
        SubsystemSpec{"A", 2, HamiltonianSpec::qubit(1.0), InitialSpec::ground()},
        SubsystemSpec{"B", 2, HamiltonianSpec::qubit(1.0), InitialSpec::ground()},
    };
    sc.couplings = {sigma_x_pair("A", "B", 0.2)};
    sc.times = TimeGridSpec::linspace(0.0, 20.0, 201);
    sc.audits = {AuditSpec{AuditSpec::Kind::ZeroTemperature, "A"},
                 AuditSpec{AuditSpec::Kind::ZeroTemperature, "B"},
                 AuditSpec{AuditSpec::Kind::Multipartite, ""}};
    return sc;
  }
  if (name == "ex2_pure_pure") {
    Scenario sc;
    sc.name = name;
    ComplexVector excited(2);
    excited << Complex(0.0, 0.0), Complex(1.0, 0.0);
    ComplexVector super(3);
    super << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0);
    super /= std::sqrt(2.0);
    sc.subsystems = {
        SubsystemSpec{"A", 2, HamiltonianSpec::qubit(1.0), InitialSpec::pure(excited)},
        SubsystemSpec{"B", 3, HamiltonianSpec::oscillator(3, 1.0), InitialSpec::pure(super)},
    };
    CouplingTermSpec up;
    up.factors["A"] = LocalFactorSpec{true, "sigma_plus", {}};
    up.factors["B"] = LocalFactorSpec{true, "a", {}};
    CouplingTermSpec down;
    down.factors["A"] = LocalFactorSpec{true, "sigma_minus", {}};
    down.factors["B"] = LocalFactorSpec{true, "adag", {}};
    sc.couplings = {CouplingSpec{0.15, {up, down}}};
    sc.times = TimeGridSpec::linspace(0.0, 20.0, 201);
    sc.audits = {AuditSpec{AuditSpec::Kind::ZeroTemperature, "A"},
                 AuditSpec{AuditSpec::Kind::ZeroTemperature, "B"}};
    return sc;
  }
  if (name == "three_body_chain") {
    Scenario sc;
    sc.name = name;
    sc.subsystems = {
        SubsystemSpec{"A", 2, HamiltonianSpec::qubit(1.0), InitialSpec::gibbs(0.5)},
        SubsystemSpec{"B", 2, HamiltonianSpec::qubit(1.0), InitialSpec::gibbs(1.0)},
        SubsystemSpec{"C", 2, HamiltonianSpec::qubit(1.0), InitialSpec::gibbs(2.0)},
    };
    sc.couplings = {sigma_x_pair("A", "B", 0.25), sigma_x_pair("B", "C", 0.25)};
    sc.times = TimeGridSpec::linspace(0.0, 20.0, 201);
    sc.audits = {AuditSpec{AuditSpec::Kind::Multipartite, ""},
                 AuditSpec{AuditSpec::Kind::ErgotropyDecay, ""}};
    return sc;
  }
  if (name.rfind("random(", 0) == 0 && name.back() == ')') {
    const std::string args = name.substr(7, name.size() - 8);
    std::vector<long> values;
    std::stringstream ss(args);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        values.push_back(std::stol(tok));
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse random preset argument '" + tok + "'");
      }
    }
    if (values.size() < 3) {
      throw std::invalid_argument(
          "random preset needs a seed and at least two dimensions: random(seed,d1,d2,...)");
    }
    std::vector<int> dims(values.begin() + 1, values.end());
    return random_scenario(static_cast<std::uint64_t>(values[0]), dims);
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

Scenario random_scenario(std::uint64_t seed, const std::vector<int>& dims) {
  if (dims.size() < 2) {
    throw std::invalid_argument("random scenario needs at least two subsystems");
  }
  for (int d : dims) {
    if (d < 2) throw std::invalid_argument("random scenario dims must be >= 2");
  }
  std::mt19937_64 rng(seed);

  Scenario sc;
  std::ostringstream name;
  name << "random(" << seed;
  for (int d : dims) name << "," << d;
  name << ")";
  sc.name = name.str();

  for (std::size_t s = 0; s < dims.size(); ++s) {
    SubsystemSpec spec;
    spec.label = subsystem_label(static_cast<int>(s));
    spec.dim = dims[s];
    spec.hamiltonian = HamiltonianSpec::explicit_matrix(random_local_hamiltonian(rng, dims[s]));
    spec.initial = InitialSpec::gibbs(uniform_in(rng, 0.2, 5.0));
    sc.subsystems.push_back(std::move(spec));
  }
  for (std::size_t s = 0; s + 1 < dims.size(); ++s) {
    CouplingTermSpec term;
    term.factors[sc.subsystems[s].label] =
        LocalFactorSpec{false, "", random_unit_hermitian(rng, dims[s])};
    term.factors[sc.subsystems[s + 1].label] =
        LocalFactorSpec{false, "", random_unit_hermitian(rng, dims[s + 1])};
    sc.couplings.push_back(CouplingSpec{uniform_in(rng, 0.05, 0.5), {term}});
  }
  sc.times = TimeGridSpec::linspace(0.0, 10.0, 50);
  sc.audits = {AuditSpec{AuditSpec::Kind::EntropyProduction, sc.subsystems[1].label},
               AuditSpec{AuditSpec::Kind::Multipartite, ""}};
  return sc;
}

Scenario random_ground_scenario(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);

  Scenario sc;
  sc.name = "random_ground(" + std::to_string(seed) + ")";

  SubsystemSpec a;
  a.label = "A";
  a.dim = uniform_int(rng, 2, 4);
  a.hamiltonian = HamiltonianSpec::explicit_matrix(random_local_hamiltonian(rng, a.dim));
  a.initial = InitialSpec::gibbs(uniform_in(rng, 0.2, 5.0));

  SubsystemSpec b;
  b.label = "B";
  const bool degenerate = (rng() & 1u) != 0;
  if (degenerate) {
    // Twofold-degenerate ground level, random eigenbasis, pure state inside
    // the ground space.
    b.dim = uniform_int(rng, 3, 4);
    ComplexMatrix raw(b.dim, b.dim);
    for (int i = 0; i < b.dim; ++i) {
      for (int j = 0; j < b.dim; ++j) raw(i, j) = Complex(normal(rng), normal(rng));
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(raw);
    ComplexMatrix w = qr.householderQ();
    std::vector<double> levels(b.dim, 0.0);
    double e = 0.0;
    for (int k = 2; k < b.dim; ++k) {
      e += uniform_in(rng, 0.5, 1.5);
      levels[k] = e;
    }
    ComplexMatrix h = ComplexMatrix::Zero(b.dim, b.dim);
    for (int k = 0; k < b.dim; ++k) {
      h += levels[k] * (w.col(k) * w.col(k).adjoint()).eval();
    }
    b.hamiltonian = HamiltonianSpec::explicit_matrix(0.5 * (h + h.adjoint().eval()));

    const double theta = uniform_in(rng, 0.0, M_PI / 2.0);
    const double phase = uniform_in(rng, 0.0, 2.0 * M_PI);
    ComplexVector psi = std::cos(theta) * w.col(0) +
                        std::sin(theta) * std::exp(Complex(0.0, phase)) * w.col(1);
    b.initial = InitialSpec::pure(psi);
  } else {
    b.dim = uniform_int(rng, 2, 4);
    b.hamiltonian = HamiltonianSpec::explicit_matrix(random_local_hamiltonian(rng, b.dim));
    b.initial = InitialSpec::ground();
  }

  sc.subsystems = {std::move(a), std::move(b)};
  CouplingTermSpec term;
  term.factors["A"] =
      LocalFactorSpec{false, "", random_unit_hermitian(rng, sc.subsystems[0].dim)};
  term.factors["B"] =
      LocalFactorSpec{false, "", random_unit_hermitian(rng, sc.subsystems[1].dim)};
  sc.couplings = {CouplingSpec{uniform_in(rng, 0.05, 0.5), {term}}};
  sc.times = TimeGridSpec::linspace(0.0, 10.0, 50);
  sc.audits = {AuditSpec{AuditSpec::Kind::ZeroTemperature, "B"}};
  return sc;
}

ControlFamily local_qubit_family(const CompositeSystem& system) {
  const std::vector<int> dims = system.dims();
  std::vector<HermitianOperator> generators;
  std::vector<std::pair<double, double>> bounds;
  for (int s = 0; s < system.subsystem_count(); ++s) {
    if (dims[s] != 2) {
      throw std::invalid_argument("local_qubit_family requires qubit subsystems");
    }
    for (const char* op : {"sigma_x", "sigma_y"}) {
      generators.emplace_back(embed(local_operator(op, 2), dims, s));
      bounds.emplace_back(-M_PI, M_PI);
    }
  }
  return ControlFamily("local_qubit_rotations", std::move(generators), std::move(bounds));
}

}  // namespace autotherm
