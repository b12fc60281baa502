#include "gammaq/povm.hpp"

#include <cmath>

#include "gammaq/combinatorics.hpp"

namespace gammaq {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr std::int64_t kMaxDenseJointDim = 64;

void check_dense_limit(const Dims& dims) {
  if (dims.joint_dim() > kMaxDenseJointDim) {
    throw ValidationError("povm: joint dimension " + std::to_string(dims.joint_dim()) +
                          " exceeds the dense matrix limit of " +
                          std::to_string(kMaxDenseJointDim));
  }
}

int pair_offset(int n, int k, int l) {
  // lexicographic position of (k, l), k < l, within the n(n-1)/2 pairs
  return (k - 1) * n - (k - 1) * k / 2 + (l - k - 1);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void validate_target(const Dims& dims, const FourierTarget& target) {
  if (target.pairs.empty()) {
    throw ValidationError("invalid target: no participating subsystem");
  }
  if (static_cast<int>(target.pairs.size()) != dims.count()) {
    throw ValidationError("invalid target: need one (k,l) pair per subsystem, got " +
                          std::to_string(target.pairs.size()) + " for " +
                          std::to_string(dims.count()) + " subsystems");
  }
  for (int u = 1; u <= dims.count(); ++u) {
    const IndexPair& p = target.pairs[u - 1];
    if (p.k < 1 || p.l > dims.dim(u) || p.k >= p.l) {
      throw ValidationError("invalid target: pair (" + std::to_string(p.k) + "," +
                            std::to_string(p.l) + ") invalid for subsystem " +
                            std::to_string(u));
    }
  }
}

}  // namespace

PhaseAssignment::PhaseAssignment(const Dims& dims) : dims_(dims) {
  upper_.reserve(dims_.count());
  for (int u = 1; u <= dims_.count(); ++u) {
    const int n = dims_.dim(u);
    upper_.emplace_back(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
  }
}

PhaseAssignment::PhaseAssignment(const Dims& dims, std::vector<std::vector<double>> upper)
    : dims_(dims), upper_(std::move(upper)) {
  if (static_cast<int>(upper_.size()) != dims_.count()) {
    throw ValidationError("phases: need one phase block per subsystem");
  }
  for (int u = 1; u <= dims_.count(); ++u) {
    const int n = dims_.dim(u);
    const std::size_t expect = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (upper_[u - 1].size() != expect) {
      throw ValidationError("phases: subsystem " + std::to_string(u) + " needs " +
                            std::to_string(expect) + " phase pairs, got " +
                            std::to_string(upper_[u - 1].size()));
    }
  }
}

PhaseAssignment PhaseAssignment::random(const Dims& dims, Rng& rng) {
  PhaseAssignment out(dims);
  for (auto& block : out.upper_) {
    for (double& phi : block) {
      phi = rng.uniform(0.0, kTwoPi);
    }
  }
  return out;
}

int PhaseAssignment::pair_count(int u) const {
  const int n = dims_.dim(u);
  return n * (n - 1) / 2;
}

double PhaseAssignment::phase(int u, int k, int l) const {
  const int n = dims_.dim(u);
  if (k < 1 || k > n || l < 1 || l > n) {
    throw ValidationError("phases: label out of range for subsystem " + std::to_string(u));
  }
  if (k == l) {
    return 0.0;
  }
  if (k < l) {
    return upper_[u - 1][pair_offset(n, k, l)];
  }
  return -upper_[u - 1][pair_offset(n, l, k)];
}

void PhaseAssignment::set(int u, int k, int l, double value) {
  const int n = dims_.dim(u);
  if (k < 1 || l > n || k >= l) {
    throw ValidationError("phases: set requires an ordered pair k < l in range");
  }
  upper_[u - 1][pair_offset(n, k, l)] = value;
}

std::span<const double> PhaseAssignment::upper(int u) const {
  dims_.dim(u);  // range check
  return upper_[u - 1];
}

PovmMatrix delta_subsystem(int n, std::span<const double> upper_phases) {
  if (n < 2) {
    throw ValidationError("povm: subsystem dimension must be at least 2");
  }
  const std::size_t expect = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper_phases.size() != expect) {
    throw ValidationError("povm: missing phase pair; need " + std::to_string(expect) +
                          " phases for dimension " + std::to_string(n));
  }
  PovmMatrix out(n, n);
  std::size_t idx = 0;
  for (int k = 1; k <= n; ++k) {
    out(k - 1, k - 1) = complex_t{1.0, 0.0};
    for (int l = k + 1; l <= n; ++l) {
      const complex_t e = std::polar(1.0, upper_phases[idx++]);
      out(k - 1, l - 1) = e;
      out(l - 1, k - 1) = std::conj(e);
    }
  }
  return out;
}

PovmMatrix delta_joint(const Dims& dims, const PhaseAssignment& phases) {
  check_dense_limit(dims);
  if (!(phases.dims() == dims)) {
    throw ValidationError("povm: phase assignment dims mismatch");
  }
  PovmMatrix out = PovmMatrix::Constant(1, 1, complex_t{1.0, 0.0});
  for (int u = 1; u <= dims.count(); ++u) {
    out = kron(out, delta_subsystem(dims.dim(u), phases.upper(u)));
  }
  return out;
}

double phase_distribution(const PureState& state, const PhaseAssignment& phases) {
  check_dense_limit(state.dims());
  const PovmMatrix d = delta_joint(state.dims(), phases);
  const Eigen::Map<const Eigen::VectorXcd> v(state.amplitudes().data(),
                                             static_cast<Eigen::Index>(state.amplitudes().size()));
  const complex_t value = v.adjoint() * (d * v);
  if (std::abs(value.imag()) > 1e-12) {
    throw ComputationError("phase distribution: non-real trace, imag = " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

JointIndexPair target_pi_index(const Dims& dims, const FourierTarget& target) {
  validate_target(dims, target);
  MultiIndex ks(dims.count());
  MultiIndex ls(dims.count());
  for (int u = 1; u <= dims.count(); ++u) {
    ks[u - 1] = target.pairs[u - 1].k;
    ls[u - 1] = target.pairs[u - 1].l;
  }
  return pi_index(dims, ks, ls);
}

std::vector<FourierTarget> enumerate_full_targets(const Dims& dims) {
  std::vector<std::vector<IndexPair>> choices;
  std::vector<int> digits(dims.count(), 1);
  std::vector<int> limits(dims.count());
  for (int u = 1; u <= dims.count(); ++u) {
    choices.push_back(index_pairs(dims.dim(u)));
    limits[u - 1] = static_cast<int>(choices.back().size());
  }
  std::vector<FourierTarget> out;
  do {
    FourierTarget t;
    t.pairs.reserve(dims.count());
    for (int u = 1; u <= dims.count(); ++u) {
      t.pairs.push_back(choices[u - 1][digits[u - 1] - 1]);
    }
    out.push_back(std::move(t));
  } while (advance_mixed_radix(digits, limits));
  return out;
}

double fourier_gamma(const PureState& state, const FourierTarget& target,
                     int quadrature_nodes, const PhaseAssignment& fixed) {
  const Dims& dims = state.dims();
  check_dense_limit(dims);
  validate_target(dims, target);
  if (!(fixed.dims() == dims)) {
    throw ValidationError("povm: fixed phase assignment dims mismatch");
  }
  if (quadrature_nodes < 4) {
    throw ValidationError("povm: need at least 4 quadrature nodes");
  }

  const int m = dims.count();
  const double step = kTwoPi / quadrature_nodes;

  PhaseAssignment phases = fixed;
  std::vector<int> grid(m, 1);
  const std::vector<int> limits(m, quadrature_nodes);
  complex_t acc{0.0, 0.0};
  do {
    double target_sum = 0.0;
    for (int u = 1; u <= m; ++u) {
      const double phi = step * (grid[u - 1] - 1);
      phases.set(u, target.pairs[u - 1].k, target.pairs[u - 1].l, phi);
      target_sum += phi;
    }
    acc += std::polar(1.0, -target_sum) * phase_distribution(state, phases);
  } while (advance_mixed_radix(grid, limits));

  const complex_t integral = acc * std::pow(step, m);
  return std::abs(integral) / std::pow(kTwoPi, m - 1);
}

double fourier_gamma(const PureState& state, const FourierTarget& target,
                     int quadrature_nodes) {
  return fourier_gamma(state, target, quadrature_nodes,
                       PhaseAssignment::zeros(state.dims()));
}

FourierVerification verify_fourier_identity(const PureState& state, int nodes,
                                            std::uint64_t seed) {
  const Dims& dims = state.dims();
  check_dense_limit(dims);
  Rng rng(seed);
  FourierVerification out;
  out.nodes = nodes;
  for (const FourierTarget& target : enumerate_full_targets(dims)) {
    const PhaseAssignment fixed = PhaseAssignment::random(dims, rng);
    const double measured = fourier_gamma(state, target, nodes, fixed);
    const double expected = kTwoPi * std::abs(rho(state, target_pi_index(dims, target)));
    out.max_abs_error = std::max(out.max_abs_error, std::abs(measured - expected));
    ++out.targets;
  }
  out.pass = out.max_abs_error < 1e-9;
  return out;
}

}  // namespace gammaq
