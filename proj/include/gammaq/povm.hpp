#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "gammaq/rng.hpp"
#include "gammaq/state.hpp"

namespace gammaq {

/// Dense complex matrix of unit-modulus entries; Hermitian with unit
/// diagonal by construction.
using PovmMatrix = Eigen::MatrixXcd;

/// Relative phases phi_{k,l} for every subsystem, stored for k < l in
/// lexicographic pair order; phi_{l,k} = -phi_{k,l} and phi_{k,k} = 0 follow
/// from the antisymmetric extension.
class PhaseAssignment {
public:
  explicit PhaseAssignment(const Dims& dims);
  PhaseAssignment(const Dims& dims, std::vector<std::vector<double>> upper);

  static PhaseAssignment zeros(const Dims& dims) { return PhaseAssignment(dims); }
  static PhaseAssignment random(const Dims& dims, Rng& rng);

  const Dims& dims() const { return dims_; }
  int pair_count(int u) const;

  double phase(int u, int k, int l) const;
  void set(int u, int k, int l, double value);

  std::span<const double> upper(int u) const;

private:
  Dims dims_;
  std::vector<std::vector<double>> upper_;
};

/// Single-subsystem POVM matrix: entry (k, l) = exp(i phi_{k,l}).
PovmMatrix delta_subsystem(int n, std::span<const double> upper_phases);

/// Joint POVM: Kronecker product of the subsystem matrices in subsystem
/// order. Dense, so restricted to joint_dim <= 64; this module is a
/// verification oracle, not the production path.
PovmMatrix delta_joint(const Dims& dims, const PhaseAssignment& phases);

/// Joint relative-phase distribution Tr(rho Delta); real for Hermitian
/// factors.
double phase_distribution(const PureState& state, const PhaseAssignment& phases);

/// One (k_u < l_u) pair per subsystem. Every subsystem participates: the
/// Fourier identity below only holds when each subsystem contributes exactly
/// one integrated phase variable.
struct FourierTarget {
  std::vector<IndexPair> pairs;
};

/// The density entry pair addressed by a target.
JointIndexPair target_pi_index(const Dims& dims, const FourierTarget& target);

std::vector<FourierTarget> enumerate_full_targets(const Dims& dims);

/// Fourier coefficient of the phase distribution with respect to the
/// target's relative-phase sum, by equispaced rectangle-rule quadrature over
/// each target phase variable on [0, 2pi) (exact for this trigonometric
/// integrand once nodes >= 4). All other phase variables stay at the values
/// given in `fixed`; the result does not depend on them. Equals
/// 2 pi |rho_(target)|.
double fourier_gamma(const PureState& state, const FourierTarget& target,
                     int quadrature_nodes, const PhaseAssignment& fixed);
double fourier_gamma(const PureState& state, const FourierTarget& target,
                     int quadrature_nodes = 8);

struct FourierVerification {
  double max_abs_error = 0.0;
  int targets = 0;
  int nodes = 0;
  bool pass = false;
};

/// Checks the identity over every full target of the state's dims, with
/// seeded random values for the non-integrated phase variables.
FourierVerification verify_fourier_identity(const PureState& state, int nodes,
                                            std::uint64_t seed);

}  // namespace gammaq
