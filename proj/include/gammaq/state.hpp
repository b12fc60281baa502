#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "gammaq/types.hpp"

namespace gammaq {

/// One unitary per subsystem, applied to a state as the tensor product
/// U_1 x ... x U_m.
struct LocalUnitarySet {
  std::vector<Eigen::MatrixXcd> unitaries;

  static LocalUnitarySet identity(const Dims& dims);
  LocalUnitarySet adjoint() const;
};

/// max |(U^dag U - I)_{ij}|
double unitarity_residual(const Eigen::MatrixXcd& u);

/// Normalized pure state on a multipartite Hilbert space. Immutable after
/// construction; all operations on it are pure functions, so values are safe
/// to share between concurrent workers.
class PureState {
public:
  /// Takes ownership of the amplitude vector and normalizes it. A vector
  /// whose squared norm is already within 1e-12 of one is kept bit-exact,
  /// which makes file round trips reproduce derived quantities exactly.
  PureState(Dims dims, cvector_t amplitudes);

  const Dims& dims() const { return dims_; }
  const cvector_t& amplitudes() const { return amps_; }

  /// Amplitude c_a at 1-based joint index a.
  complex_t amplitude(std::int64_t a) const;

private:
  Dims dims_;
  cvector_t amps_;
};

/// Mixed-radix encoding of per-subsystem labels into the 1-based joint index
/// (most significant subsystem first).
std::int64_t joint_index(const Dims& dims, const MultiIndex& labels);

/// Inverse of joint_index.
MultiIndex labels_of(const Dims& dims, std::int64_t joint);

/// Maps the label tuples {k_u} and {l_u} to the (row, column) joint-index
/// pair they address in the density matrix.
JointIndexPair pi_index(const Dims& dims, const MultiIndex& ks, const MultiIndex& ls);

/// Density coefficient rho_{a,b} = c_a * conj(c_b), computed on demand; the
/// full joint_dim^2 matrix is never materialized.
complex_t rho(const PureState& state, std::int64_t a, std::int64_t b);
complex_t rho(const PureState& state, JointIndexPair pair);

/// Builds a state from sparse (labels, amplitude) entries; unspecified
/// amplitudes are zero and the result is normalized.
PureState make_state(const Dims& dims,
                     const std::vector<std::pair<MultiIndex, complex_t>>& entries);

PureState apply_local_unitaries(const PureState& state, const LocalUnitarySet& us);

}  // namespace gammaq
