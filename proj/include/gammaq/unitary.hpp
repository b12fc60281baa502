#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "gammaq/rng.hpp"
#include "gammaq/state.hpp"

namespace gammaq {

/// exp(i H) for the Hermitian generator packed into `params` (length n^2):
/// the n diagonal entries first, then (re, im) of the upper triangle in
/// lexicographic pair order. The zero vector maps to the identity and the
/// map is continuous and onto U(n) up to the periodicity of the spectrum.
Eigen::MatrixXcd build_unitary(std::span<const double> params, int n);

/// One generator parameter vector per subsystem.
struct UnitaryParameterization {
  std::vector<std::vector<double>> params;

  static UnitaryParameterization zeros(const Dims& dims);
  static UnitaryParameterization random(const Dims& dims, Rng& rng, double spread);

  std::vector<double> flatten() const;
  static UnitaryParameterization unflatten(const Dims& dims, std::span<const double> flat);
};

LocalUnitarySet build_local_unitaries(const Dims& dims, const UnitaryParameterization& p);

}  // namespace gammaq
