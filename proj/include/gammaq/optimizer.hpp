#pragma once

#include <functional>
#include <span>

#include "gammaq/gamma.hpp"
#include "gammaq/unitary.hpp"

namespace gammaq {

struct OptimizerConfig {
  int restarts = 32;
  std::uint64_t seed = 0;
  int max_evaluations = 2000;   // per restart
  double tolerance = 1e-9;      // convergence on the objective spread
  double initial_spread = 0.5;  // std-dev of random restart parameters
};

struct OptResult {
  double best_gamma = 0.0;
  UnitaryParameterization best_parameters;
  std::int64_t evaluations = 0;
  std::vector<double> per_restart_bests;
  GammaReport report;  // at the optimum
};

/// gamma of the state transformed by the parameterized local unitaries.
double objective(const PureState& state, const UnitaryParameterization& p,
                 const NormalizationVector& norms);

/// Simplex direct search (Nelder-Mead); minimizes f. Deterministic given the
/// start point. Stops when the simplex value spread falls below `tolerance`
/// or the evaluation budget runs out.
struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  std::int64_t evaluations = 0;
};
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, double step, double tolerance,
                             std::int64_t max_evaluations);

/// Multi-start estimate of the supremum of gamma over local unitaries.
/// Restart 1 always starts from the identity, so the result is never below
/// gamma of the raw state; the value is a lower bound on the true supremum.
/// Deterministic given (seed, config, state); restarts are independent and
/// the reduction picks the maximum with ties broken by lowest restart index.
OptResult optimize_gamma_sup(const PureState& state, const NormalizationVector& norms,
                             const OptimizerConfig& config = {});

}  // namespace gammaq
