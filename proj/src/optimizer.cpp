#include "gammaq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gammaq {

double objective(const PureState& state, const UnitaryParameterization& p,
                 const NormalizationVector& norms) {
  const PureState transformed =
      apply_local_unitaries(state, build_local_unitaries(state.dims(), p));
  return gamma(transformed, norms).gamma;
}

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& f,
                             std::vector<double> x0, double step, double tolerance,
                             std::int64_t max_evaluations) {
  const std::size_t d = x0.size();
  NelderMeadResult result;

  std::vector<std::vector<double>> simplex;
  std::vector<double> values;
  simplex.reserve(d + 1);
  values.reserve(d + 1);

  const auto eval = [&](std::span<const double> x) {
    ++result.evaluations;
    return f(x);
  };

  simplex.push_back(x0);
  values.push_back(eval(x0));
  for (std::size_t i = 0; i < d && result.evaluations < max_evaluations; ++i) {
    std::vector<double> xi = x0;
    xi[i] += step;
    simplex.push_back(xi);
    values.push_back(eval(xi));
  }

  const auto best_index = [&] {
    return static_cast<std::size_t>(
        std::min_element(values.begin(), values.end()) - values.begin());
  };

  while (simplex.size() == d + 1 && result.evaluations < max_evaluations) {
    // Order: locate best, worst, second worst.
    std::size_t best = 0, worst = 0, second = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i] < values[best]) {
        best = i;
      }
      if (values[i] > values[worst]) {
        worst = i;
      }
    }
    second = best;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i != worst && values[i] > values[second]) {
        second = i;
      }
    }
    if (values[worst] - values[best] <= tolerance) {
      break;
    }

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (i == worst) {
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        centroid[j] += simplex[i][j];
      }
    }
    for (double& c : centroid) {
      c /= static_cast<double>(d);
    }

    const auto affine = [&](double coef) {
      std::vector<double> x(d);
      for (std::size_t j = 0; j < d; ++j) {
        x[j] = centroid[j] + coef * (simplex[worst][j] - centroid[j]);
      }
      return x;
    };

    const std::vector<double> reflected = affine(-1.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      const std::vector<double> expanded = affine(-2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    // Contract, outside or inside depending on the reflected value.
    const bool outside = fr < values[worst];
    const std::vector<double> contracted = affine(outside ? -0.5 : 0.5);
    const double fc = eval(contracted);
    if ((outside && fc <= fr) || (!outside && fc < values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    const std::vector<double> anchor = simplex[best];
    for (std::size_t i = 0; i < simplex.size() && result.evaluations < max_evaluations;
         ++i) {
      if (i == best) {
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        simplex[i][j] = anchor[j] + 0.5 * (simplex[i][j] - anchor[j]);
      }
      values[i] = eval(simplex[i]);
    }
  }

  const std::size_t best = best_index();
  result.x = simplex[best];
  result.fx = values[best];
  return result;
}

OptResult optimize_gamma_sup(const PureState& state, const NormalizationVector& norms,
                             const OptimizerConfig& config) {
  if (config.restarts < 1 || config.max_evaluations < 1 || !(config.tolerance > 0.0) ||
      !(config.initial_spread > 0.0)) {
    throw ValidationError("optimizer: restarts, max_evaluations, tolerance and "
                          "initial_spread must all be positive");
  }
  const Dims& dims = state.dims();
  for (int s = 2; s <= dims.count(); ++s) {
    norms.at(s);
  }

  const auto negated = [&](std::span<const double> x) {
    return -objective(state, UnitaryParameterization::unflatten(dims, x), norms);
  };
  const double step = 0.5 * config.initial_spread;

  OptResult result;
  std::vector<double> best_x;
  for (int r = 0; r < config.restarts; ++r) {
    std::vector<double> x0;
    if (r == 0) {
      x0 = UnitaryParameterization::zeros(dims).flatten();
    } else {
      Rng rng(mix_seed(config.seed, static_cast<std::uint64_t>(r)));
      x0 = UnitaryParameterization::random(dims, rng, config.initial_spread).flatten();
    }
    const NelderMeadResult nm =
        nelder_mead(negated, std::move(x0), step, config.tolerance, config.max_evaluations);
    const double restart_best = -nm.fx;
    result.per_restart_bests.push_back(restart_best);
    result.evaluations += nm.evaluations;
    if (r == 0 || restart_best > result.best_gamma) {
      result.best_gamma = restart_best;
      best_x = nm.x;
    }
  }

  result.best_parameters = UnitaryParameterization::unflatten(dims, best_x);
  result.report = gamma(
      apply_local_unitaries(state, build_local_unitaries(dims, result.best_parameters)),
      norms);
  return result;
}

}  // namespace gammaq
