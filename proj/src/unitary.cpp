#include "gammaq/unitary.hpp"

namespace gammaq {

Eigen::MatrixXcd build_unitary(std::span<const double> params, int n) {
  if (n < 1) {
    throw ValidationError("unitary: dimension must be positive");
  }
  if (params.size() != static_cast<std::size_t>(n) * n) {
    throw ValidationError("unitary: expected " + std::to_string(n * n) +
                          " parameters, got " + std::to_string(params.size()));
  }
  Eigen::MatrixXcd h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = params[i];
  }
  std::size_t t = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      h(i, j) = complex_t{params[t], params[t + 1]};
      h(j, i) = std::conj(h(i, j));
      t += 2;
    }
  }
  if (h.cwiseAbs().maxCoeff() == 0.0) {
    return Eigen::MatrixXcd::Identity(n, n);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) {
    throw ComputationError("unitary: Hermitian eigendecomposition failed");
  }
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i) {
    phases(i) = std::polar(1.0, es.eigenvalues()(i));
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

UnitaryParameterization UnitaryParameterization::zeros(const Dims& dims) {
  UnitaryParameterization out;
  out.params.reserve(dims.count());
  for (int u = 1; u <= dims.count(); ++u) {
    const int n = dims.dim(u);
    out.params.emplace_back(static_cast<std::size_t>(n) * n, 0.0);
  }
  return out;
}

UnitaryParameterization UnitaryParameterization::random(const Dims& dims, Rng& rng,
                                                        double spread) {
  UnitaryParameterization out = zeros(dims);
  for (auto& block : out.params) {
    for (double& p : block) {
      p = spread * rng.normal();
    }
  }
  return out;
}

std::vector<double> UnitaryParameterization::flatten() const {
  std::vector<double> flat;
  for (const auto& block : params) {
    flat.insert(flat.end(), block.begin(), block.end());
  }
  return flat;
}

UnitaryParameterization UnitaryParameterization::unflatten(const Dims& dims,
                                                           std::span<const double> flat) {
  UnitaryParameterization out;
  out.params.reserve(dims.count());
  std::size_t pos = 0;
  for (int u = 1; u <= dims.count(); ++u) {
    const std::size_t len = static_cast<std::size_t>(dims.dim(u)) * dims.dim(u);
    if (pos + len > flat.size()) {
      throw ValidationError("unitary: parameter vector too short");
    }
    out.params.emplace_back(flat.begin() + pos, flat.begin() + pos + len);
    pos += len;
  }
  if (pos != flat.size()) {
    throw ValidationError("unitary: parameter vector too long");
  }
  return out;
}

LocalUnitarySet build_local_unitaries(const Dims& dims, const UnitaryParameterization& p) {
  if (static_cast<int>(p.params.size()) != dims.count()) {
    throw ValidationError("unitary: expected one parameter block per subsystem");
  }
  LocalUnitarySet out;
  out.unitaries.reserve(dims.count());
  for (int u = 1; u <= dims.count(); ++u) {
    out.unitaries.push_back(build_unitary(p.params[u - 1], dims.dim(u)));
  }
  return out;
}

}  // namespace gammaq
