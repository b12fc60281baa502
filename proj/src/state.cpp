#include "gammaq/state.hpp"

#include <cmath>
#include <unordered_set>

namespace gammaq {

LocalUnitarySet LocalUnitarySet::identity(const Dims& dims) {
  LocalUnitarySet out;
  out.unitaries.reserve(dims.count());
  for (int u = 1; u <= dims.count(); ++u) {
    out.unitaries.push_back(Eigen::MatrixXcd::Identity(dims.dim(u), dims.dim(u)));
  }
  return out;
}

LocalUnitarySet LocalUnitarySet::adjoint() const {
  LocalUnitarySet out;
  out.unitaries.reserve(unitaries.size());
  for (const auto& u : unitaries) {
    out.unitaries.push_back(u.adjoint());
  }
  return out;
}

double unitarity_residual(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd res =
      u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols());
  return res.cwiseAbs().maxCoeff();
}

PureState::PureState(Dims dims, cvector_t amplitudes)
    : dims_(std::move(dims)), amps_(std::move(amplitudes)) {
  if (static_cast<std::int64_t>(amps_.size()) != dims_.joint_dim()) {
    throw ValidationError("state: amplitude vector has length " +
                          std::to_string(amps_.size()) + ", expected " +
                          std::to_string(dims_.joint_dim()));
  }
  double norm2 = 0.0;
  for (const complex_t& c : amps_) {
    norm2 += std::norm(c);
  }
  if (norm2 < 1e-18) {
    throw ValidationError("degenerate state: zero norm");
  }
  if (std::abs(norm2 - 1.0) > 1e-12) {
    const double inv = 1.0 / std::sqrt(norm2);
    for (complex_t& c : amps_) {
      c *= inv;
    }
  }
}

complex_t PureState::amplitude(std::int64_t a) const {
  if (a < 1 || a > dims_.joint_dim()) {
    throw ValidationError("invalid index: joint index " + std::to_string(a) +
                          " out of range 1.." + std::to_string(dims_.joint_dim()));
  }
  return amps_[a - 1];
}

std::int64_t joint_index(const Dims& dims, const MultiIndex& labels) {
  if (static_cast<int>(labels.size()) != dims.count()) {
    throw ValidationError("invalid index: expected " + std::to_string(dims.count()) +
                          " labels, got " + std::to_string(labels.size()));
  }
  std::int64_t acc = 0;
  for (int u = 1; u <= dims.count(); ++u) {
    const int k = labels[u - 1];
    if (k < 1 || k > dims.dim(u)) {
      throw ValidationError("invalid index: label " + std::to_string(k) +
                            " for subsystem " + std::to_string(u) +
                            " out of range 1.." + std::to_string(dims.dim(u)));
    }
    acc += static_cast<std::int64_t>(k - 1) * dims.stride(u);
  }
  return acc + 1;
}

MultiIndex labels_of(const Dims& dims, std::int64_t joint) {
  if (joint < 1 || joint > dims.joint_dim()) {
    throw ValidationError("invalid index: joint index " + std::to_string(joint) +
                          " out of range 1.." + std::to_string(dims.joint_dim()));
  }
  MultiIndex labels(dims.count());
  std::int64_t rest = joint - 1;
  for (int u = 1; u <= dims.count(); ++u) {
    labels[u - 1] = static_cast<int>(rest / dims.stride(u)) + 1;
    rest %= dims.stride(u);
  }
  return labels;
}

JointIndexPair pi_index(const Dims& dims, const MultiIndex& ks, const MultiIndex& ls) {
  return JointIndexPair{joint_index(dims, ks), joint_index(dims, ls)};
}

complex_t rho(const PureState& state, std::int64_t a, std::int64_t b) {
  return state.amplitude(a) * std::conj(state.amplitude(b));
}

complex_t rho(const PureState& state, JointIndexPair pair) {
  return rho(state, pair.row, pair.col);
}

PureState make_state(const Dims& dims,
                     const std::vector<std::pair<MultiIndex, complex_t>>& entries) {
  if (entries.empty()) {
    throw ValidationError("degenerate state: no entries");
  }
  cvector_t amps(dims.joint_dim(), complex_t{0.0, 0.0});
  std::unordered_set<std::int64_t> seen;
  for (const auto& [labels, value] : entries) {
    const std::int64_t idx = joint_index(dims, labels);
    if (!seen.insert(idx).second) {
      throw ValidationError("duplicate entry at joint index " + std::to_string(idx));
    }
    amps[idx - 1] = value;
  }
  return PureState(dims, std::move(amps));
}

PureState apply_local_unitaries(const PureState& state, const LocalUnitarySet& us) {
  const Dims& dims = state.dims();
  if (static_cast<int>(us.unitaries.size()) != dims.count()) {
    throw ValidationError("local unitaries: expected " + std::to_string(dims.count()) +
                          " matrices, got " + std::to_string(us.unitaries.size()));
  }
  cvector_t amps = state.amplitudes();
  cvector_t x, y;
  for (int u = 1; u <= dims.count(); ++u) {
    const Eigen::MatrixXcd& mat = us.unitaries[u - 1];
    const int n = dims.dim(u);
    if (mat.rows() != n || mat.cols() != n) {
      throw ValidationError("local unitaries: matrix for subsystem " + std::to_string(u) +
                            " has shape " + std::to_string(mat.rows()) + "x" +
                            std::to_string(mat.cols()) + ", expected " +
                            std::to_string(n) + "x" + std::to_string(n));
    }
    if (unitarity_residual(mat) > 1e-9) {
      throw ValidationError("local unitaries: matrix for subsystem " + std::to_string(u) +
                            " is not unitary");
    }
    const std::int64_t stride = dims.stride(u);
    const std::int64_t block = stride * n;
    x.assign(n, complex_t{});
    y.assign(n, complex_t{});
    for (std::int64_t g = 0; g < dims.joint_dim(); g += block) {
      for (std::int64_t r = 0; r < stride; ++r) {
        for (int j = 0; j < n; ++j) {
          x[j] = amps[g + r + j * stride];
        }
        for (int i = 0; i < n; ++i) {
          complex_t acc{0.0, 0.0};
          for (int j = 0; j < n; ++j) {
            acc += mat(i, j) * x[j];
          }
          y[i] = acc;
        }
        for (int i = 0; i < n; ++i) {
          amps[g + r + i * stride] = y[i];
        }
      }
    }
  }
  return PureState(dims, std::move(amps));
}

}  // namespace gammaq
