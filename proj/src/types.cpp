#include "gammaq/types.hpp"

namespace gammaq {

namespace {
// Dense amplitude vectors get allocated at joint_dim, so keep a hard cap.
constexpr std::int64_t kMaxJointDim = std::int64_t{1} << 26;
}  // namespace

Dims::Dims(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw ValidationError("dims: need at least one subsystem");
  }
  for (int n : dims_) {
    if (n < 2) {
      throw ValidationError("dims: every local dimension must be at least 2");
    }
    if (joint_dim_ > kMaxJointDim / n) {
      throw ValidationError("dims: joint dimension exceeds 2^26");
    }
    joint_dim_ *= n;
  }
  strides_.assign(dims_.size(), 1);
  for (int u = count() - 2; u >= 0; --u) {
    strides_[u] = strides_[u + 1] * dims_[u + 1];
  }
}

int Dims::dim(int u) const {
  if (u < 1 || u > count()) {
    throw ValidationError("dims: subsystem position " + std::to_string(u) +
                          " out of range 1.." + std::to_string(count()));
  }
  return dims_[u - 1];
}

std::int64_t Dims::stride(int u) const {
  if (u < 1 || u > count()) {
    throw ValidationError("dims: subsystem position " + std::to_string(u) +
                          " out of range 1.." + std::to_string(count()));
  }
  return strides_[u - 1];
}

}  // namespace gammaq
