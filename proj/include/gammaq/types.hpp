#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammaq {

using complex_t = std::complex<double>;
using cvector_t = std::vector<complex_t>;

/// Bad input or configuration: out-of-range indices, malformed state files,
/// invalid parameters. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure inside an otherwise valid computation. CLI exit code 2.
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Local dimensions N_1..N_m of a multipartite system.
///
/// Subsystem positions u, basis labels k, and joint indices are all 1-based;
/// only raw vector storage is 0-based. stride(u) is the mixed-radix place
/// value of subsystem u in the joint index (most significant subsystem
/// first).
class Dims {
public:
  explicit Dims(std::vector<int> dims);

  int count() const { return static_cast<int>(dims_.size()); }
  int dim(int u) const;
  std::int64_t stride(int u) const;
  std::int64_t joint_dim() const { return joint_dim_; }

  const std::vector<int>& list() const { return dims_; }

  bool operator==(const Dims& other) const { return dims_ == other.dims_; }

private:
  std::vector<int> dims_;
  std::vector<std::int64_t> strides_;
  std::int64_t joint_dim_ = 1;
};

/// One basis label per subsystem, entry u in 1..N_u.
using MultiIndex = std::vector<int>;

/// A (row, column) pair of 1-based joint-basis indices.
struct JointIndexPair {
  std::int64_t row = 0;
  std::int64_t col = 0;
  bool operator==(const JointIndexPair&) const = default;
};

/// An ordered basis-label pair k < l within one subsystem.
struct IndexPair {
  int k = 0;
  int l = 0;
  bool operator==(const IndexPair&) const = default;
};

}  // namespace gammaq
