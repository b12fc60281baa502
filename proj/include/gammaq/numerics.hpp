#pragma once

#include <cmath>
#include <string>

namespace gammaq {

/// Neumaier-compensated accumulator. Used wherever a reduction order is part
/// of the reproducibility contract.
class KahanAccumulator {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Fixed-width scientific-ish formatting with 6 significant digits, for
/// human-readable tables.
std::string format_double_short(double value);

}  // namespace gammaq
