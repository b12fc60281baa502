#include "gammaq/numerics.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace gammaq {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_double_short(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return std::string(buf);
}

}  // namespace gammaq
