#include "gammaq/combinatorics.hpp"

#include <numeric>

namespace gammaq {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) {
    return 0;
  }
  if (2 * k > n) {
    k = n - k;
  }
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::vector<std::vector<int>> enumerate_subsets(int m, int s) {
  std::vector<std::vector<int>> out;
  if (s < 0 || s > m) {
    return out;
  }
  std::vector<int> cur(s);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    // Next lexicographic combination.
    int i = s - 1;
    while (i >= 0 && cur[i] == m - (s - 1 - i)) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++cur[i];
    for (int j = i + 1; j < s; ++j) {
      cur[j] = cur[j - 1] + 1;
    }
  }
  return out;
}

std::vector<IndexPair> index_pairs(int n) {
  std::vector<IndexPair> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int k = 1; k < n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      out.push_back({k, l});
    }
  }
  return out;
}

bool advance_mixed_radix(std::vector<int>& digits, const std::vector<int>& limits) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (digits[i] < limits[i]) {
      ++digits[i];
      return true;
    }
    digits[i] = 1;
  }
  return false;
}

}  // namespace gammaq
