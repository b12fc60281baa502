#pragma once

#include <cstdint>
#include <vector>

#include "gammaq/types.hpp"

namespace gammaq {

std::uint64_t binomial(int n, int k);

/// All size-s subsets of {1..m}, ascending within each subset, in
/// lexicographic order.
std::vector<std::vector<int>> enumerate_subsets(int m, int s);

/// All ordered pairs k < l of 1..n, lexicographic: (1,2), (1,3), ..., (n-1,n).
std::vector<IndexPair> index_pairs(int n);

/// Advances a mixed-radix counter (each digit[i] in [1, limits[i]]),
/// rightmost digit fastest. Returns false once the counter wraps back to
/// all-ones.
bool advance_mixed_radix(std::vector<int>& digits, const std::vector<int>& limits);

}  // namespace gammaq
