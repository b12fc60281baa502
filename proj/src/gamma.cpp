#include "gammaq/gamma.hpp"

#include <algorithm>
#include <cmath>

#include "gammaq/combinatorics.hpp"
#include "gammaq/numerics.hpp"

namespace gammaq {

namespace {

void validate_subset(const Dims& dims, const std::vector<int>& subset) {
  if (subset.size() < 2) {
    throw ValidationError("subset: need at least two subsystem positions");
  }
  int prev = 0;
  for (int u : subset) {
    if (u <= prev) {
      throw ValidationError("subset: positions must be strictly ascending");
    }
    if (u > dims.count()) {
      throw ValidationError("subset: position " + std::to_string(u) +
                            " out of range 1.." + std::to_string(dims.count()));
    }
    prev = u;
  }
}

void validate_spec(const Dims& dims, const SubsetTermSpec& spec) {
  validate_subset(dims, spec.subset);
  if (spec.pairs.size() != spec.subset.size()) {
    throw ValidationError("term spec: need one index pair per subset member");
  }
  for (std::size_t i = 0; i < spec.subset.size(); ++i) {
    const int u = spec.subset[i];
    const IndexPair& p = spec.pairs[i];
    if (p.k < 1 || p.l > dims.dim(u) || p.k >= p.l) {
      throw ValidationError("term spec: pair (" + std::to_string(p.k) + "," +
                            std::to_string(p.l) + ") invalid for subsystem " +
                            std::to_string(u));
    }
  }
  if (spec.diagonal.size() + spec.subset.size() != static_cast<std::size_t>(dims.count())) {
    throw ValidationError("term spec: need one diagonal label per non-member");
  }
}

/// Recursive evaluator over the permuted levels. `level` indexes into
/// subset; level == subset.size() is the |rho| leaf. The innermost permuted
/// level squares its absolute difference, all outer levels do not.
double nested_eval(const PureState& state, const std::vector<int>& subset,
                   std::size_t level, MultiIndex& ks, MultiIndex& ls,
                   std::int64_t& entries) {
  if (level == subset.size()) {
    ++entries;
    return std::abs(rho(state, pi_index(state.dims(), ks, ls)));
  }
  const int pos = subset[level];
  const double kept = nested_eval(state, subset, level + 1, ks, ls, entries);
  std::swap(ks[pos - 1], ls[pos - 1]);
  const double swapped = nested_eval(state, subset, level + 1, ks, ls, entries);
  std::swap(ks[pos - 1], ls[pos - 1]);
  const double diff = std::abs(kept - swapped);
  return level + 1 == subset.size() ? diff * diff : diff;
}

}  // namespace

NormalizationVector NormalizationVector::uniform(int max_size, double value) {
  NormalizationVector out;
  for (int s = 2; s <= max_size; ++s) {
    out.set(s, value);
  }
  return out;
}

void NormalizationVector::set(int size, double value) {
  if (size < 2) {
    throw ValidationError("normalization: subset size must be at least 2");
  }
  if (!(value >= 0.0)) {
    throw ValidationError("normalization: N_" + std::to_string(size) +
                          " must be nonnegative");
  }
  values_[size] = value;
}

double NormalizationVector::at(int size) const {
  const auto it = values_.find(size);
  if (it == values_.end()) {
    throw ValidationError("normalization: missing entry for subset size " +
                          std::to_string(size));
  }
  return it->second;
}

double permutation_apply(const std::function<double(const MultiIndex&, const MultiIndex&)>& f,
                         int j, const MultiIndex& ks, const MultiIndex& ls) {
  if (j < 1 || j > static_cast<int>(ks.size()) || ks.size() != ls.size()) {
    throw ValidationError("permutation: position " + std::to_string(j) +
                          " out of range");
  }
  MultiIndex ks2 = ks;
  MultiIndex ls2 = ls;
  std::swap(ks2[j - 1], ls2[j - 1]);
  return f(ks, ls) - f(ks2, ls2);
}

double nested_term(const PureState& state, const SubsetTermSpec& spec, TermStats* stats) {
  const Dims& dims = state.dims();
  validate_spec(dims, spec);

  MultiIndex ks(dims.count());
  MultiIndex ls(dims.count());
  std::size_t in_subset = 0;
  std::size_t in_diagonal = 0;
  for (int u = 1; u <= dims.count(); ++u) {
    if (in_subset < spec.subset.size() && spec.subset[in_subset] == u) {
      ks[u - 1] = spec.pairs[in_subset].k;
      ls[u - 1] = spec.pairs[in_subset].l;
      ++in_subset;
    } else {
      const int d = spec.diagonal[in_diagonal++];
      if (d < 1 || d > dims.dim(u)) {
        throw ValidationError("term spec: diagonal label " + std::to_string(d) +
                              " invalid for subsystem " + std::to_string(u));
      }
      ks[u - 1] = d;
      ls[u - 1] = d;
    }
  }

  std::int64_t entries = 0;
  const double value = nested_eval(state, spec.subset, 1, ks, ls, entries);
  if (stats != nullptr) {
    stats->terms += 1;
    stats->entries += entries;
  }
  return value;
}

double contribution(const PureState& state, const std::vector<int>& subset,
                    TermStats* stats) {
  const Dims& dims = state.dims();
  validate_subset(dims, subset);

  SubsetTermSpec spec;
  spec.subset = subset;
  spec.pairs.resize(subset.size());
  spec.diagonal.assign(dims.count() - subset.size(), 1);

  std::vector<std::vector<IndexPair>> pair_choices;
  pair_choices.reserve(subset.size());
  for (int u : subset) {
    pair_choices.push_back(index_pairs(dims.dim(u)));
  }
  std::vector<int> diag_limits;
  diag_limits.reserve(spec.diagonal.size());
  {
    std::size_t in_subset = 0;
    for (int u = 1; u <= dims.count(); ++u) {
      if (in_subset < subset.size() && subset[in_subset] == u) {
        ++in_subset;
      } else {
        diag_limits.push_back(dims.dim(u));
      }
    }
  }

  KahanAccumulator acc;
  std::vector<int> pair_digits(subset.size(), 1);
  std::vector<int> pair_limits(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    pair_limits[i] = static_cast<int>(pair_choices[i].size());
  }
  do {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      spec.pairs[i] = pair_choices[i][pair_digits[i] - 1];
    }
    std::fill(spec.diagonal.begin(), spec.diagonal.end(), 1);
    do {
      acc.add(nested_term(state, spec, stats));
    } while (advance_mixed_radix(spec.diagonal, diag_limits));
  } while (advance_mixed_radix(pair_digits, pair_limits));

  return acc.value();
}

GammaReport gamma(const PureState& state, const NormalizationVector& norms) {
  const int m = state.dims().count();
  for (int s = 2; s <= m; ++s) {
    norms.at(s);  // fail fast on a missing entry
  }

  GammaReport report;
  report.norms = norms;
  for (int s = 2; s <= m; ++s) {
    report.term_counts[s] = 0;
    report.entry_counts[s] = 0;
    for (const std::vector<int>& subset : enumerate_subsets(m, s)) {
      TermStats stats;
      report.contributions[subset] = contribution(state, subset, &stats);
      report.term_counts[s] += stats.terms;
      report.entry_counts[s] += stats.entries;
    }
  }

  KahanAccumulator total;
  for (int s = m; s >= 2; --s) {
    for (const std::vector<int>& subset : enumerate_subsets(m, s)) {
      total.add(norms.at(s) * report.contributions.at(subset));
    }
  }
  report.gamma = std::sqrt(std::max(0.0, total.value()));
  return report;
}

double gamma_bipartite_explicit(const PureState& state, double n2) {
  const Dims& dims = state.dims();
  if (dims.count() != 2) {
    throw ValidationError("bipartite formula: state has " +
                          std::to_string(dims.count()) + " parties, expected 2");
  }
  const int n1d = dims.dim(1);
  const int n2d = dims.dim(2);
  const cvector_t& c = state.amplitudes();
  const auto coeff = [&](int row, int col) {
    return std::abs(c[row - 1] * std::conj(c[col - 1]));
  };
  KahanAccumulator acc;
  for (int k1 = 1; k1 <= n1d; ++k1) {
    for (int l1 = k1 + 1; l1 <= n1d; ++l1) {
      for (int k2 = 1; k2 <= n2d; ++k2) {
        for (int l2 = k2 + 1; l2 <= n2d; ++l2) {
          const double sum = coeff((k1 - 1) * n2d + k2, (l1 - 1) * n2d + l2);
          const double dif = coeff((k1 - 1) * n2d + l2, (l1 - 1) * n2d + k2);
          acc.add((sum - dif) * (sum - dif));
        }
      }
    }
  }
  return std::sqrt(n2 * acc.value());
}

double gamma_tripartite_explicit(const PureState& state, double n2, double n3) {
  const Dims& dims = state.dims();
  if (dims.count() != 3) {
    throw ValidationError("tripartite formula: state has " +
                          std::to_string(dims.count()) + " parties, expected 3");
  }
  const int d1 = dims.dim(1);
  const int d2 = dims.dim(2);
  const int d3 = dims.dim(3);
  const cvector_t& c = state.amplitudes();
  const auto coeff = [&](int k1, int k2, int k3, int l1, int l2, int l3) {
    const int row = (k1 - 1) * d2 * d3 + (k2 - 1) * d3 + k3;
    const int col = (l1 - 1) * d2 * d3 + (l2 - 1) * d3 + l3;
    return std::abs(c[row - 1] * std::conj(c[col - 1]));
  };

  KahanAccumulator pairwise;
  // Q1 Q2 block: permute subsystem 2, diagonal on 3.
  for (int k1 = 1; k1 <= d1; ++k1)
    for (int l1 = k1 + 1; l1 <= d1; ++l1)
      for (int k2 = 1; k2 <= d2; ++k2)
        for (int l2 = k2 + 1; l2 <= d2; ++l2)
          for (int d = 1; d <= d3; ++d) {
            const double diff = coeff(k1, k2, d, l1, l2, d) - coeff(k1, l2, d, l1, k2, d);
            pairwise.add(diff * diff);
          }
  // Q1 Q3 block: permute subsystem 3, diagonal on 2.
  for (int k1 = 1; k1 <= d1; ++k1)
    for (int l1 = k1 + 1; l1 <= d1; ++l1)
      for (int k3 = 1; k3 <= d3; ++k3)
        for (int l3 = k3 + 1; l3 <= d3; ++l3)
          for (int d = 1; d <= d2; ++d) {
            const double diff = coeff(k1, d, k3, l1, d, l3) - coeff(k1, d, l3, l1, d, k3);
            pairwise.add(diff * diff);
          }
  // Q2 Q3 block: permute subsystem 3, diagonal on 1.
  for (int k2 = 1; k2 <= d2; ++k2)
    for (int l2 = k2 + 1; l2 <= d2; ++l2)
      for (int k3 = 1; k3 <= d3; ++k3)
        for (int l3 = k3 + 1; l3 <= d3; ++l3)
          for (int d = 1; d <= d1; ++d) {
            const double diff = coeff(d, k2, k3, d, l2, l3) - coeff(d, k2, l3, d, l2, k3);
            pairwise.add(diff * diff);
          }

  KahanAccumulator tripartite;
  for (int k1 = 1; k1 <= d1; ++k1)
    for (int l1 = k1 + 1; l1 <= d1; ++l1)
      for (int k2 = 1; k2 <= d2; ++k2)
        for (int l2 = k2 + 1; l2 <= d2; ++l2)
          for (int k3 = 1; k3 <= d3; ++k3)
            for (int l3 = k3 + 1; l3 <= d3; ++l3) {
              const double kept =
                  coeff(k1, k2, k3, l1, l2, l3) - coeff(k1, k2, l3, l1, l2, k3);
              const double swapped =
                  coeff(k1, l2, k3, l1, k2, l3) - coeff(k1, l2, l3, l1, k2, k3);
              tripartite.add(std::abs(kept * kept - swapped * swapped));
            }

  return std::sqrt(n2 * pairwise.value() + n3 * tripartite.value());
}

}  // namespace gammaq
