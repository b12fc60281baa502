#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gammaq/state.hpp"

namespace gammaq {

/// Weights N_s applied to the size-s subset contributions. Only the size-2
/// weight has a conventional value (2); the rest are configurable.
class NormalizationVector {
public:
  NormalizationVector() { values_[2] = 2.0; }

  static NormalizationVector uniform(int max_size, double value = 2.0);

  void set(int size, double value);
  double at(int size) const;
  bool has(int size) const { return values_.count(size) != 0; }
  const std::map<int, double>& values() const { return values_; }

private:
  std::map<int, double> values_;
};

/// One fully indexed nested-permutation term: the participating subsystem
/// subset, one (k_u < l_u) pair per participant, and one diagonal label per
/// non-participant (ascending position order).
struct SubsetTermSpec {
  std::vector<int> subset;
  std::vector<IndexPair> pairs;
  std::vector<int> diagonal;
};

/// Size-major, then lexicographic. Fixes the reduction and report order.
struct SubsetOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }
};

/// Instrumentation: nested terms evaluated and density entries touched.
struct TermStats {
  std::int64_t terms = 0;
  std::int64_t entries = 0;
};

struct GammaReport {
  std::map<std::vector<int>, double, SubsetOrder> contributions;
  NormalizationVector norms;
  double gamma = 0.0;
  std::map<int, std::int64_t> term_counts;   // subset size -> nested terms evaluated
  std::map<int, std::int64_t> entry_counts;  // subset size -> density entries touched
};

/// f(..., k_j, l_j, ...) - f(..., l_j, k_j, ...) with the swap at subsystem
/// position j.
double permutation_apply(const std::function<double(const MultiIndex&, const MultiIndex&)>& f,
                         int j, const MultiIndex& ks, const MultiIndex& ls);

/// Evaluates one nested-permutation term. With S = (u_1 < ... < u_s), the
/// innermost level permutes u_s and squares the absolute difference; each
/// outer level permutes the next-smaller element and takes a plain absolute
/// difference; u_1 is never permuted. Touches exactly 2^(s-1) density
/// entries.
double nested_term(const PureState& state, const SubsetTermSpec& spec,
                   TermStats* stats = nullptr);

/// Sum of nested_term over every (k_u < l_u) pair choice for the subset and
/// every diagonal filler for its complement.
double contribution(const PureState& state, const std::vector<int>& subset,
                    TermStats* stats = nullptr);

/// Full measure: gamma = sqrt( sum_S N_|S| * contribution(S) ) over all
/// subsets of size >= 2. Contributions are reduced in descending subset-size
/// order with compensated accumulation.
GammaReport gamma(const PureState& state, const NormalizationVector& norms);

/// Bipartite closed form, written out with flat index arithmetic so it stays
/// independent of the general engine's code path.
double gamma_bipartite_explicit(const PureState& state, double n2);

/// Tripartite closed form (three bipartite blocks plus the tripartite
/// block), also on an independent code path.
double gamma_tripartite_explicit(const PureState& state, double n2, double n3);

}  // namespace gammaq
