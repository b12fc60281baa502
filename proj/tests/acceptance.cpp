// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here, next to the check it gates.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "gammaq/combinatorics.hpp"
#include "gammaq/optimizer.hpp"
#include "gammaq/povm.hpp"
#include "gammaq/zoo.hpp"
#include "test_util.hpp"

using namespace gammaq;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Checker {
  int failures = 0;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (first_failure.empty()) {
        first_failure = what;
      }
    }
  }

  void require_close(double actual, double expected, double tol, const std::string& what) {
    require(std::abs(actual - expected) <= tol,
            what + " (got " + std::to_string(actual) + ", want " +
                std::to_string(expected) + " within " + std::to_string(tol) + ")");
  }
};

int g_failed_criteria = 0;

void criterion(int id, const std::string& title, const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("unexpected exception: ") + e.what());
  }
  if (c.failures == 0) {
    std::printf("[PASS] criterion %2d: %s\n", id, title.c_str());
  } else {
    ++g_failed_criteria;
    std::printf("[FAIL] criterion %2d: %s -- %d check(s) failed; first: %s\n", id,
                title.c_str(), c.failures, c.first_failure.c_str());
  }
  std::fflush(stdout);
}

double schmidt_pair_product(const PureState& s) {
  const complex_t a = s.amplitude(1), b = s.amplitude(2);
  const complex_t c = s.amplitude(3), d = s.amplitude(4);
  const double tr = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  const double det2 = std::norm(a * d - b * c);
  const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det2));
  return std::sqrt(std::max(0.0, tr / 2.0 - disc)) * std::sqrt(tr / 2.0 + disc);
}

}  // namespace

int main() {
  const double n2 = 2.0, n3 = 2.0;

  criterion(1, "GHZ3: gamma^2/N_3 = 1/4, single contribution {1,2,3} via (1,8)", [&](Checker& c) {
    const GammaReport r = gamma(ghz(), NormalizationVector::uniform(3));
    c.require_close(r.gamma * r.gamma / n3, 0.25, 1e-12, "gamma^2/N_3");
    c.require_close(r.contributions.at({1, 2, 3}), 0.25, 1e-12, "tripartite contribution");
    for (const auto& [subset, value] : r.contributions) {
      if (subset != std::vector<int>{1, 2, 3}) {
        c.require(value == 0.0, "contribution of a proper subset is nonzero");
      }
    }
    c.require_close(std::abs(rho(ghz(), {1, 8})), 0.5, 1e-12, "|rho_{1,8}|");
  });

  criterion(2, "W3: gamma^2/N_2 = 1/3, three bipartite contributions of 1/9", [&](Checker& c) {
    const GammaReport r = gamma(w(), NormalizationVector::uniform(3));
    c.require_close(r.gamma * r.gamma / n2, 1.0 / 3.0, 1e-12, "gamma^2/N_2");
    for (const auto& subset : {std::vector<int>{1, 2}, {1, 3}, {2, 3}}) {
      c.require_close(r.contributions.at(subset), 1.0 / 9.0, 1e-12, "bipartite contribution");
    }
    c.require(r.contributions.at({1, 2, 3}) == 0.0, "tripartite contribution nonzero");
    c.require_close(std::abs(rho(w(), {3, 5})), 1.0 / 3.0, 1e-12, "|rho_{3,5}|");
    c.require_close(std::abs(rho(w(), {2, 5})), 1.0 / 3.0, 1e-12, "|rho_{2,5}|");
    c.require_close(std::abs(rho(w(), {2, 3})), 1.0 / 3.0, 1e-12, "|rho_{2,3}|");
  });

  criterion(3, "psi1: contributions {2,4},{1,2,3},{1,3,4} = 1/8, gamma^2 = N_2/8 + N_3/4",
            [&](Checker& c) {
    const GammaReport r = gamma(psi1(), NormalizationVector::uniform(4));
    const std::vector<std::vector<int>> expected = {{2, 4}, {1, 2, 3}, {1, 3, 4}};
    for (const auto& [subset, value] : r.contributions) {
      const bool hit =
          std::find(expected.begin(), expected.end(), subset) != expected.end();
      if (hit) {
        c.require_close(value, 0.125, 1e-12, "contribution");
      } else {
        c.require(value == 0.0, "unexpected nonzero contribution");
      }
    }
    c.require_close(r.gamma * r.gamma, n2 / 8.0 + n3 / 4.0, 1e-12, "gamma^2");
  });

  criterion(4, "psi2: transformed gamma^2 = N_3/4 via (7,9); optimizer reaches it", [&](Checker& c) {
    LocalUnitarySet us = LocalUnitarySet::identity(Dims({2, 2, 2, 2}));
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd had(2, 2);
    had << h, h, h, -h;
    us.unitaries[3] = had;
    const PureState transformed = apply_local_unitaries(psi2(), us);
    const GammaReport r = gamma(transformed, NormalizationVector::uniform(4));
    c.require_close(r.gamma * r.gamma, n3 / 4.0, 1e-12, "gamma^2 after U_4");
    for (const auto& [subset, value] : r.contributions) {
      if (subset == std::vector<int>{1, 2, 3}) {
        c.require_close(value, 0.25, 1e-12, "tripartite contribution");
      } else {
        c.require(std::abs(value) < 1e-12, "unexpected nonzero contribution");
      }
    }
    c.require_close(std::abs(rho(transformed, {7, 9})), 0.5, 1e-12, "|rho_{7,9}|");

    const OptResult opt = optimize_gamma_sup(psi2(), NormalizationVector::uniform(4), {});
    c.require(opt.best_gamma >= std::sqrt(n3) / 2.0 - 1e-6,
              "optimizer below sqrt(N_3)/2 - 1e-6, got " + std::to_string(opt.best_gamma));
  });

  criterion(5, "Cat(m), m = 2..8: gamma^2 = N_m/4 via (1, 2^m); m = 8 under 5 s", [&](Checker& c) {
    for (int m = 2; m <= 8; ++m) {
      const auto start = std::chrono::steady_clock::now();
      const PureState s = cat(m);
      const GammaReport r = gamma(s, NormalizationVector::uniform(m));
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      c.require_close(r.gamma * r.gamma, 2.0 / 4.0, 1e-12,
                      "gamma^2 for m = " + std::to_string(m));
      std::vector<int> full(m);
      std::iota(full.begin(), full.end(), 1);
      for (const auto& [subset, value] : r.contributions) {
        if (subset == full) {
          c.require_close(value, 0.25, 1e-12, "full-subset contribution");
        } else {
          c.require(value == 0.0, "proper subset contributes");
        }
      }
      c.require_close(std::abs(rho(s, {1, std::int64_t{1} << m})), 0.5, 1e-12,
                      "|rho_{1,2^m}|");
      if (m == 8) {
        c.require(elapsed < 5.0, "m = 8 took " + std::to_string(elapsed) + " s");
      }
    }
  });

  criterion(6, "product vanishing: 200 seeded product states, gamma < 1e-10", [&](Checker& c) {
    const std::vector<std::vector<int>> dim_lists = {
        {2, 2}, {2, 2, 2}, {2, 3, 2}, {3, 3}, {2, 2, 2, 2}};
    int block = 0;
    for (const auto& dim_list : dim_lists) {
      const Dims dims(dim_list);
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const PureState p = product_state(mix_seed(1000 + block, seed), dims);
        const double g = gamma(p, NormalizationVector::uniform(dims.count())).gamma;
        c.require(g < 1e-10, "gamma = " + std::to_string(g));
      }
      ++block;
    }
  });

  criterion(7, "oracle equivalence: general engine vs explicit 2- and 3-party formulas",
            [&](Checker& c) {
    for (const auto& dim_list : {std::vector<int>{2, 2}, {2, 3}, {3, 3}}) {
      const Dims dims(dim_list);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PureState s = random_state(mix_seed(17, seed), dims);
        const double engine = gamma(s, NormalizationVector::uniform(2)).gamma;
        const double oracle = gamma_bipartite_explicit(s, n2);
        c.require(std::abs(engine - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)),
                  "bipartite mismatch " + std::to_string(engine - oracle));
      }
    }
    for (const auto& dim_list : {std::vector<int>{2, 2, 2}, {2, 2, 3}}) {
      const Dims dims(dim_list);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PureState s = random_state(mix_seed(18, seed), dims);
        const double engine = gamma(s, NormalizationVector::uniform(3)).gamma;
        const double oracle = gamma_tripartite_explicit(s, n2, n3);
        c.require(std::abs(engine - oracle) <= 1e-12 * std::max(1.0, std::abs(oracle)),
                  "tripartite mismatch " + std::to_string(engine - oracle));
      }
    }
  });

  criterion(8, "POVM Fourier identity on 50 random states, fixed phases inconsequential",
            [&](Checker& c) {
    Rng rng(808);
    int tested = 0;
    for (const auto& dim_list : {std::vector<int>{2, 2}, {2, 2, 2}}) {
      const Dims dims(dim_list);
      const auto targets = enumerate_full_targets(dims);
      for (int t = 0; t < 25; ++t) {
        const PureState s = random_state(rng.bits(), dims);
        const FourierTarget& target =
            targets[rng.uniform_int(0, static_cast<int>(targets.size()) - 1)];
        const PhaseAssignment fixed_a = PhaseAssignment::random(dims, rng);
        const PhaseAssignment fixed_b = PhaseAssignment::random(dims, rng);
        const double ga = fourier_gamma(s, target, 8, fixed_a);
        const double gb = fourier_gamma(s, target, 8, fixed_b);
        const double expected = kTwoPi * std::abs(rho(s, target_pi_index(dims, target)));
        c.require(std::abs(ga - expected) < 1e-9,
                  "identity error " + std::to_string(ga - expected));
        c.require(std::abs(ga - gb) < 1e-9,
                  "fixed-phase dependence " + std::to_string(ga - gb));
        ++tested;
      }
    }
    c.require(tested == 50, "state count");
  });

  criterion(9, "invariance: blind to generalized permutations and global phase, "
               "but not to generic local unitaries", [&](Checker& c) {
    Rng rng(909);
    const std::vector<std::vector<int>> dim_lists = {{2, 2}, {2, 2, 2}, {2, 3, 2}};
    int tested = 0;
    while (tested < 50) {
      const Dims dims(dim_lists[tested % dim_lists.size()]);
      const NormalizationVector norms = NormalizationVector::uniform(dims.count());
      const PureState s = random_state(rng.bits(), dims);
      const double base = gamma(s, norms).gamma;

      const PureState mapped = apply_local_unitaries(
          s, testutil::random_generalized_permutation_set(dims, rng));
      c.require(std::abs(gamma(mapped, norms).gamma - base) <= 1e-12,
                "generalized permutation changed gamma");

      cvector_t amps = s.amplitudes();
      const complex_t phase = std::polar(1.0, rng.uniform(0.0, kTwoPi));
      for (complex_t& a : amps) {
        a *= phase;
      }
      c.require(std::abs(gamma(PureState(dims, std::move(amps)), norms).gamma - base) <=
                    1e-12,
                "global phase changed gamma");
      ++tested;
    }

    // Documented fixture: a Hadamard on qubit 1 moves GHZ's gamma from
    // sqrt(1/2) to sqrt(1/4).
    LocalUnitarySet us = LocalUnitarySet::identity(Dims({2, 2, 2}));
    const double h = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd had(2, 2);
    had << h, h, h, -h;
    us.unitaries[0] = had;
    const NormalizationVector norms3 = NormalizationVector::uniform(3);
    const double before = gamma(ghz(), norms3).gamma;
    const double after = gamma(apply_local_unitaries(ghz(), us), norms3).gamma;
    c.require(std::abs(before - after) >= 1e-3, "generic unitary left gamma unchanged");
  });

  criterion(10, "optimizer floor: 20 random 2x2 states vs the Schmidt (SVD) oracle; "
                "determinism", [&](Checker& c) {
    const NormalizationVector norms = NormalizationVector::uniform(2);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PureState s = random_state(mix_seed(4040, seed), Dims({2, 2}));
      OptimizerConfig config;
      config.seed = seed;
      const OptResult r = optimize_gamma_sup(s, norms, config);
      const double floor = std::sqrt(n2) * schmidt_pair_product(s);
      c.require(r.best_gamma >= floor - 1e-6,
                "best " + std::to_string(r.best_gamma) + " below floor " +
                    std::to_string(floor));
    }
    const PureState s = random_state(mix_seed(4040, 3), Dims({2, 2}));
    OptimizerConfig config;
    config.seed = 3;
    const OptResult a = optimize_gamma_sup(s, norms, config);
    const OptResult b = optimize_gamma_sup(s, norms, config);
    c.require(a.best_gamma == b.best_gamma && a.per_restart_bests == b.per_restart_bests &&
                  a.evaluations == b.evaluations,
              "repeated run with the same seed differs");
  });

  criterion(11, "term-count bookkeeping on (2,2,2,2) matches the closed form", [&](Checker& c) {
    const Dims dims({2, 2, 2, 2});
    const GammaReport r = gamma(random_state(11, dims), NormalizationVector::uniform(4));
    for (int s = 2; s <= 4; ++s) {
      std::int64_t expected = 0;
      for (const auto& subset : enumerate_subsets(4, s)) {
        std::int64_t combos = 1;
        std::size_t in_subset = 0;
        for (int u = 1; u <= 4; ++u) {
          if (in_subset < subset.size() && subset[in_subset] == u) {
            combos *= dims.dim(u) * (dims.dim(u) - 1) / 2;
            ++in_subset;
          } else {
            combos *= dims.dim(u);
          }
        }
        expected += combos;
      }
      c.require(r.term_counts.at(s) == expected,
                "term count size " + std::to_string(s));
      c.require(r.entry_counts.at(s) == expected * (std::int64_t{1} << (s - 1)),
                "entry count size " + std::to_string(s));
    }
    c.require(r.term_counts.at(2) == 24 && r.term_counts.at(3) == 8 &&
                  r.term_counts.at(4) == 1,
              "qubit counts C(4,s) * 2^(4-s)");
  });

  if (g_failed_criteria == 0) {
    std::printf("all 11 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failed_criteria);
  return 1;
}
