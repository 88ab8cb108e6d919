#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "freeprod/free_product.hpp"

namespace freeprod {

/// Uniformly random reduced word of exactly `norm` syllables.
FPElement random_element(const FreeProduct& ambient, std::size_t norm, std::mt19937_64& rng);

/// Random cyclically reduced element with norm in [2, max_norm]; with two
/// factors only even norms exist.
FPElement random_cyclically_reduced(const FreeProduct& ambient, std::size_t max_norm, std::mt19937_64& rng);

struct TrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> failure_notes;  ///< first few failures, rendered

  bool passed() const noexcept { return failures == 0; }
};

/// Random coefficient words f of norm 1..max_norm: the constructed solution
/// must verify; for f of infinite order, x_j = f^{n_j} with |n_j| <= 20 must
/// never solve the equation (every attainable exponent sum is evaluated, plus
/// random tuples).
TrialSummary run_lemma4_trials(const FreeProduct& ambient, std::uint64_t trials, std::size_t max_norm,
                               std::mt19937_64& rng);

/// A cyclically reduced of infinite order, g with A and A^g not commuting,
/// N1, N2 in [2, 5]: the cyclic core of A^N1 (A^g)^N2 has norm greater than
/// (N1 + N2 - 4)|A|.
TrialSummary run_lemma7_trials(const FreeProduct& ambient, std::uint64_t trials, std::size_t max_norm,
                               std::mt19937_64& rng);

/// Tree-side check for the same kind of pairs: the axes of A and A^g share
/// fewer than 4|A| edges and A^N1 (A^g)^N2 displaces every sampled vertex by
/// at least 2((N1 + N2 - 4)|A| + 2) edges.
TrialSummary run_axis_trials(const FreeProduct& ambient, std::uint64_t trials, std::size_t max_norm,
                             std::mt19937_64& rng);

}  // namespace freeprod
