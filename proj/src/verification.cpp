#include "freeprod/verification.hpp"

#include <algorithm>

#include "freeprod/bass_serre.hpp"
#include "freeprod/constructions.hpp"
#include "freeprod/error.hpp"

namespace freeprod {

namespace {

constexpr std::size_t kMaxNotes = 5;

void note_failure(TrialSummary& summary, std::string note) {
  ++summary.failures;
  if (summary.failure_notes.size() < kMaxNotes) summary.failure_notes.push_back(std::move(note));
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

struct NonCommutingPair {
  FPElement a;
  FPElement g;
  FPElement a_conj;
};

NonCommutingPair random_non_commuting_pair(const FreeProduct& ambient, std::size_t max_norm, std::mt19937_64& rng) {
  while (true) {
    auto a = random_cyclically_reduced(ambient, max_norm, rng);
    auto g = random_element(ambient, uniform(rng, 0, max_norm), rng);
    auto a_conj = conjugate(a, g);
    if (!commute(a, a_conj)) return {std::move(a), std::move(g), std::move(a_conj)};
  }
}

}  // namespace

FPElement random_element(const FreeProduct& ambient, std::size_t norm, std::mt19937_64& rng) {
  const auto n = ambient.factor_count();
  if (norm > 1 && n < 2) throw Error(ErrorKind::UsageError, "one factor admits no element of norm > 1");
  std::vector<Syllable> syllables;
  std::uint32_t previous = static_cast<std::uint32_t>(n);
  for (std::size_t i = 0; i < norm; ++i) {
    std::uint32_t f;
    do {
      f = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
    } while (f == previous);
    const auto order = ambient.factor(f).order();
    syllables.push_back({f, ElementId{static_cast<std::uint32_t>(uniform(rng, 1, order - 1))}});
    previous = f;
  }
  return ambient.normalize(syllables);
}

FPElement random_cyclically_reduced(const FreeProduct& ambient, std::size_t max_norm, std::mt19937_64& rng) {
  if (ambient.factor_count() < 2 || max_norm < 2) {
    throw Error(ErrorKind::UsageError, "cyclically reduced elements of norm >= 2 need two factors");
  }
  const bool even_only = ambient.factor_count() == 2;
  while (true) {
    auto norm = uniform(rng, 2, max_norm);
    if (even_only && norm % 2 == 1) continue;
    auto u = random_element(ambient, norm, rng);
    if (is_cyclically_reduced(u)) return u;
  }
}

TrialSummary run_lemma4_trials(const FreeProduct& ambient, std::uint64_t trials, std::size_t max_norm,
                               std::mt19937_64& rng) {
  constexpr std::int64_t kBound = 20;
  constexpr std::size_t kRandomTuples = 50;
  TrialSummary summary;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++summary.trials;
    const auto f = random_element(ambient, uniform(rng, 1, max_norm), rng);
    const auto word = ambient.render(f);
    const auto c = build_lemma4(ambient, word);
    ++summary.checks;
    if (c.equation.rhs != f || !satisfies(c.equation, c.solution)) {
      note_failure(summary, "constructed solution fails for f = " + word);
      continue;
    }
    if (!order(f).is_infinite()) continue;

    const auto m = static_cast<std::int64_t>(c.letters.size());
    auto check_tuple = [&](const std::vector<std::int64_t>& n) {
      Substitution sub;
      for (std::size_t j = 0; j < n.size(); ++j) sub.insert_or_assign(static_cast<std::uint32_t>(j + 1), power(f, n[j]));
      ++summary.checks;
      if (satisfies(c.equation, sub)) {
        note_failure(summary, "x_j = f^n_j solves the equation for f = " + word);
        return false;
      }
      return true;
    };
    // One tuple per attainable exponent sum.
    for (std::int64_t sum = -kBound * m; sum <= kBound * m; ++sum) {
      std::vector<std::int64_t> n(static_cast<std::size_t>(m), 0);
      auto rest = sum;
      for (auto& nj : n) {
        nj = std::clamp(rest, -kBound, kBound);
        rest -= nj;
      }
      if (!check_tuple(n)) break;
    }
    for (std::size_t r = 0; r < kRandomTuples; ++r) {
      std::vector<std::int64_t> n(static_cast<std::size_t>(m));
      for (auto& nj : n) nj = std::uniform_int_distribution<std::int64_t>(-kBound, kBound)(rng);
      if (!check_tuple(n)) break;
    }
  }
  return summary;
}

TrialSummary run_lemma7_trials(const FreeProduct& ambient, std::uint64_t trials, std::size_t max_norm,
                               std::mt19937_64& rng) {
  TrialSummary summary;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++summary.trials;
    const auto [a, g, a_conj] = random_non_commuting_pair(ambient, max_norm, rng);
    const auto n1 = static_cast<std::int64_t>(uniform(rng, 2, 5));
    const auto n2 = static_cast<std::int64_t>(uniform(rng, 2, 5));
    const auto core = cyclic_reduce(power(a, n1) * power(a_conj, n2)).core;
    const auto bound = (n1 + n2 - 4) * static_cast<std::int64_t>(a.norm());
    ++summary.checks;
    if (static_cast<std::int64_t>(core.norm()) <= bound) {
      note_failure(summary, "A = " + ambient.render(a) + ", g = " + ambient.render(g) + ", N1 = " +
                                std::to_string(n1) + ", N2 = " + std::to_string(n2) + ": |D| = " +
                                std::to_string(core.norm()));
    }
  }
  return summary;
}

TrialSummary run_axis_trials(const FreeProduct& ambient, std::uint64_t trials, std::size_t max_norm,
                             std::mt19937_64& rng) {
  constexpr std::size_t kRandomVertices = 20;
  TrialSummary summary;
  for (std::uint64_t t = 0; t < trials; ++t) {
    ++summary.trials;
    const auto [a, g, a_conj] = random_non_commuting_pair(ambient, max_norm, rng);
    const auto len = static_cast<std::int64_t>(a.norm());
    const auto window = static_cast<std::uint64_t>(4 * len) + g.norm();
    const auto label = "A = " + ambient.render(a) + ", g = " + ambient.render(g);

    const auto overlap = axes_intersection(a, a_conj, window);
    ++summary.checks;
    if (overlap && static_cast<std::int64_t>(*overlap) >= 4 * len) {
      note_failure(summary, label + ": axes share " + std::to_string(*overlap) + " edges");
    }

    const auto n1 = static_cast<std::int64_t>(uniform(rng, 2, 5));
    const auto n2 = static_cast<std::int64_t>(uniform(rng, 2, 5));
    const auto product = power(a, n1) * power(a_conj, n2);
    const auto bound = static_cast<std::uint64_t>(2 * ((n1 + n2 - 4) * len + 2));
    const auto translation = 2 * cyclic_reduce(product).core.norm();
    ++summary.checks;
    if (translation < bound) note_failure(summary, label + ": translation length below bound");

    std::vector<TreeVertex> sample = axis_vertices(a, 1);
    const auto beta = axis_vertices(a_conj, 1);
    sample.insert(sample.end(), beta.begin(), beta.end());
    for (std::size_t r = 0; r < kRandomVertices; ++r) {
      auto x = random_element(ambient, uniform(rng, 0, 8), rng);
      if (r % 2 == 0) {
        sample.push_back(TreeVertex::element(std::move(x)));
      } else {
        sample.push_back(TreeVertex::coset(static_cast<std::uint32_t>(uniform(rng, 0, ambient.factor_count() - 1)), x));
      }
    }
    for (const auto& v : sample) {
      const auto d = vertex_distance(v, act(product, v));
      ++summary.checks;
      if (d < bound || d < translation) {
        note_failure(summary, label + ": vertex " + v.render() + " moved only " + std::to_string(d));
        break;
      }
    }
  }
  return summary;
}

}  // namespace freeprod
