// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "freeprod/bass_serre.hpp"
#include "freeprod/closure_checker.hpp"
#include "freeprod/constructions.hpp"
#include "freeprod/spec_io.hpp"

using namespace freeprod;

namespace {

struct Result {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FPElement random_reduced(const FreeProduct& g, std::size_t norm, std::mt19937_64& rng) {
  std::vector<Syllable> s;
  for (std::size_t i = 0; i < norm; ++i) {
    std::uint32_t f;
    do {
      f = static_cast<std::uint32_t>(uniform(rng, 0, g.factor_count() - 1));
    } while (!s.empty() && s.back().factor == f);
    s.push_back({f, ElementId{static_cast<std::uint32_t>(uniform(rng, 1, g.factor(f).order() - 1))}});
  }
  return g.normalize(s);
}

// Cyclically reduced, norm in [2, max_norm], hence of infinite order.
FPElement random_hyperbolic(const FreeProduct& g, std::size_t max_norm, std::mt19937_64& rng) {
  while (true) {
    auto u = random_reduced(g, uniform(rng, 2, max_norm), rng);
    const auto s = u.syllables();
    if (s.front().factor != s.back().factor) return u;
  }
}

FPElement random_raw(const FreeProduct& g, std::size_t max_len, std::mt19937_64& rng) {
  std::vector<Syllable> s(uniform(rng, 0, max_len));
  for (auto& x : s) {
    x.factor = static_cast<std::uint32_t>(uniform(rng, 0, g.factor_count() - 1));
    x.elem = ElementId{static_cast<std::uint32_t>(uniform(rng, 0, g.factor(x.factor).order() - 1))};
  }
  return g.normalize(s);
}

const FreeProduct& c2c3() {
  static const auto g = parse_group_spec("factors: cyclic 2; cyclic 3 / labels: a; b");
  return g;
}
const FreeProduct& s3z2() {
  static const auto g = parse_group_spec("factors: dihedral 3; cyclic 2 / labels: a,b; c");
  return g;
}
const FreeProduct& c2c2c2() {
  static const auto g = parse_group_spec("factors: cyclic 2; cyclic 2; cyclic 2 / labels: a; b; c");
  return g;
}

Result example1() {
  Result r;
  const auto& g = s3z2();
  const auto data = parse_subgroup_spec("free_rank: 0\npart: factor=0 gens=a conj=1\npart: factor=0 gens=b conj=c", g);
  const auto v = check_condition2(data);
  if (v.empty()) return r.fail("no violation"), r;
  const auto& w = v.front();
  const auto& s3 = g.factor(0);
  if (g.element(0, w.g) != parse_element("b a", g)) r.fail("g = " + g.render(g.element(0, w.g)));
  if (s3.conjugate_subgroup(data.parts[1].subgroup, w.g) != data.parts[0].subgroup) r.fail("<b>^g != <a>");
  if (!verify_witness(data, w)) r.fail("witness does not verify");
  if (check_all(data).kind != VerdictKind::FailsNecessary) r.fail("verdict");
  r.detail = r.ok ? "f = " + g.render(g.element(0, w.f)) + ", g = " + g.render(g.element(0, w.g)) : r.detail;
  return r;
}

Result example2() {
  Result r;
  const auto g = parse_group_spec("factors: product [cyclic 2, cyclic 3]; cyclic 2 / labels: a,b; c");
  const auto data = parse_subgroup_spec("free_rank: 0\npart: factor=0 gens=a conj=1\npart: factor=0 gens=b conj=c", g);
  const auto v = check_condition2(data);
  if (v.empty()) return r.fail("no violation"), r;
  const auto& w = v.front();
  if (g.element(0, w.f) != parse_element("a b", g) || w.k1 != 3 || w.k2 != 2) {
    r.fail("witness f = " + g.render(g.element(0, w.f)) + ", k1 = " + std::to_string(w.k1) +
           ", k2 = " + std::to_string(w.k2));
  }
  if (!verify_witness(data, w)) r.fail("witness does not verify");
  if (r.ok) r.detail = "f = a b, k1 = 3, k2 = 2";
  return r;
}

Result theorem2() {
  Result r;
  const auto rep = theorem2_report(6);
  if (rep.evaluations() != 8u * 13 * 13 * 13) r.fail("evaluation count " + std::to_string(rep.evaluations()));
  if (rep.formula_mismatches() != 0) r.fail(std::to_string(rep.formula_mismatches()) + " formula mismatches");
  if (rep.target_hits() != 0 || rep.literal_target_hits() != 0) r.fail("value equal to (ab)^2 found");
  if (!rep.g_side_matches) r.fail("(a, cdc, c) is not a solution: " + rep.g_side_value);
  if (r.ok) r.detail = std::to_string(rep.evaluations()) + " evaluations, 0 mismatches, 0 matches";
  return r;
}

Result lemma4() {
  Result r;
  std::mt19937_64 rng(4);
  std::uint64_t infinite = 0, tuples = 0;
  for (const auto* g : {&c2c3(), &s3z2()}) {
    for (int t = 0; t < 100; ++t) {
      const auto f = random_reduced(*g, uniform(rng, 1, 5), rng);
      const auto c = build_lemma4(*g, g->render(f));
      if (evaluate(c.equation.lhs, c.solution) != f) r.fail("solution fails for f = " + g->render(f));
      if (!order(f).is_infinite()) continue;
      ++infinite;
      const auto m = static_cast<std::int64_t>(c.letters.size());
      auto test = [&](const std::vector<std::int64_t>& n) {
        Substitution s;
        for (std::size_t j = 0; j < n.size(); ++j) s.emplace(static_cast<std::uint32_t>(j + 1), power(f, n[j]));
        ++tuples;
        if (evaluate(c.equation.lhs, s) == f) r.fail("powers of f solve it for f = " + g->render(f));
      };
      // x_j in <f> gives f^(p * sum n_j): one tuple per reachable sum, then random tuples.
      for (std::int64_t sum = -20 * m; sum <= 20 * m; ++sum) {
        std::vector<std::int64_t> n(static_cast<std::size_t>(m));
        auto rest = sum;
        for (auto& x : n) {
          x = std::clamp<std::int64_t>(rest, -20, 20);
          rest -= x;
        }
        test(n);
      }
      for (int k = 0; k < 100; ++k) {
        std::vector<std::int64_t> n(static_cast<std::size_t>(m));
        for (auto& x : n) x = std::uniform_int_distribution<std::int64_t>(-20, 20)(rng);
        test(n);
      }
    }
  }
  if (r.ok) r.detail = "200 words, " + std::to_string(infinite) + " of infinite order, " + std::to_string(tuples) + " power tuples";
  return r;
}

struct Pair {
  FPElement a, g, b;
};

Pair non_commuting(const FreeProduct& amb, std::mt19937_64& rng) {
  while (true) {
    auto a = random_hyperbolic(amb, 6, rng);
    auto g = random_reduced(amb, uniform(rng, 0, 6), rng);
    auto b = conjugate(a, g);
    if (!commute(a, b)) return {a, g, b};
  }
}

Result lemma7() {
  Result r;
  std::mt19937_64 rng(7);
  for (const auto* amb : {&c2c3(), &c2c2c2()}) {
    for (int t = 0; t < 1000; ++t) {
      const auto [a, g, b] = non_commuting(*amb, rng);
      if (!order(a).is_infinite()) r.fail("A of finite order");
      const auto n1 = static_cast<std::int64_t>(uniform(rng, 2, 5));
      const auto n2 = static_cast<std::int64_t>(uniform(rng, 2, 5));
      const auto d = cyclic_reduce(power(a, n1) * power(b, n2)).core;
      if (static_cast<std::int64_t>(d.norm()) <= (n1 + n2 - 4) * static_cast<std::int64_t>(a.norm())) {
        r.fail("A = " + amb->render(a) + ", g = " + amb->render(g));
      }
    }
  }
  if (r.ok) r.detail = "2000 trials";
  return r;
}

Result axes() {
  Result r;
  std::mt19937_64 rng(6);
  std::uint64_t vertices = 0;
  for (const auto* amb : {&c2c3(), &c2c2c2()}) {
    for (int t = 0; t < 200; ++t) {
      const auto [a, g, b] = non_commuting(*amb, rng);
      const auto len = static_cast<std::int64_t>(a.norm());
      const auto overlap = axes_intersection(a, b, static_cast<std::uint64_t>(4 * len) + g.norm());
      if (overlap && static_cast<std::int64_t>(*overlap) >= 4 * len) r.fail("overlap for A = " + amb->render(a));
      const auto n1 = static_cast<std::int64_t>(uniform(rng, 2, 5));
      const auto n2 = static_cast<std::int64_t>(uniform(rng, 2, 5));
      const auto p = power(a, n1) * power(b, n2);
      const auto bound = static_cast<std::uint64_t>(2 * ((n1 + n2 - 4) * len + 2));
      std::vector<TreeVertex> sample = axis_vertices(a, 1);
      for (auto& v : axis_vertices(b, 1)) sample.push_back(std::move(v));
      for (auto& v : axis_vertices(p, 0)) sample.push_back(std::move(v));
      for (int k = 0; k < 30; ++k) {
        const auto x = random_raw(*amb, 10, rng);
        sample.push_back(k % 2 ? TreeVertex::element(x)
                               : TreeVertex::coset(static_cast<std::uint32_t>(uniform(rng, 0, amb->factor_count() - 1)), x));
      }
      for (const auto& v : sample) {
        ++vertices;
        if (vertex_distance(v, act(p, v)) < bound) r.fail("displacement below bound at " + v.render());
      }
    }
  }
  if (r.ok) r.detail = "400 pairs, " + std::to_string(vertices) + " displaced vertices";
  return r;
}

Result lemma5() {
  Result r;
  const auto g = parse_group_spec("factors: product [cyclic 2, cyclic 3]; cyclic 2 / labels: a,b; c");
  const auto c = build_lemma5(g, "a b", "c", 3, 2);
  if (c.N != 13) r.fail("N = " + std::to_string(c.N));
  if (!satisfies(c.equation, c.solution)) r.fail("generator substitution fails");
  const auto parts = parse_part_list("a; b@c", g);
  const auto ball = enumerate_ball(g, parts, 6);
  CandidateLists cands;
  for (auto i : c.equation.lhs.variables()) cands.emplace(i, ball);
  const auto res = solve_bounded(c.equation, cands, SolveMode::First);
  if (res.found()) r.fail("solution in H found");
  if (r.ok) r.detail = "N = 13, ball " + std::to_string(ball.size()) + ", " + std::to_string(res.tuples_checked) + " tuples, NoSolutionInSet";
  return r;
}

Result corollary() {
  Result r;
  std::mt19937_64 rng(8);
  const std::vector<FiniteGroup> pool{make_cyclic(2, "a"), make_cyclic(3, "b"), make_cyclic(4, "c"),
                                      make_dihedral_reflections(3, "d", "e"),
                                      direct_product(make_cyclic(2, "f"), make_cyclic(2, "h"))};
  auto random_subgroup = [&](const FiniteGroup& G) {
    while (true) {
      auto h = G.generated_subgroup(std::vector{ElementId{static_cast<std::uint32_t>(uniform(rng, 1, G.order() - 1))}});
      if (h.size() >= 2) return h;
    }
  };
  auto ambient = [&](std::size_t n) {
    auto groups = pool;
    std::shuffle(groups.begin(), groups.end(), rng);
    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(n), groups.end());
    return FreeProduct(groups);
  };
  for (int t = 0; t < 100; ++t) {
    const auto g = ambient(uniform(rng, 2, 3));
    const auto i = static_cast<std::uint32_t>(uniform(rng, 0, g.factor_count() - 1));
    const auto h = random_subgroup(g.factor(i));
    KuroshData d{g, 0, {}, {{i, h, random_raw(g, 4, rng)}, {i, h, random_raw(g, 4, rng)}}};
    const auto k = static_cast<std::uint32_t>(uniform(rng, 0, g.factor_count() - 1));
    d.parts.push_back({k, random_subgroup(g.factor(k)), random_raw(g, 3, rng)});
    std::shuffle(d.parts.begin(), d.parts.end(), rng);
    if (check_condition2(d).empty()) r.fail("duplicated part passed");
  }
  for (int t = 0; t < 100; ++t) {
    const auto n = uniform(rng, 1, 4);
    const auto g = ambient(n);
    KuroshData d{g, 0, {}, {}};
    for (std::uint32_t i = 0; i < n; ++i) d.parts.push_back({i, random_subgroup(g.factor(i)), random_raw(g, 4, rng)});
    if (!check_condition2(d).empty()) r.fail("distinct factors violated");
  }
  if (r.ok) r.detail = "100 duplicated, 100 distinct-factor decompositions";
  return r;
}

Result algebra() {
  Result r;
  std::mt19937_64 rng(9);
  const std::vector<const FreeProduct*> groups{&c2c3(), &s3z2(), &c2c2c2()};
  int triples = 0;
  for (int t = 0; t < 12000; ++t, ++triples) {
    const auto& g = *groups[t % groups.size()];
    const auto u = random_raw(g, 10, rng), v = random_raw(g, 10, rng), w = random_raw(g, 10, rng);
    if ((u * v) * w != u * (v * w)) r.fail("associativity");
    if (u * g.identity() != u || g.identity() * u != u) r.fail("identity");
    if (!(u * inverse(u)).is_identity() || !(inverse(u) * u).is_identity()) r.fail("inverse");
    const auto red = cyclic_reduce(u);
    if (red.conjugator * red.core * inverse(red.conjugator) != u) r.fail("cyclic reduction round trip");
  }
  for (int t = 0; t < 1000; ++t) {
    const auto& g = *groups[t % groups.size()];
    const auto u = random_raw(g, 10, rng);
    // Brute force: iterate powers up to the bound; infinite once the norm passes 2 * bound.
    constexpr std::uint64_t kBound = 12;
    std::optional<std::uint64_t> brute;
    auto p = u;
    for (std::uint64_t k = 1; k <= kBound; ++k) {
      if (p.is_identity()) {
        brute = k;
        break;
      }
      if (p.norm() > 2 * kBound) break;
      p = p * u;
    }
    const auto o = order(u);
    if (o.finite != brute) r.fail("order of " + g.render(u));
    if (o.is_infinite() != (cyclic_reduce(u).core.norm() > 1)) r.fail("order vs core length");
  }
  if (r.ok) r.detail = std::to_string(triples) + " triples, 1000 orders";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria{
      {"Example 1 reproduction", 1, example1},
      {"Example 2 reproduction", 1, example2},
      {"Two-relator case table in C2 * C2", 10, theorem2},
      {"Power-equation construction", 10, lemma4},
      {"Norm bound for A^N1 (A^g)^N2", 30, lemma7},
      {"Axis geometry", 60, axes},
      {"Desk-scale two-power equation", 60, lemma5},
      {"Duplicated and distinct parts", 10, corollary},
      {"Algebra laws", 30, algebra},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.ok && secs >= criteria[i].limit_s) r.fail("over the time limit");
    if (!r.ok) ++failures;
    std::printf("%s  %zu. %s  (%.3f s, limit %.0f s)  %s\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                criteria[i].limit_s, r.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
