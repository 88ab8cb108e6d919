#include <random>

#include "freeprod/constructions.hpp"
#include "support.hpp"

using namespace freeprod;
using testing::c2c3;
using testing::check_error;
using testing::el;

namespace {

Letter var(std::uint32_t i, int sign = 1) { return Variable{i, sign}; }

MixedWord random_word(const FreeProduct& g, std::mt19937_64& rng, std::uint32_t vars) {
  MixedWord w(g);
  const auto n = std::uniform_int_distribution<int>(0, 8)(rng);
  for (int i = 0; i < n; ++i) {
    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
      w.append(var(std::uniform_int_distribution<std::uint32_t>(1, vars)(rng),
                   std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1));
    } else {
      w.append(testing::random_raw(g, rng, 3));
    }
  }
  return w;
}

Substitution random_substitution(const FreeProduct& g, std::mt19937_64& rng, std::uint32_t vars) {
  Substitution s;
  for (std::uint32_t i = 1; i <= vars; ++i) s.emplace(i, testing::random_raw(g, rng, 5));
  return s;
}

}  // namespace

TEST_CASE("parsing words") {
  auto g = c2c3();
  CHECK(parse_word("x1 x2^-1", g).letters().size() == 2);
  CHECK(parse_word("x1 x2^-1", g) == MixedWord(g, {var(1), var(2, -1)}));
  CHECK(parse_word("[x1, x2^x3]", g) ==
        MixedWord(g, {var(1), var(3), var(2), var(3, -1), var(1, -1), var(3), var(2, -1), var(3, -1)}));
  check_error(ErrorKind::SyntaxError, [&] { parse_word("x1^", g); });
  check_error(ErrorKind::SyntaxError, [&] { parse_word("(x1", g); });
  check_error(ErrorKind::SyntaxError, [&] { parse_word("[x1 x2]", g); });
  check_error(ErrorKind::SyntaxError, [&] { parse_word("", g); });
  check_error(ErrorKind::UnknownGenerator, [&] { parse_word("z", g); });
  check_error(ErrorKind::UnknownGenerator, [&] { parse_element("a q", g); });
  check_error(ErrorKind::SyntaxError, [&] { parse_element("a x1", g); });

  // Juxtaposed labels split greedily; an exponent binds to the last label.
  CHECK(parse_element("ab", g) == el(g, "a b"));
  CHECK(parse_element("ab^2", g) == el(g, "a b^2"));
  CHECK(parse_element("(ab)^2", g) == el(g, "a b a b"));
  CHECK(parse_element("1", g).is_identity());
  CHECK(parse_element("b^a", g) == el(g, "a b a"));
  CHECK(parse_element("[a, b]", g) == el(g, "a b a b^2"));
  CHECK(parse_element("b^-4", g) == el(g, "b^2"));
  CHECK(parse_word("x12", g) == MixedWord(g, {var(12)}));

  SUBCASE("generator reading as variables") {
    auto s = testing::s3z2();
    CHECK(parse_word("a b c^-1", s, GeneratorReading::Variables) == MixedWord(s, {var(1), var(2), var(3, -1)}));
  }
}

TEST_CASE("mixed word algebra") {
  auto g = c2c3();
  const auto w = parse_word("x1 a x2", g);
  CHECK(w.inverse() == parse_word("x2^-1 a x1^-1", g));
  CHECK(w.power(2) == w * w);
  CHECK(w.power(-1) == w.inverse());
  CHECK(w.power(0).size() == 0);
  CHECK(w.variables() == std::set<std::uint32_t>{1, 2});
}

TEST_CASE("evaluation") {
  auto g = c2c3();
  CHECK(evaluate(parse_word("x1 x2", g), {{1, el(g, "a")}, {2, el(g, "b")}}) == el(g, "a b"));
  CHECK(evaluate(parse_word("[x1, x2^x3]", g), {{1, el(g, "a")}, {2, el(g, "b")}, {3, g.identity()}}) ==
        el(g, "a b a b^2"));
  check_error(ErrorKind::UnboundVariable, [&] { evaluate(parse_word("x1 x2", g), {{1, el(g, "a")}}); });
  auto other = c2c3();
  check_error(ErrorKind::MixedAmbient, [&] { evaluate(parse_word("x1", g), {{1, other.generator("a")}}); });

  SUBCASE("two-relator word in (C2 x C2) * C2") {
    FreeProduct big({direct_product(make_cyclic(2, "a"), make_cyclic(2, "d")), make_cyclic(2, "c")});
    const auto value = evaluate(parse_word(kTheorem2Word, big),
                                {{1, el(big, "a")}, {2, el(big, "c d c")}, {3, el(big, "c")}});
    CHECK(value == power(el(big, "a c d c"), 2));
    CHECK(value.norm() == 8);
  }

  SUBCASE("homomorphism") {
    std::mt19937_64 rng(41);
    for (const auto& amb : {c2c3(), testing::s3z2()}) {
      for (int t = 0; t < 500; ++t) {
        const auto u = random_word(amb, rng, 3);
        const auto v = random_word(amb, rng, 3);
        const auto s = random_substitution(amb, rng, 3);
        CHECK(evaluate(u * v, s) == evaluate(u, s) * evaluate(v, s));
        CHECK(evaluate(u.inverse(), s) == inverse(evaluate(u, s)));
        CHECK(evaluate(u.power(3), s) == power(evaluate(u, s), 3));
      }
    }
  }
}

TEST_CASE("equations") {
  auto g = c2c3();
  const auto eq = parse_equation("[x1, x2] = 1", g);
  CHECK(eq.rhs.is_identity());
  CHECK(parse_equation("[x1, x2]", g).rhs.is_identity());
  CHECK(parse_equation("x1^2 = b", g).rhs == el(g, "b"));
  check_error(ErrorKind::SyntaxError, [&] { parse_equation("x1 = x2", g); });
  check_error(ErrorKind::SyntaxError, [&] { parse_equation("x1 = a = b", g); });
  CHECK(satisfies(parse_equation("x1^2 = b", g), {{1, el(g, "b^2")}}));
  CHECK(!satisfies(parse_equation("x1^2 = b", g), {{1, el(g, "b")}}));
}

TEST_CASE("bounded solving") {
  auto g = c2c3();
  const std::vector<SubgroupPart> parts{{0, {ElementId{0}, ElementId{1}}, g.identity()},
                                        {1, {ElementId{0}, ElementId{1}, ElementId{2}}, g.identity()}};
  const auto ball = enumerate_ball(g, parts, 1);
  const auto eq = parse_equation("[x1, x2] = 1", g);
  const auto first = solve_bounded(eq, {{1, ball}, {2, ball}}, SolveMode::First);
  REQUIRE(first.found());
  CHECK(first.solutions.size() == 1);
  CHECK(first.solutions[0].at(1).is_identity());
  CHECK(first.solutions[0].at(2).is_identity());
  CHECK(first.tuples_checked == 1);

  check_error(ErrorKind::EmptyCandidates, [&] { solve_bounded(eq, {{1, ball}, {2, {}}}, SolveMode::First); });
  check_error(ErrorKind::UnboundVariable, [&] { solve_bounded(eq, {{1, ball}}, SolveMode::First); });

  SUBCASE("all mode against a naive double loop") {
    std::mt19937_64 rng(8);
    for (const auto& amb : {c2c3(), testing::s3z2()}) {
      for (int t = 0; t < 20; ++t) {
        std::vector<FPElement> s1, s2;
        for (int i = 0; i < 12; ++i) s1.push_back(testing::random_raw(amb, rng, 3));
        for (int i = 0; i < 12; ++i) s2.push_back(testing::random_raw(amb, rng, 3));
        // Right side taken from a random tuple so that solutions exist.
        const auto w = parse_word("x1 x2 x1^-1", amb);
        const Equation e{w, evaluate(w, {{1, s1[t % 12]}, {2, s2[(t * 5) % 12]}})};
        std::vector<Substitution> expected;
        for (const auto& x : s1)
          for (const auto& y : s2)
            if (x * y * inverse(x) == e.rhs) expected.push_back({{1, x}, {2, y}});
        const auto all = solve_bounded(e, {{1, s1}, {2, s2}}, SolveMode::All);
        CHECK(all.solutions == expected);
        CHECK(all.tuples_checked == 144);
        const auto one = solve_bounded(e, {{1, s1}, {2, s2}}, SolveMode::First);
        REQUIRE(one.found());
        CHECK(one.solutions[0] == expected.front());
      }
    }
  }

  SUBCASE("two-relator equation has no solution in a ball of C2 * C2") {
    auto h = testing::c2c2();
    const std::vector<SubgroupPart> ab{{0, {ElementId{0}, ElementId{1}}, h.identity()},
                                       {1, {ElementId{0}, ElementId{1}}, h.identity()}};
    const auto b12 = enumerate_ball(h, ab, 12);
    CHECK(b12.size() == 25);
    const Equation e{parse_word(kTheorem2Word, h), power(el(h, "a b"), 2)};
    const auto r = solve_bounded(e, {{1, b12}, {2, b12}, {3, b12}}, SolveMode::First);
    CHECK(!r.found());
    CHECK(r.tuples_checked == 25u * 25u * 25u);
  }
}

TEST_CASE("lemma 4 constructions") {
  CHECK(least_prime_above(3) == 5);
  CHECK(least_prime_above(6) == 7);
  CHECK(least_prime_above(7) == 11);
  CHECK(least_prime_above(1) == 2);

  auto g = c2c3();
  auto c = build_lemma4(g, "a b");
  CHECK(c.prime == 5);
  CHECK(c.exponents == std::vector<std::uint64_t>{1, 2});
  CHECK(c.solution.at(1) == el(g, "a"));
  CHECK(c.solution.at(2) == el(g, "b^2"));
  CHECK(c.equation.rhs == el(g, "a b"));
  CHECK(evaluate(c.equation.lhs, c.solution) == el(g, "a b"));
  CHECK(c.equation.lhs == parse_word("x1^5 x2^5", g));

  c = build_lemma4(g, "a");
  CHECK(c.prime == 5);
  CHECK(c.exponents == std::vector<std::uint64_t>{1});
  CHECK(c.solution.at(1) == el(g, "a"));

  auto s = testing::s3z2();
  c = build_lemma4(s, "a b c");
  CHECK(c.prime == 7);
  CHECK(c.exponents == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(satisfies(c.equation, c.solution));

  // b^2 expands into two letters.
  c = build_lemma4(g, "a b^2");
  CHECK(c.letters.size() == 3);
  CHECK(satisfies(c.equation, c.solution));

  // The constructed solution is found from singleton candidates.
  c = build_lemma4(g, "a b a b^2");
  CandidateLists singletons;
  for (const auto& [i, v] : c.solution) singletons.emplace(i, std::vector<FPElement>{v});
  const auto r = solve_bounded(c.equation, singletons, SolveMode::First);
  REQUIRE(r.found());
  CHECK(r.solutions[0] == c.solution);

  check_error(ErrorKind::EmptyWord, [&] { build_lemma4(g, "1"); });
  check_error(ErrorKind::UnknownGenerator, [&] { build_lemma4(g, "a q"); });

  SUBCASE("random words") {
    std::mt19937_64 rng(4);
    for (const auto& amb : {c2c3(), testing::s3z2()}) {
      for (int t = 0; t < 100; ++t) {
        const auto f = testing::random_raw(amb, rng, 5);
        if (f.is_identity()) continue;
        const auto built = build_lemma4(amb, amb.render(f));
        CHECK(built.equation.rhs == f);
        CHECK(satisfies(built.equation, built.solution));
        for (std::size_t j = 0; j < built.letters.size(); ++j) {
          const auto o = *order(built.letters[j]).finite;
          CHECK((built.exponents[j] * built.prime) % o == 1 % o);
        }
      }
    }
  }
}

TEST_CASE("lemma 5 constructions") {
  auto g = testing::z6z2();
  const auto c = build_lemma5(g, "a b", "c", 3, 2);
  CHECK(c.N == 13);
  CHECK(c.a == el(g, "a"));
  CHECK(c.b == el(g, "c b^2 c"));
  CHECK(c.equation.rhs == el(g, "a c b^2 c"));
  CHECK(c.equation.rhs.norm() == 4);
  CHECK(c.solution.at(1) == el(g, "a"));
  CHECK(c.solution.at(2) == el(g, "b"));
  CHECK(c.solution.at(3) == el(g, "c"));
  CHECK(satisfies(c.equation, c.solution));
  check_error(ErrorKind::UsageError, [&] { build_lemma5(g, "a b", "c", 0, 2); });
  check_error(ErrorKind::UnknownGenerator, [&] { build_lemma5(g, "a q", "c", 3, 2); });

  // N = 1 + product of factor orders.
  CHECK(build_lemma5(testing::s3z2(), "a b", "c", 1, 1).N == 13);
  CHECK(build_lemma5(testing::c2c2c2(), "a", "c", 1, 1).N == 9);
  check_error(ErrorKind::UsageError, [] { build_lemma5(testing::c2c2c2(), "a b", "c", 1, 1); });

  SUBCASE("no solution in the length-6 ball") {
    const std::vector<SubgroupPart> parts{{0, g.factor(0).generated_subgroup(std::vector{c.a.syllables()[0].elem}),
                                           g.identity()},
                                          {0, g.factor(0).generated_subgroup(std::vector{ElementId{2}}), el(g, "c")}};
    const auto ball = enumerate_ball(g, parts, 6);
    const auto r = solve_bounded(c.equation, {{1, ball}, {2, ball}, {3, ball}}, SolveMode::First);
    CHECK(!r.found());
    CHECK(r.tuples_checked == ball.size() * ball.size() * ball.size());
  }
}

TEST_CASE("two-relator case table") {
  auto h = testing::c2c2();
  const auto a = el(h, "a");
  const auto ba = el(h, "b a");
  const auto w = parse_word(kTheorem2Word, h);
  auto lhs = [&](int k, int t, int s, int e1, int e2, int e3) {
    auto x = [&](int n, int e) { return power(a, e) * power(ba, n); };
    return evaluate(w, {{1, x(k, e1)}, {2, x(t, e2)}, {3, x(s, e3)}});
  };
  CHECK(lhs(0, 0, 0, 0, 0, 0).is_identity());
  CHECK(lhs(1, 0, 0, 0, 1, 0) == power(ba, 6));

  const auto rep = theorem2_report(6);
  CHECK(rep.cases.size() == 8);
  CHECK(rep.evaluations() == 8u * 13 * 13 * 13);
  CHECK(rep.formula_mismatches() == 0);
  CHECK(rep.target_hits() == 0);
  CHECK(rep.literal_target_hits() == 0);
  CHECK(rep.g_side_matches);
  CHECK(rep.passed());
  const std::vector<std::string> printed{"6(k+t)", "-6t", "6k", "6(k+t)", "4(-k+t-s)", "6t", "6k", "4(-k+s)"};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(rep.cases[i].number == static_cast<int>(i) + 1);
    CHECK(rep.cases[i].printed_formula == printed[i]);
    CHECK(rep.cases[i].literal_formula_mismatches == 0);
  }
  // The literal (ba)^k a^e ordering departs from the printed table only in
  // the two mixed-sign cases.
  CHECK(rep.cases[4].literal_printed_mismatches == 2028);
  CHECK(rep.cases[7].literal_printed_mismatches == 2028);
  for (std::size_t i : {0, 1, 2, 3, 5, 6}) CHECK(rep.cases[i].literal_printed_mismatches == 0);

  // Case 5 independently: x = a (ba)^k, y = a (ba)^t, z = (ba)^s.
  for (int k = -3; k <= 3; ++k)
    for (int t = -3; t <= 3; ++t)
      for (int s = -3; s <= 3; ++s) CHECK(lhs(k, t, s, 1, 1, 0) == power(ba, 4 * (-k + t - s)));
}
