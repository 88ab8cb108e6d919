#include "freeprod/constructions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "freeprod/error.hpp"

namespace freeprod {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Least k in [1, m) with k * p = 1 (mod m); m >= 2 and gcd(p, m) = 1.
std::uint64_t inverse_mod(std::uint64_t p, std::uint64_t m) {
  for (std::uint64_t k = 1; k < m; ++k) {
    if ((k * (p % m)) % m == 1) return k;
  }
  throw std::logic_error("no modular inverse");
}

}  // namespace

std::uint64_t least_prime_above(std::uint64_t n) {
  auto p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

Lemma4Construction build_lemma4(const FreeProduct& ambient, std::string_view f_word) {
  const auto word = parse_word(f_word, ambient);
  if (!word.variables().empty()) throw Error(ErrorKind::SyntaxError, "coefficient word must not contain variables");

  Lemma4Construction out{Equation{MixedWord(ambient), ambient.identity()}, 0, {}, {}, {}};
  for (const auto& letter : word.letters()) {
    const auto& s = std::get<FPElement>(letter);
    if (!s.is_identity()) out.letters.push_back(s);
  }
  if (out.letters.empty()) throw Error(ErrorKind::EmptyWord, "coefficient word has no letters");

  std::uint64_t max_order = 0;
  for (std::size_t i = 0; i < ambient.factor_count(); ++i) max_order = std::max<std::uint64_t>(max_order, ambient.factor(i).order());
  out.prime = least_prime_above(max_order);

  MixedWord lhs(ambient);
  FPElement f = ambient.identity();
  for (std::uint32_t j = 0; j < out.letters.size(); ++j) {
    const auto& s = out.letters[j];
    const auto ord = *order(s).finite;
    const auto k = inverse_mod(out.prime, ord);
    out.exponents.push_back(k);
    out.solution.insert_or_assign(j + 1, power(s, static_cast<std::int64_t>(k)));
    lhs.append(MixedWord(ambient, {Variable{j + 1, 1}}).power(static_cast<std::int64_t>(out.prime)));
    f = f * s;
  }
  out.equation = Equation{std::move(lhs), f};
  if (!satisfies(out.equation, out.solution)) throw std::logic_error("lemma 4 solution does not verify");
  return out;
}

Lemma5Construction build_lemma5(const FreeProduct& ambient, std::string_view f_word, std::string_view g_word,
                                std::uint64_t k1, std::uint64_t k2) {
  if (k1 == 0 || k2 == 0) throw Error(ErrorKind::UsageError, "k1 and k2 must be positive");
  const auto fx = parse_word(f_word, ambient, GeneratorReading::Variables);
  const auto gx = parse_word(g_word, ambient, GeneratorReading::Variables);
  const auto f = parse_element(f_word, ambient);
  const auto g = parse_element(g_word, ambient);
  if (f.norm() > 1) throw Error(ErrorKind::UsageError, "f must lie in a single factor");

  std::uint64_t product = 1;
  for (std::size_t i = 0; i < ambient.factor_count(); ++i) product *= ambient.factor(i).order();
  const auto N = product + 1;

  auto lhs = fx.power(static_cast<std::int64_t>(k1 * N)) * gx * fx.power(static_cast<std::int64_t>(k2 * N)) *
             gx.inverse();
  const auto a = power(f, static_cast<std::int64_t>(k1));
  const auto b = conjugate(power(f, static_cast<std::int64_t>(k2)), g);

  Substitution solution;
  const auto gens = ambient.generators();
  for (std::uint32_t i = 0; i < gens.size(); ++i) {
    solution.insert_or_assign(i + 1, ambient.element(gens[i].factor, gens[i].id));
  }

  Lemma5Construction out{Equation{std::move(lhs), a * b}, N, k1, k2, f, g, a, b, std::move(solution)};
  if (!satisfies(out.equation, out.solution)) throw std::logic_error("lemma 5 solution does not verify");
  return out;
}

// ---------------------------------------------------------------------------
// Eight-case table

namespace {

using ExponentFn = std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)>;

struct CaseSpec {
  std::array<int, 3> eps;
  std::string printed;
  ExponentFn printed_fn;
  std::string literal;
  ExponentFn literal_fn;
};

std::vector<CaseSpec> case_table() {
  auto six_k_plus_t = [](auto k, auto t, auto) { return 6 * (k + t); };
  auto minus_six_t = [](auto, auto t, auto) { return -6 * t; };
  auto six_k = [](auto k, auto, auto) { return 6 * k; };
  auto six_t = [](auto, auto t, auto) { return 6 * t; };
  auto case5 = [](auto k, auto t, auto s) { return 4 * (-k + t - s); };
  auto case5_literal = [](auto k, auto t, auto s) { return 4 * (k - t - s); };
  auto case8 = [](auto k, auto, auto s) { return 4 * (-k + s); };
  auto case8_literal = [](auto k, auto, auto s) { return 4 * (k - s); };
  return {
      {{0, 0, 0}, "6(k+t)", six_k_plus_t, "6(k+t)", six_k_plus_t},
      {{1, 0, 0}, "-6t", minus_six_t, "-6t", minus_six_t},
      {{0, 1, 0}, "6k", six_k, "6k", six_k},
      {{0, 0, 1}, "6(k+t)", six_k_plus_t, "6(k+t)", six_k_plus_t},
      {{1, 1, 0}, "4(-k+t-s)", case5, "4(k-t-s)", case5_literal},
      {{1, 0, 1}, "6t", six_t, "6t", six_t},
      {{0, 1, 1}, "6k", six_k, "6k", six_k},
      {{1, 1, 1}, "4(-k+s)", case8, "4(k-s)", case8_literal},
  };
}

}  // namespace

Theorem2Report theorem2_report(int range) {
  if (range < 1) throw Error(ErrorKind::UsageError, "range must be positive");
  const FreeProduct hat_h({make_cyclic(2, "a"), make_cyclic(2, "b")});
  const auto word = parse_word(kTheorem2Word, hat_h);
  const auto a = hat_h.generator("a");
  const auto b = hat_h.generator("b");
  const auto ba = b * a;
  const auto target = power(a * b, 2);
  const auto one = hat_h.identity();

  Theorem2Report report;
  report.range = range;
  int number = 0;
  for (const auto& spec : case_table()) {
    Theorem2Case c;
    c.number = ++number;
    c.eps = spec.eps;
    c.printed_formula = spec.printed;
    c.literal_formula = spec.literal;
    const auto ae = [&](int e) { return e ? a : one; };
    for (std::int64_t k = -range; k <= range; ++k) {
      for (std::int64_t t = -range; t <= range; ++t) {
        for (std::int64_t s = -range; s <= range; ++s) {
          const Substitution sub{{1, ae(spec.eps[0]) * power(ba, k)},
                                 {2, ae(spec.eps[1]) * power(ba, t)},
                                 {3, ae(spec.eps[2]) * power(ba, s)}};
          const auto value = evaluate(word, sub);
          ++c.evaluations;
          if (value != power(ba, spec.printed_fn(k, t, s))) ++c.formula_mismatches;
          if (value == target) ++c.target_hits;

          const Substitution literal{{1, power(ba, k) * ae(spec.eps[0])},
                                     {2, power(ba, t) * ae(spec.eps[1])},
                                     {3, power(ba, s) * ae(spec.eps[2])}};
          const auto literal_value = evaluate(word, literal);
          if (literal_value != power(ba, spec.printed_fn(k, t, s))) ++c.literal_printed_mismatches;
          if (literal_value != power(ba, spec.literal_fn(k, t, s))) ++c.literal_formula_mismatches;
          if (literal_value == target) ++c.literal_target_hits;
        }
      }
    }
    report.cases.push_back(std::move(c));
  }

  // (C2 x C2) * C2 with b |-> c d c.
  const FreeProduct big({direct_product(make_cyclic(2, "a"), make_cyclic(2, "d")), make_cyclic(2, "c")});
  const auto big_word = parse_word(kTheorem2Word, big);
  const auto ga = big.generator("a");
  const auto gc = big.generator("c");
  const auto image_b = conjugate(big.generator("d"), gc);
  const auto value = evaluate(big_word, {{1, ga}, {2, image_b}, {3, gc}});
  const auto image_target = power(ga * image_b, 2);
  report.g_side_value = big.render(value);
  report.g_side_target = big.render(image_target);
  report.g_side_matches = value == image_target;
  return report;
}

std::uint64_t Theorem2Report::evaluations() const {
  std::uint64_t n = 0;
  for (const auto& c : cases) n += c.evaluations;
  return n;
}

std::uint64_t Theorem2Report::formula_mismatches() const {
  std::uint64_t n = 0;
  for (const auto& c : cases) n += c.formula_mismatches;
  return n;
}

std::uint64_t Theorem2Report::target_hits() const {
  std::uint64_t n = 0;
  for (const auto& c : cases) n += c.target_hits;
  return n;
}

std::uint64_t Theorem2Report::literal_target_hits() const {
  std::uint64_t n = 0;
  for (const auto& c : cases) n += c.literal_target_hits;
  return n;
}

bool Theorem2Report::passed() const {
  return cases.size() == 8 && formula_mismatches() == 0 && target_hits() == 0 && literal_target_hits() == 0 &&
         g_side_matches;
}

}  // namespace freeprod
