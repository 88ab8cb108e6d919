#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "freeprod/words.hpp"

namespace freeprod {

/// x1^p x2^p ... xm^p = f, where f = s1 s2 ... sm is read letter by letter
/// from a generator word. The solution is xj = sj^kj with kj p = 1 modulo
/// the order of sj.
struct Lemma4Construction {
  Equation equation;
  std::uint64_t prime = 0;
  std::vector<FPElement> letters;       ///< s_j
  std::vector<std::uint64_t> exponents; ///< k_j
  Substitution solution;
};

Lemma4Construction build_lemma4(const FreeProduct& ambient, std::string_view f_word);

std::uint64_t least_prime_above(std::uint64_t n);

/// f(x)^{k1 N} g(x) f(x)^{k2 N} g(x)^-1 = f^k1 g f^k2 g^-1 with
/// N = 1 + prod #G_i. Variables x_i stand for the declared generators in
/// order, so x_i = s_i is a solution.
struct Lemma5Construction {
  Equation equation;
  std::uint64_t N = 0;
  std::uint64_t k1 = 0;
  std::uint64_t k2 = 0;
  FPElement f;
  FPElement g;
  FPElement a;  ///< f^k1
  FPElement b;  ///< g f^k2 g^-1
  Substitution solution;
};

Lemma5Construction build_lemma5(const FreeProduct& ambient, std::string_view f_word, std::string_view g_word,
                                std::uint64_t k1, std::uint64_t k2);

/// The left side of (x^3 [x, y^z] y^3)^2 [x, y^z]^3 = (ab)^2 over x1, x2, x3.
inline constexpr std::string_view kTheorem2Word = "(x1^3 [x1, x2^x3] x2^3)^2 [x1, x2^x3]^3";

/// Exhaustive check of the eight-case table in C2 * C2 = <a> * <b>.
struct Theorem2Case {
  int number = 0;                ///< 1..8 in table order
  std::array<int, 3> eps{};      ///< (e1, e2, e3)
  std::string printed_formula;   ///< exponent n in (ba)^n, as printed
  std::uint64_t evaluations = 0;
  std::uint64_t formula_mismatches = 0;   ///< against the printed table
  std::uint64_t target_hits = 0;          ///< values equal to (ab)^2
  // Literal ordering x = (ba)^k a^e1:
  std::string literal_formula;            ///< exponent that holds for that ordering
  std::uint64_t literal_printed_mismatches = 0;
  std::uint64_t literal_formula_mismatches = 0;
  std::uint64_t literal_target_hits = 0;
};

struct Theorem2Report {
  int range = 0;
  std::vector<Theorem2Case> cases;
  /// Value at (a, c d c, c) in (C2 x C2) * C2 and the image of (ab)^2.
  std::string g_side_value;
  std::string g_side_target;
  bool g_side_matches = false;

  std::uint64_t evaluations() const;
  std::uint64_t formula_mismatches() const;
  std::uint64_t target_hits() const;
  std::uint64_t literal_target_hits() const;
  /// Printed table confirmed, no substitution hits (ab)^2, and the
  /// substitution (a, cdc, c) solves the equation in the big group.
  bool passed() const;
};

/// Elements are formed as a^e (ba)^k, the ordering under which the printed
/// closed forms hold; the literal (ba)^k a^e ordering is evaluated too and its
/// deviations from the printed table are counted per case.
Theorem2Report theorem2_report(int range);

}  // namespace freeprod
