#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "freeprod/free_product.hpp"

namespace freeprod {

/// x_index^sign, index >= 1.
struct Variable {
  std::uint32_t index = 1;
  int sign = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

using Letter = std::variant<Variable, FPElement>;

/// A word over variables and constants from one free product, i.e. an
/// element of F(X) * G kept as a literal letter sequence (no reduction).
class MixedWord {
 public:
  explicit MixedWord(FreeProduct ambient, std::vector<Letter> letters = {});

  const FreeProduct& ambient() const noexcept { return ambient_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  std::set<std::uint32_t> variables() const;

  void append(Letter letter);
  void append(const MixedWord& other);

  MixedWord inverse() const;
  MixedWord power(std::int64_t k) const;

  friend MixedWord operator*(const MixedWord& u, const MixedWord& v);
  friend bool operator==(const MixedWord&, const MixedWord&) = default;

 private:
  FreeProduct ambient_;
  std::vector<Letter> letters_;
};

/// How bare generator labels are read by parse_word.
enum class GeneratorReading {
  Constants,  ///< label -> the generator element
  Variables,  ///< i-th declared generator -> x_{i+1}
};

/// Grammar:
///   word := term+
///   term := atom ('^' (int | atom))?
///   atom := VARNAME | GENLABEL | '1' | '(' word ')' | '[' word ',' word ']'
/// VARNAME is x[0-9]+. h^g means g h g^-1 and [u,v] means u v u^-1 v^-1;
/// both are expanded. An identifier that is neither a variable nor a label
/// is split into labels when that is possible ("ab" reads as "a b").
MixedWord parse_word(std::string_view text, const FreeProduct& ambient,
                     GeneratorReading reading = GeneratorReading::Constants);

/// Parses a word that must not contain variables.
FPElement parse_element(std::string_view text, const FreeProduct& ambient);

using Substitution = std::map<std::uint32_t, FPElement>;

FPElement evaluate(const MixedWord& w, const Substitution& s);

/// w(x) h^-1 = 1, stored as lhs = w and rhs = h.
struct Equation {
  MixedWord lhs;
  FPElement rhs;
};

/// "lhs = rhs" with a constant right side; a missing "= rhs" means rhs = 1.
Equation parse_equation(std::string_view text, const FreeProduct& ambient);

bool satisfies(const Equation& eq, const Substitution& s);

enum class SolveMode { First, All };

struct SolveResult {
  std::vector<Substitution> solutions;
  std::uint64_t tuples_checked = 0;

  bool found() const noexcept { return !solutions.empty(); }
};

using CandidateLists = std::map<std::uint32_t, std::vector<FPElement>>;

/// Exhaustive search over the Cartesian product of candidate lists, in
/// lexicographic order of candidate indices (lowest variable most
/// significant). An empty result certifies that no tuple in the set works.
SolveResult solve_bounded(const Equation& eq, const CandidateLists& candidates, SolveMode mode);

}  // namespace freeprod
