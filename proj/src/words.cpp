#include "freeprod/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "freeprod/error.hpp"

namespace freeprod {

// ---------------------------------------------------------------------------
// MixedWord

MixedWord::MixedWord(FreeProduct ambient, std::vector<Letter> letters)
    : ambient_(std::move(ambient)), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (const auto* c = std::get_if<FPElement>(&l); c && !(c->ambient() == ambient_)) {
      throw Error(ErrorKind::MixedAmbient, "constant from another free product");
    }
  }
}

std::set<std::uint32_t> MixedWord::variables() const {
  std::set<std::uint32_t> out;
  for (const auto& l : letters_) {
    if (const auto* v = std::get_if<Variable>(&l)) out.insert(v->index);
  }
  return out;
}

void MixedWord::append(Letter letter) {
  if (const auto* c = std::get_if<FPElement>(&letter); c && !(c->ambient() == ambient_)) {
    throw Error(ErrorKind::MixedAmbient, "constant from another free product");
  }
  letters_.push_back(std::move(letter));
}

void MixedWord::append(const MixedWord& other) {
  if (!(other.ambient_ == ambient_)) throw Error(ErrorKind::MixedAmbient, "words over different free products");
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

MixedWord MixedWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    if (const auto* v = std::get_if<Variable>(&*it)) {
      out.emplace_back(Variable{v->index, -v->sign});
    } else {
      out.emplace_back(freeprod::inverse(std::get<FPElement>(*it)));
    }
  }
  return MixedWord(ambient_, std::move(out));
}

MixedWord MixedWord::power(std::int64_t k) const {
  const MixedWord base = k < 0 ? inverse() : *this;
  MixedWord out(ambient_);
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.append(base);
  return out;
}

MixedWord operator*(const MixedWord& u, const MixedWord& v) {
  MixedWord out = u;
  out.append(v);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class WordParser {
 public:
  WordParser(std::string_view text, const FreeProduct& ambient, GeneratorReading reading)
      : text_(text), ambient_(ambient), reading_(reading) {}

  MixedWord parse_all() {
    auto w = parse_word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_) + " in \"" +
                                            std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool atom_start(char c) const { return ident_start(c) || c == '(' || c == '[' || c == '1'; }

  MixedWord parse_word() {
    MixedWord w(ambient_);
    if (!atom_start(peek())) fail(pos_ < text_.size() ? "expected a term" : "unexpected end of input");
    while (atom_start(peek())) w.append(parse_term());
    return w;
  }

  MixedWord parse_term() {
    auto base = parse_atom();
    if (peek() != '^') return base;
    ++pos_;
    const char c = peek();
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      return base.power(parse_int());
    }
    if (!atom_start(c)) fail("expected an exponent after '^'");
    auto g = parse_atom();
    return g * base * g.inverse();
  }

  std::int64_t parse_int() {
    skip_space();
    const auto start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const auto digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) fail("expected digits");
    std::int64_t value = 0;
    const char* first = text_.data() + digits;
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc()) fail("exponent out of range");
    return text_[start] == '-' ? -value : value;
  }

  MixedWord parse_atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto w = parse_word();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      auto u = parse_word();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos_;
      auto v = parse_word();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return u * v * u.inverse() * v.inverse();
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && ident_char(text_[pos_])) fail("identifiers cannot start with a digit");
      return MixedWord(ambient_);
    }
    if (!ident_start(c)) fail("expected an atom");
    const auto start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    const auto ident = text_.substr(start, pos_ - start);
    auto letters = resolve_identifier(ident);
    if (letters.size() > 1) {
      // "ab^2" reads as "a b^2": hand back all but the last label and let the
      // caller's exponent bind to the last one.
      pos_ = start + split_prefix_length_;
      letters.resize(1);
    }
    return MixedWord(ambient_, std::move(letters));
  }

  std::vector<Letter> resolve_identifier(std::string_view ident) {
    if (is_variable(ident)) {
      std::uint32_t index = 0;
      auto [ptr, ec] = std::from_chars(ident.data() + 1, ident.data() + ident.size(), index);
      if (ec != std::errc() || index == 0) fail("variable indices start at 1");
      return {Variable{index, 1}};
    }
    if (auto g = resolve_label(ident)) return {*g};
    // Greedy longest-prefix split into known labels.
    std::vector<Letter> out;
    std::size_t i = 0;
    std::size_t first_len = 0;
    while (i < ident.size()) {
      std::size_t len = ident.size() - i;
      for (; len > 0; --len) {
        if (ambient_.find_generator(ident.substr(i, len))) break;
      }
      if (len == 0) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + std::string(ident) + "'");
      if (out.empty()) first_len = len;
      out.push_back(*resolve_label(ident.substr(i, len)));
      i += len;
    }
    split_prefix_length_ = first_len;
    return out;
  }

  std::optional<Letter> resolve_label(std::string_view label) const {
    auto g = ambient_.find_generator(label);
    if (!g) return std::nullopt;
    if (reading_ == GeneratorReading::Constants) return Letter{ambient_.element(g->factor, g->id)};
    const auto gens = ambient_.generators();
    for (std::uint32_t i = 0; i < gens.size(); ++i) {
      if (gens[i].label == label) return Letter{Variable{i + 1, 1}};
    }
    return std::nullopt;
  }

  static bool is_variable(std::string_view ident) {
    return ident.size() >= 2 && ident[0] == 'x' &&
           std::all_of(ident.begin() + 1, ident.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  }

  std::string_view text_;
  const FreeProduct& ambient_;
  GeneratorReading reading_;
  std::size_t pos_ = 0;
  std::size_t split_prefix_length_ = 0;
};

}  // namespace

MixedWord parse_word(std::string_view text, const FreeProduct& ambient, GeneratorReading reading) {
  return WordParser(text, ambient, reading).parse_all();
}

FPElement parse_element(std::string_view text, const FreeProduct& ambient) {
  const auto w = parse_word(text, ambient);
  if (!w.variables().empty()) throw Error(ErrorKind::SyntaxError, "expected a constant word: \"" + std::string(text) + "\"");
  return evaluate(w, {});
}

// ---------------------------------------------------------------------------
// Evaluation and solving

FPElement evaluate(const MixedWord& w, const Substitution& s) {
  SyllableStack acc(w.ambient());
  for (const auto& letter : w.letters()) {
    if (const auto* v = std::get_if<Variable>(&letter)) {
      auto it = s.find(v->index);
      if (it == s.end()) throw Error(ErrorKind::UnboundVariable, "x" + std::to_string(v->index) + " is not assigned");
      if (v->sign > 0) {
        acc.push(it->second);
      } else {
        acc.push_inverse(it->second);
      }
    } else {
      acc.push(std::get<FPElement>(letter));
    }
  }
  return std::move(acc).finish();
}

Equation parse_equation(std::string_view text, const FreeProduct& ambient) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) return {parse_word(text, ambient), ambient.identity()};
  if (text.find('=', eq + 1) != std::string_view::npos) throw Error(ErrorKind::SyntaxError, "more than one '='");
  return {parse_word(text.substr(0, eq), ambient), parse_element(text.substr(eq + 1), ambient)};
}

bool satisfies(const Equation& eq, const Substitution& s) { return evaluate(eq.lhs, s) == eq.rhs; }

SolveResult solve_bounded(const Equation& eq, const CandidateLists& candidates, SolveMode mode) {
  if (!(eq.rhs.ambient() == eq.lhs.ambient())) throw Error(ErrorKind::MixedAmbient, "rhs from another free product");
  const auto vars = eq.lhs.variables();
  std::vector<std::uint32_t> order(vars.begin(), vars.end());
  std::vector<const std::vector<FPElement>*> lists;
  for (auto v : order) {
    auto it = candidates.find(v);
    if (it == candidates.end()) throw Error(ErrorKind::UnboundVariable, "no candidates for x" + std::to_string(v));
    if (it->second.empty()) throw Error(ErrorKind::EmptyCandidates, "candidate list for x" + std::to_string(v) + " is empty");
    lists.push_back(&it->second);
  }

  SolveResult result;
  std::vector<std::size_t> index(order.size(), 0);
  Substitution sub;
  for (std::size_t i = 0; i < order.size(); ++i) sub.insert_or_assign(order[i], (*lists[i])[0]);

  auto advance = [&] {
    // Odometer increment, last variable fastest.
    for (std::size_t pos = order.size(); pos-- > 0;) {
      const bool carry = ++index[pos] == lists[pos]->size();
      if (carry) index[pos] = 0;
      sub.insert_or_assign(order[pos], (*lists[pos])[index[pos]]);
      if (!carry) return true;
    }
    return false;
  };

  do {
    ++result.tuples_checked;
    if (evaluate(eq.lhs, sub) == eq.rhs) {
      result.solutions.push_back(sub);
      if (mode == SolveMode::First) break;
    }
  } while (advance());

  for (const auto& s : result.solutions) {
    if (!satisfies(eq, s)) throw std::logic_error("solve_bounded returned a non-solution");
  }
  return result;
}

}  // namespace freeprod
