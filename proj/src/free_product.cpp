#include "freeprod/free_product.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "freeprod/error.hpp"

namespace freeprod {

namespace detail {

struct FreeProductData {
  std::vector<FiniteGroup> factors;
  std::vector<LabelledGenerator> generators;
  std::unordered_map<std::string, std::size_t> by_label;
};

}  // namespace detail

namespace {

void require_same(const FPElement& u, const FPElement& v) {
  if (!u.same_ambient(v)) throw Error(ErrorKind::MixedAmbient, "elements belong to different free products");
}

}  // namespace

// ---------------------------------------------------------------------------
// FPElement

FreeProduct FPElement::ambient() const { return FreeProduct(ambient_); }

std::strong_ordering operator<=>(const FPElement& u, const FPElement& v) noexcept {
  if (auto c = u.syllables_.size() <=> v.syllables_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(u.syllables_.begin(), u.syllables_.end(), v.syllables_.begin(),
                                                v.syllables_.end());
}

// ---------------------------------------------------------------------------
// FreeProduct

FreeProduct::FreeProduct(std::vector<FiniteGroup> factors) {
  if (factors.empty()) throw Error(ErrorKind::OrderTooSmall, "a free product needs at least one factor");
  auto data = std::make_shared<detail::FreeProductData>();
  for (std::uint32_t i = 0; i < factors.size(); ++i) {
    if (factors[i].order() < 2) throw Error(ErrorKind::OrderTooSmall, "factor " + std::to_string(i) + " is trivial");
    for (const auto& g : factors[i].generators()) {
      if (!data->by_label.emplace(g.label, data->generators.size()).second) {
        throw Error(ErrorKind::DuplicateLabel, "generator label '" + g.label + "' used twice");
      }
      data->generators.push_back({g.label, i, g.id});
    }
  }
  data->factors = std::move(factors);
  data_ = std::move(data);
}

std::size_t FreeProduct::factor_count() const noexcept { return data_->factors.size(); }

const FiniteGroup& FreeProduct::factor(std::size_t i) const {
  if (i >= data_->factors.size()) {
    throw Error(ErrorKind::BadFactorIndex, "factor index " + std::to_string(i) + " out of range");
  }
  return data_->factors[i];
}

std::span<const LabelledGenerator> FreeProduct::generators() const noexcept { return data_->generators; }

std::optional<LabelledGenerator> FreeProduct::find_generator(std::string_view label) const {
  auto it = data_->by_label.find(std::string(label));
  if (it == data_->by_label.end()) return std::nullopt;
  return data_->generators[it->second];
}

FPElement FreeProduct::identity() const { return FPElement(data_, {}); }

FPElement FreeProduct::generator(std::string_view label) const {
  auto g = find_generator(label);
  if (!g) throw Error(ErrorKind::UnknownGenerator, "no generator labelled '" + std::string(label) + "'");
  return element(g->factor, g->id);
}

FPElement FreeProduct::element(std::uint32_t i, ElementId x) const {
  const Syllable s{i, x};
  return normalize(std::span<const Syllable>(&s, 1));
}

FPElement FreeProduct::normalize(std::span<const Syllable> raw) const {
  SyllableStack stack(*this);
  for (const auto& s : raw) stack.push(s);
  return std::move(stack).finish();
}

std::string FreeProduct::render(const FPElement& u) const {
  if (u.is_identity()) return "1";
  std::string out;
  for (const auto& s : u.syllables()) {
    const auto& group = data_->factors[s.factor];
    const auto word = group.shortest_word(s.elem);
    for (std::size_t i = 0; i < word.size();) {
      std::size_t j = i;
      while (j < word.size() && word[j] == word[i]) ++j;
      if (!out.empty()) out += ' ';
      out += group.generators()[word[i]].label;
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// SyllableStack

SyllableStack::SyllableStack(const FreeProduct& ambient) : ambient_(ambient.data_) {}

SyllableStack::SyllableStack(const FPElement& start) : ambient_(start.ambient_), syllables_(start.syllables_) {}

void SyllableStack::push(Syllable s) {
  if (s.factor >= ambient_->factors.size()) {
    throw Error(ErrorKind::BadFactorIndex, "factor index " + std::to_string(s.factor) + " out of range");
  }
  const auto& group = ambient_->factors[s.factor];
  if (!group.contains(s.elem)) {
    throw Error(ErrorKind::ForeignElement, "element id " + std::to_string(s.elem.value) + " not in factor " +
                                               std::to_string(s.factor));
  }
  if (s.elem == group.identity()) return;
  if (!syllables_.empty() && syllables_.back().factor == s.factor) {
    const auto merged = group.multiply(syllables_.back().elem, s.elem);
    if (merged == group.identity()) {
      syllables_.pop_back();
    } else {
      syllables_.back().elem = merged;
    }
    return;
  }
  syllables_.push_back(s);
}

void SyllableStack::push(const FPElement& u) {
  if (u.ambient_ != ambient_) throw Error(ErrorKind::MixedAmbient, "elements belong to different free products");
  for (const auto& s : u.syllables_) push(s);
}

void SyllableStack::push_inverse(const FPElement& u) {
  if (u.ambient_ != ambient_) throw Error(ErrorKind::MixedAmbient, "elements belong to different free products");
  for (auto it = u.syllables_.rbegin(); it != u.syllables_.rend(); ++it) {
    push(Syllable{it->factor, ambient_->factors[it->factor].inverse(it->elem)});
  }
}

FPElement SyllableStack::finish() && { return FPElement(std::move(ambient_), std::move(syllables_)); }

// ---------------------------------------------------------------------------
// Algebra

FPElement multiply(const FPElement& u, const FPElement& v) {
  require_same(u, v);
  SyllableStack stack(u);
  stack.push(v);
  return std::move(stack).finish();
}

FPElement operator*(const FPElement& u, const FPElement& v) { return multiply(u, v); }

FPElement inverse(const FPElement& u) {
  SyllableStack stack(u.ambient());
  stack.push_inverse(u);
  return std::move(stack).finish();
}

FPElement power(const FPElement& u, std::int64_t k) {
  FPElement base = k < 0 ? inverse(u) : u;
  auto e = static_cast<std::uint64_t>(k < 0 ? -(k + 1) + 1ULL : static_cast<std::uint64_t>(k));
  FPElement result = u.ambient().identity();
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

FPElement conjugate(const FPElement& h, const FPElement& g) {
  require_same(h, g);
  SyllableStack stack(g);
  stack.push(h);
  stack.push_inverse(g);
  return std::move(stack).finish();
}

bool is_cyclically_reduced(const FPElement& u) {
  const auto s = u.syllables();
  return s.size() < 2 || s.front().factor != s.back().factor;
}

CyclicReduction cyclic_reduce(const FPElement& u) {
  const auto ambient = u.ambient();
  std::vector<Syllable> core(u.syllables().begin(), u.syllables().end());
  std::vector<Syllable> conj;
  // Work on a window [first, last) of `core` to avoid quadratic erasure.
  std::size_t first = 0;
  std::size_t last = core.size();
  while (last - first >= 2 && core[first].factor == core[last - 1].factor) {
    const auto s = core[first];
    const auto& group = ambient.factor(s.factor);
    conj.push_back(s);
    const auto merged = group.multiply(core[last - 1].elem, s.elem);
    ++first;
    if (merged == group.identity()) {
      --last;
    } else {
      core[last - 1].elem = merged;
    }
  }
  std::vector<Syllable> window(core.begin() + static_cast<std::ptrdiff_t>(first),
                               core.begin() + static_cast<std::ptrdiff_t>(last));
  return {ambient.normalize(conj), ambient.normalize(window)};
}

ElementOrder order(const FPElement& u) {
  const auto reduced = cyclic_reduce(u);
  const auto core = reduced.core.syllables();
  if (core.empty()) return {1};
  if (core.size() == 1) return {u.ambient().factor(core[0].factor).element_order(core[0].elem)};
  return {};
}

bool commute(const FPElement& u, const FPElement& v) {
  require_same(u, v);
  return u * v == v * u;
}

// ---------------------------------------------------------------------------
// Ball enumeration

std::vector<FPElement> enumerate_ball(const FreeProduct& ambient, std::span<const SubgroupPart> parts,
                                      std::size_t max_length) {
  // Conjugated nontrivial elements per part, in subgroup id order.
  std::vector<std::vector<FPElement>> letters;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    const auto& group = ambient.factor(part.factor);
    if (!(part.conjugator.ambient() == ambient)) {
      throw Error(ErrorKind::MixedAmbient, "part " + std::to_string(p) + " conjugator from another group");
    }
    if (!group.is_subgroup(part.subgroup)) {
      throw Error(ErrorKind::NotASubgroup, "part " + std::to_string(p) + " is not a subgroup");
    }
    if (part.subgroup.size() < 2) throw Error(ErrorKind::TrivialPart, "part " + std::to_string(p) + " is trivial");
    std::vector<FPElement> conjugated;
    for (auto h : part.subgroup) {
      if (h == group.identity()) continue;
      conjugated.push_back(conjugate(ambient.element(part.factor, h), part.conjugator));
    }
    letters.push_back(std::move(conjugated));
  }

  struct Node {
    std::size_t last_part;
    FPElement value;
  };
  constexpr auto kNoPart = static_cast<std::size_t>(-1);

  std::vector<FPElement> out{ambient.identity()};
  std::set<FPElement> seen{ambient.identity()};
  std::vector<Node> level{{kNoPart, ambient.identity()}};
  for (std::size_t m = 1; m <= max_length && !level.empty(); ++m) {
    std::vector<Node> next;
    for (const auto& node : level) {
      for (std::size_t p = 0; p < letters.size(); ++p) {
        if (p == node.last_part) continue;
        for (const auto& t : letters[p]) {
          auto value = node.value * t;
          if (seen.insert(value).second) out.push_back(value);
          next.push_back({p, std::move(value)});
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace freeprod
