#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeprod/finite_group.hpp"

namespace freeprod {

/// One letter of a reduced product: a non-identity element of factor `factor`.
struct Syllable {
  std::uint32_t factor = 0;
  ElementId elem;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class FreeProduct;

namespace detail {
struct FreeProductData;
}

/// An element of G1 * ... * Gn held in reduced alternating normal form.
/// The identity is the empty syllable sequence. Equality is syllable-sequence
/// equality within one ambient group.
class FPElement {
 public:
  FreeProduct ambient() const;
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  /// Number of syllables |u|.
  std::size_t norm() const noexcept { return syllables_.size(); }
  bool is_identity() const noexcept { return syllables_.empty(); }

  bool same_ambient(const FPElement& other) const noexcept { return ambient_ == other.ambient_; }

  friend bool operator==(const FPElement& u, const FPElement& v) noexcept {
    return u.ambient_ == v.ambient_ && u.syllables_ == v.syllables_;
  }
  /// Shortlex order on syllables (factor, then element id); used for sets and
  /// deterministic output, not a group-theoretic order.
  friend std::strong_ordering operator<=>(const FPElement& u, const FPElement& v) noexcept;

 private:
  friend class FreeProduct;
  friend class SyllableStack;
  FPElement(std::shared_ptr<const detail::FreeProductData> ambient, std::vector<Syllable> syllables)
      : ambient_(std::move(ambient)), syllables_(std::move(syllables)) {}

  std::shared_ptr<const detail::FreeProductData> ambient_;
  std::vector<Syllable> syllables_;
};

struct LabelledGenerator {
  std::string label;
  std::uint32_t factor = 0;
  ElementId id;
};

/// G1 * ... * Gn with a global generator namespace. Copies share state; two
/// FreeProduct handles are equal iff they come from the same construction.
class FreeProduct {
 public:
  /// Labels are taken from each factor's generators and must be unique.
  explicit FreeProduct(std::vector<FiniteGroup> factors);

  std::size_t factor_count() const noexcept;
  const FiniteGroup& factor(std::size_t i) const;
  std::span<const LabelledGenerator> generators() const noexcept;
  std::optional<LabelledGenerator> find_generator(std::string_view label) const;

  FPElement identity() const;
  FPElement generator(std::string_view label) const;
  /// The element `x` of factor `i` (identity if x is the factor identity).
  FPElement element(std::uint32_t i, ElementId x) const;
  /// Drops identity letters and merges adjacent same-factor letters until the
  /// sequence is reduced.
  FPElement normalize(std::span<const Syllable> raw) const;

  /// Generator-power rendering, e.g. "a b^2 a"; the identity renders as "1".
  std::string render(const FPElement& u) const;

  friend bool operator==(const FreeProduct& a, const FreeProduct& b) noexcept { return a.data_ == b.data_; }

 private:
  friend class FPElement;
  friend class SyllableStack;
  explicit FreeProduct(std::shared_ptr<const detail::FreeProductData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FreeProductData> data_;
};

/// Incremental right multiplication onto a reduced word. Each push is
/// amortised O(length of the pushed element).
class SyllableStack {
 public:
  explicit SyllableStack(const FreeProduct& ambient);
  explicit SyllableStack(const FPElement& start);

  void push(Syllable s);
  void push(const FPElement& u);
  /// Pushes u^-1 without materialising it.
  void push_inverse(const FPElement& u);
  FPElement finish() &&;

 private:
  std::shared_ptr<const detail::FreeProductData> ambient_;
  std::vector<Syllable> syllables_;
};

struct CyclicReduction {
  FPElement conjugator;  ///< c
  FPElement core;        ///< D, cyclically reduced, u = c D c^-1
};

/// Order of an element: a positive integer or infinite.
struct ElementOrder {
  std::optional<std::uint64_t> finite;

  bool is_infinite() const noexcept { return !finite.has_value(); }
  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

FPElement multiply(const FPElement& u, const FPElement& v);
FPElement operator*(const FPElement& u, const FPElement& v);
FPElement inverse(const FPElement& u);
FPElement power(const FPElement& u, std::int64_t k);
/// h^g = g h g^-1.
FPElement conjugate(const FPElement& h, const FPElement& g);

/// Strips from the front: while the first and last syllables share a factor,
/// conjugates off the first syllable and merges it into the last.
CyclicReduction cyclic_reduce(const FPElement& u);
bool is_cyclically_reduced(const FPElement& u);
ElementOrder order(const FPElement& u);
bool commute(const FPElement& u, const FPElement& v);

/// A conjugated factor subgroup g H g^-1 with H <= G_factor.
struct SubgroupPart {
  std::uint32_t factor = 0;
  IdSet subgroup;
  FPElement conjugator;
};

/// All products t1 ... tm with m <= max_length, each ti a nontrivial element
/// of some part and consecutive t's from different parts, deduplicated by
/// normal form. Order is length-lexicographic in (part, element) indices.
std::vector<FPElement> enumerate_ball(const FreeProduct& ambient, std::span<const SubgroupPart> parts,
                                      std::size_t max_length);

}  // namespace freeprod
