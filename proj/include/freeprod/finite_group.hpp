#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace freeprod {

/// Index of an element within one FiniteGroup. Id 0 is always the identity.
struct ElementId {
  std::uint32_t value = 0;

  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

struct Generator {
  std::string label;
  ElementId id;
};

using CayleyTable = std::vector<std::vector<std::uint32_t>>;

/// Sorted, duplicate-free set of element ids.
using IdSet = std::vector<ElementId>;

/// A finite group given by a validated Cayley table and a labelled generating
/// set. Immutable once built; every accessor is const and thread-safe.
class FiniteGroup {
 public:
  /// Validates `table` (Latin square, associativity, identity, generation) and
  /// relabels elements so that the identity has id 0. Generator ids are read
  /// in the caller's labelling and translated accordingly.
  static FiniteGroup from_cayley_table(const CayleyTable& table,
                                       std::vector<Generator> generators,
                                       std::string name = {});

  std::size_t order() const noexcept { return order_; }
  ElementId identity() const noexcept { return ElementId{0}; }
  const std::string& name() const noexcept { return name_; }
  std::span<const Generator> generators() const noexcept { return generators_; }

  bool contains(ElementId x) const noexcept { return x.value < order_; }

  ElementId multiply(ElementId x, ElementId y) const;
  ElementId inverse(ElementId x) const;
  ElementId power(ElementId x, std::int64_t k) const;
  std::uint32_t element_order(ElementId x) const;

  /// Closure of `gens` together with the identity.
  IdSet generated_subgroup(std::span<const ElementId> gens) const;
  bool is_subgroup(std::span<const ElementId> set) const;
  /// { g h g^-1 : h in subgroup }.
  IdSet conjugate_subgroup(std::span<const ElementId> subgroup, ElementId g) const;

  /// Shortlex-minimal word for `x` as indices into generators().
  std::span<const std::uint32_t> shortest_word(ElementId x) const;

  CayleyTable cayley_table() const;

 private:
  FiniteGroup() = default;
  void check(ElementId x) const;

  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverses_;
  std::vector<std::uint32_t> orders_;
  std::vector<Generator> generators_;
  std::vector<std::vector<std::uint32_t>> words_;
  std::string name_;
};

FiniteGroup make_cyclic(std::uint32_t n, std::string label = "a");

/// Group generated by two involutions a, b whose product has order n
/// (the dihedral group of order 2n). n = 3 gives S3.
FiniteGroup make_dihedral_reflections(std::uint32_t n, std::string a = "a", std::string b = "b");

/// A x B. Element (x, y) has id x * #B + y; generators are A's followed by B's.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace freeprod
