#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freeprod/free_product.hpp"

namespace freeprod {

/// Vertex of the Bass-Serre tree of G1 * ... * Gn: either an element vertex g
/// or a coset vertex g G_i. E(g) is adjacent to C(i, g G_i) for every i.
/// Coset representatives are canonical: no trailing syllable in factor i.
class TreeVertex {
 public:
  enum class Kind : std::uint8_t { Element, Coset };

  static TreeVertex element(FPElement g);
  static TreeVertex coset(std::uint32_t factor, const FPElement& rep);

  Kind kind() const noexcept { return kind_; }
  bool is_element() const noexcept { return kind_ == Kind::Element; }
  /// Factor index of a coset vertex; 0 for element vertices.
  std::uint32_t factor() const noexcept { return factor_; }
  const FPElement& rep() const noexcept { return rep_; }

  /// "E:<word>" or "C<i>:<word>".
  std::string render() const;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b) noexcept;

 private:
  TreeVertex(Kind kind, std::uint32_t factor, FPElement rep) : kind_(kind), factor_(factor), rep_(std::move(rep)) {}

  Kind kind_;
  std::uint32_t factor_;
  FPElement rep_;
};

TreeVertex act(const FPElement& h, const TreeVertex& v);

/// Tree distance in edges.
std::uint64_t vertex_distance(const TreeVertex& v, const TreeVertex& w);

/// All vertices adjacent to v: n coset vertices for an element vertex,
/// #G_i element vertices for a coset vertex.
std::vector<TreeVertex> neighbours(const TreeVertex& v);

struct AxisInfo {
  FPElement conjugator;  ///< c
  FPElement core;        ///< D, cyclically reduced, |D| >= 2
  std::uint64_t translation_length_edges = 0;  ///< 2 |D|
};

struct Elliptic {
  TreeVertex fixed_vertex;
};

struct Hyperbolic {
  AxisInfo axis;
};

using Classification = std::variant<Elliptic, Hyperbolic>;

Classification classify(const FPElement& u);

inline bool is_hyperbolic(const Classification& c) { return std::holds_alternative<Hyperbolic>(c); }

/// Consecutive axis vertices c D^k p_j (k in [-window, window], p_j the
/// proper prefixes of D) with the coset vertices between them.
std::vector<TreeVertex> axis_vertices(const FPElement& u, std::uint64_t window);

/// Edge length of the common segment of the two axis windows, or nullopt if
/// the windows share no vertex.
std::optional<std::uint64_t> axes_intersection(const FPElement& u, const FPElement& v, std::uint64_t window);

}  // namespace freeprod
