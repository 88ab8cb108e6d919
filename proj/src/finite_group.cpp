#include "freeprod/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "freeprod/error.hpp"

namespace freeprod {

namespace {

// Enumerates the closure of `gens` breadth-first by right multiplication and
// returns the Cayley table in discovery order (identity first).
template <typename T, typename Mul>
CayleyTable table_by_closure(const T& identity, const std::vector<T>& gens, Mul mul,
                             std::vector<std::uint32_t>& gen_ids) {
  std::vector<T> elements{identity};
  std::map<T, std::uint32_t> index{{identity, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const T& g : gens) {
      T next = mul(elements[head], g);
      if (index.emplace(next, static_cast<std::uint32_t>(elements.size())).second) {
        elements.push_back(next);
      }
    }
  }
  const auto n = elements.size();
  CayleyTable table(n, std::vector<std::uint32_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x][y] = index.at(mul(elements[x], elements[y]));
  }
  gen_ids.clear();
  for (const T& g : gens) gen_ids.push_back(index.at(g));
  return table;
}

bool is_permutation_of_ids(const std::vector<std::uint32_t>& values, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (auto v : values) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const CayleyTable& table,
                                           std::vector<Generator> generators, std::string name) {
  const std::size_t n = table.size();
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "group order must exceed 1, got " + std::to_string(n));

  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::NotLatinSquare, "table is not square");
    if (!is_permutation_of_ids(row, n)) throw Error(ErrorKind::NotLatinSquare, "row is not a permutation");
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<std::uint32_t> column(n);
    for (std::size_t x = 0; x < n; ++x) column[x] = table[x][y];
    if (!is_permutation_of_ids(column, n)) throw Error(ErrorKind::NotLatinSquare, "column is not a permutation");
  }

  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto xy = table[x][y];
      for (std::uint32_t z = 0; z < n; ++z) {
        if (table[xy][z] != table[x][table[y][z]]) {
          throw Error(ErrorKind::NotAssociative, "(" + std::to_string(x) + "*" + std::to_string(y) + ")*" +
                                                     std::to_string(z) + " differs from the other bracketing");
        }
      }
    }
  }

  std::optional<std::uint32_t> e;
  for (std::uint32_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) ok = table[c][x] == x && table[x][c] == x;
    if (ok) e = c;
  }
  if (!e) throw Error(ErrorKind::NoIdentity, "no two-sided identity");

  // Swap ids 0 and e so that the identity is 0.
  auto relabel = [e = *e](std::uint32_t x) -> std::uint32_t {
    if (x == e) return 0;
    if (x == 0) return e;
    return x;
  };

  FiniteGroup g;
  g.order_ = static_cast<std::uint32_t>(n);
  g.name_ = std::move(name);
  g.table_.assign(n * n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) g.table_[relabel(x) * n + relabel(y)] = relabel(table[x][y]);
  }

  g.inverses_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (g.table_[x * n + y] == 0) g.inverses_[x] = y;
    }
  }

  for (auto& gen : generators) {
    if (gen.id.value >= n) throw Error(ErrorKind::ForeignElement, "generator '" + gen.label + "' out of range");
    gen.id.value = relabel(gen.id.value);
  }
  g.generators_ = std::move(generators);

  // Shortlex words by breadth-first search; also proves generation.
  g.words_.assign(n, {});
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::deque<std::uint32_t> queue{0};
  std::size_t count = 1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (std::uint32_t i = 0; i < g.generators_.size(); ++i) {
      const auto y = g.table_[x * n + g.generators_[i].id.value];
      if (reached[y]) continue;
      reached[y] = true;
      g.words_[y] = g.words_[x];
      g.words_[y].push_back(i);
      queue.push_back(y);
      ++count;
    }
  }
  if (count != n) {
    throw Error(ErrorKind::GeneratorsDoNotGenerate,
                "generators reach " + std::to_string(count) + " of " + std::to_string(n) + " elements");
  }

  g.orders_.assign(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::uint32_t k = 1;
    for (std::uint32_t p = x; p != 0; p = g.table_[p * n + x]) ++k;
    g.orders_[x] = x == 0 ? 1 : k;
  }
  return g;
}

void FiniteGroup::check(ElementId x) const {
  if (x.value >= order_) {
    throw Error(ErrorKind::ForeignElement,
                "element id " + std::to_string(x.value) + " not in group of order " + std::to_string(order_));
  }
}

ElementId FiniteGroup::multiply(ElementId x, ElementId y) const {
  check(x);
  check(y);
  return ElementId{table_[x.value * order_ + y.value]};
}

ElementId FiniteGroup::inverse(ElementId x) const {
  check(x);
  return ElementId{inverses_[x.value]};
}

ElementId FiniteGroup::power(ElementId x, std::int64_t k) const {
  check(x);
  const auto ord = static_cast<std::int64_t>(orders_[x.value]);
  auto e = ((k % ord) + ord) % ord;
  ElementId result{0};
  for (std::int64_t i = 0; i < e; ++i) result = ElementId{table_[result.value * order_ + x.value]};
  return result;
}

std::uint32_t FiniteGroup::element_order(ElementId x) const {
  check(x);
  return orders_[x.value];
}

IdSet FiniteGroup::generated_subgroup(std::span<const ElementId> gens) const {
  for (auto x : gens) check(x);
  std::vector<bool> in(order_, false);
  in[0] = true;
  std::vector<std::uint32_t> members{0};
  // In a finite group closure under multiplication by generators suffices.
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto gen : gens) {
      const auto y = table_[members[head] * order_ + gen.value];
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  IdSet out;
  for (std::uint32_t x = 0; x < order_; ++x) {
    if (in[x]) out.push_back(ElementId{x});
  }
  return out;
}

bool FiniteGroup::is_subgroup(std::span<const ElementId> set) const {
  std::vector<bool> in(order_, false);
  for (auto x : set) {
    if (x.value >= order_) return false;
    in[x.value] = true;
  }
  if (!in[0]) return false;
  for (auto x : set) {
    if (!in[inverses_[x.value]]) return false;
    for (auto y : set) {
      if (!in[table_[x.value * order_ + y.value]]) return false;
    }
  }
  return true;
}

IdSet FiniteGroup::conjugate_subgroup(std::span<const ElementId> subgroup, ElementId g) const {
  check(g);
  if (!is_subgroup(subgroup)) throw Error(ErrorKind::NotASubgroup, "conjugate_subgroup needs a subgroup");
  IdSet out;
  out.reserve(subgroup.size());
  const auto gi = inverses_[g.value];
  for (auto h : subgroup) {
    out.push_back(ElementId{table_[table_[g.value * order_ + h.value] * order_ + gi]});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::span<const std::uint32_t> FiniteGroup::shortest_word(ElementId x) const {
  check(x);
  return words_[x.value];
}

CayleyTable FiniteGroup::cayley_table() const {
  CayleyTable out(order_, std::vector<std::uint32_t>(order_));
  for (std::uint32_t x = 0; x < order_; ++x) {
    for (std::uint32_t y = 0; y < order_; ++y) out[x][y] = table_[x * order_ + y];
  }
  return out;
}

FiniteGroup make_cyclic(std::uint32_t n, std::string label) {
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "cyclic group order must exceed 1, got " + std::to_string(n));
  CayleyTable table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) table[x][y] = (x + y) % n;
  }
  return FiniteGroup::from_cayley_table(table, {{std::move(label), ElementId{1}}}, "C" + std::to_string(n));
}

FiniteGroup make_dihedral_reflections(std::uint32_t n, std::string a, std::string b) {
  if (n < 2) throw Error(ErrorKind::OrderTooSmall, "dihedral parameter must exceed 1, got " + std::to_string(n));
  // r^k s^f with s r s = r^-1; a = s, b = s r so that a b = r has order n.
  using Elem = std::pair<std::uint32_t, std::uint32_t>;
  auto mul = [n](const Elem& x, const Elem& y) {
    const auto k = x.second ? (x.first + n - y.first) % n : (x.first + y.first) % n;
    return Elem{k, x.second ^ y.second};
  };
  std::vector<std::uint32_t> ids;
  auto table = table_by_closure(Elem{0, 0}, {Elem{0, 1}, Elem{1, 1}}, mul, ids);
  return FiniteGroup::from_cayley_table(table, {{std::move(a), ElementId{ids[0]}}, {std::move(b), ElementId{ids[1]}}},
                                        "D" + std::to_string(2 * n));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const auto na = static_cast<std::uint32_t>(a.order());
  const auto nb = static_cast<std::uint32_t>(b.order());
  const auto n = na * nb;
  CayleyTable table(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const auto first = a.multiply(ElementId{x / nb}, ElementId{y / nb}).value;
      const auto second = b.multiply(ElementId{x % nb}, ElementId{y % nb}).value;
      table[x][y] = first * nb + second;
    }
  }
  std::vector<Generator> gens;
  for (const auto& g : a.generators()) gens.push_back({g.label, ElementId{g.id.value * nb}});
  for (const auto& g : b.generators()) gens.push_back({g.label, ElementId{g.id.value}});
  return FiniteGroup::from_cayley_table(table, std::move(gens), a.name() + "x" + b.name());
}

}  // namespace freeprod
