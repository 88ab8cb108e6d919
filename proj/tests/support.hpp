#pragma once

#include <doctest.h>

#include <map>
#include <queue>
#include <random>
#include <utility>
#include <vector>

#include "freeprod/bass_serre.hpp"
#include "freeprod/error.hpp"
#include "freeprod/free_product.hpp"
#include "freeprod/words.hpp"

namespace testing {

using namespace freeprod;

template <class F>
void check_error(ErrorKind expected, F&& f) {
  try {
    f();
    FAIL("expected ", to_string(expected), ", nothing thrown");
  } catch (const Error& e) {
    CHECK_MESSAGE(e.kind() == expected, "got ", e.what());
  }
}

inline FreeProduct c2c3() { return FreeProduct({make_cyclic(2, "a"), make_cyclic(3, "b")}); }
inline FreeProduct c2c2() { return FreeProduct({make_cyclic(2, "a"), make_cyclic(2, "b")}); }
inline FreeProduct c2c2c2() { return FreeProduct({make_cyclic(2, "a"), make_cyclic(2, "b"), make_cyclic(2, "c")}); }
inline FreeProduct s3z2() { return FreeProduct({make_dihedral_reflections(3, "a", "b"), make_cyclic(2, "c")}); }
inline FreeProduct z6z2() {
  return FreeProduct({direct_product(make_cyclic(2, "a"), make_cyclic(3, "b")), make_cyclic(2, "c")});
}

inline FPElement el(const FreeProduct& g, std::string_view word) { return parse_element(word, g); }

// Reduction by repeated left-to-right passes over a raw letter list, kept
// separate from the library's single-pass stack.
inline std::vector<Syllable> naive_reduce(const FreeProduct& g, std::vector<Syllable> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Syllable> next;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].elem.value == 0) {
        changed = true;
        continue;
      }
      if (i + 1 < w.size() && w[i].factor == w[i + 1].factor) {
        next.push_back({w[i].factor, g.factor(w[i].factor).multiply(w[i].elem, w[i + 1].elem)});
        ++i;
        changed = true;
        continue;
      }
      next.push_back(w[i]);
    }
    w = std::move(next);
  }
  return w;
}

inline std::vector<Syllable> raw_letters(const FreeProduct& g, std::mt19937_64& rng, std::size_t max_len) {
  std::vector<Syllable> w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& s : w) {
    s.factor = static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, g.factor_count() - 1)(rng));
    const auto n = g.factor(s.factor).order();
    s.elem = ElementId{static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng))};
  }
  return w;
}

inline FPElement random_raw(const FreeProduct& g, std::mt19937_64& rng, std::size_t max_len) {
  const auto w = raw_letters(g, rng, max_len);
  return g.normalize(w);
}

// Breadth-first distances from `start` within `radius` edges, using only
// adjacency.
inline std::map<TreeVertex, std::uint64_t> bfs_ball(const TreeVertex& start, std::uint64_t radius) {
  std::map<TreeVertex, std::uint64_t> dist{{start, 0}};
  std::queue<TreeVertex> q;
  q.push(start);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    const auto d = dist.at(v);
    if (d == radius) continue;
    for (auto& w : neighbours(v)) {
      if (dist.emplace(w, d + 1).second) q.push(w);
    }
  }
  return dist;
}

}  // namespace testing
