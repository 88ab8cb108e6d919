#include "freeprod/bass_serre.hpp"

#include <algorithm>

#include "freeprod/error.hpp"

namespace freeprod {

namespace {

// Representative of r G_i with no trailing syllable from factor i.
FPElement canonical_rep(std::uint32_t factor, const FPElement& r) {
  const auto s = r.syllables();
  if (s.empty() || s.back().factor != factor) return r;
  return r.ambient().normalize(s.first(s.size() - 1));
}

void require_same(const FPElement& u, const FPElement& v) {
  if (!u.same_ambient(v)) throw Error(ErrorKind::MixedAmbient, "vertices from different trees");
}

// Distance from E(1) to C(j, y) with y canonical for j.
std::uint64_t origin_to_coset(const FPElement& y) { return 2 * y.norm() + 1; }

}  // namespace

TreeVertex TreeVertex::element(FPElement g) { return TreeVertex(Kind::Element, 0, std::move(g)); }

TreeVertex TreeVertex::coset(std::uint32_t factor, const FPElement& rep) {
  if (factor >= rep.ambient().factor_count()) {
    throw Error(ErrorKind::BadFactorIndex, "coset vertex factor " + std::to_string(factor) + " out of range");
  }
  return TreeVertex(Kind::Coset, factor, canonical_rep(factor, rep));
}

std::string TreeVertex::render() const {
  const auto word = rep_.ambient().render(rep_);
  if (is_element()) return "E:" + word;
  return "C" + std::to_string(factor_) + ":" + word;
}

std::strong_ordering operator<=>(const TreeVertex& a, const TreeVertex& b) noexcept {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.factor_ <=> b.factor_; c != 0) return c;
  return a.rep_ <=> b.rep_;
}

TreeVertex act(const FPElement& h, const TreeVertex& v) {
  require_same(h, v.rep());
  if (v.is_element()) return TreeVertex::element(h * v.rep());
  return TreeVertex::coset(v.factor(), h * v.rep());
}

std::uint64_t vertex_distance(const TreeVertex& v, const TreeVertex& w) {
  require_same(v.rep(), w.rep());
  if (v.is_element() && w.is_element()) return 2 * (inverse(v.rep()) * w.rep()).norm();
  if (v.is_element()) return origin_to_coset(canonical_rep(w.factor(), inverse(v.rep()) * w.rep()));
  if (w.is_element()) return vertex_distance(w, v);

  // Translate v to C(i, 1); the geodesic leaves through E(s), s in G_i.
  const auto i = v.factor();
  const auto y = canonical_rep(w.factor(), inverse(v.rep()) * w.rep());
  if (i == w.factor() && y.is_identity()) return 0;
  const auto ys = y.syllables();
  if (!ys.empty() && ys.front().factor == i) {
    const auto rest = y.ambient().normalize(ys.subspan(1));
    return 1 + origin_to_coset(canonical_rep(w.factor(), rest));
  }
  return 1 + origin_to_coset(y);
}

std::vector<TreeVertex> neighbours(const TreeVertex& v) {
  const auto ambient = v.rep().ambient();
  std::vector<TreeVertex> out;
  if (v.is_element()) {
    for (std::uint32_t i = 0; i < ambient.factor_count(); ++i) out.push_back(TreeVertex::coset(i, v.rep()));
    return out;
  }
  const auto& group = ambient.factor(v.factor());
  for (std::uint32_t s = 0; s < group.order(); ++s) {
    out.push_back(TreeVertex::element(v.rep() * ambient.element(v.factor(), ElementId{s})));
  }
  return out;
}

Classification classify(const FPElement& u) {
  auto reduced = cyclic_reduce(u);
  const auto core = reduced.core.syllables();
  if (core.empty()) return Elliptic{TreeVertex::element(u.ambient().identity())};
  if (core.size() == 1) return Elliptic{TreeVertex::coset(core[0].factor, reduced.conjugator)};
  const auto length = 2 * reduced.core.norm();
  return Hyperbolic{AxisInfo{std::move(reduced.conjugator), std::move(reduced.core), length}};
}

std::vector<TreeVertex> axis_vertices(const FPElement& u, std::uint64_t window) {
  const auto c = classify(u);
  const auto* h = std::get_if<Hyperbolic>(&c);
  if (!h) throw Error(ErrorKind::NotHyperbolic, "element fixes a vertex and has no axis");
  const auto& core = h->axis.core;
  const auto d = core.syllables();
  const auto w = static_cast<std::int64_t>(window);
  const auto ambient = u.ambient();

  std::vector<TreeVertex> out;
  out.reserve((2 * window + 1) * d.size() * 2);
  auto x = h->axis.conjugator * power(core, -w);
  const auto steps = static_cast<std::uint64_t>(2 * w + 1) * d.size();
  for (std::uint64_t step = 0; step < steps; ++step) {
    out.push_back(TreeVertex::element(x));
    if (step + 1 == steps) break;
    const auto s = d[step % d.size()];
    out.push_back(TreeVertex::coset(s.factor, x));
    x = x * ambient.element(s.factor, s.elem);
  }
  return out;
}

std::optional<std::uint64_t> axes_intersection(const FPElement& u, const FPElement& v, std::uint64_t window) {
  require_same(u, v);
  auto a = axis_vertices(u, window);
  auto b = axis_vertices(v, window);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<TreeVertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return common.size() - 1;
}

}  // namespace freeprod
