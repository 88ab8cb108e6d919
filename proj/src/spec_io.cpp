#include "freeprod/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include "freeprod/error.hpp"
#include "freeprod/words.hpp"

namespace freeprod {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void syntax(const std::string& what) { throw Error(ErrorKind::SyntaxError, what); }

// Splits on `sep` outside of (), [] and {}.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth < 0) syntax("unbalanced brackets in \"" + std::string(s) + "\"");
    if (c == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) syntax("unbalanced brackets in \"" + std::string(s) + "\"");
  out.push_back(trim(s.substr(start)));
  return out;
}

std::uint32_t parse_uint(std::string_view s) {
  s = trim(s);
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) syntax("expected a non-negative integer, got \"" + std::string(s) + "\"");
  return v;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view s) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const auto start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(parse_uint(s.substr(start, i - start)));
  }
  return out;
}

// Generator labels inside a factor are placeholders until `labels:` assigns them.
FiniteGroup parse_descriptor(std::string_view d) {
  d = trim(d);
  auto keyword_end = d.find_first_of(" \t[{");
  const auto keyword = d.substr(0, keyword_end);
  const auto rest = keyword_end == std::string_view::npos ? std::string_view{} : trim(d.substr(keyword_end));
  if (keyword == "cyclic") return make_cyclic(parse_uint(rest), "g0");
  if (keyword == "dihedral") return make_dihedral_reflections(parse_uint(rest), "g0", "g1");
  if (keyword == "product") {
    if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') syntax("product expects [<d>, <d>]");
    const auto inner = split_top(rest.substr(1, rest.size() - 2), ',');
    if (inner.size() < 2) syntax("product needs at least two descriptors");
    auto group = parse_descriptor(inner[0]);
    for (std::size_t i = 1; i < inner.size(); ++i) {
      group = direct_product(group, parse_descriptor(inner[i]));
    }
    return group;
  }
  if (keyword == "table") {
    if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}') syntax("table expects {<rows> | <generator ids>}");
    const auto body = rest.substr(1, rest.size() - 2);
    const auto bar = body.find('|');
    if (bar == std::string_view::npos) syntax("table needs '|' before generator ids");
    CayleyTable table;
    for (auto row : split_top(body.substr(0, bar), ',')) table.push_back(parse_uint_list(row));
    std::vector<Generator> gens;
    for (auto id : parse_uint_list(body.substr(bar + 1))) gens.push_back({"g" + std::to_string(gens.size()), ElementId{id}});
    return FiniteGroup::from_cayley_table(table, std::move(gens), "T" + std::to_string(table.size()));
  }
  syntax("unknown factor descriptor \"" + std::string(d) + "\"");
}

FiniteGroup with_labels(const FiniteGroup& g, const std::vector<std::string_view>& labels) {
  if (labels.size() != g.generators().size()) {
    syntax("factor " + g.name() + " has " + std::to_string(g.generators().size()) + " generators but " +
           std::to_string(labels.size()) + " labels were given");
  }
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) syntax("empty generator label");
    gens.push_back({std::string(labels[i]), g.generators()[i].id});
  }
  return FiniteGroup::from_cayley_table(g.cayley_table(), std::move(gens), g.name());
}

struct KeyValue {
  std::string_view key;
  std::string_view value;
};

std::vector<KeyValue> key_value_lines(std::string_view text) {
  std::vector<KeyValue> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find_first_of("\n/", start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) syntax("expected 'key: value', got \"" + std::string(line) + "\"");
      out.push_back({trim(line.substr(0, colon)), trim(line.substr(colon + 1))});
    }
    start = end + 1;
  }
  return out;
}

// Factor containing every element of `elems` (identity elements are ignored).
std::optional<std::uint32_t> common_factor(const std::vector<FPElement>& elems) {
  std::optional<std::uint32_t> factor;
  for (const auto& e : elems) {
    if (e.is_identity()) continue;
    if (e.norm() != 1) return std::nullopt;
    const auto f = e.syllables()[0].factor;
    if (factor && *factor != f) return std::nullopt;
    factor = f;
  }
  return factor;
}

Part make_part(const FreeProduct& ambient, std::optional<std::uint32_t> factor, std::string_view gens_text,
               std::string_view conj_text) {
  std::vector<FPElement> gens;
  for (auto w : split_top(gens_text, ',')) {
    if (w.empty()) syntax("empty generator word in part");
    gens.push_back(parse_element(w, ambient));
  }
  const auto inferred = common_factor(gens);
  if (!factor) {
    if (!inferred) {
      // All generators trivial: still a factor is needed for the part.
      bool all_trivial = std::all_of(gens.begin(), gens.end(), [](const FPElement& e) { return e.is_identity(); });
      if (!all_trivial) throw Error(ErrorKind::BadFactorIndex, "part generators do not lie in a single factor");
      factor = 0;
    } else {
      factor = inferred;
    }
  } else if (*factor >= ambient.factor_count()) {
    throw Error(ErrorKind::BadFactorIndex, "factor index " + std::to_string(*factor) + " out of range");
  }
  std::vector<ElementId> ids;
  for (const auto& e : gens) {
    if (e.is_identity()) continue;
    if (e.norm() != 1 || e.syllables()[0].factor != *factor) {
      throw Error(ErrorKind::BadFactorIndex,
                  "generator " + ambient.render(e) + " does not lie in factor " + std::to_string(*factor));
    }
    ids.push_back(e.syllables()[0].elem);
  }
  const auto conj_word = trim(conj_text);
  const auto conj = conj_word.empty() ? ambient.identity() : parse_element(conj_word, ambient);
  return Part{*factor, ambient.factor(*factor).generated_subgroup(ids), conj};
}

}  // namespace

FreeProduct parse_group_spec(std::string_view text) {
  std::optional<std::string_view> factors_line;
  std::optional<std::string_view> labels_line;
  for (const auto& kv : key_value_lines(text)) {
    if (kv.key == "factors") {
      factors_line = kv.value;
    } else if (kv.key == "labels") {
      labels_line = kv.value;
    } else {
      syntax("unknown key \"" + std::string(kv.key) + "\" in group spec");
    }
  }
  if (!factors_line) syntax("group spec needs a 'factors:' line");

  std::vector<FiniteGroup> factors;
  for (auto d : split_top(*factors_line, ';')) factors.push_back(parse_descriptor(d));

  if (labels_line) {
    const auto per_factor = split_top(*labels_line, ';');
    if (per_factor.size() != factors.size()) {
      syntax(std::to_string(factors.size()) + " factors but " + std::to_string(per_factor.size()) + " label groups");
    }
    for (std::size_t i = 0; i < factors.size(); ++i) factors[i] = with_labels(factors[i], split_top(per_factor[i], ','));
  } else {
    // Default labels s<i>_<j>.
    for (std::size_t i = 0; i < factors.size(); ++i) {
      std::vector<std::string> names;
      for (std::size_t j = 0; j < factors[i].generators().size(); ++j) {
        names.push_back("s" + std::to_string(i) + "_" + std::to_string(j));
      }
      factors[i] = with_labels(factors[i], std::vector<std::string_view>(names.begin(), names.end()));
    }
  }
  return FreeProduct(std::move(factors));
}

KuroshData parse_subgroup_spec(std::string_view text, const FreeProduct& ambient) {
  KuroshData data{ambient, 0, {}, {}};
  for (const auto& kv : key_value_lines(text)) {
    if (kv.key == "free_rank") {
      data.free_rank = parse_uint(kv.value);
    } else if (kv.key == "free_basis") {
      for (auto w : split_top(kv.value, ',')) data.free_basis.push_back(parse_element(w, ambient));
    } else if (kv.key == "part") {
      // factor=<i> gens=<list> conj=<word>, keys in any order.
      std::optional<std::uint32_t> factor;
      std::string_view gens;
      std::string_view conj;
      struct Field {
        std::string_view name;
        std::size_t pos;
      };
      std::vector<Field> fields;
      for (std::string_view name : {"factor=", "gens=", "conj="}) {
        auto p = kv.value.find(name);
        if (p != std::string_view::npos) fields.push_back({name, p});
      }
      std::sort(fields.begin(), fields.end(), [](const Field& a, const Field& b) { return a.pos < b.pos; });
      if (fields.empty() || fields.front().pos != 0) syntax("part line must start with a key, got \"" + std::string(kv.value) + "\"");
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const auto begin = fields[i].pos + fields[i].name.size();
        const auto end = i + 1 < fields.size() ? fields[i + 1].pos : kv.value.size();
        const auto value = trim(kv.value.substr(begin, end - begin));
        if (fields[i].name == "factor=") factor = parse_uint(value);
        if (fields[i].name == "gens=") gens = value;
        if (fields[i].name == "conj=") conj = value;
      }
      if (gens.empty()) syntax("part needs gens=");
      data.parts.push_back(make_part(ambient, factor, gens, conj));
    } else {
      syntax("unknown key \"" + std::string(kv.key) + "\" in subgroup spec");
    }
  }
  return data;
}

std::vector<Part> parse_part_list(std::string_view text, const FreeProduct& ambient) {
  std::vector<Part> parts;
  for (auto item : split_top(text, ';')) {
    if (item.empty()) syntax("empty part in list");
    const auto at = item.find('@');
    const auto gens = at == std::string_view::npos ? item : item.substr(0, at);
    const auto conj = at == std::string_view::npos ? std::string_view{} : item.substr(at + 1);
    parts.push_back(make_part(ambient, std::nullopt, gens, conj));
  }
  return parts;
}

}  // namespace freeprod
