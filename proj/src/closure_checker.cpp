#include "freeprod/closure_checker.hpp"

#include <algorithm>

namespace freeprod {

namespace {

bool contains(const IdSet& set, ElementId x) { return std::binary_search(set.begin(), set.end(), x); }

void require_valid(const KuroshData& data) {
  const auto issues = validate(data);
  if (!issues.empty()) throw Error(issues.front().kind, issues.front().message);
}

}  // namespace

std::vector<ValidationIssue> validate(const KuroshData& data) {
  std::vector<ValidationIssue> issues;
  if (data.parts.empty() && data.free_rank == 0) {
    issues.push_back({ErrorKind::TrivialSubgroup, std::nullopt, "decomposition has no parts and free rank 0"});
  }
  for (const auto& b : data.free_basis) {
    if (!(b.ambient() == data.ambient)) {
      issues.push_back({ErrorKind::MixedAmbient, std::nullopt, "free basis element from another free product"});
    }
  }
  for (std::size_t j = 0; j < data.parts.size(); ++j) {
    const auto& part = data.parts[j];
    const auto where = "part " + std::to_string(j);
    if (!(part.conjugator.ambient() == data.ambient)) {
      issues.push_back({ErrorKind::MixedAmbient, j, where + ": conjugator from another free product"});
    }
    if (part.factor >= data.ambient.factor_count()) {
      issues.push_back({ErrorKind::BadFactorIndex, j, where + ": factor index " + std::to_string(part.factor) + " out of range"});
      continue;
    }
    const auto& group = data.ambient.factor(part.factor);
    if (!std::is_sorted(part.subgroup.begin(), part.subgroup.end()) ||
        std::adjacent_find(part.subgroup.begin(), part.subgroup.end()) != part.subgroup.end() ||
        !group.is_subgroup(part.subgroup)) {
      issues.push_back({ErrorKind::NotASubgroup, j, where + ": element set is not a sorted subgroup of factor " +
                                                        std::to_string(part.factor)});
      continue;
    }
    if (part.subgroup.size() < 2) issues.push_back({ErrorKind::TrivialSubgroup, j, where + ": subgroup is trivial"});
  }
  return issues;
}

std::optional<Violation> check_condition1(const KuroshData& data) {
  require_valid(data);
  if (data.free_rank == 0) return std::nullopt;
  Violation v;
  v.kind = ConditionKind::Condition1;
  return v;
}

std::vector<Violation> check_condition2(const KuroshData& data) {
  require_valid(data);
  std::vector<Violation> out;
  const auto& parts = data.parts;
  for (std::size_t j1 = 0; j1 < parts.size(); ++j1) {
    for (std::size_t j2 = 0; j2 < parts.size(); ++j2) {
      if (j1 == j2 || parts[j1].factor != parts[j2].factor) continue;
      const auto i = parts[j1].factor;
      const auto& group = data.ambient.factor(i);
      const auto n = static_cast<std::uint32_t>(group.order());
      bool found = false;
      for (std::uint32_t f = 1; f < n && !found; ++f) {
        const ElementId fe{f};
        const auto ord = group.element_order(fe);
        // Powers f^k1 landing in H_{j1} \ {1} do not depend on g.
        std::vector<std::uint32_t> k1s;
        for (std::uint32_t k = 1; k <= ord; ++k) {
          const auto p = group.power(fe, k);
          if (p != group.identity() && contains(parts[j1].subgroup, p)) k1s.push_back(k);
        }
        if (k1s.empty()) continue;
        for (std::uint32_t g = 0; g < n && !found; ++g) {
          const auto conj = group.conjugate_subgroup(parts[j2].subgroup, ElementId{g});
          for (std::uint32_t k2 = 1; k2 <= ord; ++k2) {
            const auto p = group.power(fe, k2);
            if (p != group.identity() && contains(conj, p)) {
              out.push_back({ConditionKind::Condition2, j1, j2, i, fe, ElementId{g}, k1s.front(), k2, {}});
              found = true;
              break;
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_condition3(const KuroshData& data) {
  require_valid(data);
  std::vector<Violation> out;
  const auto& parts = data.parts;
  for (std::size_t j1 = 0; j1 < parts.size(); ++j1) {
    for (std::size_t j2 = 0; j2 < parts.size(); ++j2) {
      if (j1 == j2 || parts[j1].factor != parts[j2].factor) continue;
      const auto i = parts[j1].factor;
      const auto& group = data.ambient.factor(i);
      for (std::uint32_t g = 0; g < group.order(); ++g) {
        const auto conj = group.conjugate_subgroup(parts[j2].subgroup, ElementId{g});
        IdSet meet;
        std::set_intersection(parts[j1].subgroup.begin(), parts[j1].subgroup.end(), conj.begin(), conj.end(),
                              std::back_inserter(meet));
        if (meet.size() > 1) {
          out.push_back({ConditionKind::Condition3, j1, j2, i, meet[1], ElementId{g}, 1, 1, meet});
          break;
        }
      }
    }
  }
  return out;
}

bool verify_witness(const KuroshData& data, const Violation& v) {
  if (v.kind == ConditionKind::Condition1) return data.free_rank > 0;
  if (v.part1 >= data.parts.size() || v.part2 >= data.parts.size() || v.part1 == v.part2) return false;
  const auto& p1 = data.parts[v.part1];
  const auto& p2 = data.parts[v.part2];
  if (p1.factor != v.factor || p2.factor != v.factor) return false;
  const auto& group = data.ambient.factor(v.factor);
  if (!group.contains(v.f) || !group.contains(v.g) || v.k1 == 0 || v.k2 == 0) return false;
  const auto a = group.power(v.f, v.k1);
  const auto b = group.power(v.f, v.k2);
  if (a == group.identity() || b == group.identity()) return false;
  // g h g^-1 = b  <=>  h = g^-1 b g
  const auto h = group.multiply(group.multiply(group.inverse(v.g), b), v.g);
  return contains(p1.subgroup, a) && contains(p2.subgroup, h);
}

Verdict check_all(const KuroshData& data) {
  Verdict verdict;
  if (auto v = check_condition1(data)) verdict.violations.push_back(*v);
  for (auto& v : check_condition2(data)) verdict.violations.push_back(std::move(v));
  for (auto& v : check_condition3(data)) verdict.violations.push_back(std::move(v));
  if (!verdict.violations.empty()) {
    verdict.kind = VerdictKind::FailsNecessary;
    verdict.inconclusive = false;
  }
  return verdict;
}

std::string to_string(ConditionKind kind) {
  switch (kind) {
    case ConditionKind::Condition1: return "Condition1";
    case ConditionKind::Condition2: return "Condition2";
    case ConditionKind::Condition3: return "Condition3";
  }
  return "Unknown";
}

std::string to_string(VerdictKind kind) {
  return kind == VerdictKind::FailsNecessary ? "fails necessary conditions"
                                             : "passes necessary conditions (inconclusive)";
}

}  // namespace freeprod
