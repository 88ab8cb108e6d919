#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freeprod/error.hpp"
#include "freeprod/free_product.hpp"

namespace freeprod {

/// One free factor H_{i,j}^{g_{i,j}} of a Kurosh decomposition.
using Part = SubgroupPart;

/// H = F * (free product of conjugated factor subgroups), F free of rank
/// `free_rank`.
struct KuroshData {
  FreeProduct ambient;
  std::uint64_t free_rank = 0;
  std::vector<FPElement> free_basis;  ///< optional, informational only
  std::vector<Part> parts;
};

struct ValidationIssue {
  ErrorKind kind;
  std::optional<std::size_t> part;
  std::string message;
};

/// Empty when the data satisfies every hypothesis of the checker.
std::vector<ValidationIssue> validate(const KuroshData& data);

enum class ConditionKind { Condition1, Condition2, Condition3 };

/// For Condition2: f^k1 in H_{part1} \ {1} and f^k2 in g H_{part2} g^-1 \ {1},
/// with f, g in factor `factor`. For Condition3 k1 = k2 = 1 and f is a
/// nontrivial element of the intersection H_{part1} and g H_{part2} g^-1.
struct Violation {
  ConditionKind kind = ConditionKind::Condition1;
  std::size_t part1 = 0;
  std::size_t part2 = 0;
  std::uint32_t factor = 0;
  ElementId f;
  ElementId g;
  std::uint32_t k1 = 0;
  std::uint32_t k2 = 0;
  IdSet intersection;  ///< Condition3 only
};

std::optional<Violation> check_condition1(const KuroshData& data);

/// Every ordered pair of distinct same-factor parts (j1, j2) is scanned over
/// f in G_i \ {1}, then g in G_i, then k1, k2 in [1, ord f]; the first hit
/// per pair is reported. Pairs are visited in (j1, j2) order.
std::vector<Violation> check_condition2(const KuroshData& data);

/// H_{j1} and g H_{j2} g^-1 must intersect trivially for every g in G_i;
/// reports the first g per ordered pair.
std::vector<Violation> check_condition3(const KuroshData& data);

/// True iff the witness holds when recomputed from the factor tables.
bool verify_witness(const KuroshData& data, const Violation& v);

enum class VerdictKind { FailsNecessary, PassesNecessary };

struct Verdict {
  VerdictKind kind = VerdictKind::PassesNecessary;
  /// Always true for PassesNecessary: the conditions are necessary only.
  bool inconclusive = true;
  std::vector<Violation> violations;
};

Verdict check_all(const KuroshData& data);

std::string to_string(ConditionKind kind);
std::string to_string(VerdictKind kind);

}  // namespace freeprod
