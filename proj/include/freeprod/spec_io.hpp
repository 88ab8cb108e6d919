#pragma once

#include <string_view>
#include <vector>

#include "freeprod/closure_checker.hpp"
#include "freeprod/free_product.hpp"

namespace freeprod {

/// Group spec, one `key: value` per line ('/' also ends a line, '#' starts a
/// comment):
///
///   factors: cyclic 2; dihedral 3; product [cyclic 2, cyclic 3]
///   labels: a; b,c; d,e
///
/// A descriptor is `cyclic <n>`, `dihedral <n>`, `product [<d>, <d>, ...]` or
/// `table {<row>, <row>, ... | <generator ids>}` with space-separated ids.
/// Each `labels:` entry names that factor's generators in order.
FreeProduct parse_group_spec(std::string_view text);

/// Subgroup spec:
///
///   free_rank: 0
///   part: factor=0 gens=a conj=1
///   part: factor=0 gens=b conj=c
///
/// `gens` is a comma-separated list of words inside the factor; `conj` is an
/// ambient word (default 1). `factor` may be omitted and is then inferred.
KuroshData parse_subgroup_spec(std::string_view text, const FreeProduct& ambient);

/// Compact part list "a; b@c; x,y@c a": ';'-separated parts, each a
/// comma-separated generator list with an optional '@' conjugator.
std::vector<Part> parse_part_list(std::string_view text, const FreeProduct& ambient);

}  // namespace freeprod
