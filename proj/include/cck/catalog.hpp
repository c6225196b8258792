#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cck/group.hpp"

namespace cck {

/// A group given by permutation generators in cycle notation. Hints are
/// cross-checks against computed invariants, never substitutes for them.
/// Recognised keys: order, nilpotent, soluble, fitting_height, and
/// hall<p> (generators of a Hall p'-subgroup, separated by ';').
struct GroupSpec {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::string> generators;
  std::map<std::string, std::string> hints;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupTable build_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// Parses a family expression such as "symmetric(4)" or
/// "direct_product(cyclic(2),generalized_quaternion(8))". Names of the
/// explicit default-catalog constructions (e.g. "c3^2:q8") are accepted too.
GroupSpec builtin(std::string_view expr);

/// Group file grammar, one group per block:
///   # comment
///   group <name>
///   degree <n>
///   gen <cycles>
///   hint <key>=<value>
///   end
/// Throws ParseError with the offending line number.
std::vector<GroupSpec> parse_group_file(std::string_view text);
std::string print_group_file(const std::vector<GroupSpec>& specs);

/// Deterministic test corpus of groups of order <= max_order.
std::vector<GroupSpec> default_catalog(std::size_t max_order);

/// Human-readable mismatches between the hints of `spec` and `g`.
std::vector<std::string> check_hints(const GroupSpec& spec, const GroupTable& g);

}  // namespace cck
