#pragma once

#include <string_view>

#include "cck/catalog.hpp"
#include "cck/group.hpp"
#include "oracle.hpp"

namespace support {

inline cck::GroupTable make(std::string_view expr) { return cck::build_group(cck::builtin(expr)); }

inline cck::ElementId el(const cck::GroupTable& g, std::string_view cycles) {
  return g.id_of(cck::parse_permutation(cycles, g.degree()));
}

inline oracle::PermSet perms(const cck::GroupTable& g, const cck::ElementSet& s) {
  oracle::PermSet out;
  s.for_each([&](cck::ElementId x) { out.insert(g.element(x)); });
  return out;
}

inline oracle::PermSet perms(const cck::GroupTable& g) { return perms(g, g.all()); }

inline cck::ElementSet ids(const cck::GroupTable& g, const oracle::PermSet& s) {
  cck::ElementSet out = g.empty_set();
  for (const auto& p : s) out.insert(g.id_of(p));
  return out;
}

inline cck::Permutation identity_of(const cck::GroupTable& g) { return cck::Permutation::identity(g.degree()); }

}  // namespace support
