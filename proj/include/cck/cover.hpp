#pragma once

#include <cstdint>

#include "cck/star.hpp"

namespace cck {

inline constexpr std::uint64_t kDefaultCoverBudget = 10'000'000;

struct CoverBudget {
  std::uint64_t max_nodes = kDefaultCoverBudget;
  /// Skip the exact search and report the greedy cover.
  bool greedy_only = false;
};

/// A family of cyclic subgroups whose union contains `target`.
struct CoverSolution {
  ElementSet target;
  std::vector<SubgroupInfo> chosen;
  std::size_t m = 0;
  /// True when no cover with m-1 subgroups exists.
  bool exact = false;
  std::size_t lower_bound = 0;
  std::uint64_t nodes = 0;
};

/// All distinct <x>, ordered by least generating element id. With
/// `maximal_only`, drops those properly contained in another cyclic subgroup.
std::vector<SubgroupInfo> cyclic_subgroups(const GroupTable& g, bool maximal_only);

/// Minimum number of cyclic subgroups covering `target`, by branch and
/// bound over the traces C ∩ target.
CoverSolution min_cyclic_cover(const GroupTable& g, const ElementSet& target, const CoverBudget& budget = {});

CoverSolution star_cover_number(StarCommutators& star, StarKind kind, std::size_t j, const CoverBudget& budget = {});
CoverSolution star_cover_number(const GroupTable& g, StarKind kind, std::size_t j, const CoverBudget& budget = {});

}  // namespace cck
