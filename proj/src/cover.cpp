#include "cck/cover.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace cck {

std::vector<SubgroupInfo> cyclic_subgroups(const GroupTable& g, bool maximal_only) {
  std::vector<SubgroupInfo> all;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  for (ElementId x = 0; x < g.order(); ++x) {
    SubgroupInfo c = cyclic_subgroup(g, x);
    if (seen.emplace(c.carrier, all.size()).second) all.push_back(std::move(c));
  }
  if (!maximal_only) return all;
  std::vector<SubgroupInfo> maximal;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool contained = false;
    for (std::size_t k = 0; k < all.size() && !contained; ++k)
      contained = k != i && all[k].order > all[i].order && all[i].is_subgroup_of(all[k]);
    if (!contained) maximal.push_back(all[i]);
  }
  return maximal;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
std::size_t popcount(const Bits& b) {
  std::size_t n = 0;
  for (auto w : b) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}
std::size_t overlap(const Bits& a, const Bits& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return n;
}
bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}
bool none(const Bits& b) {
  for (auto w : b)
    if (w) return false;
  return true;
}

/// Exact set cover over bit-vector candidates.
class CoverSearch {
 public:
  CoverSearch(std::size_t universe, std::vector<Bits> sets, std::uint64_t max_nodes)
      : universe_(universe), sets_(std::move(sets)), max_nodes_(max_nodes), containing_(universe) {
    for (std::size_t s = 0; s < sets_.size(); ++s)
      for (std::size_t e = 0; e < universe_; ++e)
        if (test(sets_[s], e)) containing_[e].push_back(s);
    by_scarcity_.resize(universe_);
    std::iota(by_scarcity_.begin(), by_scarcity_.end(), std::size_t{0});
    std::stable_sort(by_scarcity_.begin(), by_scarcity_.end(),
                     [&](std::size_t a, std::size_t b) { return containing_[a].size() < containing_[b].size(); });
  }

  std::vector<std::size_t> greedy() const {
    Bits uncovered = full();
    std::vector<std::size_t> pick;
    while (!none(uncovered)) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        const std::size_t gain = overlap(sets_[s], uncovered);
        if (gain > best_gain) {
          best_gain = gain;
          best = s;
        }
      }
      pick.push_back(best);
      clear(uncovered, sets_[best]);
    }
    return pick;
  }

  /// Elements no two of which share a candidate each need their own set.
  std::size_t independence_bound(const Bits& uncovered) const {
    std::vector<char> used(sets_.size(), 0);
    std::size_t bound = 0;
    for (std::size_t e : by_scarcity_) {
      if (!test(uncovered, e)) continue;
      bool free = true;
      for (std::size_t s : containing_[e])
        if (used[s]) {
          free = false;
          break;
        }
      if (!free) continue;
      ++bound;
      for (std::size_t s : containing_[e]) used[s] = 1;
    }
    return bound;
  }

  /// Returns false if the node budget ran out.
  bool solve(std::vector<std::size_t> incumbent) {
    best_ = std::move(incumbent);
    std::vector<std::size_t> stack;
    aborted_ = false;
    dfs(full(), stack);
    return !aborted_;
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  Bits full() const {
    Bits b((universe_ + 63) / 64, 0);
    for (std::size_t e = 0; e < universe_; ++e) set(b, e);
    return b;
  }

 private:
  static void clear(Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
  }

  void dfs(const Bits& uncovered, std::vector<std::size_t>& stack) {
    if (aborted_) return;
    if (++nodes_ > max_nodes_) {
      aborted_ = true;
      return;
    }
    if (none(uncovered)) {
      if (stack.size() < best_.size()) best_ = stack;
      return;
    }
    if (stack.size() + independence_bound(uncovered) >= best_.size()) return;

    std::size_t pivot = universe_;
    for (std::size_t e : by_scarcity_)
      if (test(uncovered, e)) {
        pivot = e;
        break;
      }
    std::vector<std::pair<std::size_t, std::size_t>> branches;  // (gain, set)
    for (std::size_t s : containing_[pivot]) branches.emplace_back(overlap(sets_[s], uncovered), s);
    std::stable_sort(branches.begin(), branches.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, s] : branches) {
      Bits next = uncovered;
      clear(next, sets_[s]);
      stack.push_back(s);
      dfs(next, stack);
      stack.pop_back();
      if (aborted_) return;
    }
  }

  std::size_t universe_;
  std::vector<Bits> sets_;
  std::uint64_t max_nodes_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::size_t> by_scarcity_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

CoverSolution min_cyclic_cover(const GroupTable& g, const ElementSet& target, const CoverBudget& budget) {
  if (target.universe() != g.order()) throw Error("cover target belongs to a different group");
  CoverSolution sol;
  sol.target = target;
  if (target.empty()) {
    sol.exact = true;
    return sol;
  }

  const auto elems = target.ids();
  std::vector<std::size_t> position(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) position[elems[i]] = i;
  const std::size_t words = (elems.size() + 63) / 64;

  // Candidate traces, deduplicated, then pruned of dominated traces.
  std::vector<SubgroupInfo> sources;
  std::vector<Bits> traces;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  for (auto& c : cyclic_subgroups(g, false)) {
    ElementSet t = c.carrier & target;
    if (t.empty() || !seen.emplace(t, traces.size()).second) continue;
    Bits b(words, 0);
    t.for_each([&](ElementId x) { set(b, position[x]); });
    traces.push_back(std::move(b));
    sources.push_back(std::move(c));
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < traces.size() && !dominated; ++k)
      dominated = k != i && popcount(traces[k]) > popcount(traces[i]) && subset(traces[i], traces[k]);
    if (!dominated) keep.push_back(i);
  }
  std::vector<Bits> sets;
  std::vector<SubgroupInfo> kept_sources;
  for (std::size_t i : keep) {
    sets.push_back(traces[i]);
    kept_sources.push_back(sources[i]);
  }

  CoverSearch search(elems.size(), std::move(sets), budget.max_nodes);
  const auto greedy = search.greedy();
  const std::size_t root_bound = std::max<std::size_t>(1, search.independence_bound(search.full()));

  std::vector<std::size_t> pick;
  if (budget.greedy_only || greedy.size() == root_bound) {
    pick = greedy;
    sol.exact = greedy.size() == root_bound;
  } else {
    sol.exact = search.solve(greedy);
    pick = search.best();
    sol.nodes = search.nodes();
  }
  sol.m = pick.size();
  sol.lower_bound = sol.exact ? sol.m : root_bound;
  for (std::size_t s : pick) sol.chosen.push_back(kept_sources[s]);

  ElementSet covered(g.order());
  for (const auto& c : sol.chosen) covered |= c.carrier;
  if (!target.is_subset_of(covered)) throw Error("internal: cyclic cover does not contain its target");
  return sol;
}

CoverSolution star_cover_number(StarCommutators& star, StarKind kind, std::size_t j, const CoverBudget& budget) {
  return min_cyclic_cover(star.group(), star.level(kind, j).commutators, budget);
}

CoverSolution star_cover_number(const GroupTable& g, StarKind kind, std::size_t j, const CoverBudget& budget) {
  StarCommutators star(g);
  return star_cover_number(star, kind, j, budget);
}

}  // namespace cck
