#pragma once

#include <deque>

#include "cck/subgroup.hpp"

namespace cck {

enum class StarKind { gamma, delta };

const char* to_string(StarKind k);
/// Parses "gamma" or "delta".
StarKind parse_star_kind(std::string_view s);

/// One level of the coprime-commutator recursion.
struct StarSetReport {
  StarKind kind = StarKind::gamma;
  std::size_t j = 0;
  ElementSet commutators;
  /// All powers of the commutators; the X (gamma) or Y (delta) set feeding level j+1.
  ElementSet power_closure;
  SubgroupInfo subgroup;
};

/// { s^k : s in S, k >= 0 }; always contains the identity.
ElementSet power_closure(const GroupTable& g, const ElementSet& s);

/// Memoized gamma*/delta* levels of one group. Not thread-safe; give each
/// task its own instance.
class StarCommutators {
 public:
  explicit StarCommutators(const GroupTable& g);

  /// j >= 1.
  const StarSetReport& gamma(std::size_t j);
  /// j >= 0.
  const StarSetReport& delta(std::size_t j);
  const StarSetReport& level(StarKind kind, std::size_t j);

  const GroupTable& group() const { return *g_; }

 private:
  StarSetReport make_report(StarKind kind, std::size_t j, ElementSet commutators) const;

  const GroupTable* g_;
  std::deque<StarSetReport> gamma_;  // gamma_[i] is level i+1
  std::deque<StarSetReport> delta_;  // delta_[i] is level i
};

StarSetReport gamma_star_set(const GroupTable& g, std::size_t j);
StarSetReport delta_star_set(const GroupTable& g, std::size_t j);
SubgroupInfo gamma_star_subgroup(const GroupTable& g, std::size_t j);
SubgroupInfo delta_star_subgroup(const GroupTable& g, std::size_t j);

/// Whether the level-j commutator set of G/N is exactly the image of the
/// level-j commutator set of G. Throws if N is not normal.
bool star_image_lifting_check(const GroupTable& g, const SubgroupInfo& n, std::size_t j, StarKind kind);

/// Same check reusing memoized levels of G and a prebuilt quotient.
bool star_image_lifting_check(StarCommutators& upstairs, const QuotientGroup& q, std::size_t j, StarKind kind);

}  // namespace cck
