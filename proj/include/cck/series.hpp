#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cck/subgroup.hpp"

namespace cck {

enum class SeriesKind { lower_central, derived, upper_central, fitting };

/// Terms of a subgroup series. Descending series start at the group,
/// ascending ones at the first nontrivial step. `stabilized_at` is the
/// 1-based index s of the first term with term(s) == term(s+1); terms past
/// s are not stored.
struct SeriesReport {
  SeriesKind kind = SeriesKind::lower_central;
  std::vector<SubgroupInfo> terms;
  std::size_t stabilized_at = 0;

  const SubgroupInfo& last() const { return terms.back(); }
};

SeriesReport lower_central_series(const GroupTable& g, const SubgroupInfo& h);
inline SeriesReport lower_central_series(const GroupTable& g) { return lower_central_series(g, whole_group(g)); }
/// Last term of the lower central series of h.
SubgroupInfo gamma_infinity(const GroupTable& g, const SubgroupInfo& h);
inline SubgroupInfo gamma_infinity(const GroupTable& g) { return gamma_infinity(g, whole_group(g)); }

SeriesReport derived_series(const GroupTable& g, const SubgroupInfo& h);
inline SeriesReport derived_series(const GroupTable& g) { return derived_series(g, whole_group(g)); }
bool is_soluble(const GroupTable& g, const SubgroupInfo& h);
inline bool is_soluble(const GroupTable& g) { return is_soluble(g, whole_group(g)); }

/// Z_1 = Z(G), Z_{i+1}/Z_i = Z(G/Z_i).
SeriesReport upper_central_series(const GroupTable& g);
SubgroupInfo hypercenter(const GroupTable& g);

struct Nilpotency {
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;  // meaningful only when nilpotent
};
Nilpotency is_nilpotent(const GroupTable& g, const SubgroupInfo& h);
inline Nilpotency is_nilpotent(const GroupTable& g) { return is_nilpotent(g, whole_group(g)); }

/// O_p(G): the core of a Sylow p-subgroup.
SubgroupInfo largest_normal_p_subgroup(const GroupTable& g, std::uint32_t p);
SubgroupInfo fitting_subgroup(const GroupTable& g);
/// Ascending Fitting series 1 < F_1 < F_2 < ... < G, pulled back to G.
/// Throws Error if G is not soluble.
SeriesReport fitting_series(const GroupTable& g);
/// Least h with F_h = G; 0 for the trivial group. Throws if G is not soluble.
std::size_t fitting_height(const GroupTable& g);

/// A Sylow p-subgroup of h; trivial when p does not divide |h|.
SubgroupInfo sylow_subgroup(const GroupTable& g, const SubgroupInfo& h, std::uint32_t p);
inline SubgroupInfo sylow_subgroup(const GroupTable& g, std::uint32_t p) {
  return sylow_subgroup(g, whole_group(g), p);
}

/// A subgroup of order |G|/|G|_p. Tries `hint` generators first, then
/// assembles a Sylow system prime by prime. Throws if G is not soluble.
std::optional<SubgroupInfo> hall_p_prime_subgroup(const GroupTable& g, std::uint32_t p,
                                                  const std::vector<ElementId>& hint = {});

/// Subgroup generated by the elements of order p of the p-group P.
SubgroupInfo omega_1(const GroupTable& g, const SubgroupInfo& p_group, std::uint32_t p);
/// Frattini subgroup P'P^p of the p-group P.
SubgroupInfo frattini_p(const GroupTable& g, const SubgroupInfo& p_group, std::uint32_t p);

struct NormalSubgroupOptions {
  /// Enumeration stops (non-exhaustive) once this many subgroups are found.
  std::size_t lattice_cap = 4096;
};

struct NormalLattice {
  std::vector<SubgroupInfo> subgroups;  // sorted by order, then by element ids
  bool exhaustive = true;
};

/// Every normal subgroup is a join of normal closures of single elements;
/// enumeration closes that family under joins.
NormalLattice normal_subgroups(const GroupTable& g, const NormalSubgroupOptions& opts = {});

const char* to_string(SeriesKind k);

}  // namespace cck
