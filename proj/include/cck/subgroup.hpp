#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cck/element_set.hpp"
#include "cck/group.hpp"

namespace cck {

/// A subgroup of a GroupTable together with cached structural flags.
struct SubgroupInfo {
  ElementSet carrier;
  std::vector<ElementId> generator_ids;
  std::size_t order = 0;
  bool is_normal = false;  // in the parent GroupTable
  bool is_cyclic = false;
  bool is_abelian = false;
  bool is_p_group = false;  // true for the trivial subgroup as well
  std::uint32_t prime = 0;  // 0 unless a nontrivial p-group

  bool contains(ElementId x) const { return carrier.contains(x); }
  bool is_trivial() const { return order == 1; }
  bool is_subgroup_of(const SubgroupInfo& o) const { return carrier.is_subset_of(o.carrier); }

  friend bool operator==(const SubgroupInfo& a, const SubgroupInfo& b) { return a.carrier == b.carrier; }
};

/// Incremental subgroup closure (Dimino's coset method). The carrier is a
/// subgroup after every call to add_generator.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const GroupTable& g);

  /// Returns false if x was already in the carrier.
  bool add_generator(ElementId x);
  void add_all(const ElementSet& s);

  const ElementSet& carrier() const { return carrier_; }
  const std::vector<ElementId>& elements() const { return elements_; }
  const std::vector<ElementId>& generators() const { return generators_; }
  SubgroupInfo finish() const;

 private:
  const GroupTable* g_;
  ElementSet carrier_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
};

/// Fills the flags of a subgroup given its carrier and a generating set.
SubgroupInfo describe_subgroup(const GroupTable& g, ElementSet carrier, std::vector<ElementId> gens);

SubgroupInfo whole_group(const GroupTable& g);
SubgroupInfo trivial_subgroup(const GroupTable& g);
SubgroupInfo subgroup_closure(const GroupTable& g, const ElementSet& s);
SubgroupInfo subgroup_generated(const GroupTable& g, std::span<const ElementId> gens);
SubgroupInfo cyclic_subgroup(const GroupTable& g, ElementId x);
SubgroupInfo join(const GroupTable& g, const SubgroupInfo& a, const SubgroupInfo& b);
SubgroupInfo intersect(const GroupTable& g, const SubgroupInfo& a, const SubgroupInfo& b);

/// Smallest normal subgroup of G containing s.
SubgroupInfo normal_closure(const GroupTable& g, const ElementSet& s);
/// Smallest subgroup containing s that is normalized by every element of h.
SubgroupInfo normal_closure_in(const GroupTable& g, const ElementSet& s, const SubgroupInfo& h);

/// <[k,h] : k in K, h in H> by exhaustive pair enumeration.
SubgroupInfo commutator_span(const GroupTable& g, const ElementSet& k, const ElementSet& h);
/// [A,B] for subgroups, computed from generators: the normal closure in
/// <A,B> of the commutators of generator pairs.
SubgroupInfo commutator_subgroup(const GroupTable& g, const SubgroupInfo& a, const SubgroupInfo& b);

bool is_normal_in(const GroupTable& g, const SubgroupInfo& n, const SubgroupInfo& h);
SubgroupInfo normalizer(const GroupTable& g, const SubgroupInfo& h);
/// Elements of `within` commuting with every element of s.
SubgroupInfo centralizer(const GroupTable& g, const SubgroupInfo& s, const SubgroupInfo& within);
SubgroupInfo center(const GroupTable& g, const SubgroupInfo& h);
/// Largest subgroup of h normal in G.
SubgroupInfo core(const GroupTable& g, const SubgroupInfo& h);
SubgroupInfo conjugate_subgroup(const GroupTable& g, const SubgroupInfo& h, ElementId x);

/// Conjugacy classes ordered by least element id; the identity class comes first.
std::vector<ElementSet> conjugacy_classes(const GroupTable& g);

struct QuotientGroup {
  GroupTable group;
  /// Element id of G -> element id of G/N.
  std::vector<ElementId> projection;
};

/// Regular representation of G/N on the cosets of N. Throws if N is not normal.
QuotientGroup quotient_group(const GroupTable& g, const SubgroupInfo& n);

/// Whether H/N is cyclic, for N normal in H. Throws if N is not normal in H.
bool is_cyclic_quotient(const GroupTable& g, const SubgroupInfo& h, const SubgroupInfo& n);
inline bool is_cyclic_quotient(const GroupTable& g, const SubgroupInfo& n) {
  return is_cyclic_quotient(g, whole_group(g), n);
}

/// Subgroup of G as a GroupTable in its own right, plus the embedding.
struct SubgroupTable {
  GroupTable group;
  std::vector<ElementId> embedding;  // id in subgroup -> id in G
};
SubgroupTable subgroup_as_group(const GroupTable& g, const SubgroupInfo& h);

/// Image in G of a subgroup of a quotient/subgroup table under an id map.
ElementSet preimage(const GroupTable& g, const std::vector<ElementId>& projection, const ElementSet& image);

}  // namespace cck
