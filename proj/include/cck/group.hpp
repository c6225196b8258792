#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cck/element_set.hpp"
#include "cck/permutation.hpp"

namespace cck {

inline constexpr std::size_t kDefaultOrderCap = 20000;

/// Raised when generator closure grows past the order cap.
class OrderCapExceeded : public Error {
 public:
  OrderCapExceeded(std::size_t cap, std::size_t partial)
      : Error("closure exceeds order cap " + std::to_string(cap) + " (enumerated " +
              std::to_string(partial) + " elements before aborting)"),
        cap_(cap),
        partial_(partial) {}
  std::size_t cap() const { return cap_; }
  std::size_t partial_count() const { return partial_; }

 private:
  std::size_t cap_;
  std::size_t partial_;
};

/// A fully enumerated permutation group. Immutable after construction.
///
/// Element ids follow breadth-first order by generator word length, with
/// each layer sorted lexicographically on image arrays; the identity is 0.
class GroupTable {
 public:
  GroupTable() = default;

  static GroupTable from_generators(std::string name, std::vector<Permutation> gens,
                                    std::size_t degree, std::size_t order_cap = kDefaultOrderCap);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }

  const std::vector<Permutation>& generators() const { return generators_; }
  /// Ids of the generators, duplicates and the identity removed.
  const std::vector<ElementId>& generator_ids() const { return generator_ids_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(ElementId x) const { return elements_[x]; }

  std::optional<ElementId> find(const Permutation& p) const;
  /// Throws Error if p is not an element.
  ElementId id_of(const Permutation& p) const;

  static constexpr ElementId identity() { return 0; }

  ElementId mul(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return mul_slow(a, b);
  }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId pow(ElementId a, long long k) const;
  /// x^g = g^-1 x g
  ElementId conj(ElementId x, ElementId g) const { return mul(mul(inv(g), x), g); }
  /// [a,b] = a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  /// [[...[g,y1],...],yk]; returns g for an empty list.
  ElementId left_normed_commutator(ElementId g, std::span<const ElementId> ys) const;

  std::uint32_t element_order(ElementId x) const { return order_of_[x]; }
  /// Primes dividing |G|, ascending.
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  /// Bit i set iff primes()[i] divides the order of x.
  std::uint64_t prime_mask(ElementId x) const { return prime_mask_[x]; }
  bool coprime(ElementId a, ElementId b) const { return (prime_mask_[a] & prime_mask_[b]) == 0; }

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet all() const { return ElementSet::full(order()); }
  ElementSet singleton(ElementId x) const {
    ElementSet s(order());
    s.insert(x);
    return s;
  }

 private:
  ElementId mul_slow(ElementId a, ElementId b) const;
  void finish();

  std::string name_;
  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint32_t> order_of_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint64_t> prime_mask_;
};

/// Closure of gens under composition; all generators must share one degree.
/// An empty generator list yields the trivial group of the given degree.
GroupTable group_from_generators(const std::vector<Permutation>& gens,
                                 std::size_t order_cap = kDefaultOrderCap,
                                 std::size_t degree_if_empty = 1);

std::uint32_t element_order(const GroupTable& g, ElementId x);
ElementId commutator(const GroupTable& g, ElementId a, ElementId b);
ElementId left_normed_commutator(const GroupTable& g, ElementId x, std::span<const ElementId> ys);

/// Prime factors of n, ascending, without multiplicity.
std::vector<std::uint32_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace cck
