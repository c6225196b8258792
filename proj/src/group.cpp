#include "cck/group.hpp"

#include <algorithm>

namespace cck {

namespace {
constexpr std::size_t kTableLimit = 1024;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(static_cast<std::uint32_t>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

GroupTable GroupTable::from_generators(std::string name, std::vector<Permutation> gens,
                                       std::size_t degree, std::size_t order_cap) {
  if (order_cap < 1) throw Error("order cap must be at least 1");
  if (!gens.empty()) degree = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != degree) throw Error("generators have different degrees");
  if (degree == 0) throw Error("degree must be positive");

  GroupTable t;
  t.name_ = std::move(name);
  t.degree_ = degree;
  t.generators_ = std::move(gens);

  std::vector<Permutation> layer{Permutation::identity(degree)};
  t.index_.emplace(layer.front(), 0);
  t.elements_.push_back(layer.front());
  while (!layer.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : layer) {
      for (const auto& g : t.generators_) {
        Permutation y = x * g;
        if (t.index_.contains(y)) continue;
        // Provisional id; reassigned after the layer is sorted.
        t.index_.emplace(y, 0);
        next.push_back(std::move(y));
        if (t.elements_.size() + next.size() > order_cap)
          throw OrderCapExceeded(order_cap, t.elements_.size() + next.size());
      }
    }
    std::sort(next.begin(), next.end());
    for (auto& y : next) {
      t.index_[y] = static_cast<ElementId>(t.elements_.size());
      t.elements_.push_back(y);
    }
    layer = std::move(next);
  }
  t.finish();
  return t;
}

void GroupTable::finish() {
  const std::size_t n = elements_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = index_.at(elements_[a] * elements_[b]);
  }
  inverse_.resize(n);
  order_of_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = index_.at(elements_[a].inverse());
    order_of_[a] = static_cast<std::uint32_t>(elements_[a].order());
  }
  primes_ = prime_factors(n);
  prime_mask_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < primes_.size(); ++i)
      if (order_of_[a] % primes_[i] == 0) prime_mask_[a] |= std::uint64_t{1} << i;

  generator_ids_.clear();
  for (const auto& g : generators_) {
    ElementId id = index_.at(g);
    if (id != identity() && std::find(generator_ids_.begin(), generator_ids_.end(), id) == generator_ids_.end())
      generator_ids_.push_back(id);
  }
}

std::optional<ElementId> GroupTable::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupTable::id_of(const Permutation& p) const {
  auto id = find(p);
  if (!id) throw Error("permutation " + p.to_cycles() + " is not in group " + name_);
  return *id;
}

ElementId GroupTable::mul_slow(ElementId a, ElementId b) const {
  return index_.at(elements_[a] * elements_[b]);
}

ElementId GroupTable::pow(ElementId a, long long k) const {
  const long long n = order_of_[a];
  k %= n;
  if (k < 0) k += n;
  ElementId acc = identity();
  ElementId base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

ElementId GroupTable::left_normed_commutator(ElementId g, std::span<const ElementId> ys) const {
  for (ElementId y : ys) g = commutator(g, y);
  return g;
}

GroupTable group_from_generators(const std::vector<Permutation>& gens, std::size_t order_cap,
                                 std::size_t degree_if_empty) {
  return GroupTable::from_generators("", gens, degree_if_empty, order_cap);
}

std::uint32_t element_order(const GroupTable& g, ElementId x) { return g.element_order(x); }
ElementId commutator(const GroupTable& g, ElementId a, ElementId b) { return g.commutator(a, b); }
ElementId left_normed_commutator(const GroupTable& g, ElementId x, std::span<const ElementId> ys) {
  return g.left_normed_commutator(x, ys);
}

}  // namespace cck
