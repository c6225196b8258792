#include "cck/star_kernels.hpp"

#include <vector>

namespace cck::kernels {

namespace {
constexpr std::size_t kParallelPairThreshold = std::size_t{1} << 12;
}

ElementSet coprime_commutators_serial(const GroupTable& g, std::span<const ElementId> left,
                                      std::span<const ElementId> right) {
  ElementSet out(g.order());
  for (ElementId a : left)
    for (ElementId b : right)
      if (g.coprime(a, b)) out.insert(g.commutator(a, b));
  return out;
}

ElementSet coprime_commutators_omp(const GroupTable& g, std::span<const ElementId> left,
                                   std::span<const ElementId> right) {
  // Group the right operands by prime mask so each a only visits
  // buckets with a disjoint mask.
  const std::size_t masks = std::size_t{1} << g.primes().size();
  std::vector<std::vector<ElementId>> buckets(masks);
  for (ElementId b : right) buckets[g.prime_mask(b)].push_back(b);

  ElementSet out(g.order());
  const auto n = static_cast<std::ptrdiff_t>(left.size());
#pragma omp parallel
  {
    ElementSet local(g.order());
#pragma omp for schedule(dynamic, 8) nowait
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const ElementId a = left[static_cast<std::size_t>(i)];
      const ElementId a_inv = g.inv(a);
      const std::uint64_t ma = g.prime_mask(a);
      for (std::size_t m = 0; m < masks; ++m) {
        if (m & ma) continue;
        for (ElementId b : buckets[m]) local.insert(g.mul(g.mul(a_inv, g.inv(b)), g.mul(a, b)));
      }
    }
#pragma omp critical(cck_star_merge)
    out |= local;
  }
  return out;
}

ElementSet coprime_commutators(const GroupTable& g, std::span<const ElementId> left,
                               std::span<const ElementId> right) {
  if (left.size() * right.size() < kParallelPairThreshold)
    return coprime_commutators_serial(g, left, right);
  return coprime_commutators_omp(g, left, right);
}

}  // namespace cck::kernels
