#pragma once

#include <span>

#include "cck/element_set.hpp"
#include "cck/group.hpp"

namespace cck::kernels {

/// { [a,b] : a in left, b in right, gcd(|a|,|b|) = 1 }.
///
/// The serial version is the plain double loop and serves as the
/// reference; the OpenMP version buckets `right` by order-prime mask,
/// splits `left` across threads and merges per-thread sets by union.
ElementSet coprime_commutators_serial(const GroupTable& g, std::span<const ElementId> left,
                                      std::span<const ElementId> right);
ElementSet coprime_commutators_omp(const GroupTable& g, std::span<const ElementId> left,
                                   std::span<const ElementId> right);

/// Uses the OpenMP kernel once the pair count is large enough to pay for
/// the bucketing and the parallel region.
ElementSet coprime_commutators(const GroupTable& g, std::span<const ElementId> left,
                               std::span<const ElementId> right);

}  // namespace cck::kernels
