#include <doctest.h>

#include <random>
#include <set>

#include "cck/element_set.hpp"
#include "cck/permutation.hpp"

using cck::ElementSet;

TEST_CASE("basic membership") {
  ElementSet s(70, {0, 5, 69});
  CHECK(s.count() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(68));
  CHECK(s.add(68));
  CHECK_FALSE(s.add(68));
  s.erase(0);
  CHECK(s.ids() == std::vector<cck::ElementId>{5, 68, 69});
  CHECK(ElementSet(70).empty());
  CHECK(ElementSet::full(70).count() == 70);
  CHECK(s.complement().count() == 67);
}

TEST_CASE("set algebra agrees with std::set") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    ElementSet a(n), b(n);
    std::set<cck::ElementId> sa, sb;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 3 == 0) a.insert(static_cast<cck::ElementId>(i)), sa.insert(static_cast<cck::ElementId>(i));
      if (rng() % 2 == 0) b.insert(static_cast<cck::ElementId>(i)), sb.insert(static_cast<cck::ElementId>(i));
    }
    std::set<cck::ElementId> u, x, d;
    std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(u, u.end()));
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(x, x.end()));
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(d, d.end()));
    auto as_vec = [](const std::set<cck::ElementId>& s) { return std::vector<cck::ElementId>(s.begin(), s.end()); };
    CHECK((a | b).ids() == as_vec(u));
    CHECK((a & b).ids() == as_vec(x));
    CHECK((a - b).ids() == as_vec(d));
    CHECK(a.intersects(b) == !x.empty());
    CHECK((a & b).is_subset_of(a));
    CHECK((a.complement().count() + a.count()) == n);
    CHECK(a.complement().complement() == a);
    std::vector<cck::ElementId> seen;
    a.for_each([&](cck::ElementId i) { seen.push_back(i); });
    CHECK(seen == as_vec(sa));
  }
}

TEST_CASE("mixing universes throws") {
  ElementSet a(10), b(11);
  CHECK_THROWS_AS(a |= b, cck::Error);
  CHECK_THROWS_AS((void)a.is_subset_of(b), cck::Error);
}
