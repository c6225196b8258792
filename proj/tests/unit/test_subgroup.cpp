#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cck/cover.hpp"
#include "cck/series.hpp"
#include "cck/subgroup.hpp"
#include "support.hpp"

using namespace cck;
using support::el;
using support::make;
using support::perms;

namespace {

ElementSet set_of(const GroupTable& g, std::initializer_list<const char*> cycles) {
  ElementSet s = g.empty_set();
  for (auto c : cycles) s.insert(el(g, c));
  return s;
}

std::vector<std::size_t> sorted_sizes(const std::vector<ElementSet>& cls) {
  std::vector<std::size_t> out;
  for (const auto& c : cls) out.push_back(c.count());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("closures") {
  const auto s3 = make("symmetric(3)");
  CHECK(subgroup_closure(s3, s3.singleton(0)).is_trivial());
  const auto a3 = subgroup_closure(s3, set_of(s3, {"(1 2 3)"}));
  CHECK(a3.order == 3);
  CHECK(a3.is_cyclic);
  CHECK(a3.is_normal);

  const auto s4 = make("symmetric(4)");
  ElementSet threes = s4.empty_set();
  for (ElementId x = 0; x < s4.order(); ++x)
    if (s4.element_order(x) == 3) threes.insert(x);
  const auto a4 = subgroup_closure(s4, threes);
  CHECK(a4.order == 12);
  CHECK_FALSE(a4.is_abelian);

  CHECK(normal_closure(s3, s3.singleton(0)).is_trivial());
  CHECK(normal_closure(s3, set_of(s3, {"(1 2)"})).order == 6);
  const auto v4 = normal_closure(s4, set_of(s4, {"(1 2)(3 4)"}));
  CHECK(v4.order == 4);
  CHECK(v4.is_abelian);
  CHECK_FALSE(v4.is_cyclic);
}

TEST_CASE("commutator spans") {
  const auto s3 = make("symmetric(3)");
  const auto g = whole_group(s3);
  CHECK(commutator_span(s3, center(s3, g).carrier, s3.all()).is_trivial());
  CHECK(commutator_span(s3, s3.all(), s3.all()).order == 3);
  const auto a3 = subgroup_closure(s3, set_of(s3, {"(1 2 3)"}));
  CHECK(commutator_span(s3, a3.carrier, set_of(s3, {"(1 2)"})) == a3);
}

TEST_CASE("class structure") {
  CHECK(sorted_sizes(conjugacy_classes(make("symmetric(3)"))) == std::vector<std::size_t>{1, 2, 3});
  CHECK(sorted_sizes(conjugacy_classes(make("symmetric(4)"))) == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(conjugacy_classes(make("cyclic(12)")).size() == 12);
}

TEST_CASE("quotients") {
  const auto s4 = make("symmetric(4)");
  const auto v4 = normal_closure(s4, set_of(s4, {"(1 2)(3 4)"}));
  const auto q = quotient_group(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK(q.group.primes() == std::vector<std::uint32_t>{2, 3});
  CHECK(quotient_group(s4, whole_group(s4)).group.order() == 1);
  CHECK(quotient_group(s4, trivial_subgroup(s4)).group.order() == 24);
  CHECK_THROWS_AS(quotient_group(s4, cyclic_subgroup(s4, el(s4, "(1 2)"))), Error);

  const auto q8 = make("generalized_quaternion(8)");
  const auto z = center(q8, whole_group(q8));
  CHECK(z.order == 2);
  CHECK_FALSE(is_cyclic_quotient(q8, z));
  CHECK(is_cyclic_quotient(q8, whole_group(q8)));
  for (ElementId x = 0; x < q8.order(); ++x)
    if (q8.element_order(x) == 4) CHECK(is_cyclic_quotient(q8, cyclic_subgroup(q8, x)));
}

TEST_CASE("projection is a homomorphism on every catalog quotient") {
  for (const auto& spec : default_catalog(200)) {
    INFO(spec.name);
    const auto g = build_group(spec);
    for (const auto& n : normal_subgroups(g).subgroups) {
      const auto q = quotient_group(g, n);
      CHECK(q.group.order() * n.order == g.order());
      bool hom = true;
      for (ElementId x = 0; x < g.order() && hom; ++x)
        for (ElementId y = 0; y < g.order() && hom; ++y)
          hom = q.projection[g.mul(x, y)] == q.group.mul(q.projection[x], q.projection[y]);
      CHECK(hom);
      if (g.order() > 60) break;  // one nontrivial quotient is enough for the big ones
    }
  }
}

TEST_CASE("lattice and classes against class-union search") {
  std::size_t compared = 0;
  for (const auto& spec : default_catalog(200)) {
    INFO(spec.name);
    const auto g = build_group(spec);
    const auto all = perms(g);

    const auto classes = conjugacy_classes(g);
    std::size_t total = 0;
    for (const auto& c : classes) {
      total += c.count();
      CHECK(g.order() % c.count() == 0);
    }
    CHECK(total == g.order());
    if (g.order() <= 60) {
      std::set<oracle::PermSet> mine, theirs;
      for (const auto& c : classes) mine.insert(perms(g, c));
      for (const auto& c : oracle::conjugacy_classes(all)) theirs.insert(c);
      CHECK(mine == theirs);
    }

    const auto lattice = normal_subgroups(g);
    CHECK(lattice.exhaustive);
    for (const auto& n : lattice.subgroups) CHECK(n.is_normal);
    if (g.order() > 72) continue;
    const auto oracle_normals = oracle::normal_subgroups(all, 16);
    if (!oracle_normals) continue;
    std::set<oracle::PermSet> mine, theirs(oracle_normals->begin(), oracle_normals->end());
    for (const auto& n : lattice.subgroups) mine.insert(perms(g, n.carrier));
    CHECK(mine == theirs);
    ++compared;
  }
  CHECK(compared >= 40);
}

TEST_CASE("closure laws on random subsets") {
  std::mt19937 rng(17);
  for (const char* name : {"symmetric(4)", "c3^2:q8", "direct_product(generalized_quaternion(8),symmetric(3))",
                           "frobenius(7,6)", "psl2(7)"}) {
    INFO(name);
    const auto g = make(name);
    for (int t = 0; t < 30; ++t) {
      ElementSet s = g.empty_set(), s2 = g.empty_set();
      for (int k = 0; k < 2; ++k) s.insert(static_cast<ElementId>(rng() % g.order()));
      s2 = s;
      s2.insert(static_cast<ElementId>(rng() % g.order()));
      const auto h = subgroup_closure(g, s);
      CHECK(g.order() % h.order == 0);
      CHECK(h.carrier.count() == h.order);
      CHECK(subgroup_closure(g, h.carrier) == h);
      CHECK(h.is_subgroup_of(subgroup_closure(g, s2)));
      CHECK(perms(g, h.carrier) == oracle::generated(perms(g, s), support::identity_of(g)));

      // structural helpers against direct definitions
      const auto whole = whole_group(g);
      const auto cent = centralizer(g, h, whole);
      for (ElementId x = 0; x < g.order(); ++x) {
        bool commutes = true;
        h.carrier.for_each([&](ElementId y) { commutes = commutes && g.mul(x, y) == g.mul(y, x); });
        CHECK(cent.contains(x) == commutes);
      }
      const auto nh = normalizer(g, h);
      CHECK(h.is_subgroup_of(nh));
      for (ElementId x = 0; x < g.order(); ++x)
        CHECK(nh.contains(x) == (conjugate_subgroup(g, h, x) == h));
      const auto k = core(g, h);
      CHECK(k.is_normal);
      CHECK(k.is_subgroup_of(h));
      CHECK(is_normal_in(g, h, nh));

      const auto other = cyclic_subgroup(g, static_cast<ElementId>(rng() % g.order()));
      CHECK(commutator_subgroup(g, h, other) == commutator_span(g, h.carrier, other.carrier));
      CHECK(join(g, h, other) == subgroup_closure(g, h.carrier | other.carrier));
      CHECK(intersect(g, h, other).carrier == (h.carrier & other.carrier));
    }
  }
}

TEST_CASE("subgroup tables") {
  const auto s4 = make("symmetric(4)");
  const auto a4 = normal_closure(s4, s4.singleton(el(s4, "(1 2 3)")));
  const auto t = subgroup_as_group(s4, a4);
  CHECK(t.group.order() == 12);
  ElementSet back = s4.empty_set();
  for (auto x : t.embedding) back.insert(x);
  CHECK(back == a4.carrier);
}

TEST_CASE("cyclic subgroups match the power-set enumeration") {
  for (const auto& spec : default_catalog(48)) {
    INFO(spec.name);
    const auto g = build_group(spec);
    const auto mine = cyclic_subgroups(g, false);
    CHECK(mine.size() == oracle::cyclic_subgroups(perms(g)).size());
    for (const auto& c : mine) CHECK(c.is_cyclic);
  }
  CHECK(cyclic_subgroups(make("cyclic(12)"), false).size() == 6);
  CHECK(cyclic_subgroups(make("cyclic(12)"), true).size() == 1);
  CHECK(cyclic_subgroups(make("elementary_abelian(2,2)"), true).size() == 3);
  const auto q8max = cyclic_subgroups(make("generalized_quaternion(8)"), true);
  CHECK(q8max.size() == 3);
  for (const auto& c : q8max) CHECK(c.order == 4);
}
