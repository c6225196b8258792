#include <doctest.h>

#include "cck/series.hpp"
#include "support.hpp"

using namespace cck;
using support::make;
using support::perms;

namespace {

std::vector<std::size_t> orders(const SeriesReport& r) {
  std::vector<std::size_t> out;
  for (const auto& t : r.terms) out.push_back(t.order);
  return out;
}

std::size_t order_of_join(const GroupTable& g, const SubgroupInfo& a, const SubgroupInfo& b) {
  return join(g, a, b).order;
}

}  // namespace

TEST_CASE("lower central and derived series") {
  CHECK(gamma_infinity(make("dihedral(4)")).is_trivial());
  CHECK(gamma_infinity(make("symmetric(3)")).order == 3);
  const auto s4 = make("symmetric(4)");
  CHECK(gamma_infinity(s4).order == 12);
  const auto lcs = lower_central_series(s4);
  CHECK(lcs.terms.at(1).order == 12);
  CHECK(lcs.last().order == 12);

  CHECK(derived_series(make("cyclic(6)")).terms.at(1).is_trivial());
  CHECK(orders(derived_series(s4)) == std::vector<std::size_t>{24, 12, 4, 1});
  CHECK(is_soluble(s4));
  CHECK_FALSE(is_soluble(make("alternating(5)")));
}

TEST_CASE("upper central series and nilpotency") {
  const auto d4 = make("dihedral(4)");
  CHECK(hypercenter(d4).order == 8);
  CHECK(hypercenter(make("symmetric(3)")).is_trivial());
  CHECK(hypercenter(make("direct_product(generalized_quaternion(8),symmetric(3))")).order == 8);

  const auto c12 = is_nilpotent(make("cyclic(12)"));
  CHECK(c12.nilpotent);
  CHECK(c12.nilpotency_class == 1);
  const auto nd4 = is_nilpotent(d4);
  CHECK(nd4.nilpotent);
  CHECK(nd4.nilpotency_class == 2);
  CHECK_FALSE(is_nilpotent(make("symmetric(3)")).nilpotent);
  CHECK(is_nilpotent(make("generalized_quaternion(16)")).nilpotency_class == 3);
}

TEST_CASE("Fitting subgroup and height") {
  CHECK(fitting_subgroup(make("dihedral(4)")).order == 8);
  CHECK(fitting_subgroup(make("symmetric(4)")).order == 4);
  CHECK(fitting_subgroup(make("symmetric(3)")).order == 3);
  CHECK(fitting_height(make("cyclic(1)")) == 0);
  CHECK(fitting_height(make("symmetric(3)")) == 2);
  CHECK(fitting_height(make("dihedral(4)")) == 1);
  CHECK(fitting_height(make("symmetric(4)")) == 3);
  CHECK(fitting_height(make("frobenius(7,3)")) == 2);
  CHECK_THROWS_AS(fitting_height(make("alternating(5)")), Error);
}

TEST_CASE("Sylow and Hall subgroups") {
  CHECK(sylow_subgroup(make("cyclic(12)"), 2).order == 4);
  const auto s4 = make("symmetric(4)");
  const auto p2 = sylow_subgroup(s4, 2);
  CHECK(p2.order == 8);
  CHECK_FALSE(p2.is_abelian);
  CHECK(sylow_subgroup(make("symmetric(3)"), 3).order == 3);
  CHECK(sylow_subgroup(s4, 5).is_trivial());

  const auto h = hall_p_prime_subgroup(make("symmetric(3)"), 3);
  REQUIRE(h);
  CHECK(h->order == 2);
  CHECK(hall_p_prime_subgroup(s4, 2)->order == 3);
  CHECK(hall_p_prime_subgroup(make("dihedral(4)"), 3)->order == 8);
  CHECK_THROWS_AS(hall_p_prime_subgroup(make("alternating(5)"), 2), Error);
}

TEST_CASE("Omega_1 and Frattini") {
  const auto e = make("elementary_abelian(2,3)");
  CHECK(omega_1(e, whole_group(e), 2).order == 8);
  CHECK(frattini_p(e, whole_group(e), 2).is_trivial());
  const auto c4 = make("cyclic(4)");
  CHECK(omega_1(c4, whole_group(c4), 2).order == 2);
  const auto q8 = make("generalized_quaternion(8)");
  CHECK(omega_1(q8, whole_group(q8), 2).order == 2);
  const auto c8 = make("cyclic(8)");
  CHECK(frattini_p(c8, whole_group(c8), 2).order == 4);
  const auto d4 = make("dihedral(4)");
  CHECK(frattini_p(d4, whole_group(d4), 2).order == 2);
  CHECK_THROWS_AS(omega_1(make("symmetric(3)"), whole_group(make("symmetric(3)")), 2), Error);
}

TEST_CASE("normal subgroup examples") {
  CHECK(normal_subgroups(make("cyclic(7)")).subgroups.size() == 2);
  std::vector<std::size_t> s4;
  for (const auto& n : normal_subgroups(make("symmetric(4)")).subgroups) s4.push_back(n.order);
  CHECK(s4 == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(normal_subgroups(make("generalized_quaternion(8)")).subgroups.size() == 6);
  NormalSubgroupOptions tight;
  tight.lattice_cap = 10;
  CHECK_FALSE(normal_subgroups(make("elementary_abelian(2,4)"), tight).exhaustive);
}

TEST_CASE("series properties over the catalog") {
  for (const auto& spec : default_catalog(200)) {
    INFO(spec.name);
    const auto g = build_group(spec);
    const auto whole = whole_group(g);
    const auto gi = gamma_infinity(g);
    const auto nil = is_nilpotent(g);
    CHECK(gi.is_trivial() == nil.nilpotent);
    CHECK(commutator_subgroup(g, gi, whole) == gi);
    const auto z = hypercenter(g);
    CHECK((z.order == g.order()) == nil.nilpotent);
    if (order_of_join(g, gi, z) != g.order()) CHECK_FALSE(nil.nilpotent);

    const auto f = fitting_subgroup(g);
    CHECK(f.is_normal);
    CHECK(is_nilpotent(g, f).nilpotent);
    const auto lattice = normal_subgroups(g);
    for (const auto& n : lattice.subgroups)
      if (is_nilpotent(g, n).nilpotent) CHECK(n.is_subgroup_of(f));

    for (auto p : g.primes()) {
      const auto s1 = sylow_subgroup(g, p), s2 = sylow_subgroup(g, p);
      CHECK(s1.order == p_part(g.order(), p));
      CHECK(s1.order == s2.order);
      CHECK(s1.is_p_group);
      CHECK(largest_normal_p_subgroup(g, p).is_subgroup_of(s1));
    }

    const bool sol = is_soluble(g);
    if (g.order() <= 60) {
      const auto id = support::identity_of(g);
      const auto all = perms(g);
      CHECK(sol == oracle::is_soluble(all, id));
      CHECK(nil.nilpotent == oracle::is_nilpotent(all, id));
      CHECK(perms(g, gi.carrier) == oracle::gamma_infinity(all, id));
      const auto lcs = lower_central_series(g);
      oracle::PermSet term = all;
      for (const auto& t : lcs.terms) {
        CHECK(perms(g, t.carrier) == term);
        term = oracle::commutator_group(term, all, id);
      }
    }
    if (!sol) continue;
    const auto fh = fitting_height(g);
    if (g.order() > 1) {
      const auto q = quotient_group(g, f);
      CHECK(fitting_height(q.group) + 1 == fh);
    }
    for (auto p : g.primes()) {
      const auto h = hall_p_prime_subgroup(g, p);
      REQUIRE(h);
      CHECK(h->order * p_part(g.order(), p) == g.order());
    }
    if (g.order() <= 48) {
      const auto all = perms(g);
      if (auto normals = oracle::normal_subgroups(all, 16)) CHECK(oracle::fitting_height(all, *normals) == fh);
    }
  }
}
