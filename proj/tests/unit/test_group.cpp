#include <doctest.h>

#include <numeric>
#include <random>

#include "support.hpp"

using namespace cck;
using support::el;
using support::make;

TEST_CASE("closure of small generating sets") {
  auto s3 = group_from_generators({parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)});
  CHECK(s3.order() == 6);
  CHECK(group_from_generators({}).order() == 1);
  CHECK(group_from_generators({Permutation::identity(4)}).order() == 1);
  CHECK(group_from_generators({parse_permutation("(1 2 3 4)", 4), parse_permutation("(1 3)", 4)}).order() == 8);
  CHECK_THROWS_AS(group_from_generators({parse_permutation("(1 2)", 2), parse_permutation("(1 2 3)", 3)}), Error);
}

TEST_CASE("order cap aborts closure") {
  try {
    (void)build_group(builtin("symmetric(5)"), 50);
    FAIL("expected OrderCapExceeded");
  } catch (const OrderCapExceeded& e) {
    CHECK(e.cap() == 50);
    CHECK(e.partial_count() > 50);
  }
}

TEST_CASE("element orders and commutators") {
  const auto s4 = make("symmetric(4)");
  CHECK(element_order(s4, GroupTable::identity()) == 1);
  CHECK(element_order(s4, el(s4, "(1 2 3)")) == 3);
  CHECK(element_order(s4, el(s4, "(1 2)(3 4)")) == 2);

  const auto s3 = make("symmetric(3)");
  const auto x = el(s3, "(1 2)"), y = el(s3, "(1 2 3)");
  CHECK(commutator(s3, x, GroupTable::identity()) == GroupTable::identity());
  CHECK(commutator(s3, y, s3.pow(y, 2)) == GroupTable::identity());
  CHECK(element_order(s3, commutator(s3, x, y)) == 3);

  std::vector<ElementId> none;
  CHECK(left_normed_commutator(s4, 5, none) == 5u);
  const auto q8 = make("generalized_quaternion(8)");
  ElementId central = 0;
  for (ElementId g = 1; g < q8.order(); ++g)
    if (q8.element_order(g) == 2) central = g;
  std::vector<ElementId> ys{1, 2, 3};
  CHECK(left_normed_commutator(q8, central, ys) == GroupTable::identity());
  for (ElementId g = 0; g < s4.order(); ++g)
    for (ElementId h = 0; h < s4.order(); h += 5) {
      std::vector<ElementId> yy{h, h};
      CHECK(left_normed_commutator(s4, g, yy) == s4.commutator(s4.commutator(g, h), h));
    }
}

TEST_CASE("tables agree with permutation arithmetic on the catalog") {
  for (const auto& spec : default_catalog(200)) {
    INFO(spec.name);
    const auto g = build_group(spec);
    CHECK(g.element(GroupTable::identity()).is_identity());
    if (g.order() <= 48) CHECK(support::perms(g) == oracle::closure(g.generators(), g.degree()));
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
      const auto a = static_cast<ElementId>(rng() % g.order()), b = static_cast<ElementId>(rng() % g.order());
      CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
      CHECK(g.mul(a, g.inv(a)) == GroupTable::identity());
      CHECK(g.element_order(a) == oracle::order_of(g.element(a)));
      CHECK(g.inv(g.commutator(a, b)) == g.commutator(b, a));
      CHECK((g.commutator(a, b) == 0) == (g.mul(a, b) == g.mul(b, a)));
      CHECK(g.coprime(a, b) == (std::gcd(g.element_order(a), g.element_order(b)) == 1));
    }
  }
}

TEST_CASE("large groups use the hashed product") {
  const auto g = make("direct_product(symmetric(5),symmetric(4))");
  CHECK(g.order() == 2880);
  std::mt19937 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto a = static_cast<ElementId>(rng() % g.order()), b = static_cast<ElementId>(rng() % g.order());
    CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
  }
}

TEST_CASE("canonical ordering is reproducible") {
  for (const char* name : {"symmetric(4)", "c3^2:q8", "psl2(7)"}) {
    const auto a = make(name), b = make(name);
    CHECK(a.elements() == b.elements());
    // identity first, then generators' layer sorted by images
    CHECK(a.element(0).is_identity());
  }
}

TEST_CASE("number theory helpers") {
  CHECK(prime_factors(360) == std::vector<std::uint32_t>{2, 3, 5});
  CHECK(prime_factors(1).empty());
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(p_part(360, 2) == 8);
  CHECK(p_part(360, 7) == 1);
}
