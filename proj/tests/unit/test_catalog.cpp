#include <doctest.h>

#include <set>

#include "cck/catalog.hpp"
#include "cck/series.hpp"
#include "support.hpp"

using namespace cck;
using support::make;

TEST_CASE("builtin families have their textbook orders") {
  const std::vector<std::pair<const char*, std::size_t>> cases = {
      {"cyclic(1)", 1}, {"cyclic(9)", 9}, {"elementary_abelian(3,3)", 27}, {"dihedral(2)", 4},
      {"dihedral(7)", 14}, {"dicyclic(12)", 12}, {"generalized_quaternion(16)", 16}, {"symmetric(4)", 24},
      {"symmetric(6)", 720}, {"alternating(6)", 360}, {"alternating(3)", 3}, {"psl2(5)", 60}, {"psl2(7)", 168},
      {"psl2(2)", 6}, {"frobenius(7,3)", 21}, {"frobenius(5,1)", 5}, {"metacyclic(9,2)", 54}, {"sl2(3)", 24},
      {"sl2(5)", 120}, {"gl2(3)", 48}, {"gl2(2)", 6}, {"direct_product(symmetric(3),cyclic(4))", 24},
      {"direct_product(direct_product(cyclic(2),cyclic(2)),cyclic(2))", 8}, {"c3^2:q8", 72}, {"c2^3:c7:c3", 168}};
  for (auto [expr, order] : cases) {
    INFO(expr);
    const auto spec = builtin(expr);
    const auto g = build_group(spec);
    CHECK(g.order() == order);
    CHECK(check_hints(spec, g).empty());
  }
}

TEST_CASE("family examples") {
  const auto q8 = make("generalized_quaternion(8)");
  CHECK(q8.order() == 8);
  std::size_t involutions = 0;
  for (ElementId x = 0; x < q8.order(); ++x) involutions += q8.element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK(omega_1(q8, whole_group(q8), 2).order == 2);
  const auto f = make("frobenius(7,3)");
  CHECK(f.order() == 21);
  CHECK(fitting_height(f) == 2);
}

TEST_CASE("bad builtin parameters") {
  for (const char* bad : {"frobenius(7,4)", "frobenius(8,7)", "symmetric(7)", "psl2(11)", "cyclic(0)",
                          "dicyclic(10)", "generalized_quaternion(12)", "metacyclic(8,2)", "nosuch(3)",
                          "cyclic(3", "cyclic(3))", "direct_product(cyclic(2))", "sl2(7)"})
    CHECK_THROWS_AS(builtin(bad), Error);
}

TEST_CASE("group files") {
  const auto trivial = parse_group_file("group T\ndegree 1\nend");
  REQUIRE(trivial.size() == 1);
  CHECK(build_group(trivial[0]).order() == 1);

  const auto s3 = parse_group_file("# S3\r\ngroup S3\r\ndegree 3\r\n\r\ngen (1 2)\r\ngen (1 2 3)\r\nhint order=6\r\nend\r\n");
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].generators.size() == 2);
  CHECK(build_group(s3[0]).order() == 6);
  CHECK(s3[0].hints.at("order") == "6");

  auto error_line = [](const std::string& text) -> std::string {
    try {
      parse_group_file(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "";
  };
  CHECK(error_line("group A\ndegree 4\ngen (1 5)\nend\n").rfind("line 3:", 0) == 0);
  CHECK(error_line("group A\ndegree 1\nend\ngroup A\ndegree 1\nend\n").rfind("line 4:", 0) == 0);
  CHECK(error_line("group A\ngen (1 2)\ndegree 2\nend\n").rfind("line 2:", 0) == 0);
  CHECK(error_line("group A\ndegree 2\n").rfind("line 3:", 0) == 0);
  CHECK(error_line("degree 2\n").rfind("line 1:", 0) == 0);
  CHECK(error_line("group A\ndegree x\nend\n").rfind("line 2:", 0) == 0);
  CHECK(error_line("group A\ndegree 2\nfoo\nend\n").rfind("line 3:", 0) == 0);
  CHECK(error_line("group A\ndegree 2\nhint =3\nend\n").rfind("line 3:", 0) == 0);
  CHECK(error_line("group A\ndegree 2\nend\nend\n").rfind("line 4:", 0) == 0);
}

TEST_CASE("print and parse round trip") {
  const auto specs = default_catalog(200);
  const auto text = print_group_file(specs);
  CHECK(parse_group_file(text) == specs);
  CHECK(print_group_file(parse_group_file(text)) == text);
}

TEST_CASE("hint mismatches are reported") {
  auto spec = builtin("symmetric(3)");
  spec.hints["order"] = "7";
  spec.hints["fitting_height"] = "1";
  spec.hints["hall3"] = "(1 2)";
  spec.hints["bogus"] = "1";
  const auto issues = check_hints(spec, build_group(spec));
  CHECK(issues.size() == 3);
  auto good = builtin("symmetric(4)");
  good.hints["hall2"] = "(1 2 3)";
  CHECK(check_hints(good, build_group(good)).empty());
}

TEST_CASE("default catalog") {
  std::set<std::string> six;
  for (const auto& s : default_catalog(6)) six.insert(s.name);
  CHECK(six == std::set<std::string>{"cyclic(1)", "cyclic(2)", "cyclic(3)", "cyclic(4)", "cyclic(5)", "cyclic(6)",
                                     "symmetric(3)", "elementary_abelian(2,2)"});

  std::set<std::string> small;
  for (const auto& s : default_catalog(24)) small.insert(s.name);
  for (const char* name : {"symmetric(4)", "generalized_quaternion(8)", "dihedral(4)", "alternating(4)", "frobenius(7,3)"})
    CHECK(small.count(name));

  const auto full = default_catalog(200);
  CHECK(full.size() >= 40);
  std::set<std::string> names;
  bool odd_order_nonabelian = false, noncyclic_abelian_sylow = false;
  std::set<std::size_t> heights;
  for (const auto& spec : full) {
    INFO(spec.name);
    CHECK(names.insert(spec.name).second);
    const auto g = build_group(spec);
    CHECK(g.order() <= 200);
    CHECK(check_hints(spec, g).empty());
    if (is_soluble(g)) heights.insert(fitting_height(g));
    if (g.order() % 2 == 1 && !is_nilpotent(g).nilpotent) odd_order_nonabelian = true;
    for (auto p : g.primes()) {
      const auto s = sylow_subgroup(g, p);
      if (s.is_abelian && !s.is_cyclic && !is_nilpotent(g).nilpotent) noncyclic_abelian_sylow = true;
    }
  }
  CHECK(heights.count(1));
  CHECK(heights.count(2));
  CHECK(heights.count(3));
  CHECK(odd_order_nonabelian);
  CHECK(noncyclic_abelian_sylow);
}
