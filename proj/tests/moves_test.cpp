#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "assoc/fgroup.hpp"
#include "assoc/moves.hpp"
#include "oracles.hpp"

using namespace assoc;

TEST_CASE("can_apply on the worked examples") {
  CHECK(can_apply(0, parse("(x*(x*x))")));
  CHECK(!can_apply(0, parse("((x*x)*x)")));
  CHECK(can_apply(1, parse("((x*(x*x))*x)")));
  CHECK(!can_apply(0, parse("x")));
  CHECK(!can_apply(-1, parse("(x*(x*x))")));
  CHECK(!can_apply(5, parse("(x*(x*x))")));
}

TEST_CASE("apply_alpha reproduces the displayed rotations") {
  CHECK(render(apply_alpha(0, parse("(x*(x*x))"))) == "((x*x)*x)");
  CHECK(render(apply_alpha(0, parse("((x*x)*(x*x))"))) == "(((x*x)*x)*x)");
  CHECK(render(apply_alpha(0, parse("(x*((x*x)*x))"))) == "((x*(x*x))*x)");
  CHECK(render(apply_alpha(1, parse("((x*(x*x))*x)"))) == "(((x*x)*x)*x)");
}

TEST_CASE("apply_alpha rejects inapplicable moves with a reason") {
  CHECK_THROWS_AS(apply_alpha(0, parse("((x*x)*x)")), InapplicableMove);
  CHECK_THROWS_AS(apply_alpha(2, parse("(x*x)")), InapplicableMove);
  try {
    apply_alpha(0, parse("((x*x)*x)"));
    FAIL("expected an inapplicable-move error");
  } catch (const InapplicableMove& m) {
    CHECK(std::string(m.what()).find("right child") != std::string::npos);
  }
  try {
    apply_alpha(3, parse("(x*x)"));
    FAIL("expected an inapplicable-move error");
  } catch (const InapplicableMove& m) {
    CHECK(std::string(m.what()).find("no internal node") != std::string::npos);
  }
}

TEST_CASE("apply_alpha_inv on the worked examples") {
  CHECK(render(apply_alpha_inv(0, parse("((x*x)*x)"))) == "(x*(x*x))");
  CHECK_THROWS_AS(apply_alpha_inv(0, parse("(x*(x*x))")), InapplicableMove);
  CHECK(render(apply_alpha_inv(1, parse("(((x*x)*x)*x)"))) == "((x*(x*x))*x)");
}

TEST_CASE("alpha and its inverse undo each other wherever defined") {
  for (int n = 1; n <= 7; ++n) {
    for (const Expression& e : enumerate_expressions(n)) {
      for (int i = 0; i <= n; ++i) {
        if (can_apply(i, e)) {
          const Expression forward = apply_alpha(i, e);
          CHECK(can_apply_inv(i, forward));
          CHECK(apply_alpha_inv(i, forward) == e);
        }
        if (can_apply_inv(i, e)) {
          const Expression back = apply_alpha_inv(i, e);
          CHECK(can_apply(i, back));
          CHECK(apply_alpha(i, back) == e);
        }
      }
    }
  }
}

TEST_CASE("moves preserve the leaf count") {
  for (int n = 1; n <= 7; ++n) {
    for (const Expression& e : enumerate_expressions(n)) {
      for (int i = 0; i <= n; ++i) {
        if (!can_apply(i, e)) continue;
        CHECK(apply_alpha(i, e).leaf_count() == n);
      }
    }
  }
}

TEST_CASE("rotate_at on the worked examples") {
  CHECK(render(rotate_at(parse("(x*(x*(x*x)))"), NodeAddress::parse("R"))) == "(x*((x*x)*x))");
  CHECK(render(rotate_at(parse("(x*(x*x))"), NodeAddress::root())) == "((x*x)*x)");
  CHECK_THROWS_AS(rotate_at(parse("((x*x)*x)"), NodeAddress::root()), InapplicableMove);
  CHECK_THROWS_AS(rotate_at(parse("(x*x)"), NodeAddress::parse("LL")), InvalidAddress);
  CHECK_THROWS_AS(rotate_at(parse("(x*(x*x))"), NodeAddress::parse("L")), InapplicableMove);
}

TEST_CASE("rotate_at along the left spine is the alpha move") {
  for (int n = 1; n <= 6; ++n) {
    for (const Expression& e : enumerate_expressions(n)) {
      for (int i = 0; i <= n; ++i) {
        if (!can_apply(i, e)) continue;
        CHECK(rotate_at(e, NodeAddress::left_spine(i)) == apply_alpha(i, e));
      }
    }
  }
}

TEST_CASE("rotation_sites lists every applicable rotation") {
  const Expression e = parse("(x*(x*(x*x)))");
  const std::vector<NodeAddress> sites = rotation_sites(e);
  REQUIRE(sites.size() == 2);
  CHECK(sites[0] == NodeAddress::root());
  CHECK(sites[1] == NodeAddress::parse("R"));
  CHECK(rotation_sites(left_comb(5)).empty());
  for (int n = 1; n <= 6; ++n) {
    for (const Expression& expr : enumerate_expressions(n)) {
      for (const NodeAddress& a : rotation_sites(expr)) {
        CHECK_NOTHROW(rotate_at(expr, a));
      }
    }
  }
}

TEST_CASE("generator templates") {
  auto [s0, t0] = generator_template(0);
  CHECK(render(s0) == "(x*(x*x))");
  CHECK(render(t0) == "((x*x)*x)");
  auto [s1, t1] = generator_template(1);
  CHECK(render(s1) == "((x*(x*x))*x)");
  CHECK(render(t1) == "(((x*x)*x)*x)");
  auto [s2, t2] = generator_template(2);
  CHECK(render(s2) == "(((x*(x*x))*x)*x)");
  CHECK(render(t2) == "((((x*x)*x)*x)*x)");
  CHECK_THROWS_AS(generator_template(-1), Error);
}

TEST_CASE("every move instance reduces to its generator template") {
  for (int n = 1; n <= 6; ++n) {
    for (const Expression& e : enumerate_expressions(n)) {
      for (int i = 0; i <= n; ++i) {
        if (!can_apply(i, e)) continue;
        auto [source, target] = generator_template(i);
        CHECK(reduce_pair(TreePair(e, apply_alpha(i, e))) == TreePair(source, target));
      }
    }
  }
}

TEST_CASE("letters parse and print") {
  CHECK(to_string(alpha(0)) == "a0");
  CHECK(to_string(alpha_inv(3)) == "A3");
  CHECK(parse_letter("a12") == alpha(12));
  CHECK(parse_letter("A0") == alpha_inv(0));
  CHECK(inverse(alpha(2)) == alpha_inv(2));
  CHECK(inverse(alpha_inv(2)) == alpha(2));
  CHECK_THROWS_AS(parse_letter("b0"), ParseError);
  CHECK_THROWS_AS(parse_letter("a"), ParseError);
  CHECK_THROWS_AS(parse_letter("a1x"), ParseError);
  CHECK_THROWS_AS(parse_letter(""), ParseError);
}
