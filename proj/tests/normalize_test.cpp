#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "assoc/fgroup.hpp"
#include "assoc/normalize.hpp"
#include "oracles.hpp"

using namespace assoc;

namespace {

Word w(std::string_view text) { return parse_word(text); }

}  // namespace

TEST_CASE("word text round trips") {
  CHECK(word_to_string({}) == "-");
  CHECK(parse_word("-").empty());
  CHECK(parse_word("").empty());
  CHECK(word_to_string(w("a0 a0 A1 A0")) == "a0 a0 A1 A0");
  CHECK(parse_word("  a0   A3 ") == Word{alpha(0), alpha_inv(3)});
  CHECK_THROWS_AS(parse_word("a0 b1"), ParseError);
}

TEST_CASE("apply_word on the worked examples") {
  CHECK(render(apply_word(w("a0"), parse("(x*(x*x))"))) == "((x*x)*x)");
  const Expression e = parse("((x*x)*(x*x))");
  CHECK(apply_word({}, e) == e);
  CHECK(render(apply_word(w("a0 a0"), parse("(x*(x*(x*x)))"))) == "(((x*x)*x)*x)");
}

TEST_CASE("apply_word reports the failing position") {
  try {
    apply_word(w("a0 a5"), parse("(x*(x*x))"));
    FAIL("expected an inapplicable-move error");
  } catch (const InapplicableMove& m) {
    CHECK(m.word_position == 2);
    CHECK(std::string(m.what()).find("word position 2") != std::string::npos);
  }
}

TEST_CASE("normalize_word on the worked examples") {
  CHECK(normalize_word(parse("((x*x)*x)")).empty());
  CHECK(normalize_word(parse("(x*(x*x))")) == w("a0"));
  CHECK(normalize_word(parse("(x*((x*x)*x))")) == w("a0 a1"));
  CHECK(normalize_word(parse("(x*(x*(x*(x*x))))")) == w("a0 a0 a0"));
  CHECK(normalize_word(parse("x")).empty());
}

TEST_CASE("normalize_word reaches the left comb with non-decreasing indices") {
  for (int n = 1; n <= 10; ++n) {
    for (const Expression& e : enumerate_expressions(n)) {
      const Word word = normalize_word(e);
      CHECK(is_canonical_word(word));
      CHECK(apply_word(word, e) == left_comb(n));
      CHECK(word.size() <= static_cast<std::size_t>(testing::right_step_potential(e)));
      CHECK(word.size() <= static_cast<std::size_t>(n) * (n - 1) / 2);
    }
  }
}

TEST_CASE("normalize_word is the unique ordered word (search oracle)") {
  for (int n = 1; n <= 6; ++n) {
    for (const Expression& e : enumerate_expressions(n)) {
      const std::vector<Word> words = testing::ordered_words_to_comb(e);
      REQUIRE(words.size() == 1);
      CHECK(words[0] == normalize_word(e));
    }
  }
}

TEST_CASE("is_canonical_word") {
  CHECK(is_canonical_word(w("a0 a1")));
  CHECK(!is_canonical_word(w("a1 a0")));
  CHECK(!is_canonical_word(w("a0 A1")));
  CHECK(is_canonical_word({}));
  CHECK(is_canonical_word(w("a2 a2 a3")));
}

TEST_CASE("canonical_iso on the worked examples") {
  CHECK(canonical_iso(parse("(x*(x*x))"), parse("((x*x)*x)")) == w("a0"));
  CHECK(canonical_iso(parse("(x*(x*(x*x)))"), parse("(x*((x*x)*x))")) == w("a0 a0 A1 A0"));
  const Expression e = parse("(x*((x*x)*x))");
  const Word loop = canonical_iso(e, e);
  CHECK(free_reduce(loop).empty());
  CHECK(apply_word(loop, e) == e);
  CHECK_THROWS_AS(canonical_iso(parse("x"), parse("(x*x)")), LeafCountMismatch);
}

TEST_CASE("canonical_iso connects every same-size pair") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_expressions(n);
    for (const Expression& e : all) {
      for (const Expression& f : all) {
        CHECK(apply_word(canonical_iso(e, f), e) == f);
      }
    }
  }
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 7 + static_cast<int>(testing::pick(rng, 4));  // 7..10
    const auto all = enumerate_expressions(n);
    const Expression& e = all[testing::pick(rng, all.size())];
    const Expression& f = all[testing::pick(rng, all.size())];
    CHECK(apply_word(canonical_iso(e, f), e) == f);
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(w("a0 A0")).empty());
  CHECK(free_reduce(w("a0 a1 A1 a2")) == w("a0 a2"));
  CHECK(free_reduce(w("a0 a1")) == w("a0 a1"));
  CHECK(free_reduce(w("A3 a3 a3 A3")).empty());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Word word = testing::random_word(rng, 10, 4);
    CHECK(from_word(free_reduce(word)) == from_word(word));
  }
}

TEST_CASE("rewrite_positive on the worked examples") {
  CHECK(rewrite_positive(w("a1 a0")) == w("a0 a2"));
  CHECK(rewrite_positive(w("a0 a1")) == w("a0 a1"));
  CHECK(rewrite_positive(w("a2 a1 a0")) == w("a0 a2 a4"));
  CHECK(rewrite_positive({}).empty());
  CHECK_THROWS_AS(rewrite_positive(w("a0 A1")), Error);
}

TEST_CASE("rewrite_positive canonicalizes and preserves the group element") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const Word word = testing::random_positive_word(rng, 8, 5);
    const Word sorted = rewrite_positive(word);
    CHECK(is_canonical_word(sorted));
    CHECK(from_word(sorted) == from_word(word));
  }
}

TEST_CASE("inverse_word undoes apply_word") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const auto all = enumerate_expressions(6);
    const Expression& e = all[testing::pick(rng, all.size())];
    const Word path = testing::random_path(rng, e, 8);
    const Expression f = apply_word(path, e);
    CHECK(apply_word(inverse_word(path), f) == e);
  }
}
