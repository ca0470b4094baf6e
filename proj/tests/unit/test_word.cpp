#include <random>

#include "doctest.h"
#include "threepage/word.hpp"

using namespace threepage;

namespace {
Word randomWord(std::mt19937& rng, int maxLen) {
  std::uniform_int_distribution<int> len(0, maxLen), code(0, 14);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) w.push(Letter{static_cast<std::uint8_t>(code(rng))});
  return w;
}
}  // namespace

TEST_CASE("letters cover the 15-letter alphabet") {
  int distinct = 0;
  for (int k = 0; k < 5; ++k)
    for (int p = 0; p < 3; ++p) {
      Letter l = Letter::make(static_cast<Kind>(k), p);
      CHECK(l.kind() == static_cast<Kind>(k));
      CHECK(l.page() == p);
      ++distinct;
    }
  CHECK(distinct == 15);
}

TEST_CASE("page arithmetic is mod 3") {
  for (int p = 0; p < 3; ++p) {
    CHECK(pageAdd(pageAdd(p, 1), 1) == pageAdd(p, -1));
    CHECK(pageAdd(pageAdd(p, -1), -1) == pageAdd(p, 1));
  }
}

TEST_CASE("parse and format") {
  CHECK(Word::parse("a0 b1 x2").str() == "a0 b1 x2");
  CHECK(Word::parse("a0b1x2").str() == "a0 b1 x2");
  CHECK(Word::parse("1").str() == "1");
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("a0 a1 b2 b0 x0 b2 d2 c1 c2").size() == 9);
  CHECK(Word::parse(" a0   c0 ").str() == "a0 c0");
  CHECK(lw(Kind::X, 1).str() == "x1");
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(Word::parse("a3"), ParseError);
  CHECK_THROWS_AS(Word::parse("q0"), ParseError);
  CHECK_THROWS_AS(Word::parse("a"), ParseError);
  CHECK_THROWS_AS(Word::parse("a0 1"), ParseError);
  try {
    Word::parse("a0 e1");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  try {
    Word::parse("a0 b9");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("round trip on random words") {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 500; ++t) {
    Word w = randomWord(rng, 40);
    CHECK(Word::parse(w.str()) == w);
  }
}

TEST_CASE("count_x") {
  CHECK(Word::parse("a0 a1 b2 b0 x0 b2 d2 c1 c2").countX() == 1);
  CHECK(Word{}.countX() == 0);
  CHECK(Word::parse("x0 x1 x2").countX() == 3);
}

TEST_CASE("count_x is additive under concatenation") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Word a = randomWord(rng, 20), b = randomWord(rng, 20);
    CHECK((a + b).countX() == a.countX() + b.countX());
  }
}

TEST_CASE("replace and occurrences") {
  Word w = Word::parse("a0 b1 a0 b1");
  Word pat = Word::parse("a0 b1");
  auto occ = w.occurrences(pat);
  REQUIRE(occ.size() == 2);
  CHECK(occ[0] == 0);
  CHECK(occ[1] == 2);
  CHECK(w.replaced(2, 2, Word::parse("x2")).str() == "a0 b1 x2");
  CHECK(w.occurrences(Word{}).size() == w.size() + 1);
}
