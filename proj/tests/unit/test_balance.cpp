#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "threepage/balance.hpp"

using namespace threepage;

namespace {
const Word wK = Word::parse("a0 a1 b2 b0 x0 b2 d2 c1 c2");
}

TEST_CASE("projection of the figure word") {
  CHECK(bracketString(bracketProjection(wK, 0)) == "((()))");
  CHECK(bracketString(bracketProjection(wK, 1)) == "()()()()");
  CHECK(bracketProjection(Word{}, 0).tokens.empty());
  CHECK(bracketProjection(Word{}, 2).depth == 0);
}

TEST_CASE("projection agrees with the substitution oracle") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(0, 30), code(0, 14);
  for (int t = 0; t < 400; ++t) {
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push(Letter{static_cast<std::uint8_t>(code(rng))});
    for (int page = 0; page < 3; ++page) {
      CHECK(bracketString(bracketProjection(w, page)) == oracle::substitute(w, page));
      CHECK(isBalanced(w, page) == oracle::bracketsBalanced(oracle::substitute(w, page)));
    }
  }
}

TEST_CASE("i-balance examples") {
  CHECK(isBalanced(Word::parse("a0 c0"), 1));
  CHECK_FALSE(isBalanced(Word::parse("d2 c2 a2 b2"), 0));
  CHECK(isBalanced(Word{}, 2));
}

TEST_CASE("balance over all pages") {
  CHECK(isBalanced(wK));
  CHECK(isBalanced(Word::parse("a0 c0")));
  CHECK_FALSE(isBalanced(Word::parse("d2 c2 a2 b2")));
  CHECK_FALSE(isBalanced(Word::parse("a0")));
}

TEST_CASE("depth") {
  CHECK(depth(Word::parse("b2 b2 a0 d2 d2"), 0) == 2);
  CHECK(depth(Word{}, 0) == 0);
  CHECK(depth(wK, 0) == 3);
}

TEST_CASE("signature examples") {
  // a relation's two sides must share signatures; spot-check one by hand:
  // page 1 of "d2 c2": "()" reduces to nothing.
  BracketSignature s = signature(Word::parse("d2 c2"), 1);
  CHECK(s == BracketSignature{0, 0});
  // page 0 of "d2 c2": "))" is a pure deficit.
  CHECK(signature(Word::parse("d2 c2"), 0) == BracketSignature{2, 0});
  // page 0 of "a1 b2": "((" is a pure surplus.
  CHECK(signature(Word::parse("a1 b2"), 0) == BracketSignature{0, 2});
  CHECK(signature(Word::parse("d0 x0 d0"), 1) == BracketSignature{2, 0});
}

TEST_CASE("mu encoding") {
  Word w = Word::parse("b2 b2 a0 d2 d2");
  BracketProfile mu = muEncoding(w, 0);
  CHECK(bracketString(mu) == "((*))");
  CHECK(mu.depth == 2);
  CHECK(mu.balanced());
  // a1 is outside the restricted alphabet for page 0 and encodes a bullet
  CHECK(bracketString(muEncoding(Word::parse("b2 b2 a0 d2 a1 d2"), 0)) == "((*)*)");
}
