#pragma once

#include "threepage/word.hpp"

namespace threepage {

enum class Bracket : std::uint8_t { Open, Close, Bullet };

// What a letter contributes to the bracket projection of a page.
// Letters of the page itself contribute nothing; a opens in both other
// pages, c closes in both, b opens in page s+1 and closes in page s-1,
// d opens in page s-1 and closes in page s+1, x closes then opens in
// both other pages.
enum class PageAction : std::uint8_t { None, Open, Close, CloseOpen };

PageAction pageAction(Letter l, int page);

struct BracketProfile {
  std::vector<Bracket> tokens;
  std::vector<int> dif;  // running #Open - #Close after each token
  int depth = 0;         // max of dif, never below 0

  bool balanced() const;  // every prefix dif >= 0 and the final dif is 0
};

BracketProfile bracketProjection(const Word& w, int page);

bool isBalanced(const Word& w, int page);
bool isBalanced(const Word& w);  // all three pages
int depth(const Word& w, int page);

std::string bracketString(const BracketProfile& p);  // "(()...)" with "*" bullets

// Reduced bracket signature: after cancelling matched pairs a projection
// is ")"^deficit "("^surplus; rewriting preserves these per page.
struct BracketSignature {
  int deficit = 0;
  int surplus = 0;
  friend bool operator==(const BracketSignature&, const BracketSignature&) = default;
};

BracketSignature signature(const Word& w, int page);

// The encoding used by the star calculus: for a fixed page i, letters
// b_{i-1} and d_{i-1} become brackets and everything else a bullet.
BracketProfile muEncoding(const Word& w, int page);
int muDepth(const Word& w, int page);

}  // namespace threepage
