#pragma once

#include "threepage/rewrite.hpp"

namespace threepage {

class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Rewrite w into an equivalent word over the seven letters
// a_i, b_i, c_i, d_i, x_i, b_{i-1}, d_{i-1}, with the substitutions applied
// left to right until fixpoint. Total on every word; the output is
// i-balanced whenever the input is.
struct RestrictResult {
  Word word;
  Derivation deriv;
};
RestrictResult restrictToPageAlphabet(const Word& w, int page);

// Star-normalize a word whose mu encoding is balanced: delete () pairs and
// complete deficient stars by inserting d^{k-j} b^{k-j}, scanning strictly
// left to right. Preserves the mu depth.
RestrictResult starNormalize(const Word& w, int page);

// Full decomposition pipeline: restrict, star-normalize, reduce star depth
// to 1, eliminate bracketed a/c/x. The concatenation of the returned
// factors equals the derivation's final word, and every factor belongs to
// the seven-element factor set of the page.
struct StarDecomposition {
  std::vector<Word> factors;
  Derivation deriv;
};
StarDecomposition starDecompose(const Word& w, int page);

}  // namespace threepage
