#pragma once

#include "threepage/word.hpp"

namespace threepage {

// Generators of the singular-tangle semigroup: cups, caps, the two
// crossings and the rigid 4-valent vertex, each at a strand position.
enum class GenKind : std::uint8_t { Xi, Eta, Sigma, SigmaInv, Tau };

struct TangleGen {
  GenKind kind = GenKind::Xi;
  int strand = 1;  // >= 1

  std::string str() const;
  friend bool operator==(const TangleGen&, const TangleGen&) = default;
};

using MorseWord = std::vector<TangleGen>;

// Token syntax: xi_k, eta_k, sigma_k, isigma_k, tau_k (whitespace separated).
MorseWord parseMorse(std::string_view text);
std::string morseStr(const MorseWord& m);

// The generator images: xi_k -> d2^k c2 b2^{k-1}, eta_k -> d2^{k-1} a2 b2^k,
// sigma_k -> d2^{k-1} b1 d2 d1 b2^k, isigma_k -> d2^k b1 b2 d1 b2^{k-1},
// tau_k -> d2^k x2 b2^k.
Word phiGen(TangleGen g);

// Homomorphic extension to Morse words.
Word compile(const MorseWord& m);

MorseWord thetaShift(const MorseWord& m, int k);  // strand indices + k
Word rhoShift(const Word& w, int k);              // d2^k w b2^k

// One image pair of the tangle relations (11)-(23) ((23') in the FG
// variant); family (14) is generated with the vertex preserved on both
// sides. The Morse words of both sides are kept for reporting.
struct ImagePair {
  int family = 0;
  int variant = 0;
  int k = 1, l = 0;  // l = 0 when the family has no second index
  MorseWord lhsM, rhsM;
  Word lhs, rhs;

  std::string tag() const;  // e.g. "rel11.xi k=1 l=3"
};

std::vector<ImagePair> stRelationImages(int kmax, int lmax, bool fg);

// Boundary deficits of the page-1/page-2 projections and the padding
// b1^{n2} d2^{n1} w b2^{m1} d1^{m2} that makes a word 1- and 2-balanced.
struct PadCounts {
  int n1 = 0, n2 = 0, m1 = 0, m2 = 0;
};
PadCounts padCounts(const Word& w);
Word almostBalancePad(const Word& w);

// a0^l a1^l w c1^l c0^l
Word knotClosurePad(const Word& w, int l);

}  // namespace threepage
