#include "threepage/tangle.hpp"

#include "threepage/balance.hpp"

namespace threepage {

namespace {
const char* kindToken(GenKind k) {
  switch (k) {
    case GenKind::Xi: return "xi";
    case GenKind::Eta: return "eta";
    case GenKind::Sigma: return "sigma";
    case GenKind::SigmaInv: return "isigma";
    case GenKind::Tau: return "tau";
  }
  return "?";
}

Word pow(Letter l, int n) { return Word::repeated(l, n); }
const Letter b1 = Letter::make(Kind::B, 1);
const Letter b2 = Letter::make(Kind::B, 2);
const Letter d1 = Letter::make(Kind::D, 1);
const Letter d2 = Letter::make(Kind::D, 2);
}  // namespace

std::string TangleGen::str() const {
  return std::string(kindToken(kind)) + "_" + std::to_string(strand);
}

MorseWord parseMorse(std::string_view text) {
  MorseWord m;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r'))
      ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' && text[j] != '\r')
      ++j;
    std::string tok(text.substr(i, j - i));
    std::size_t us = tok.rfind('_');
    if (us == std::string::npos) throw ParseError("bad tangle token '" + tok + "'", i);
    std::string name = tok.substr(0, us);
    int strand = 0;
    try {
      strand = std::stoi(tok.substr(us + 1));
    } catch (...) {
      throw ParseError("bad strand index in '" + tok + "'", i);
    }
    if (strand < 1) throw ParseError("strand index must be positive in '" + tok + "'", i);
    GenKind k;
    if (name == "xi") k = GenKind::Xi;
    else if (name == "eta") k = GenKind::Eta;
    else if (name == "sigma") k = GenKind::Sigma;
    else if (name == "isigma") k = GenKind::SigmaInv;
    else if (name == "tau") k = GenKind::Tau;
    else throw ParseError("bad tangle token '" + tok + "'", i);
    m.push_back({k, strand});
    i = j;
  }
  return m;
}

std::string morseStr(const MorseWord& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ' ';
    s += m[i].str();
  }
  return s;
}

Word phiGen(TangleGen g) {
  int k = g.strand;
  switch (g.kind) {
    case GenKind::Xi: return pow(d2, k) + lw(Kind::C, 2) + pow(b2, k - 1);
    case GenKind::Eta: return pow(d2, k - 1) + lw(Kind::A, 2) + pow(b2, k);
    case GenKind::Sigma:
      return pow(d2, k - 1) + lw(Kind::B, 1) + lw(Kind::D, 2) + lw(Kind::D, 1) + pow(b2, k);
    case GenKind::SigmaInv:
      return pow(d2, k) + lw(Kind::B, 1) + lw(Kind::B, 2) + lw(Kind::D, 1) + pow(b2, k - 1);
    case GenKind::Tau: return pow(d2, k) + lw(Kind::X, 2) + pow(b2, k);
  }
  return Word{};
}

Word compile(const MorseWord& m) {
  Word w;
  for (TangleGen g : m) w.append(phiGen(g));
  return w;
}

MorseWord thetaShift(const MorseWord& m, int k) {
  MorseWord out = m;
  for (TangleGen& g : out) g.strand += k;
  return out;
}

Word rhoShift(const Word& w, int k) { return pow(d2, k) + w + pow(b2, k); }

std::string ImagePair::tag() const {
  std::string s = "rel" + std::to_string(family);
  if (variant) s += char('a' + variant);
  s += " " + morseStr(lhsM) + " ~ " + (rhsM.empty() ? std::string("1") : morseStr(rhsM));
  s += " (k=" + std::to_string(k);
  if (l) s += ",l=" + std::to_string(l);
  s += ")";
  return s;
}

std::vector<ImagePair> stRelationImages(int kmax, int lmax, bool fg) {
  std::vector<ImagePair> out;
  auto makePair = [&](int fam, int variant, int k, int l, MorseWord lm, MorseWord rm) {
    ImagePair p;
    p.family = fam;
    p.variant = variant;
    p.k = k;
    p.l = l;
    p.lhsM = std::move(lm);
    p.rhsM = std::move(rm);
    p.lhs = compile(p.lhsM);
    p.rhs = compile(p.rhsM);
    out.push_back(std::move(p));
  };
  const GenKind second[4] = {GenKind::Xi, GenKind::Eta, GenKind::Sigma, GenKind::Tau};
  for (int k = 1; k <= kmax; ++k) {
    for (int l = 1; l <= lmax; ++l) {
      for (int u = 0; u < 4; ++u) {
        GenKind g = second[u];
        // (11) xi_k u_l = u_{l+2} xi_k for l >= k
        if (l >= k)
          makePair(11, u, k, l, {{GenKind::Xi, k}, {g, l}}, {{g, l + 2}, {GenKind::Xi, k}});
        if (l >= k + 2) {
          // (12) eta_k u_l = u_{l-2} eta_k
          makePair(12, u, k, l, {{GenKind::Eta, k}, {g, l}}, {{g, l - 2}, {GenKind::Eta, k}});
          // (13) sigma_k u_l = u_l sigma_k
          makePair(13, u, k, l, {{GenKind::Sigma, k}, {g, l}}, {{g, l}, {GenKind::Sigma, k}});
          // (14) tau_k u_l = u_l tau_k (vertex preserved on both sides)
          makePair(14, u, k, l, {{GenKind::Tau, k}, {g, l}}, {{g, l}, {GenKind::Tau, k}});
        }
      }
    }
    // (15) eta_{k+1} xi_k = 1 = eta_k xi_{k+1}
    makePair(15, 0, k, 0, {{GenKind::Eta, k + 1}, {GenKind::Xi, k}}, {});
    makePair(15, 1, k, 0, {{GenKind::Eta, k}, {GenKind::Xi, k + 1}}, {});
    // (16) eta_{k+2} sigma_{k+1} xi_k = isigma_k = eta_k sigma_{k+1} xi_{k+2}
    makePair(16, 0, k, 0, {{GenKind::Eta, k + 2}, {GenKind::Sigma, k + 1}, {GenKind::Xi, k}},
             {{GenKind::SigmaInv, k}});
    makePair(16, 1, k, 0, {{GenKind::Eta, k}, {GenKind::Sigma, k + 1}, {GenKind::Xi, k + 2}},
             {{GenKind::SigmaInv, k}});
    // (17) eta_{k+2} tau_{k+1} xi_k = tau_k = eta_k tau_{k+1} xi_{k+2}
    makePair(17, 0, k, 0, {{GenKind::Eta, k + 2}, {GenKind::Tau, k + 1}, {GenKind::Xi, k}},
             {{GenKind::Tau, k}});
    makePair(17, 1, k, 0, {{GenKind::Eta, k}, {GenKind::Tau, k + 1}, {GenKind::Xi, k + 2}},
             {{GenKind::Tau, k}});
    // (18) eta_k sigma_k = eta_k ; sigma_k xi_k = xi_k
    makePair(18, 0, k, 0, {{GenKind::Eta, k}, {GenKind::Sigma, k}}, {{GenKind::Eta, k}});
    makePair(18, 1, k, 0, {{GenKind::Sigma, k}, {GenKind::Xi, k}}, {{GenKind::Xi, k}});
    // (19) sigma_k isigma_k = 1 = isigma_k sigma_k
    makePair(19, 0, k, 0, {{GenKind::Sigma, k}, {GenKind::SigmaInv, k}}, {});
    makePair(19, 1, k, 0, {{GenKind::SigmaInv, k}, {GenKind::Sigma, k}}, {});
    // (20) sigma_k sigma_{k+1} sigma_k = sigma_{k+1} sigma_k sigma_{k+1}
    makePair(20, 0, k, 0,
             {{GenKind::Sigma, k}, {GenKind::Sigma, k + 1}, {GenKind::Sigma, k}},
             {{GenKind::Sigma, k + 1}, {GenKind::Sigma, k}, {GenKind::Sigma, k + 1}});
    // (21) sigma_k sigma_{k+1} tau_k = tau_{k+1} sigma_k sigma_{k+1}
    makePair(21, 0, k, 0, {{GenKind::Sigma, k}, {GenKind::Sigma, k + 1}, {GenKind::Tau, k}},
             {{GenKind::Tau, k + 1}, {GenKind::Sigma, k}, {GenKind::Sigma, k + 1}});
    // (22) tau_k sigma_{k+1} sigma_k = sigma_{k+1} sigma_k tau_{k+1}
    makePair(22, 0, k, 0, {{GenKind::Tau, k}, {GenKind::Sigma, k + 1}, {GenKind::Sigma, k}},
             {{GenKind::Sigma, k + 1}, {GenKind::Sigma, k}, {GenKind::Tau, k + 1}});
    if (fg) {
      // (23') sigma_k tau_k = tau_k
      makePair(23, 0, k, 0, {{GenKind::Sigma, k}, {GenKind::Tau, k}}, {{GenKind::Tau, k}});
    } else {
      // (23) sigma_k tau_k = tau_k sigma_k
      makePair(23, 0, k, 0, {{GenKind::Sigma, k}, {GenKind::Tau, k}},
               {{GenKind::Tau, k}, {GenKind::Sigma, k}});
    }
  }
  return out;
}

PadCounts padCounts(const Word& w) {
  BracketSignature s1 = signature(w, 1), s2 = signature(w, 2);
  return PadCounts{s1.deficit, s2.deficit, s1.surplus, s2.surplus};
}

Word almostBalancePad(const Word& w) {
  PadCounts p = padCounts(w);
  return pow(b1, p.n2) + pow(d2, p.n1) + w + pow(b2, p.m1) + pow(d1, p.m2);
}

Word knotClosurePad(const Word& w, int l) {
  return pow(Letter::make(Kind::A, 0), l) + pow(Letter::make(Kind::A, 1), l) + w +
         pow(Letter::make(Kind::C, 1), l) + pow(Letter::make(Kind::C, 0), l);
}

}  // namespace threepage
