#include "threepage/decompose.hpp"

#include "threepage/balance.hpp"

namespace threepage {

namespace {

const Relation& findRule(RulesetKind set, int fam, int variant, int page, int witness = -1) {
  for (const Relation& r : RuleTable::instance().set(set))
    if (r.id.family.number == fam && !r.id.family.prime && r.id.variant == variant &&
        r.id.page == page && r.id.witness == witness)
      return r;
  throw std::logic_error("rule table lookup failed for family " + std::to_string(fam));
}

struct Cursor {
  Word word;
  Derivation deriv;

  explicit Cursor(const Word& w) : word(w) { deriv.start = w; }

  void apply(const Relation& r, std::size_t pos, bool reverse) {
    RewriteStep s{pos, r, reverse};
    word = applyStep(word, s);
    deriv.entries.push_back({s, word});
  }
};

bool isRestricted(Letter l, int page) {
  if (l.page() == page) return true;
  int prev = pageAdd(page, -1);
  return l.page() == prev && (l.kind() == Kind::B || l.kind() == Kind::D);
}

}  // namespace

RestrictResult restrictToPageAlphabet(const Word& w, int page) {
  Cursor cur(w);
  const int i = page, ip = pageAdd(page, 1), im = pageAdd(page, -1);
  for (;;) {
    bool changed = false;
    for (std::size_t p = 0; p < cur.word.size(); ++p) {
      Letter l = cur.word.at(p);
      if (isRestricted(l, i)) continue;
      changed = true;
      if (l.kind() == Kind::A && l.page() == im)
        cur.apply(findRule(RulesetKind::SK, 1, 0, im), p, false);       // a_{i-1} -> a_i d_{i+1}
      else if (l.kind() == Kind::A && l.page() == ip)
        cur.apply(findRule(RulesetKind::Derived, 28, 0, ip), p, false);  // a_{i+1} -> a_i b_{i-1}
      else if (l.kind() == Kind::C && l.page() == im)
        cur.apply(findRule(RulesetKind::SK, 1, 2, im), p, false);       // c_{i-1} -> b_{i+1} c_i
      else if (l.kind() == Kind::C && l.page() == ip)
        cur.apply(findRule(RulesetKind::Derived, 28, 1, ip), p, false);  // c_{i+1} -> d_{i-1} c_i
      else if (l.kind() == Kind::B && l.page() == ip)
        cur.apply(findRule(RulesetKind::Derived, 25, 0, ip), p, false);  // b_{i+1} -> d_{i-1} d_i
      else if (l.kind() == Kind::D && l.page() == ip)
        cur.apply(findRule(RulesetKind::Derived, 26, 0, ip), p, false);  // d_{i+1} -> b_i b_{i-1}
      else if (l.kind() == Kind::X && l.page() == im)
        cur.apply(findRule(RulesetKind::SK, 2, 0, im), p, false);       // x_{i-1} -> d_i x_{i+1} b_i
      else if (l.kind() == Kind::X && l.page() == ip)
        cur.apply(findRule(RulesetKind::SK, 2, 0, ip), p, false);       // x_{i+1} -> d_{i-1} x_i b_{i-1}
      break;
    }
    if (!changed) break;
  }
  return {cur.word, cur.deriv};
}

namespace {

// mu classification helpers
bool isOpen(Letter l, int page) { return l == Letter::make(Kind::B, pageAdd(page, -1)); }
bool isClose(Letter l, int page) { return l == Letter::make(Kind::D, pageAdd(page, -1)); }

void starNormalizeInto(Cursor& cur, int page) {
  if (!muEncoding(cur.word, page).balanced())
    throw PreconditionError("word '" + cur.word.str() + "' has an unbalanced mu encoding for page " +
                            std::to_string(page));
  const Relation& delBD = findRule(RulesetKind::SK, 4, 0, pageAdd(page, -1));  // b d -> 1
  const Relation& delDB = findRule(RulesetKind::SK, 4, 1, pageAdd(page, -1));  // d b -> 1
  std::size_t seg = 0;
  while (seg < cur.word.size()) {
    std::size_t k = 0;
    while (seg + k < cur.word.size() && isOpen(cur.word.at(seg + k), page)) ++k;
    std::size_t pos = seg + k;
    if (pos >= cur.word.size()) {
      if (k > 0) throw std::logic_error("unbalanced despite precondition");
      break;
    }
    if (isClose(cur.word.at(pos), page)) {
      cur.apply(delBD, pos - 1, false);  // delete the innermost () pair
      continue;
    }
    // bullet at pos
    std::size_t j = 0;
    while (pos + 1 + j < cur.word.size() && isClose(cur.word.at(pos + 1 + j), page)) ++j;
    if (j > k) j = k;  // further closes belong to an enclosing star
    if (j < k) {
      // complete the star: insert d^{k-j} b^{k-j} after the last close
      for (std::size_t m = 0; m < k - j; ++m) cur.apply(delDB, pos + 1 + j + m, true);
    }
    seg = seg + 2 * k + 1;
  }
}

struct StarRef {
  std::size_t start;
  std::size_t depth;
};

// Parse the star decomposition of a normalized word.
std::vector<StarRef> stars(const Word& w, int page) {
  std::vector<StarRef> out;
  std::size_t p = 0;
  while (p < w.size()) {
    std::size_t k = 0;
    while (p + k < w.size() && isOpen(w.at(p + k), page)) ++k;
    out.push_back({p, k});
    p += 2 * k + 1;
  }
  return out;
}

void eliminateBracketed(Cursor& cur, int page);

}  // namespace

RestrictResult starNormalize(const Word& w, int page) {
  Cursor cur(w);
  starNormalizeInto(cur, page);
  return {cur.word, cur.deriv};
}

namespace {

void reduceDepth(Cursor& cur, int page) {
  const int i = page;
  for (;;) {
    starNormalizeInto(cur, page);
    std::vector<StarRef> ss = stars(cur.word, page);
    const StarRef* deep = nullptr;
    for (const StarRef& s : ss)
      if (s.depth >= 2) {
        deep = &s;
        break;
      }
    if (!deep) return;
    std::size_t p = deep->start + deep->depth - 2;  // the b b s d d block
    Letter s = cur.word.at(p + 2);
    switch (s.kind()) {
      case Kind::A: cur.apply(findRule(RulesetKind::Derived, 41, 0, i), p, false); break;
      case Kind::B: cur.apply(findRule(RulesetKind::Derived, 43, 0, i), p, false); break;
      case Kind::C: cur.apply(findRule(RulesetKind::Derived, 42, 0, i), p, false); break;
      case Kind::D: cur.apply(findRule(RulesetKind::Derived, 44, 0, i), p, false); break;
      case Kind::X:
        cur.apply(findRule(RulesetKind::Derived, 45, 0, i), p, false);
        // the (45) image still holds two depth-2 blocks; flatten them
        cur.apply(findRule(RulesetKind::Derived, 43, 0, i), p, false);
        cur.apply(findRule(RulesetKind::Derived, 44, 0, i), p + 20, false);
        break;
    }
  }
}

void eliminateBracketed(Cursor& cur, int page) {
  const int i = page, ip = pageAdd(page, 1), im = pageAdd(page, -1);
  Letter open = Letter::make(Kind::B, im), close = Letter::make(Kind::D, im);
  auto factors = factorSet(ip, true);
  // witness indices in factorSet(ip, true): a=0 b=1 c=2 d=3 x=4
  for (;;) {
    std::size_t p = cur.word.size();
    Kind kind = Kind::A;
    for (std::size_t q = 0; q + 2 < cur.word.size(); ++q) {
      Letter l = cur.word.at(q), m = cur.word.at(q + 1), r = cur.word.at(q + 2);
      if (l == open && r == close && m.page() == i &&
          (m.kind() == Kind::A || m.kind() == Kind::C || m.kind() == Kind::X)) {
        p = q;
        kind = m.kind();
        break;
      }
    }
    if (p == cur.word.size()) return;
    if (kind == Kind::A) {
      cur.apply(findRule(RulesetKind::Derived, 25, 0, im), p, false);       // b_{i-1} -> d_i d_{i+1}
      cur.apply(findRule(RulesetKind::SK, 4, 0, i), p + 3, true);           // insert b_i d_i
      cur.apply(findRule(RulesetKind::Derived, 35, 0, i, 3), p + 1, true);  // d_{i+1}(a b) -> (a b)d_{i+1}
      cur.apply(findRule(RulesetKind::Derived, 26, 0, ip), p + 3, false);   // d_{i+1} -> b_i b_{i-1}
    } else if (kind == Kind::C) {
      cur.apply(findRule(RulesetKind::Derived, 26, 0, im), p + 2, false);   // d_{i-1} -> b_{i+1} b_i
      cur.apply(findRule(RulesetKind::SK, 4, 0, i), p + 1, true);           // insert b_i d_i
      cur.apply(findRule(RulesetKind::Derived, 33, 0, i, 1), p + 2, false);  // (d c)b_{i+1} -> b_{i+1}(d c)
      cur.apply(findRule(RulesetKind::Derived, 25, 0, ip), p + 2, false);   // b_{i+1} -> d_{i-1} d_i
    } else {
      cur.apply(findRule(RulesetKind::SK, 4, 0, i), p + 1, true);           // insert b_i d_i
      cur.apply(findRule(RulesetKind::SK, 4, 0, i), p + 4, true);           // insert b_i d_i
      cur.apply(findRule(RulesetKind::SK, 4, 0, ip), p + 2, true);          // insert b_{i+1} d_{i+1}
      cur.apply(findRule(RulesetKind::Derived, 38, 0, i, 3), p + 3, true);  // d_{i+1}(d x b) -> (d x b)d_{i+1}
      cur.apply(findRule(RulesetKind::Derived, 25, 0, ip), p + 2, false);   // b_{i+1} -> d_{i-1} d_i
      cur.apply(findRule(RulesetKind::Derived, 26, 0, ip), p + 7, false);   // d_{i+1} -> b_i b_{i-1}
    }
  }
}

}  // namespace

StarDecomposition starDecompose(const Word& w, int page) {
  if (!isBalanced(w, page))
    throw PreconditionError("word '" + w.str() + "' is not " + std::to_string(page) + "-balanced");
  Cursor cur(w);
  {
    RestrictResult r = restrictToPageAlphabet(w, page);
    cur.word = r.word;
    cur.deriv = r.deriv;
  }
  reduceDepth(cur, page);
  eliminateBracketed(cur, page);
  starNormalizeInto(cur, page);  // clean up any () pairs left by eliminations

  StarDecomposition out;
  out.deriv = cur.deriv;
  Letter open = Letter::make(Kind::B, pageAdd(page, -1));
  std::size_t p = 0;
  while (p < cur.word.size()) {
    if (cur.word.at(p) == open) {
      out.factors.push_back(cur.word.sub(p, 3));
      p += 3;
    } else {
      out.factors.push_back(cur.word.sub(p, 1));
      p += 1;
    }
  }
  return out;
}

}  // namespace threepage
