#include "threepage/rules.hpp"

#include "threepage/balance.hpp"

namespace threepage {

std::string FamilyRef::label() const {
  return "(" + std::to_string(number) + (prime ? "')" : ")");
}

std::string RelationId::str() const {
  std::string s = std::to_string(family.number);
  if (family.prime) s += "p";
  s += "." + std::to_string(variant) + "." + std::to_string(page);
  if (witness >= 0) s += ".w" + std::to_string(witness);
  return s;
}

std::string Relation::dumpLine() const {
  return id.str() + " : " + lhs.str() + " = " + rhs.str();
}

namespace {
Word W(std::initializer_list<Letter> ls) {
  Word w;
  for (Letter l : ls) w.push(l);
  return w;
}
Letter A(int i) { return Letter::make(Kind::A, i); }
Letter B(int i) { return Letter::make(Kind::B, i); }
Letter C(int i) { return Letter::make(Kind::C, i); }
Letter D(int i) { return Letter::make(Kind::D, i); }
Letter X(int i) { return Letter::make(Kind::X, i); }
}  // namespace

Word conjugatorT(int i) { return W({B(pageAdd(i, 1)), D(pageAdd(i, -1)), D(pageAdd(i, 1)), B(pageAdd(i, -1))}); }
Word conjugatorTPrime(int i) { return W({D(pageAdd(i, -1)), B(pageAdd(i, 1)), B(pageAdd(i, -1)), D(pageAdd(i, 1))}); }
Word bPrime(int i) { return W({B(pageAdd(i, -1)), B(i), D(pageAdd(i, -1))}); }
Word dPrime(int i) { return W({B(pageAdd(i, -1)), D(i), D(pageAdd(i, -1))}); }

std::vector<Word> factorSet(int i, bool withX) {
  std::vector<Word> v = {W({A(i)}), W({B(i)}), W({C(i)}), W({D(i)})};
  if (withX) v.push_back(W({X(i)}));
  v.push_back(bPrime(i));
  v.push_back(dPrime(i));
  return v;
}

namespace {

void add(std::vector<Relation>& out, RulesetKind set, int fam, bool prime, int variant,
         int page, int witness, Word lhs, Word rhs, bool superfluous = false) {
  Relation r;
  r.id = RelationId{FamilyRef{fam, prime}, variant, page, witness};
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.set = set;
  r.superfluous = superfluous;
  out.push_back(std::move(r));
}

// Witness menus of the commutation families. (8) and (10) share one menu;
// (7) and (9) have their own. The third word of (7)/(8)/(10) is d'_{i+1},
// that of (9) is d'_i.
std::vector<Word> menu7(int i) {
  return {W({C(pageAdd(i, 1))}), W({X(pageAdd(i, 1))}), dPrime(pageAdd(i, 1))};
}
std::vector<Word> menu8(int i) {
  return {W({A(pageAdd(i, 1))}), W({B(pageAdd(i, 1))}), W({C(pageAdd(i, 1))}),
          W({X(pageAdd(i, 1))}), dPrime(pageAdd(i, 1))};
}
std::vector<Word> menu9(int i) {
  return {W({A(i)}), W({B(i)}), W({C(i)}), W({X(i)}), dPrime(i)};
}

void buildCore(std::vector<Relation>& out, RulesetKind set) {
  for (int i = 0; i < 3; ++i) {
    int ip = pageAdd(i, 1), im = pageAdd(i, -1);
    // (1) a_i = a_{i+1} d_{i-1}, b_i = a_{i-1} c_{i+1},
    //     c_i = b_{i-1} c_{i+1}, d_i = a_{i+1} c_{i-1}
    add(out, set, 1, false, 0, i, -1, W({A(i)}), W({A(ip), D(im)}));
    add(out, set, 1, false, 1, i, -1, W({B(i)}), W({A(im), C(ip)}));
    add(out, set, 1, false, 2, i, -1, W({C(i)}), W({B(im), C(ip)}));
    add(out, set, 1, false, 3, i, -1, W({D(i)}), W({A(ip), C(im)}));
    // (2) x_i = d_{i+1} x_{i-1} b_{i+1}
    add(out, set, 2, false, 0, i, -1, W({X(i)}), W({D(ip), X(im), B(ip)}));
  }
  // (3) d_0 d_1 d_2 = 1
  add(out, set, 3, false, 0, 0, -1, W({D(0), D(1), D(2)}), Word{});
  for (int i = 0; i < 3; ++i) {
    // (4) b_i d_i = 1 and d_i b_i = 1; one instance is redundant given (3),
    // we flag d_0 b_0 (all instances stay active in the engine).
    add(out, set, 4, false, 0, i, -1, W({B(i), D(i)}), Word{});
    add(out, set, 4, false, 1, i, -1, W({D(i), B(i)}), Word{}, i == 0);
  }
  for (int i = 0; i < 3; ++i) {
    // (5) d_i x_i d_i = a_i (d_i x_i d_i) c_i and the b_i version
    add(out, set, 5, false, 0, i, -1, W({D(i), X(i), D(i)}),
        W({A(i), D(i), X(i), D(i), C(i)}));
    add(out, set, 5, false, 1, i, -1, W({B(i), X(i), B(i)}),
        W({A(i), B(i), X(i), B(i), C(i)}));
  }
  for (int i = 0; i < 3; ++i) {
    int ip = pageAdd(i, 1), im = pageAdd(i, -1);
    Word triple = W({D(ip), D(i), D(im)});
    if (set == RulesetKind::FG) {
      // (6') x_i (d_{i+1} d_i d_{i-1}) = x_i
      add(out, set, 6, true, 0, i, -1, W({X(i)}) + triple, W({X(i)}));
    } else {
      // (6) x_i (d_{i+1} d_i d_{i-1}) = (d_{i+1} d_i d_{i-1}) x_i
      add(out, set, 6, false, 0, i, -1, W({X(i)}) + triple, triple + W({X(i)}));
    }
  }
  for (int i = 0; i < 3; ++i) {
    Word dc = W({D(i), C(i)});
    auto m7 = menu7(i);
    for (std::size_t wi = 0; wi < m7.size(); ++wi)
      add(out, set, 7, false, 0, i, static_cast<int>(wi), dc + m7[wi], m7[wi] + dc);
    Word ab = W({A(i), B(i)});
    auto m8 = menu8(i);
    for (std::size_t wi = 0; wi < m8.size(); ++wi)
      add(out, set, 8, false, 0, i, static_cast<int>(wi), ab + m8[wi], m8[wi] + ab);
    Word t = conjugatorT(i);
    auto m9 = menu9(i);
    for (std::size_t wi = 0; wi < m9.size(); ++wi)
      add(out, set, 9, false, 0, i, static_cast<int>(wi), t + m9[wi], m9[wi] + t);
    Word dxb = W({D(i), X(i), B(i)});
    for (std::size_t wi = 0; wi < m8.size(); ++wi)
      add(out, set, 10, false, 0, i, static_cast<int>(wi), dxb + m8[wi], m8[wi] + dxb);
  }
}

void buildDerived(std::vector<Relation>& out) {
  const RulesetKind set = RulesetKind::Derived;
  for (int i = 0; i < 3; ++i) {
    int ip = pageAdd(i, 1), im = pageAdd(i, -1);
    // (25) b_i ~ d_{i+1} d_{i-1} ; (26) d_i ~ b_{i-1} b_{i+1}
    add(out, set, 25, false, 0, i, -1, W({B(i)}), W({D(ip), D(im)}));
    add(out, set, 26, false, 0, i, -1, W({D(i)}), W({B(im), B(ip)}));
    // (27) d_{i+1} b_{i-1} ~ b_{i-1} d_{i+1} t_i ;  b_{i+1} d_{i-1} ~ t_i d_{i-1} b_{i+1}
    add(out, set, 27, false, 0, i, -1, W({D(ip), B(im)}), W({B(im), D(ip)}) + conjugatorT(i));
    add(out, set, 27, false, 1, i, -1, W({B(ip), D(im)}), conjugatorT(i) + W({D(im), B(ip)}));
    // (28) a_i ~ a_{i-1} b_{i+1} ; c_i ~ d_{i+1} c_{i-1}
    add(out, set, 28, false, 0, i, -1, W({A(i)}), W({A(im), B(ip)}));
    add(out, set, 28, false, 1, i, -1, W({C(i)}), W({D(ip), C(im)}));
    // (29) a_i b_i ~ a_{i-1} d_{i-1} ; d_i c_i ~ b_{i-1} c_{i-1}
    add(out, set, 29, false, 0, i, -1, W({A(i), B(i)}), W({A(im), D(im)}));
    add(out, set, 29, false, 1, i, -1, W({D(i), C(i)}), W({B(im), C(im)}));
    // (30) b_i ~ a_i b_i c_i ; d_i ~ a_i d_i c_i
    add(out, set, 30, false, 0, i, -1, W({B(i)}), W({A(i), B(i), C(i)}));
    add(out, set, 30, false, 1, i, -1, W({D(i)}), W({A(i), D(i), C(i)}));
    // (31) b_{i-1} x_{i+1} d_{i-1} ~ x_i ; (32) b_i x_i d_i ~ d_{i+1} x_{i+1} b_{i+1}
    add(out, set, 31, false, 0, i, -1, W({B(im), X(ip), D(im)}), W({X(i)}));
    add(out, set, 32, false, 0, i, -1, W({B(i), X(i), D(i)}), W({D(ip), X(ip), B(ip)}));
  }
  // Commutation families over the factor sets. The families that lift (7)-(10)
  // keep the x member; the ones obtained indirectly drop it and their x cases
  // exist only as parametric instantiations.
  struct CommSpec {
    int fam;
    int variant;
    Word (*t)(int);
    int witnessOffset;
    bool withX;
  };
  static const CommSpec specs[] = {
      {33, 0, [](int i) { return W({D(i), C(i)}); }, +1, true},
      {34, 0, [](int i) { return W({B(i), C(i)}); }, -1, false},
      {35, 0, [](int i) { return W({A(i), B(i)}); }, +1, true},
      {36, 0, [](int i) { return W({A(i), D(i)}); }, -1, false},
      {37, 0, conjugatorT, 0, true},
      {37, 1, conjugatorTPrime, 0, true},
      {38, 0, [](int i) { return W({D(i), X(i), B(i)}); }, +1, true},
      {39, 0, [](int i) { return W({B(i), X(i), D(i)}); }, -1, false},
  };
  for (const CommSpec& s : specs) {
    for (int i = 0; i < 3; ++i) {
      Word t = s.t(i);
      auto menu = factorSet(pageAdd(i, s.witnessOffset), s.withX);
      for (std::size_t wi = 0; wi < menu.size(); ++wi)
        add(out, set, s.fam, false, s.variant, i, static_cast<int>(wi),
            t + menu[wi], menu[wi] + t);
    }
  }
  for (int i = 0; i < 3; ++i) {
    int ip = pageAdd(i, 1), im = pageAdd(i, -1);
    // (40) d_{i+1} b_{i-1} w d_{i-1} b_{i+1} ~ b_{i-1} d_{i+1} w b_{i+1} d_{i-1}
    auto menu = factorSet(i, false);
    for (std::size_t wi = 0; wi < menu.size(); ++wi)
      add(out, set, 40, false, 0, i, static_cast<int>(wi),
          W({D(ip), B(im)}) + menu[wi] + W({D(im), B(ip)}),
          W({B(im), D(ip)}) + menu[wi] + W({B(ip), D(im)}));
    // (41)-(45): the depth reduction rewrites of b_{i-1}^2 s d_{i-1}^2
    Word bb = W({B(im), B(im)}), dd = W({D(im), D(im)});
    add(out, set, 41, false, 0, i, -1, bb + W({A(i)}) + dd,
        W({B(im), A(i), D(im), D(i), D(i)}) + bPrime(i) + W({B(i)}));
    add(out, set, 42, false, 0, i, -1, bb + W({C(i)}) + dd,
        W({D(i)}) + dPrime(i) + W({B(i), B(i)}) + W({B(im), C(i), D(im)}));
    add(out, set, 43, false, 0, i, -1, bb + W({B(i)}) + dd,
        bPrime(i) + W({D(i), D(i)}) + bPrime(i) + W({B(i)}));
    add(out, set, 44, false, 0, i, -1, bb + W({D(i)}) + dd,
        W({D(i)}) + dPrime(i) + W({B(i), B(i)}) + dPrime(i));
    add(out, set, 45, false, 0, i, -1, bb + W({X(i)}) + dd,
        bb + W({B(i)}) + dd + dPrime(i) + W({D(i), D(i), X(i), B(i), B(i)}) +
            bPrime(i) + bb + W({D(i)}) + dd);
  }
}

}  // namespace

RuleTable::RuleTable() {
  buildCore(sk_, RulesetKind::SK);
  buildCore(fg_, RulesetKind::FG);
  buildDerived(derived_);
}

const RuleTable& RuleTable::instance() {
  static const RuleTable t;
  return t;
}

const std::vector<Relation>& RuleTable::set(RulesetKind k) const {
  switch (k) {
    case RulesetKind::SK: return sk_;
    case RulesetKind::FG: return fg_;
    case RulesetKind::Derived: return derived_;
  }
  return sk_;
}

int RuleTable::officialCount(RulesetKind k) const {
  int n = 0;
  for (const Relation& r : set(k))
    if (!r.superfluous) ++n;
  return n;
}

std::vector<const Relation*> RuleTable::family(RulesetKind k, FamilyRef f) const {
  std::vector<const Relation*> out;
  for (const Relation& r : set(k))
    if (r.id.family == f) out.push_back(&r);
  return out;
}

const Relation* RuleTable::superfluousInstance() const {
  for (const Relation& r : sk_)
    if (r.superfluous) return &r;
  return nullptr;
}

ParametricRelation parametricFamily(FamilyRef f, int variant, int relIndex) {
  ParametricRelation p;
  p.family = f;
  p.variant = variant;
  p.page = relIndex;
  int i = relIndex;
  Word t;
  switch (f.number) {
    case 33: t = W({D(i), C(i)}); p.witnessPage = pageAdd(i, 1); break;
    case 34: t = W({B(i), C(i)}); p.witnessPage = pageAdd(i, -1); break;
    case 35: t = W({A(i), B(i)}); p.witnessPage = pageAdd(i, 1); break;
    case 36: t = W({A(i), D(i)}); p.witnessPage = pageAdd(i, -1); break;
    case 37: t = variant == 0 ? conjugatorT(i) : conjugatorTPrime(i); p.witnessPage = i; break;
    case 38: t = W({D(i), X(i), B(i)}); p.witnessPage = pageAdd(i, 1); break;
    case 39: t = W({B(i), X(i), D(i)}); p.witnessPage = pageAdd(i, -1); break;
    case 40: {
      int ip = pageAdd(i, 1), im = pageAdd(i, -1);
      p.witnessPage = i;
      p.lhsPre = W({D(ip), B(im)});
      p.lhsPost = W({D(im), B(ip)});
      p.rhsPre = W({B(im), D(ip)});
      p.rhsPost = W({B(ip), D(im)});
      return p;
    }
    default:
      throw std::invalid_argument("no parametric form for family " + f.label());
  }
  p.lhsPre = t;
  p.rhsPost = t;
  return p;
}

int parametricIndexFromWitnessPage(FamilyRef f, int witnessPage) {
  switch (f.number) {
    case 33: case 35: case 38: return pageAdd(witnessPage, -1);
    case 34: case 36: case 39: return pageAdd(witnessPage, 1);
    case 37: case 40: return witnessPage;
    default:
      throw std::invalid_argument("no parametric form for family " + f.label());
  }
}

Relation instantiateParametric(const ParametricRelation& p, const Word& witness) {
  if (!isBalanced(witness, p.witnessPage))
    throw CertificateError("witness '" + witness.str() + "' is not " +
                           std::to_string(p.witnessPage) + "-balanced");
  Relation r;
  r.id = RelationId{FamilyRef{p.family.number, true}, p.variant, p.page, -1};
  r.lhs = p.lhsPre + witness + p.lhsPost;
  r.rhs = p.rhsPre + witness + p.rhsPost;
  r.set = RulesetKind::Derived;
  r.paramWitness = witness;
  r.paramWitnessPage = p.witnessPage;
  return r;
}

}  // namespace threepage
