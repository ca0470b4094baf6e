#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "threepage/word.hpp"

namespace threepage {

// A relation family label as used in citations: (1)..(10), (6'), (25)..(45),
// and the generalized (33')..(40').
struct FamilyRef {
  int number = 0;
  bool prime = false;

  std::string label() const;  // "(34')"
  friend auto operator<=>(const FamilyRef&, const FamilyRef&) = default;
};

struct RelationId {
  FamilyRef family;
  int variant = 0;   // which displayed equation of the family
  int page = 0;      // the index i the family is instantiated at
  int witness = -1;  // index into the family's witness menu, if any

  std::string str() const;  // stable id, e.g. "8.1.2.w3"
};

enum class RulesetKind { SK, FG, Derived };

struct Relation {
  RelationId id;
  Word lhs, rhs;
  RulesetKind set = RulesetKind::SK;
  bool superfluous = false;
  // Set on instantiated parametric rules; the witness carries a balance
  // certificate for witnessPage.
  std::optional<Word> paramWitness;
  int paramWitnessPage = -1;

  std::string label() const { return id.family.label(); }
  std::string dumpLine() const;  // "<id> : <lhs> = <rhs>"
};

// t_i = b_{i+1} d_{i-1} d_{i+1} b_{i-1} and t'_i = d_{i-1} b_{i+1} b_{i-1} d_{i+1}.
Word conjugatorT(int i);
Word conjugatorTPrime(int i);
// b'_i = b_{i-1} b_i d_{i-1}, d'_i = b_{i-1} d_i d_{i-1}.
Word bPrime(int i);
Word dPrime(int i);
// The Lemma-style factor sets: seven i-balanced words, or six without x_i.
std::vector<Word> factorSet(int i, bool withX);

class RuleTable {
public:
  static const RuleTable& instance();

  const std::vector<Relation>& set(RulesetKind k) const;
  int rawCount(RulesetKind k) const { return static_cast<int>(set(k).size()); }
  int officialCount(RulesetKind k) const;

  std::vector<const Relation*> family(RulesetKind k, FamilyRef f) const;
  const Relation* superfluousInstance() const;

private:
  RuleTable();
  std::vector<Relation> sk_, fg_, derived_;
};

// Generalized commutation shape lhs = lhsPre . W . lhsPost,
// rhs = rhsPre . W . rhsPost for an arbitrary witness W that is balanced
// in witnessPage.
struct ParametricRelation {
  FamilyRef family;
  int variant = 0;
  int page = 0;  // the relation's own index i
  Word lhsPre, lhsPost, rhsPre, rhsPost;
  int witnessPage = 0;
};

// The parametric shape of (33')..(40') at relation index i.
ParametricRelation parametricFamily(FamilyRef f, int variant, int relIndex);
// Resolve the relation index from the witness's certified page.
int parametricIndexFromWitnessPage(FamilyRef f, int witnessPage);

class CertificateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Checked instantiation: throws CertificateError when the witness is not
// balanced in the required page.
Relation instantiateParametric(const ParametricRelation& p, const Word& witness);

}  // namespace threepage
