#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "threepage/rules.hpp"

namespace threepage {

struct RewriteStep {
  std::size_t pos = 0;
  Relation rel;
  bool reverse = false;  // apply rhs -> lhs

  const Word& src() const { return reverse ? rel.rhs : rel.lhs; }
  const Word& dst() const { return reverse ? rel.lhs : rel.rhs; }
};

class StepError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// One elementary application: replace the source side at pos by the other side.
Word applyStep(const Word& w, const RewriteStep& s);

// A chain of elementary applications, replayable step by step.
struct Derivation {
  struct Entry {
    RewriteStep step;
    Word result;
  };
  Word start;
  std::vector<Entry> entries;

  const Word& finalWord() const { return entries.empty() ? start : entries.back().result; }
  bool replayOk() const;  // re-applies every step and compares
  void append(const Derivation& tail);  // tail.start must equal finalWord()
};

// The set of relations a search or a normalization may use.
struct RulePool {
  std::vector<Relation> rules;

  static RulePool fromSets(const std::vector<RulesetKind>& kinds);
  static RulePool skOnly() { return fromSets({RulesetKind::SK}); }
  // Cancellation rules are the ones with an empty side.
  std::vector<const Relation*> cancellations() const;
};

// Repeatedly delete the leftmost occurrence of b_i d_i, d_i b_i or
// d_0 d_1 d_2 until none remains; only patterns present in the pool are
// used. Terminates since the length strictly decreases.
struct CancelResult {
  Word word;
  Derivation deriv;
};
CancelResult cancelNormalize(const Word& w, const RulePool& pool);
CancelResult cancelNormalize(const Word& w);  // full SK cancellation set

struct SearchBudget {
  std::size_t maxLen = 0;        // 0: max(|w1|,|w2|) + 6
  std::size_t maxNodes = 1000000;  // expanded-state cap across both frontiers
  std::size_t maxDepth = 100000;
  bool normalizeStates = true;   // deduplicate modulo cancelNormalize
};

enum class SearchStatus { Proved, Unknown };

struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  Derivation deriv;       // valid when Proved: start w1, end w2
  std::size_t expanded = 0;
};

// Bidirectional breadth-first search for a derivation w1 ~ w2 over the
// pool. Unknown is a budget exhaustion, never a disproof.
SearchResult searchEquiv(const Word& w1, const Word& w2, const RulePool& pool,
                         SearchBudget budget = {});

struct WitnessResult {
  SearchStatus status = SearchStatus::Unknown;
  Word witness;
  Derivation deriv;  // start w, end witness
  std::size_t expanded = 0;
};

// Search for a balanced word equivalent to w; a found witness certifies
// centrality of the element.
WitnessResult centralityWitness(const Word& w, const RulePool& pool,
                                SearchBudget budget = {});

}  // namespace threepage
