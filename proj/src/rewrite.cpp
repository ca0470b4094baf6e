#include "threepage/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "threepage/balance.hpp"

namespace threepage {

Word applyStep(const Word& w, const RewriteStep& s) {
  if (!w.matchesAt(s.pos, s.src()))
    throw StepError("relation " + s.rel.label() + " does not match '" + w.str() +
                    "' at position " + std::to_string(s.pos));
  return w.replaced(s.pos, s.src().size(), s.dst());
}

bool Derivation::replayOk() const {
  Word w = start;
  for (const Entry& e : entries) {
    try {
      w = applyStep(w, e.step);
    } catch (const StepError&) {
      return false;
    }
    if (w != e.result) return false;
  }
  return true;
}

void Derivation::append(const Derivation& tail) {
  for (const Entry& e : tail.entries) entries.push_back(e);
}

RulePool RulePool::fromSets(const std::vector<RulesetKind>& kinds) {
  RulePool p;
  const RuleTable& t = RuleTable::instance();
  for (RulesetKind k : kinds)
    for (const Relation& r : t.set(k)) p.rules.push_back(r);
  return p;
}

std::vector<const Relation*> RulePool::cancellations() const {
  std::vector<const Relation*> out;
  for (const Relation& r : rules)
    if (r.rhs.empty() && !r.lhs.empty()) out.push_back(&r);
  return out;
}

CancelResult cancelNormalize(const Word& w, const RulePool& pool) {
  CancelResult res;
  res.word = w;
  res.deriv.start = w;
  auto cancels = pool.cancellations();
  for (;;) {
    std::size_t bestPos = res.word.size() + 1;
    const Relation* bestRel = nullptr;
    for (const Relation* r : cancels) {
      auto occ = res.word.occurrences(r->lhs);
      if (!occ.empty() && occ.front() < bestPos) {
        bestPos = occ.front();
        bestRel = r;
      }
    }
    if (!bestRel) break;
    RewriteStep s{bestPos, *bestRel, false};
    res.word = applyStep(res.word, s);
    res.deriv.entries.push_back({s, res.word});
  }
  return res;
}

CancelResult cancelNormalize(const Word& w) {
  static const RulePool sk = RulePool::skOnly();
  return cancelNormalize(w, sk);
}

namespace {

struct Edge {
  Word parent;
  RewriteStep step;       // applied to parent (before normalization)
  Derivation normSteps;   // cancellations from the raw result to the state
  bool fromStart = true;  // which search direction owns the edge
};

struct Frontier {
  std::deque<Word> queue;
  std::unordered_map<Word, std::size_t> depth;
};

// Rebuild the elementary chain from the start of a direction to `state`.
Derivation unwind(const Word& state,
                  const std::unordered_map<Word, Edge>& edges, const Word& root,
                  const Derivation& rootNorm) {
  std::vector<const Edge*> path;
  Word cur = state;
  while (cur != root) {
    auto it = edges.find(cur);
    const Edge& e = it->second;
    path.push_back(&e);
    cur = e.parent;
  }
  Derivation d = rootNorm;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Edge& e = **it;
    Word raw = applyStep(d.finalWord(), e.step);
    d.entries.push_back({e.step, raw});
    d.append(e.normSteps);
  }
  return d;
}

// Reverse a derivation: every step flips direction.
Derivation reversed(const Derivation& d) {
  Derivation out;
  out.start = d.finalWord();
  Word cur = out.start;
  for (auto it = d.entries.rbegin(); it != d.entries.rend(); ++it) {
    std::size_t idx = static_cast<std::size_t>(it - d.entries.rbegin());
    Word prev = (idx + 1 < d.entries.size() + 0u)
                    ? (it + 1)->result
                    : d.start;
    RewriteStep s = it->step;
    s.reverse = !s.reverse;
    out.entries.push_back({s, prev});
    cur = prev;
  }
  return out;
}

}  // namespace

SearchResult searchEquiv(const Word& w1, const Word& w2, const RulePool& pool,
                         SearchBudget budget) {
  SearchResult res;
  if (budget.maxLen == 0) budget.maxLen = std::max(w1.size(), w2.size()) + 6;

  auto normalize = [&](const Word& w) -> CancelResult {
    if (budget.normalizeStates) return cancelNormalize(w, pool);
    CancelResult c;
    c.word = w;
    c.deriv.start = w;
    return c;
  };

  CancelResult n1 = normalize(w1), n2 = normalize(w2);
  if (n1.word == n2.word) {
    res.status = SearchStatus::Proved;
    res.deriv = n1.deriv;
    res.deriv.append(reversed(n2.deriv));
    res.status = SearchStatus::Proved;
    return res;
  }

  // side 0 grows from w1, side 1 from w2.
  Frontier fr[2];
  std::unordered_map<Word, Edge> edges[2];
  fr[0].queue.push_back(n1.word);
  fr[0].depth[n1.word] = 0;
  fr[1].queue.push_back(n2.word);
  fr[1].depth[n2.word] = 0;

  std::size_t expanded = 0;
  auto finish = [&](const Word& meet) {
    Derivation fwd = unwind(meet, edges[0], n1.word, n1.deriv);
    Derivation bwd = unwind(meet, edges[1], n2.word, n2.deriv);
    res.deriv = fwd;
    res.deriv.append(reversed(bwd));
    res.status = SearchStatus::Proved;
    res.expanded = expanded;
  };

  while (!fr[0].queue.empty() && !fr[1].queue.empty()) {
    int side = fr[0].queue.size() <= fr[1].queue.size() ? 0 : 1;
    Word cur = fr[side].queue.front();
    fr[side].queue.pop_front();
    std::size_t d = fr[side].depth[cur];
    if (d >= budget.maxDepth) continue;
    if (++expanded > budget.maxNodes) {
      res.expanded = expanded;
      return res;
    }
    for (const Relation& r : pool.rules) {
      for (int rev = 0; rev < 2; ++rev) {
        const Word& src = rev ? r.rhs : r.lhs;
        for (std::size_t pos : cur.occurrences(src)) {
          RewriteStep s{pos, r, rev != 0};
          Word raw = cur.replaced(pos, src.size(), s.dst());
          if (raw.size() > budget.maxLen) continue;
          CancelResult cn = normalize(raw);
          const Word& next = cn.word;
          if (fr[side].depth.contains(next)) continue;
          fr[side].depth[next] = d + 1;
          edges[side][next] = Edge{cur, s, cn.deriv, side == 0};
          if (fr[1 - side].depth.contains(next)) {
            finish(next);
            return res;
          }
          fr[side].queue.push_back(next);
        }
      }
    }
  }
  res.expanded = expanded;
  return res;
}

WitnessResult centralityWitness(const Word& w, const RulePool& pool,
                                SearchBudget budget) {
  WitnessResult res;
  if (budget.maxLen == 0) budget.maxLen = w.size() + 8;
  if (isBalanced(w)) {
    res.status = SearchStatus::Proved;
    res.witness = w;
    res.deriv.start = w;
    return res;
  }

  CancelResult n0 = cancelNormalize(w, pool);
  std::unordered_map<Word, Edge> edges;
  std::unordered_map<Word, std::size_t> depth;
  std::deque<Word> queue;
  depth[n0.word] = 0;
  queue.push_back(n0.word);

  auto finish = [&](const Word& state) {
    res.status = SearchStatus::Proved;
    res.witness = state;
    res.deriv = unwind(state, edges, n0.word, n0.deriv);
  };
  if (isBalanced(n0.word)) {
    finish(n0.word);
    return res;
  }

  std::size_t expanded = 0;
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    std::size_t d = depth[cur];
    if (d >= budget.maxDepth) continue;
    if (++expanded > budget.maxNodes) break;
    for (const Relation& r : pool.rules) {
      for (int rev = 0; rev < 2; ++rev) {
        const Word& src = rev ? r.rhs : r.lhs;
        for (std::size_t pos : cur.occurrences(src)) {
          RewriteStep s{pos, r, rev != 0};
          Word raw = cur.replaced(pos, src.size(), s.dst());
          if (raw.size() > budget.maxLen) continue;
          CancelResult cn = budget.normalizeStates
                                ? cancelNormalize(raw, pool)
                                : CancelResult{raw, Derivation{raw, {}}};
          const Word& next = cn.word;
          if (depth.contains(next)) continue;
          depth[next] = d + 1;
          edges[next] = Edge{cur, s, cn.deriv, true};
          if (isBalanced(next)) {
            finish(next);
            res.expanded = expanded;
            return res;
          }
          queue.push_back(next);
        }
      }
    }
  }
  res.expanded = expanded;
  return res;
}

}  // namespace threepage
