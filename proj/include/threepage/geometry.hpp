#pragma once

#include "threepage/word.hpp"

namespace threepage {

class ReconstructError : public std::runtime_error {
public:
  ReconstructError(const std::string& msg, int page, std::size_t position)
      : std::runtime_error(msg), page_(page), position_(position) {}
  int page() const { return page_; }
  std::size_t position() const { return position_; }

private:
  int page_;
  std::size_t position_;
};

struct Arc {
  int from = 0, to = 0;  // 1-based axis point indices, from < to
  int page = 0;
};

// The decoded form of a balanced word: axis points carrying their letters
// and the per-page matched arcs. Transit points have two arc ends in two
// different pages, singular points four (two in each page adjacent to the
// letter's own page).
struct Embedding {
  Word word;
  std::vector<Arc> arcs;

  int axisPoints() const { return static_cast<int>(word.size()); }
  int singularPoints() const { return word.countX(); }
  std::vector<Arc> pageArcs(int page) const;
};

Embedding reconstruct(const Word& w);  // throws ReconstructError on unbalanced input

int traceCircles(const Embedding& e);

struct ReconStats {
  int axisPoints = 0;
  int singularPoints = 0;
  int circles = 0;
  friend bool operator==(const ReconStats&, const ReconStats&) = default;
};

ReconStats stats(const Embedding& e);
std::string statsJson(const Embedding& e);
std::string renderSvg(const Embedding& e);

// A context (u, v) with u w v balanced, built from the word's bracket
// signatures; two words with equal signatures get the same context. Used
// to embed relation sides into a common balanced host.
struct BalancedContext {
  Word prefix, suffix;
};
BalancedContext balancedContext(const Word& w);

}  // namespace threepage
