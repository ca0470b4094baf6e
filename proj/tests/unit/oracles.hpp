// Independent test oracles, kept deliberately separate from the library's
// implementation paths: the bracket table is spelled out letter by letter,
// arcs are matched by recursive descent instead of a stack, and circles
// are traced by walking instead of union-find.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "threepage/word.hpp"

namespace oracle {

inline int mod3(int v) { return ((v % 3) + 3) % 3; }

// The substitution rules of the balance criterion, written out directly:
// for page i, letters of page i vanish, a_{i+1}, a_{i-1}, b_{i-1}, d_{i+1}
// become '(', b_{i+1}, c_{i+1}, c_{i-1}, d_{i-1} become ')', and x_{i+1},
// x_{i-1} become ")(".
inline std::string substitute(const threepage::Word& w, int i) {
  std::map<std::string, std::string> table;
  for (int d : {-1, 1}) {
    int j = mod3(i + d);
    table["a" + std::to_string(j)] = "(";
    table["x" + std::to_string(j)] = ")(";
    table["c" + std::to_string(j)] = ")";
  }
  table["b" + std::to_string(mod3(i - 1))] = "(";
  table["d" + std::to_string(mod3(i + 1))] = "(";
  table["b" + std::to_string(mod3(i + 1))] = ")";
  table["d" + std::to_string(mod3(i - 1))] = ")";
  for (char k : {'a', 'b', 'c', 'd', 'x'}) table[std::string{k} + std::to_string(i)] = "";

  std::string out;
  for (std::size_t p = 0; p < w.size(); ++p) out += table.at(w.at(p).str());
  return out;
}

inline bool bracketsBalanced(const std::string& s) {
  int run = 0;
  for (char c : s) {
    run += c == '(' ? 1 : -1;
    if (run < 0) return false;
  }
  return run == 0;
}

inline bool isBalanced(const threepage::Word& w) {
  for (int i = 0; i < 3; ++i)
    if (!bracketsBalanced(substitute(w, i))) return false;
  return true;
}

// Arc matching by recursive descent over the projection of one page.
// Returns pairs of 1-based axis positions. x letters contribute a close
// then an open at the same position.
struct Token {
  int pos;
  bool open;
};

inline std::vector<Token> tokens(const threepage::Word& w, int page) {
  std::vector<Token> ts;
  for (std::size_t p = 0; p < w.size(); ++p) {
    std::string sub = substitute(w.sub(p, 1), page);
    for (char c : sub) ts.push_back({static_cast<int>(p) + 1, c == '('});
  }
  return ts;
}

inline bool matchRange(const std::vector<Token>& ts, int lo, int hi,
                       std::vector<std::pair<int, int>>& arcs) {
  if (lo > hi) return true;
  if (!ts[lo].open) return false;
  int depthCount = 0;
  for (int j = lo; j <= hi; ++j) {
    depthCount += ts[j].open ? 1 : -1;
    if (depthCount == 0) {
      arcs.push_back({ts[lo].pos, ts[j].pos});
      return matchRange(ts, lo + 1, j - 1, arcs) && matchRange(ts, j + 1, hi, arcs);
    }
  }
  return false;
}

// Circle count: walk arc ends, joining by arc, by transit point, or by
// same-page branch at a singular point.
inline int circles(const threepage::Word& w) {
  struct End {
    int arc;
    int side;  // 0 = from, 1 = to
    int pos;
    int page;
  };
  std::vector<std::pair<int, int>> arcs[3];
  for (int page = 0; page < 3; ++page) {
    auto ts = tokens(w, page);
    std::vector<std::pair<int, int>> out;
    if (!matchRange(ts, 0, static_cast<int>(ts.size()) - 1, out)) return -1;
    arcs[page] = out;
  }
  std::vector<End> ends;
  int arcId = 0;
  for (int page = 0; page < 3; ++page)
    for (auto [a, b] : arcs[page]) {
      ends.push_back({arcId, 0, a, page});
      ends.push_back({arcId, 1, b, page});
      ++arcId;
    }
  // partner via axis point
  std::vector<int> mate(ends.size(), -1);
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (ends[i].pos != ends[j].pos) continue;
      bool singular = w.at(ends[i].pos - 1).kind() == threepage::Kind::X;
      if (singular && ends[i].page != ends[j].page) continue;
      if (mate[i] == -1 && mate[j] == -1) {
        mate[i] = static_cast<int>(j);
        mate[j] = static_cast<int>(i);
      }
    }
  // walk
  std::vector<bool> seen(ends.size(), false);
  int count = 0;
  for (std::size_t s = 0; s < ends.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::size_t cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      // cross the arc
      std::size_t other = 0;
      for (std::size_t j = 0; j < ends.size(); ++j)
        if (ends[j].arc == ends[cur].arc && j != cur) other = j;
      seen[other] = true;
      cur = static_cast<std::size_t>(mate[other]);
    }
  }
  return count;
}

}  // namespace oracle
