#include "threepage/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "threepage/balance.hpp"

namespace threepage {

std::vector<Arc> Embedding::pageArcs(int page) const {
  std::vector<Arc> out;
  for (const Arc& a : arcs)
    if (a.page == page) out.push_back(a);
  return out;
}

Embedding reconstruct(const Word& w) {
  Embedding e;
  e.word = w;
  for (int page = 0; page < 3; ++page) {
    std::vector<int> stack;  // open arc ends (1-based positions)
    for (std::size_t i = 0; i < w.size(); ++i) {
      int pt = static_cast<int>(i) + 1;
      switch (pageAction(w.at(i), page)) {
        case PageAction::None: break;
        case PageAction::Open: stack.push_back(pt); break;
        case PageAction::Close:
          if (stack.empty())
            throw ReconstructError("page " + std::to_string(page) + " projection closes an arc " +
                                       "with no open end at position " + std::to_string(pt),
                                   page, i);
          e.arcs.push_back({stack.back(), pt, page});
          stack.pop_back();
          break;
        case PageAction::CloseOpen:
          if (stack.empty())
            throw ReconstructError("page " + std::to_string(page) + " projection closes an arc " +
                                       "with no open end at position " + std::to_string(pt),
                                   page, i);
          e.arcs.push_back({stack.back(), pt, page});
          stack.pop_back();
          stack.push_back(pt);
          break;
      }
    }
    if (!stack.empty())
      throw ReconstructError("page " + std::to_string(page) + " projection leaves " +
                                 std::to_string(stack.size()) + " arcs open",
                             page, w.size());
  }
  return e;
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int traceCircles(const Embedding& e) {
  // Arc ends are nodes; each arc joins its two ends, and at every axis
  // point the incident ends pair up: a transit point joins its two ends,
  // a singular point joins the two ends lying in the same page.
  int n = static_cast<int>(e.arcs.size());
  if (n == 0) return 0;
  Dsu dsu(2 * n);  // end 2*a = lower (from), 2*a+1 = upper (to)
  for (int a = 0; a < n; ++a) dsu.unite(2 * a, 2 * a + 1);

  struct End {
    int node;
    int page;
  };
  std::vector<std::vector<End>> at(e.word.size() + 1);
  for (int a = 0; a < n; ++a) {
    at[e.arcs[a].from].push_back({2 * a, e.arcs[a].page});
    at[e.arcs[a].to].push_back({2 * a + 1, e.arcs[a].page});
  }
  for (std::size_t pt = 1; pt <= e.word.size(); ++pt) {
    const std::vector<End>& ends = at[pt];
    if (e.word.at(pt - 1).kind() == Kind::X) {
      // two branches, one per page
      for (int page = 0; page < 3; ++page) {
        std::vector<int> same;
        for (const End& x : ends)
          if (x.page == page) same.push_back(x.node);
        if (same.size() == 2) dsu.unite(same[0], same[1]);
      }
    } else if (ends.size() == 2) {
      dsu.unite(ends[0].node, ends[1].node);
    }
  }
  std::vector<int> roots;
  for (int a = 0; a < 2 * n; ++a) roots.push_back(dsu.find(a));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return static_cast<int>(roots.size());
}

ReconStats stats(const Embedding& e) {
  return ReconStats{e.axisPoints(), e.singularPoints(), traceCircles(e)};
}

std::string statsJson(const Embedding& e) {
  ReconStats s = stats(e);
  std::ostringstream out;
  out << "{\"axis_points\":" << s.axisPoints << ",\"singular_points\":" << s.singularPoints
      << ",\"circles\":" << s.circles << ",\"arcs\":{";
  for (int page = 0; page < 3; ++page) {
    if (page) out << ",";
    out << "\"" << page << "\":[";
    bool first = true;
    for (const Arc& a : e.pageArcs(page)) {
      if (!first) out << ",";
      first = false;
      out << "[" << a.from << "," << a.to << "]";
    }
    out << "]";
  }
  out << "}}";
  return out.str();
}

std::string renderSvg(const Embedding& e) {
  const int spacing = 40, margin = 60;
  int n = e.axisPoints();
  int width = margin * 2 + spacing * std::max(1, n - 1);
  int height = 400;
  int axisY = height / 2;
  auto px = [&](int pt) { return margin + spacing * (pt - 1); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <line x1=\"0\" y1=\"" << axisY << "\" x2=\"" << width << "\" y2=\"" << axisY
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  // page 0 above the axis; pages 1 and 2 below, page 2 dashed
  for (const Arc& a : e.arcs) {
    int x1 = px(a.from), x2 = px(a.to);
    int r = (x2 - x1) / 2;
    int sweep = a.page == 0 ? 1 : 0;
    const char* style = a.page == 0   ? "stroke=\"#1a55a0\""
                        : a.page == 1 ? "stroke=\"#a03a1a\""
                                      : "stroke=\"#3a7d2c\" stroke-dasharray=\"6 4\"";
    out << "  <path d=\"M " << x1 << " " << axisY << " A " << r << " " << r << " 0 0 " << sweep
        << " " << x2 << " " << axisY << "\" fill=\"none\" " << style
        << " stroke-width=\"1.5\"/>\n";
  }
  for (int pt = 1; pt <= n; ++pt) {
    bool singular = e.word.at(pt - 1).kind() == Kind::X;
    out << "  <circle cx=\"" << px(pt) << "\" cy=\"" << axisY << "\" r=\"" << (singular ? 6 : 3)
        << "\" fill=\"black\"/>\n";
    out << "  <text x=\"" << px(pt) << "\" y=\"" << axisY + 22
        << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"monospace\">"
        << e.word.at(pt - 1).str() << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

BalancedContext balancedContext(const Word& w) {
  BalancedContext ctx;
  BracketSignature sig[3];
  for (int p = 0; p < 3; ++p) sig[p] = signature(w, p);

  // Prefix: enough all-opening letters to cover every page deficit.
  // a0 opens pages 1 and 2, a1 opens pages 0 and 2.
  int alpha = std::max(sig[1].deficit, sig[2].deficit);
  int beta = std::max(sig[0].deficit, std::max(0, sig[2].deficit - alpha));
  ctx.prefix = Word::repeated(Letter::make(Kind::A, 0), alpha) +
               Word::repeated(Letter::make(Kind::A, 1), beta);

  // Suffix: greedily close the remaining surplus per page. c_s closes the
  // two pages other than s; b_s closes page s-1 while opening s+1, which
  // transfers a lone surplus.
  int f[3] = {beta + sig[0].surplus - sig[0].deficit, alpha + sig[1].surplus - sig[1].deficit,
              alpha + beta + sig[2].surplus - sig[2].deficit};
  int guard = 0;
  while (f[0] + f[1] + f[2] > 0 && ++guard < 10000) {
    if (f[0] > 0 && f[1] > 0) {
      ctx.suffix.push(Letter::make(Kind::C, 2));
      --f[0];
      --f[1];
    } else if (f[0] > 0 && f[2] > 0) {
      ctx.suffix.push(Letter::make(Kind::C, 1));
      --f[0];
      --f[2];
    } else if (f[1] > 0 && f[2] > 0) {
      ctx.suffix.push(Letter::make(Kind::C, 0));
      --f[1];
      --f[2];
    } else if (f[0] > 0) {
      ctx.suffix.push(Letter::make(Kind::B, 1));  // closes 0, opens 2
      --f[0];
      ++f[2];
    } else if (f[1] > 0) {
      ctx.suffix.push(Letter::make(Kind::B, 2));  // closes 1, opens 0
      --f[1];
      ++f[0];
    } else {
      ctx.suffix.push(Letter::make(Kind::B, 0));  // closes 2, opens 1
      --f[2];
      ++f[1];
    }
  }
  return ctx;
}

}  // namespace threepage
