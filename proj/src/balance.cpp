#include "threepage/balance.hpp"

namespace threepage {

PageAction pageAction(Letter l, int page) {
  int s = l.page();
  if (s == page) return PageAction::None;
  switch (l.kind()) {
    case Kind::A: return PageAction::Open;
    case Kind::C: return PageAction::Close;
    case Kind::X: return PageAction::CloseOpen;
    case Kind::B: return page == pageAdd(s, 1) ? PageAction::Open : PageAction::Close;
    case Kind::D: return page == pageAdd(s, -1) ? PageAction::Open : PageAction::Close;
  }
  return PageAction::None;
}

bool BracketProfile::balanced() const {
  int run = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == Bracket::Open) ++run;
    else if (tokens[i] == Bracket::Close) --run;
    if (run < 0) return false;
  }
  return run == 0;
}

namespace {
void pushToken(BracketProfile& p, Bracket t, int& run) {
  if (t == Bracket::Open) ++run;
  else if (t == Bracket::Close) --run;
  p.tokens.push_back(t);
  p.dif.push_back(run);
  if (run > p.depth) p.depth = run;
}
}  // namespace

BracketProfile bracketProjection(const Word& w, int page) {
  BracketProfile p;
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (pageAction(w.at(i), page)) {
      case PageAction::None: break;
      case PageAction::Open: pushToken(p, Bracket::Open, run); break;
      case PageAction::Close: pushToken(p, Bracket::Close, run); break;
      case PageAction::CloseOpen:
        pushToken(p, Bracket::Close, run);
        pushToken(p, Bracket::Open, run);
        break;
    }
  }
  return p;
}

bool isBalanced(const Word& w, int page) { return bracketProjection(w, page).balanced(); }

bool isBalanced(const Word& w) {
  return isBalanced(w, 0) && isBalanced(w, 1) && isBalanced(w, 2);
}

int depth(const Word& w, int page) { return bracketProjection(w, page).depth; }

std::string bracketString(const BracketProfile& p) {
  std::string s;
  for (Bracket t : p.tokens)
    s += t == Bracket::Open ? '(' : t == Bracket::Close ? ')' : '*';
  return s;
}

BracketSignature signature(const Word& w, int page) {
  int run = 0, deficit = 0;
  BracketProfile p = bracketProjection(w, page);
  for (std::size_t i = 0; i < p.tokens.size(); ++i) {
    if (p.tokens[i] == Bracket::Open) ++run;
    else --run;
    if (-run > deficit) deficit = -run;
  }
  return BracketSignature{deficit, run + deficit};
}

BracketProfile muEncoding(const Word& w, int page) {
  BracketProfile p;
  int run = 0;
  Letter open = Letter::make(Kind::B, pageAdd(page, -1));
  Letter close = Letter::make(Kind::D, pageAdd(page, -1));
  for (std::size_t i = 0; i < w.size(); ++i) {
    Letter l = w.at(i);
    if (l == open) pushToken(p, Bracket::Open, run);
    else if (l == close) pushToken(p, Bracket::Close, run);
    else pushToken(p, Bracket::Bullet, run);
  }
  return p;
}

int muDepth(const Word& w, int page) { return muEncoding(w, page).depth; }

}  // namespace threepage
