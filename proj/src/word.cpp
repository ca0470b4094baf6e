#include "threepage/word.hpp"

namespace threepage {

namespace {
int kindIndex(char c) {
  switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'c': return 2;
    case 'd': return 3;
    case 'x': return 4;
    default: return -1;
  }
}
}  // namespace

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  bool sawUnit = false;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '1') {
      sawUnit = true;
      ++i;
      continue;
    }
    int k = kindIndex(c);
    if (k < 0) throw ParseError(std::string("unknown letter kind '") + c + "'", i);
    if (i + 1 >= text.size()) throw ParseError("missing page digit", i + 1);
    char d = text[i + 1];
    if (d < '0' || d > '2') throw ParseError(std::string("page digit out of range '") + d + "'", i + 1);
    w.push(Letter::make(static_cast<Kind>(k), d - '0'));
    i += 2;
  }
  if (sawUnit && !w.empty())
    throw ParseError("the unit token '1' must stand alone", 0);
  return w;
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string out;
  out.reserve(size() * 3);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += at(i).str();
  }
  return out;
}

std::vector<std::size_t> Word::occurrences(const Word& pattern) const {
  std::vector<std::size_t> out;
  if (pattern.empty()) {
    for (std::size_t i = 0; i <= size(); ++i) out.push_back(i);
    return out;
  }
  if (pattern.size() > size()) return out;
  for (std::size_t i = 0; i + pattern.size() <= size(); ++i)
    if (matchesAt(i, pattern)) out.push_back(i);
  return out;
}

int Word::countX() const {
  int n = 0;
  for (std::size_t i = 0; i < size(); ++i)
    if (at(i).kind() == Kind::X) ++n;
  return n;
}

}  // namespace threepage
