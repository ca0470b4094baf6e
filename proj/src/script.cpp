#include "threepage/script.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "threepage/buildconfig.hpp"

namespace threepage {

namespace {

std::string trim(std::string s) {
  auto issp = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  std::size_t a = 0, b = s.size();
  while (a < b && issp(s[a])) ++a;
  while (b > a && issp(s[b - 1])) --b;
  return s.substr(a, b - a);
}

}  // namespace

std::string Citation::text() const {
  std::string s = family.label();
  if (witness) s += " w=[" + witness->str() + "] i=" + std::to_string(witnessPage);
  return s;
}

RulesetSelection RulesetSelection::parse(std::string_view spec) {
  RulesetSelection sel;
  std::string cur;
  auto commit = [&] {
    std::string t = trim(cur);
    cur.clear();
    if (t.empty()) return;
    if (t == "sk") sel.sk = true;
    else if (t == "fg") sel.fg = true;
    else if (t == "derived") sel.derived = true;
    else throw ParseError("unknown ruleset '" + t + "'", 0);
  };
  for (char c : spec) {
    if (c == '+' || c == ',') commit();
    else cur += c;
  }
  commit();
  if (!sel.sk && !sel.fg && !sel.derived) throw ParseError("empty ruleset", 0);
  return sel;
}

std::string RulesetSelection::str() const {
  std::string s;
  auto add = [&](const char* n) {
    if (!s.empty()) s += "+";
    s += n;
  };
  if (sk) add("sk");
  if (fg) add("fg");
  if (derived) add("derived");
  return s;
}

std::vector<RulesetKind> RulesetSelection::kinds() const {
  std::vector<RulesetKind> v;
  if (sk) v.push_back(RulesetKind::SK);
  if (fg) v.push_back(RulesetKind::FG);
  if (derived) v.push_back(RulesetKind::Derived);
  return v;
}

namespace {

Citation parseCitation(const std::string& tok, const RulesetSelection& rules, std::size_t lineNo) {
  Citation c;
  std::string t = trim(tok);
  if (t.empty() || t[0] != '(')
    throw ParseError("line " + std::to_string(lineNo) + ": bad citation '" + t + "'", lineNo);
  std::size_t close = t.find(')');
  if (close == std::string::npos)
    throw ParseError("line " + std::to_string(lineNo) + ": bad citation '" + t + "'", lineNo);
  std::string inner = t.substr(1, close - 1);
  bool prime = !inner.empty() && inner.back() == '\'';
  if (prime) inner.pop_back();
  int num = 0;
  try {
    num = std::stoi(inner);
  } catch (...) {
    throw ParseError("line " + std::to_string(lineNo) + ": bad citation '" + t + "'", lineNo);
  }
  c.family = FamilyRef{num, prime};

  std::string rest = trim(t.substr(close + 1));
  if (!rest.empty()) {
    std::size_t wpos = rest.find("w=[");
    std::size_t wend = rest.find(']');
    std::size_t ipos = rest.find("i=");
    if (wpos == std::string::npos || wend == std::string::npos || ipos == std::string::npos)
      throw ParseError("line " + std::to_string(lineNo) + ": bad witness syntax '" + rest + "'", lineNo);
    c.witness = Word::parse(rest.substr(wpos + 3, wend - wpos - 3));
    c.witnessPage = std::stoi(rest.substr(ipos + 2));
    if (c.witnessPage < 0 || c.witnessPage > 2)
      throw ParseError("line " + std::to_string(lineNo) + ": witness page out of range", lineNo);
  }

  // Resolve the citation against the active rule tables.
  bool known = false;
  if (!prime && num >= 1 && num <= 10 && (rules.sk || rules.fg)) known = num != 6 || rules.sk;
  if (prime && num == 6 && rules.fg) known = true;
  if (!prime && num >= 25 && num <= 45 && rules.derived) known = true;
  if (prime && num >= 33 && num <= 40 && rules.derived) known = true;
  if (!known)
    throw ParseError("line " + std::to_string(lineNo) + ": unknown citation " + c.family.label() +
                         " for ruleset " + rules.str(),
                     lineNo);
  if (c.witness && !(prime && num >= 33 && num <= 40))
    throw ParseError("line " + std::to_string(lineNo) + ": witness given for non-parametric " +
                         c.family.label(),
                     lineNo);
  return c;
}

}  // namespace

Script parseScript(std::string_view text) {
  Script s;
  s.rules = RulesetSelection{true, false, true};  // default sk+derived
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineNo = 0;
  bool ended = false;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = raw;
    if (std::size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (ended)
      throw ParseError("line " + std::to_string(lineNo) + ": content after end", lineNo);
    if (line.rfind("script ", 0) == 0) {
      s.name = trim(line.substr(7));
      continue;
    }
    if (line.rfind("rules ", 0) == 0) {
      s.rules = RulesetSelection::parse(trim(line.substr(6)));
      continue;
    }
    if (line == "end") {
      ended = true;
      continue;
    }
    std::size_t sep = line.find(';');
    if (sep == std::string::npos)
      throw ParseError("line " + std::to_string(lineNo) + ": expected '<word> ; <citations>'", lineNo);
    ScriptLine sl;
    sl.lineNo = lineNo;
    sl.word = Word::parse(line.substr(0, sep));
    std::string cits = trim(line.substr(sep + 1));
    if (cits == "start") {
      if (!s.lines.empty())
        throw ParseError("line " + std::to_string(lineNo) + ": duplicate start line", lineNo);
    } else {
      if (s.lines.empty())
        throw ParseError("line " + std::to_string(lineNo) + ": first line must cite 'start'", lineNo);
      std::string cur;
      for (char c : cits) {
        if (c == ',') {
          if (!trim(cur).empty()) sl.cites.push_back(parseCitation(cur, s.rules, lineNo));
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!trim(cur).empty()) sl.cites.push_back(parseCitation(cur, s.rules, lineNo));
      if (sl.cites.empty())
        throw ParseError("line " + std::to_string(lineNo) + ": step cites no rules", lineNo);
    }
    s.lines.push_back(std::move(sl));
  }
  if (s.lines.empty()) throw ParseError("script has no lines", 0);
  if (!ended) throw ParseError("missing 'end'", lineNo);
  return s;
}

std::string scriptToText(const Script& s) {
  std::string out;
  out += "script " + s.name + "\n";
  out += "rules " + s.rules.str() + "\n";
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    out += s.lines[i].word.str() + " ; ";
    if (i == 0) {
      out += "start";
    } else {
      for (std::size_t j = 0; j < s.lines[i].cites.size(); ++j) {
        if (j) out += ",";
        out += s.lines[i].cites[j].text();
      }
    }
    out += "\n";
  }
  out += "end\n";
  return out;
}

Script derivationToScript(const Derivation& d, const std::string& name,
                          const RulesetSelection& rules) {
  Script s;
  s.name = name;
  s.rules = rules;
  s.lines.push_back({d.start, {}, 0});
  for (const Derivation::Entry& e : d.entries) {
    Citation c;
    c.family = e.step.rel.id.family;
    if (e.step.rel.paramWitness) {
      c.witness = e.step.rel.paramWitness;
      c.witnessPage = e.step.rel.paramWitnessPage;
    }
    s.lines.push_back({e.result, {c}, 0});
  }
  return s;
}

namespace {

// Rule pool for one step: all fixed instances of the cited plain families
// plus the explicitly witnessed parametric instances.
std::vector<Relation> stepPool(const std::vector<Citation>& cites,
                               const RulesetSelection& rules, std::string& err) {
  std::vector<Relation> pool;
  const RuleTable& t = RuleTable::instance();
  for (const Citation& c : cites) {
    if (c.witness) {
      FamilyRef plain{c.family.number, false};
      int relIndex = parametricIndexFromWitnessPage(plain, c.witnessPage);
      int variants = c.family.number == 37 ? 2 : 1;
      try {
        for (int v = 0; v < variants; ++v)
          pool.push_back(instantiateParametric(parametricFamily(plain, v, relIndex), *c.witness));
      } catch (const CertificateError& e) {
        err = e.what();
        return {};
      }
      continue;
    }
    for (RulesetKind k : rules.kinds())
      for (const Relation* r : t.family(k, c.family)) pool.push_back(*r);
  }
  // FG and SK share most families; drop duplicate lhs/rhs pairs.
  std::sort(pool.begin(), pool.end(), [](const Relation& a, const Relation& b) {
    return std::tie(a.lhs, a.rhs) < std::tie(b.lhs, b.rhs);
  });
  pool.erase(std::unique(pool.begin(), pool.end(),
                         [](const Relation& a, const Relation& b) {
                           return a.lhs == b.lhs && a.rhs == b.rhs;
                         }),
             pool.end());
  return pool;
}

struct StepEdge {
  Word parent;
  RewriteStep step;
};

Derivation unwindElementary(const Word& state, const std::unordered_map<Word, StepEdge>& edges,
                            const Word& root) {
  std::vector<const StepEdge*> path;
  Word cur = state;
  while (cur != root) {
    const StepEdge& e = edges.at(cur);
    path.push_back(&e);
    cur = e.parent;
  }
  Derivation d;
  d.start = root;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    Word next = applyStep(d.finalWord(), (*it)->step);
    d.entries.push_back({(*it)->step, next});
  }
  return d;
}

Derivation reverseElementary(const Derivation& d) {
  Derivation out;
  out.start = d.finalWord();
  for (std::size_t idx = d.entries.size(); idx-- > 0;) {
    RewriteStep s = d.entries[idx].step;
    s.reverse = !s.reverse;
    Word prev = idx == 0 ? d.start : d.entries[idx - 1].result;
    out.entries.push_back({s, prev});
  }
  return out;
}

}  // namespace

StepCheck checkStep(const Word& from, const Word& to, const std::vector<Citation>& cites,
                    const RulesetSelection& rules, int stepBudget) {
  StepCheck res;
  std::string err;
  std::vector<Relation> pool = stepPool(cites, rules, err);
  if (!err.empty()) {
    res.error = err;
    return res;
  }
  if (from == to) {
    res.ok = true;
    res.proof.start = from;
    return res;
  }

  // Level-synchronized bidirectional search so that any accepted proof has
  // at most stepBudget elementary applications.
  const std::size_t nodeCap = 400000;
  std::unordered_map<Word, std::size_t> depth[2];
  std::unordered_map<Word, StepEdge> edges[2];
  std::deque<Word> level[2];
  level[0].push_back(from);
  level[1].push_back(to);
  depth[0][from] = 0;
  depth[1][to] = 0;
  std::size_t levelDone[2] = {0, 0};
  std::size_t expanded = 0;

  auto finish = [&](const Word& meet) {
    Derivation fwd = unwindElementary(meet, edges[0], from);
    Derivation bwd = unwindElementary(meet, edges[1], to);
    res.proof = fwd;
    res.proof.append(reverseElementary(bwd));
    res.steps = res.proof.entries.size();
    res.ok = true;
    res.expanded = expanded;
  };

  while (levelDone[0] + levelDone[1] < static_cast<std::size_t>(stepBudget)) {
    int side = levelDone[0] <= levelDone[1] ? 0 : 1;
    if (level[side].empty()) side = 1 - side;
    if (level[side].empty()) break;
    std::deque<Word> next;
    for (const Word& cur : level[side]) {
      if (++expanded > nodeCap) {
        res.expanded = expanded;
        res.error = "search cap reached";
        return res;
      }
      for (const Relation& r : pool) {
        for (int rev = 0; rev < 2; ++rev) {
          const Word& src = rev ? r.rhs : r.lhs;
          for (std::size_t pos : cur.occurrences(src)) {
            RewriteStep s{pos, r, rev != 0};
            Word nw = cur.replaced(pos, src.size(), s.dst());
            if (depth[side].contains(nw)) continue;
            depth[side][nw] = levelDone[side] + 1;
            edges[side][nw] = StepEdge{cur, s};
            auto other = depth[1 - side].find(nw);
            if (other != depth[1 - side].end() &&
                levelDone[side] + 1 + other->second <= static_cast<std::size_t>(stepBudget)) {
              finish(nw);
              return res;
            }
            next.push_back(nw);
          }
        }
      }
    }
    level[side] = std::move(next);
    ++levelDone[side];
  }
  res.expanded = expanded;
  res.error = "no proof within " + std::to_string(stepBudget) + " elementary steps (searched " +
              std::to_string(expanded) + " states)";
  return res;
}

ScriptReport checkScript(const Script& s, int stepBudget) {
  ScriptReport rep;
  rep.name = s.name;
  rep.ok = true;
  for (std::size_t i = 1; i < s.lines.size(); ++i) {
    StepCheck sc = checkStep(s.lines[i - 1].word, s.lines[i].word, s.lines[i].cites, s.rules,
                             stepBudget);
    LineResult lr;
    lr.lineNo = s.lines[i].lineNo;
    lr.ok = sc.ok;
    lr.steps = sc.steps;
    lr.expanded = sc.expanded;
    lr.error = sc.error;
    rep.totalSteps += sc.steps;
    if (!sc.ok) rep.ok = false;
    rep.lines.push_back(std::move(lr));
  }
  return rep;
}

std::size_t CorpusReport::failed() const {
  std::size_t n = 0;
  for (const ScriptReport& r : scripts)
    if (!r.ok) ++n;
  return n;
}

CorpusReport runCorpus(const std::filesystem::path& dir, int jobs, int stepBudget) {
  namespace fs = std::filesystem;
  CorpusReport rep;
  auto t0 = std::chrono::steady_clock::now();

  std::vector<fs::path> files;
  if (fs::exists(dir))
    for (const auto& e : fs::recursive_directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".script") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  rep.scripts.resize(files.size());
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(files.size() ? files.size() : 1)));

  std::atomic<std::size_t> nextIdx{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = nextIdx.fetch_add(1);
      if (i >= files.size()) return;
      std::ifstream in(files[i]);
      std::stringstream ss;
      ss << in.rdbuf();
      try {
        Script s = parseScript(ss.str());
        if (s.name.empty()) s.name = files[i].stem().string();
        rep.scripts[i] = checkScript(s, stepBudget);
      } catch (const std::exception& e) {
        rep.scripts[i].name = files[i].filename().string();
        rep.scripts[i].ok = false;
        rep.scripts[i].error = e.what();
      }
    }
  };
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  rep.ok = !rep.scripts.empty();
  for (const ScriptReport& r : rep.scripts)
    if (!r.ok) rep.ok = false;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::filesystem::path defaultCorpusDir() {
  if (const char* env = std::getenv("THREEPAGE_CORPUS")) return env;
  return THREEPAGE_CORPUS_DIR;
}

}  // namespace threepage
