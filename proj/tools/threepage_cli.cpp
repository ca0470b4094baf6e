// Command-line front end: balance checking, rule tables, equivalence
// search, centrality, derivation checking, tangle compilation and
// embedding reconstruction.
//
// Exit codes: 0 success, 1 checked failure (Unknown result, unbalanced
// word, failing script), 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "threepage/balance.hpp"
#include "threepage/decompose.hpp"
#include "threepage/geometry.hpp"
#include "threepage/rewrite.hpp"
#include "threepage/script.hpp"
#include "threepage/tangle.hpp"

using namespace threepage;

namespace {

RulePool poolFor(const std::string& sets) {
  return RulePool::fromSets(RulesetSelection::parse(sets).kinds());
}

int runValidate(const std::string& text, bool json) {
  Word w = Word::parse(text);
  bool all = true;
  std::ostringstream pages;
  for (int p = 0; p < 3; ++p) {
    BracketProfile pr = bracketProjection(w, p);
    bool ok = pr.balanced();
    all = all && ok;
    if (json) {
      pages << (p ? "," : "") << "\"" << p << "\":{\"balanced\":" << (ok ? "true" : "false")
            << ",\"projection\":\"" << bracketString(pr) << "\",\"depth\":" << pr.depth << "}";
    } else {
      std::cout << "page " << p << ": " << (ok ? "balanced" : "unbalanced") << "  "
                << bracketString(pr) << "\n";
    }
  }
  if (json) {
    std::cout << "{\"word\":\"" << w.str() << "\",\"balanced\":" << (all ? "true" : "false")
              << ",\"pages\":{" << pages.str() << "}}\n";
  } else {
    std::cout << "balanced: " << (all ? "yes" : "no") << "\n";
  }
  return all ? 0 : 1;
}

int runBalance(const std::string& text, int page) {
  Word w = Word::parse(text);
  BracketProfile pr = bracketProjection(w, page);
  std::cout << "projection: " << bracketString(pr) << "\n";
  std::cout << "dif:";
  for (int d : pr.dif) std::cout << " " << d;
  std::cout << "\ndepth: " << pr.depth << "\n";
  std::cout << (pr.balanced() ? "balanced" : "unbalanced") << "\n";
  return pr.balanced() ? 0 : 1;
}

int runRules(const std::string& sets, bool count, bool dump) {
  RulesetSelection sel = RulesetSelection::parse(sets);
  const RuleTable& t = RuleTable::instance();
  for (RulesetKind k : sel.kinds()) {
    const char* name = k == RulesetKind::SK ? "sk" : k == RulesetKind::FG ? "fg" : "derived";
    if (count || !dump) {
      if (k == RulesetKind::Derived)
        std::cout << name << ": " << t.rawCount(k) << " instances\n";
      else
        std::cout << name << ": " << t.rawCount(k) << " instances (" << t.officialCount(k)
                  << " official)\n";
    }
    if (dump)
      for (const Relation& r : t.set(k)) std::cout << r.dumpLine() << "\n";
  }
  return 0;
}

int runEquiv(const std::string& t1, const std::string& t2, const std::string& sets,
             std::size_t nodes, std::size_t len, std::size_t depthCap, bool exactStates,
             bool emitScript) {
  Word w1 = Word::parse(t1), w2 = Word::parse(t2);
  SearchBudget b;
  b.maxNodes = nodes;
  if (len) b.maxLen = len;
  b.maxDepth = depthCap;
  b.normalizeStates = !exactStates;
  SearchResult r = searchEquiv(w1, w2, poolFor(sets), b);
  if (r.status == SearchStatus::Proved) {
    std::cout << "proved in " << r.deriv.entries.size() << " elementary steps ("
              << r.expanded << " states expanded)\n";
    if (emitScript)
      std::cout << scriptToText(derivationToScript(r.deriv, "equiv", RulesetSelection::parse(sets)));
    else
      for (const auto& e : r.deriv.entries)
        std::cout << "  " << e.step.rel.label() << (e.step.reverse ? " <- " : " -> ") << " @"
                  << e.step.pos << "  " << e.result.str() << "\n";
    return 0;
  }
  std::cout << "unknown (budget exhausted after " << r.expanded << " states)\n";
  return 1;
}

int runCentral(const std::string& text, const std::string& sets, std::size_t nodes,
               std::size_t len) {
  Word w = Word::parse(text);
  SearchBudget b;
  b.maxNodes = nodes;
  if (len) b.maxLen = len;
  WitnessResult r = centralityWitness(w, poolFor(sets), b);
  if (r.status == SearchStatus::Proved) {
    std::cout << "central: balanced witness " << r.witness.str() << " ("
              << r.deriv.entries.size() << " steps)\n";
    return 0;
  }
  std::cout << "unknown (budget exhausted after " << r.expanded << " states)\n";
  return 1;
}

void printScriptReport(const ScriptReport& r, bool verbose) {
  std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
  if (!r.error.empty()) std::cout << "  [" << r.error << "]";
  std::cout << "\n";
  if (!verbose) return;
  for (const LineResult& l : r.lines) {
    std::cout << "  line " << l.lineNo << ": " << (l.ok ? "ok" : "FAIL") << " (" << l.steps
              << " steps)";
    if (!l.error.empty()) std::cout << "  " << l.error;
    std::cout << "\n";
  }
}

int runCheck(const std::string& file, bool corpus, int jobs, int budget, bool verbose) {
  if (corpus) {
    CorpusReport rep = runCorpus(defaultCorpusDir(), jobs, budget);
    for (const ScriptReport& r : rep.scripts) printScriptReport(r, verbose && !r.ok);
    std::cout << rep.scripts.size() - rep.failed() << "/" << rep.scripts.size()
              << " scripts passed in " << rep.seconds << "s\n";
    return rep.ok ? 0 : 1;
  }
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  Script s = parseScript(ss.str());
  if (s.name.empty()) s.name = file;
  ScriptReport rep = checkScript(s, budget);
  printScriptReport(rep, true);
  return rep.ok ? 0 : 1;
}

int runCompile(const std::string& tokens, bool pad) {
  MorseWord m = parseMorse(tokens);
  Word w = compile(m);
  if (pad) w = almostBalancePad(w);
  std::cout << w.str() << "\n";
  return 0;
}

int runReconstruct(const std::string& text, bool json, const std::string& svgPath) {
  Word w = Word::parse(text);
  Embedding e;
  try {
    e = reconstruct(w);
  } catch (const ReconstructError& ex) {
    std::cerr << "not balanced: " << ex.what() << "\n";
    return 1;
  }
  if (!svgPath.empty()) {
    std::ofstream out(svgPath);
    out << renderSvg(e);
  }
  if (json) {
    std::cout << statsJson(e) << "\n";
  } else {
    ReconStats s = stats(e);
    std::cout << "axis points: " << s.axisPoints << "\nsingular points: " << s.singularPoints
              << "\ncircles: " << s.circles << "\n";
  }
  return 0;
}

int runDecompose(const std::string& text, int page) {
  Word w = Word::parse(text);
  StarDecomposition d = starDecompose(w, page);
  std::cout << "factors:";
  for (const Word& f : d.factors) std::cout << " [" << f.str() << "]";
  std::cout << "\nderivation: " << d.deriv.entries.size() << " steps\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-page embedding toolkit for singular knots"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker thread cap for corpus runs");

  std::string word, word2, sets = "sk", file, svgPath, tokens;
  int page = 0, budget = 6;
  std::size_t nodes = 1000000, len = 0, depthCap = 100000;
  bool json = false, count = false, dump = false, corpus = false, pad = false, verbose = false,
       exactStates = false, emitScript = false;

  auto* validate = app.add_subcommand("validate", "parse a word and report balance per page");
  validate->add_option("word", word)->required();
  validate->add_flag("--json", json);

  auto* balance = app.add_subcommand("balance", "projection, dif profile and depth for one page");
  balance->add_option("word", word)->required();
  balance->add_option("-i,--page", page, "page index 0..2")->required()->check(CLI::Range(0, 2));

  auto* rules = app.add_subcommand("rules", "show the built-in rule sets");
  rules->add_option("--set", sets, "sk, fg, derived or combinations like sk+derived")->required();
  rules->add_flag("--count", count);
  rules->add_flag("--dump", dump);

  auto* equiv = app.add_subcommand("equiv", "search for a derivation connecting two words");
  equiv->add_option("word1", word)->required();
  equiv->add_option("word2", word2)->required();
  equiv->add_option("--set", sets);
  equiv->add_option("--budget-nodes", nodes);
  equiv->add_option("--budget-len", len);
  equiv->add_option("--budget-depth", depthCap);
  equiv->add_flag("--exact-states", exactStates, "do not deduplicate states modulo cancellation");
  equiv->add_flag("--script", emitScript, "print the found derivation as a checkable script");

  auto* central = app.add_subcommand("central", "search for a balanced word equivalent to the input");
  central->add_option("word", word)->required();
  central->add_option("--set", sets);
  central->add_option("--budget-nodes", nodes);
  central->add_option("--budget-len", len);

  auto* check = app.add_subcommand("check", "verify a derivation script, or the whole corpus");
  check->add_option("file", file);
  check->add_flag("--corpus", corpus);
  check->add_option("--step-budget", budget);
  check->add_flag("-v,--verbose", verbose);

  auto* comp = app.add_subcommand("compile", "compile tangle generator tokens into a word");
  comp->add_option("tokens", tokens)->required();
  comp->add_flag("--pad", pad, "apply the almost-balance padding");

  auto* recon = app.add_subcommand("reconstruct", "decode a balanced word into its embedding");
  recon->add_option("word", word)->required();
  recon->add_flag("--json", json);
  recon->add_option("--svg", svgPath, "write an SVG rendering to this file");

  auto* decomp = app.add_subcommand("decompose", "star-decompose an i-balanced word");
  decomp->add_option("word", word)->required();
  decomp->add_option("-i,--page", page)->required()->check(CLI::Range(0, 2));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return runValidate(word, json);
    if (balance->parsed()) return runBalance(word, page);
    if (rules->parsed()) return runRules(sets, count, dump);
    if (equiv->parsed())
      return runEquiv(word, word2, sets, nodes, len, depthCap, exactStates, emitScript);
    if (central->parsed()) return runCentral(word, sets, nodes, len);
    if (check->parsed()) {
      if (!corpus && file.empty()) {
        std::cerr << "check: give a script file or --corpus\n";
        return 2;
      }
      return runCheck(file, corpus, jobs, budget, verbose);
    }
    if (comp->parsed()) return runCompile(tokens, pad);
    if (recon->parsed()) return runReconstruct(word, json, svgPath);
    if (decomp->parsed()) return runDecompose(word, page);
  } catch (const ParseError& e) {
    std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
