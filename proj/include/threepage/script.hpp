#pragma once

#include <filesystem>
#include <optional>

#include "threepage/rewrite.hpp"

namespace threepage {

// One cited rule in a script step. Parametric citations carry the witness
// word and the page its balance certificate is for.
struct Citation {
  FamilyRef family;
  std::optional<Word> witness;
  int witnessPage = -1;

  std::string text() const;
};

struct RulesetSelection {
  bool sk = false, fg = false, derived = false;

  static RulesetSelection parse(std::string_view spec);  // "sk", "sk+derived", ...
  std::string str() const;
  std::vector<RulesetKind> kinds() const;
};

struct ScriptLine {
  Word word;
  std::vector<Citation> cites;  // empty on the start line
  std::size_t lineNo = 0;
};

// Line-oriented derivation script:
//   script <name>
//   rules <ruleset>
//   <word> ; start
//   <word> ; <citations>
//   end
// '#' starts a comment. A citation is "(4)", "(34')" or a witnessed
// parametric citation "(34') w=[d2 c2] i=1" where i names the page of the
// witness's balance certificate.
struct Script {
  std::string name;
  RulesetSelection rules;
  std::vector<ScriptLine> lines;
};

Script parseScript(std::string_view text);
std::string scriptToText(const Script& s);

// Serialize an engine derivation as a script (one line per elementary step).
Script derivationToScript(const Derivation& d, const std::string& name,
                          const RulesetSelection& rules);

struct StepCheck {
  bool ok = false;
  std::size_t steps = 0;     // elementary applications of the found proof
  std::size_t expanded = 0;  // searched states on failure
  std::string error;
  Derivation proof;
};

// Find a proof of `from ~ to` of at most stepBudget elementary applications
// using only instances of the cited families.
StepCheck checkStep(const Word& from, const Word& to, const std::vector<Citation>& cites,
                    const RulesetSelection& rules, int stepBudget = 6);

struct LineResult {
  std::size_t lineNo = 0;
  bool ok = false;
  std::size_t steps = 0;
  std::size_t expanded = 0;
  std::string error;
};

struct ScriptReport {
  std::string name;
  bool ok = false;
  std::vector<LineResult> lines;
  std::size_t totalSteps = 0;
  std::string error;  // parse-level failure
};

ScriptReport checkScript(const Script& s, int stepBudget = 6);

struct CorpusReport {
  bool ok = false;
  std::vector<ScriptReport> scripts;
  double seconds = 0.0;
  std::size_t failed() const;
};

// Check every *.script file under dir (recursively); jobs = 0 picks the
// hardware concurrency.
CorpusReport runCorpus(const std::filesystem::path& dir, int jobs = 0, int stepBudget = 6);

// THREEPAGE_CORPUS env var, or the build-time default.
std::filesystem::path defaultCorpusDir();

}  // namespace threepage
