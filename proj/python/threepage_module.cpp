#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "threepage/balance.hpp"
#include "threepage/decompose.hpp"
#include "threepage/geometry.hpp"
#include "threepage/rewrite.hpp"
#include "threepage/script.hpp"
#include "threepage/tangle.hpp"

namespace py = pybind11;
using namespace threepage;

namespace {

RulePool poolFor(const std::string& sets) {
  return RulePool::fromSets(RulesetSelection::parse(sets).kinds());
}

SearchBudget makeBudget(std::size_t nodes, std::size_t len, bool normalize) {
  SearchBudget b;
  b.maxNodes = nodes;
  if (len) b.maxLen = len;
  b.normalizeStates = normalize;
  return b;
}

py::list derivationSteps(const Derivation& d) {
  py::list out;
  for (const auto& e : d.entries) {
    py::dict step;
    step["rule"] = e.step.rel.label();
    step["pos"] = e.step.pos;
    step["reverse"] = e.step.reverse;
    step["word"] = e.result.str();
    out.append(step);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_threepage, m) {
  m.doc() = "three-page embedding toolkit for singular knots";

  m.def("parse_word", [](const std::string& s) { return Word::parse(s).str(); },
        "parse and canonicalize a word");
  m.def("count_x", [](const std::string& s) { return Word::parse(s).countX(); });

  m.def("bracket_projection", [](const std::string& s, int page) {
    return bracketString(bracketProjection(Word::parse(s), page));
  });
  m.def("is_balanced",
        [](const std::string& s, int page) {
          Word w = Word::parse(s);
          return page < 0 ? isBalanced(w) : isBalanced(w, page);
        },
        py::arg("word"), py::arg("page") = -1);
  m.def("depth", [](const std::string& s, int page) { return depth(Word::parse(s), page); });

  m.def("rule_counts", [](const std::string& sets) {
    py::dict out;
    const RuleTable& t = RuleTable::instance();
    for (RulesetKind k : RulesetSelection::parse(sets).kinds()) {
      const char* name = k == RulesetKind::SK ? "sk" : k == RulesetKind::FG ? "fg" : "derived";
      py::dict d;
      d["raw"] = t.rawCount(k);
      d["official"] = t.officialCount(k);
      out[name] = d;
    }
    return out;
  });
  m.def("rule_dump", [](const std::string& sets) {
    py::list out;
    const RuleTable& t = RuleTable::instance();
    for (RulesetKind k : RulesetSelection::parse(sets).kinds())
      for (const Relation& r : t.set(k)) out.append(r.dumpLine());
    return out;
  });

  m.def(
      "search_equiv",
      [](const std::string& w1, const std::string& w2, const std::string& sets,
         std::size_t nodes, std::size_t len, bool normalize) {
        SearchResult r = searchEquiv(Word::parse(w1), Word::parse(w2), poolFor(sets),
                                     makeBudget(nodes, len, normalize));
        py::dict out;
        out["proved"] = r.status == SearchStatus::Proved;
        out["expanded"] = r.expanded;
        out["steps"] = derivationSteps(r.deriv);
        return out;
      },
      py::arg("w1"), py::arg("w2"), py::arg("sets") = "sk", py::arg("nodes") = 1000000,
      py::arg("len") = 0, py::arg("normalize") = true);

  m.def(
      "centrality_witness",
      [](const std::string& w, const std::string& sets, std::size_t nodes, std::size_t len) {
        WitnessResult r =
            centralityWitness(Word::parse(w), poolFor(sets), makeBudget(nodes, len, true));
        py::dict out;
        out["proved"] = r.status == SearchStatus::Proved;
        out["witness"] = r.status == SearchStatus::Proved ? r.witness.str() : std::string();
        out["expanded"] = r.expanded;
        return out;
      },
      py::arg("word"), py::arg("sets") = "sk", py::arg("nodes") = 1000000, py::arg("len") = 0);

  m.def("cancel_normalize",
        [](const std::string& w) { return cancelNormalize(Word::parse(w)).word.str(); });

  m.def("compile_morse",
        [](const std::string& tokens, bool pad) {
          Word w = compile(parseMorse(tokens));
          if (pad) w = almostBalancePad(w);
          return w.str();
        },
        py::arg("tokens"), py::arg("pad") = false);
  m.def("theta_shift", [](const std::string& tokens, int k) {
    return morseStr(thetaShift(parseMorse(tokens), k));
  });
  m.def("rho_shift",
        [](const std::string& w, int k) { return rhoShift(Word::parse(w), k).str(); });
  m.def("knot_closure_pad", [](const std::string& w, int l) {
    return knotClosurePad(Word::parse(w), l).str();
  });

  m.def("reconstruct", [](const std::string& s) {
    Embedding e = reconstruct(Word::parse(s));
    ReconStats st = stats(e);
    py::dict out;
    out["axis_points"] = st.axisPoints;
    out["singular_points"] = st.singularPoints;
    out["circles"] = st.circles;
    py::dict arcs;
    for (int p = 0; p < 3; ++p) {
      py::list l;
      for (const Arc& a : e.pageArcs(p)) l.append(py::make_tuple(a.from, a.to));
      arcs[py::str(std::to_string(p))] = l;
    }
    out["arcs"] = arcs;
    return out;
  });
  m.def("render_svg", [](const std::string& s) { return renderSvg(reconstruct(Word::parse(s))); });

  m.def("star_decompose", [](const std::string& s, int page) {
    StarDecomposition d = starDecompose(Word::parse(s), page);
    py::list fs;
    for (const Word& f : d.factors) fs.append(f.str());
    py::dict out;
    out["factors"] = fs;
    out["steps"] = derivationSteps(d.deriv);
    return out;
  });

  m.def("check_script_text", [](const std::string& text, int budget) {
    ScriptReport r = checkScript(parseScript(text), budget);
    py::dict out;
    out["name"] = r.name;
    out["ok"] = r.ok;
    out["total_steps"] = r.totalSteps;
    return out;
  }, py::arg("text"), py::arg("budget") = 6);

  m.def(
      "run_corpus",
      [](const std::string& dir, int jobs) {
        CorpusReport rep = runCorpus(dir.empty() ? defaultCorpusDir() : dir, jobs);
        py::dict out;
        out["ok"] = rep.ok;
        out["total"] = rep.scripts.size();
        out["failed"] = rep.failed();
        out["seconds"] = rep.seconds;
        py::list failures;
        for (const ScriptReport& r : rep.scripts)
          if (!r.ok) failures.append(r.name);
        out["failures"] = failures;
        return out;
      },
      py::arg("dir") = "", py::arg("jobs") = 0);

  m.def("corpus_dir", [] { return defaultCorpusDir().string(); });
}
