#pragma once

#include "operadix/json.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace operadix::cli {

enum ExitCode { Success = 0, VerificationFailure = 1, UsageError = 2 };

class UsageFailure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "3" is the closed colour 3, "u3" the open one.
inline Colour parseColour(const std::string& text) {
  std::string s = text;
  bool open = false;
  if (!s.empty() && s[0] == 'u') {
    open = true;
    s = s.substr(1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageFailure("bad colour '" + text + "'");
  return {std::stoi(s), open};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

// "c,o:o" -> inputs and output openness.
inline std::pair<std::vector<bool>, bool> parseComponent(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageFailure("component '" + text + "' needs inputs:output");
  auto letter = [&](const std::string& t) {
    if (t == "c") return false;
    if (t == "o") return true;
    throw UsageFailure("bad colour '" + t + "' in component '" + text + "'");
  };
  std::vector<bool> inputs;
  for (const auto& t : split(text.substr(0, colon), ',')) inputs.push_back(letter(t));
  return {inputs, letter(text.substr(colon + 1))};
}

inline int parseSlot(const std::string& text, const IntegerString& f) {
  std::string s = text;
  bool open = false;
  if (!s.empty() && s[0] == 'u') {
    open = true;
    s = s.substr(1);
  }
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageFailure("bad slot '" + text + "'");
  const int i = std::stoi(s);
  if (i < 1 || i > arity(f)) throw UsageFailure("slot '" + text + "' out of range for " + print(f));
  if (open != isOpenLabel(f, i))
    throw UsageFailure("slot '" + text + "' has the wrong decoration for " + print(f));
  return i;
}

inline std::vector<int> parsePermutation(const std::string& text) {
  std::vector<int> sigma;
  for (const auto& t : split(text, ',')) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
      throw UsageFailure("bad permutation entry '" + t + "'");
    sigma.push_back(std::stoi(t));
  }
  return sigma;
}

inline json::Json treeJson(const TreeNode& n) {
  json::Json ch = json::Json::array();
  for (const auto& c : n.children) ch.push_back(treeJson(c));
  switch (n.kind) {
    case TreeNode::Kind::Terminal: return {{"kind", "terminal"}};
    case TreeNode::Kind::Unlabelled: return {{"kind", "unlabelled"}, {"children", ch}};
    case TreeNode::Kind::Labelled:
      return {{"kind", "labelled"}, {"label", n.label}, {"open", n.open}, {"children", ch}};
  }
  return {};
}

inline std::string showColours(const IntegerString& x) {
  const Signature s = colours(x);
  std::string out = "(";
  for (std::size_t i = 0; i < s.inputs.size(); ++i) out += (i ? "," : "") + toString(s.inputs[i]);
  return out + ";" + toString(s.output) + ")";
}

inline FiniteMonoid parseMonoid(const std::string& text) {
  if (text == "endo2") return FiniteMonoid::endomorphismsOfTwoPoints();
  if (text.rfind("cyclic:", 0) == 0) {
    const std::string n = text.substr(7);
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || std::stoi(n) < 1)
      throw UsageFailure("bad monoid '" + text + "'");
    return FiniteMonoid::cyclic(std::stoi(n));
  }
  throw UsageFailure("unknown monoid '" + text + "' (cyclic:<n> or endo2)");
}

inline DGCoalgebra parseCoalgebra(const std::string& text, std::vector<DGCoalgebra>* factors = nullptr) {
  const auto parts = split(text, 'x');
  if (parts.empty()) throw UsageFailure("empty coalgebra");
  std::optional<DGCoalgebra> C;
  int tag = 0;
  for (const auto& p : parts) {
    ++tag;
    DGCoalgebra F;
    const std::string t = std::to_string(tag);
    if (p.size() >= 2 && p[0] == 'S' && p.find_first_not_of("0123456789", 1) == std::string::npos)
      F = sphereCoalgebra(std::stoi(p.substr(1)), "s" + t);
    else if (p.size() >= 2 && p[0] == 'D' && p.find_first_not_of("0123456789", 1) == std::string::npos)
      F = diskPairCoalgebra(std::stoi(p.substr(1)) - 1, "a" + t, "b" + t);
    else
      throw UsageFailure("unknown coalgebra factor '" + p + "' (S<n> or D<n>)");
    if (factors) factors->push_back(F);
    C = C ? tensorProduct(*C, F) : F;
  }
  return *C;
}

inline Bialgebra parseBialgebra(const std::string& text) {
  auto order = [&](const std::string& n) {
    if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos || std::stoi(n) < 1)
      throw UsageFailure("bad bialgebra '" + text + "'");
    return std::stoi(n);
  };
  if (text.rfind("group:", 0) == 0) return groupBialgebra(order(text.substr(6)));
  if (text.rfind("functions:", 0) == 0) return functionBialgebra(order(text.substr(10)));
  throw UsageFailure("unknown bialgebra '" + text + "' (group:<n> or functions:<n>)");
}

struct Globals {
  int m = 2;
  std::uint64_t seed = 1;
  int truncate = 5;
  bool json = false;
};

inline std::uint64_t defaultSeed() {
  if (const char* env = std::getenv("OPERADIX_SEED")) {
    const std::string s = env;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageFailure("OPERADIX_SEED must be a nonnegative integer, got '" + s + "'");
    return std::stoull(s);
  }
  return 1;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Globals g;
  try {
    g.seed = defaultSeed();
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
  CLI::App app{"Exact workbench for the lattice path, complete graph and surjection models of the Swiss cheese operad",
               "operadix"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--m", g.m, "filtration level / ambient dimension")->check(CLI::Range(1, 16));
  app.add_option("--seed", g.seed, "random seed (default $OPERADIX_SEED or 1)");
  app.add_option("--truncate", g.truncate, "truncation degree")->check(CLI::Range(0, 12));
  app.add_flag("--json", g.json, "machine-readable output");

  std::function<int()> action;

  // parse
  std::vector<std::string> parseInputs;
  std::string parseFile;
  auto* cParse = app.add_subcommand("parse", "parse and print integer-strings");
  cParse->add_option("strings", parseInputs, "integer-strings");
  cParse->add_option("--file", parseFile, "file with one string per line")->check(CLI::ExistingFile);
  cParse->callback([&] {
    action = [&] {
      std::vector<std::string> items = parseInputs;
      if (!parseFile.empty()) {
        std::ifstream in(parseFile);
        for (std::string line; std::getline(in, line);)
          if (line.find_first_not_of(" \t\r") != std::string::npos) items.push_back(line);
      }
      if (items.empty()) throw UsageFailure("parse needs at least one string");
      json::Json arr = json::Json::array();
      for (const auto& s : items) {
        const IntegerString x = parse(s);
        if (g.json)
          arr.push_back(json::string(x));
        else
          out << print(x) << " " << showColours(x) << "\n";
      }
      if (g.json) out << arr.dump(2) << "\n";
      return int(Success);
    };
  });

  // compose
  std::string fText, gText, slotText;
  bool asSurjections = false;
  auto* cCompose = app.add_subcommand("compose", "partial composition f o_slot g");
  cCompose->add_option("f", fText)->required();
  cCompose->add_option("--at", slotText, "slot, e.g. 2 or u2")->required();
  cCompose->add_option("g", gText)->required();
  cCompose->add_flag("--surjection", asSurjections, "compose in the surjection dg-operad");
  cCompose->callback([&] {
    action = [&] {
      const IntegerString f = parse(fText), h = parse(gText);
      const int i = parseSlot(slotText, f);
      if (asSurjections) {
        if (!isSurjectionBasis(f) || !isSurjectionBasis(h))
          throw UsageFailure("--surjection needs bar-free nondegenerate strings");
        const SurjComb r = rsCompose(f, i, h);
        if (g.json) {
          out << json::linComb(r).dump(2) << "\n";
        } else {
          if (r.isZero()) out << "0";
          bool first = true;
          for (const auto& [u, c] : r) {
            out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            const Int mag = c < 0 ? Int(-c) : c;
            if (mag != 1) out << mag.str() << "*";
            out << print(u);
            first = false;
          }
          out << "\n";
        }
      } else {
        const IntegerString r = compose(f, i, h);
        out << (g.json ? json::string(r).dump(2) : print(r)) << "\n";
      }
      return int(Success);
    };
  });

  // act
  std::string sigmaText, actText;
  auto* cAct = app.add_subcommand("act", "symmetric group action; sigma lists the images of 1..k");
  cAct->add_option("sigma", sigmaText)->required();
  cAct->add_option("x", actText)->required();
  cAct->callback([&] {
    action = [&] {
      const IntegerString r = symAct(parsePermutation(sigmaText), parse(actText));
      out << (g.json ? json::string(r).dump(2) : print(r)) << "\n";
      return int(Success);
    };
  });

  // filtration
  std::string filtText;
  auto* cFilt = app.add_subcommand("filtration", "complexity counters and filtration membership");
  cFilt->add_option("x", filtText)->required();
  cFilt->callback([&] {
    action = [&] {
      const IntegerString x = parse(filtText);
      json::Json pairs = json::Json::array();
      for (int i = 1; i <= arity(x); ++i)
        for (int j = i + 1; j <= arity(x); ++j)
          pairs.push_back({{"i", i}, {"j", j}, {"c", cij(x, i, j)}, {"cPrime", cPrimeij(x, i, j)},
                           {"cDblPrime", cDblPrimeij(x, i, j)}});
      auto least = [&](FiltrationVariant v) {
        int m = 1;
        while (!inFiltration(x, m, v)) ++m;
        return m;
      };
      const json::Json j = {{"string", print(x)},
                            {"pairs", pairs},
                            {"m", g.m},
                            {"inFiltration", inFiltration(x, g.m)},
                            {"inPrimedFiltration", inFiltration(x, g.m, FiltrationVariant::Primed)},
                            {"leastM", least(FiltrationVariant::Standard)},
                            {"leastPrimedM", least(FiltrationVariant::Primed)}};
      if (g.json) {
        out << j.dump(2) << "\n";
      } else {
        out << print(x) << "\n";
        for (const auto& p : pairs)
          out << "  c" << p["i"] << p["j"] << " = " << p["c"] << "  c' = " << p["cPrime"] << "  c'' = "
              << p["cDblPrime"] << "\n";
        out << "  in RL_" << g.m << ": " << (j["inFiltration"].get<bool>() ? "yes" : "no")
            << "  (primed: " << (j["inPrimedFiltration"].get<bool>() ? "yes" : "no") << ")\n";
        out << "  least m: " << j["leastM"] << "  (primed: " << j["leastPrimedM"] << ")\n";
      }
      return int(Success);
    };
  });

  // q
  std::string qText;
  auto* cQ = app.add_subcommand("q", "image in the complete graph operad");
  cQ->add_option("x", qText)->required();
  cQ->callback([&] {
    action = [&] {
      const GraphElement a = q(parse(qText));
      out << (g.json ? json::graph(a).dump(2) : describe(a)) << "\n";
      return int(Success);
    };
  });

  // enumerate
  std::string inputsText, outputText, variantText = "standard";
  auto* cEnum = app.add_subcommand("enumerate", "all strings of given colours in RL_m");
  cEnum->add_option("--inputs", inputsText, "comma-separated colours, e.g. 1,u0");
  cEnum->add_option("--output", outputText, "output colour, e.g. u2")->required();
  cEnum->add_option("--variant", variantText)->check(CLI::IsMember({"standard", "primed"}));
  cEnum->callback([&] {
    action = [&] {
      std::vector<Colour> inputs;
      for (const auto& t : split(inputsText, ',')) inputs.push_back(parseColour(t));
      const auto v = variantText == "primed" ? FiltrationVariant::Primed : FiltrationVariant::Standard;
      const auto list = enumerate(inputs, parseColour(outputText), g.m, v);
      if (g.json) {
        json::Json arr = json::Json::array();
        for (const auto& x : list) arr.push_back(print(x));
        out << json::Json{{"count", list.size()}, {"strings", arr}}.dump(2) << "\n";
      } else {
        for (const auto& x : list) out << print(x) << "\n";
        out << list.size() << " strings\n";
      }
      return int(Success);
    };
  });

  // tree
  std::string treeText;
  auto* cTree = app.add_subcommand("tree", "planar tree view of an element of RL_2");
  cTree->add_option("x", treeText)->required();
  cTree->callback([&] {
    action = [&] {
      const RootedTree t = treeView(parse(treeText));
      if (g.json) {
        json::Json top = json::Json::array();
        for (const auto& n : t.top) top.push_back(treeJson(n));
        out << json::Json{{"outputOpen", t.outputOpen}, {"children", top}}.dump(2) << "\n";
      } else {
        out << drawTree(t);
      }
      return int(Success);
    };
  });

  // homology (always JSON)
  std::string componentText;
  auto* cHom = app.add_subcommand("homology", "integral homology of a surjection component (JSON)");
  cHom->add_option("--component", componentText, "e.g. c,c:c")->required();
  cHom->callback([&] {
    action = [&] {
      const auto [inputs, output] = parseComponent(componentText);
      const ChainComplex K = componentComplex(inputs, output, g.m);
      json::Json j = {{"component", componentText}, {"m", g.m}};
      j.update(json::complexSummary(K));
      out << j.dump(2) << "\n";
      return int(Success);
    };
  });

  // cells
  std::string cellColours = "c,c:c";
  int cellCount = 5;
  auto* cCells = app.add_subcommand("cells", "random cube configurations and their cells");
  cCells->add_option("--colours", cellColours, "component, e.g. c,o:o");
  cCells->add_option("--count", cellCount)->check(CLI::Range(1, 100000));
  cCells->callback([&] {
    action = [&] {
      const auto [inputs, output] = parseComponent(cellColours);
      if (!output)
        for (bool o : inputs)
          if (o) throw UsageFailure("open inputs need an open output");
      std::mt19937_64 rng(g.seed);
      json::Json arr = json::Json::array();
      for (int s = 0; s < cellCount; ++s) {
        const CubeConfig x = randomConfig(rng, g.m, inputs, output);
        const GraphElement a = cellIndex(x);
        if (g.json)
          arr.push_back({{"config", json::config(x)}, {"cell", json::graph(a)}});
        else
          out << describe(x) << "\n  cell " << describe(a) << "\n";
      }
      if (g.json) out << arr.dump(2) << "\n";
      return int(Success);
    };
  });

  // loops
  std::string monoidText = "cyclic:2", subText;
  auto* cLoops = app.add_subcommand("loops", "cosimplicial loop model of a monoid pair");
  cLoops->add_option("--monoid", monoidText, "cyclic:<n> or endo2");
  cLoops->add_option("--sub", subText, "submonoid elements, comma-separated (default: the unit)");
  cLoops->callback([&] {
    action = [&] {
      const FiniteMonoid M = parseMonoid(monoidText);
      std::vector<int> sub{M.unit()};
      for (const auto& t : split(subText, ',')) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
          throw UsageFailure("bad submonoid element '" + t + "'");
        sub.push_back(std::stoi(t));
      }
      const LoopModel L(M, sub);
      json::Json levels = json::Json::array();
      auto complex = [&](bool relative) {
        // cochains in level k sit in homological degree -k
        ChainComplex K;
        for (int k = 0; k <= g.truncate; ++k)
          for (const auto& c : L.levelBasis(k, relative)) K.bases[-k].push_back(toString(c, M));
        for (int k = 0; k < g.truncate; ++k) {
          const auto src = L.levelBasis(k, relative), dst = L.levelBasis(k + 1, relative);
          std::map<LoopCell, std::size_t> idx;
          for (std::size_t t = 0; t < dst.size(); ++t) idx[dst[t]] = t;
          IntMatrix D(dst.size(), src.size());
          for (std::size_t c = 0; c < src.size(); ++c)
            for (const auto& [v, e] : L.differential(src[c])) D(idx.at(v), c) += e;
          K.boundary[-k] = D;
        }
        return K;
      };
      for (int k = 0; k <= g.truncate; ++k)
        levels.push_back({{"level", k},
                          {"cells", L.levelBasis(k, false).size()},
                          {"normalized", L.normalizedBasis(k, false).size()},
                          {"relativeCells", L.levelBasis(k, true).size()},
                          {"relativeNormalized", L.normalizedBasis(k, true).size()}});
      auto hom = [&](bool relative) {
        json::Json hs = json::Json::array();
        for (const auto& h : allHomology(complex(relative)))
          if (h.degree > -g.truncate) hs.push_back(json::homologyGroup(h));
        return hs;
      };
      json::Json subJ = json::Json::array();
      for (int a : L.submonoid()) subJ.push_back(M.name(a));
      const json::Json j = {{"monoid", json::monoid(M)},
                            {"submonoid", subJ},
                            {"levels", levels},
                            {"cohomology", hom(false)},
                            {"relativeCohomology", hom(true)}};
      if (g.json) {
        out << j.dump(2) << "\n";
      } else {
        out << "monoid " << monoidText << ", submonoid {";
        for (std::size_t t = 0; t < subJ.size(); ++t) out << (t ? "," : "") << subJ[t].get<std::string>();
        out << "}\n";
        for (const auto& l : levels)
          out << "  level " << l["level"] << ": " << l["normalized"] << " normalized cells, "
              << l["relativeNormalized"] << " relative\n";
        auto show = [&](const json::Json& hs, const char* name) {
          out << "  " << name << ":";
          for (const auto& h : hs) {
            out << " H" << -h["degree"].get<int>() << "=Z^" << h["rank"];
            for (const auto& t : h["torsion"]) out << "+Z/" << t;
          }
          out << "\n";
        };
        show(j["cohomology"], "cohomology");
        show(j["relativeCohomology"], "relative cohomology");
      }
      return int(Success);
    };
  });

  // cobar
  std::string coalgebraText, comoduleText = "trivial", bialgebraText, comoduleAlgebraText = "trivial";
  bool randomInstance = false;
  auto* cCobar = app.add_subcommand("cobar", "cobar and relative cobar constructions");
  cCobar->add_option("--coalgebra", coalgebraText, "tensor product of S<n> and D<n> factors, e.g. S2xS3");
  cCobar->add_option("--comodule", comoduleText, "trivial, regular or factor")
      ->check(CLI::IsMember({"trivial", "regular", "factor"}));
  cCobar->add_flag("--random", randomInstance, "seeded random instance");
  cCobar->add_option("--bialgebra", bialgebraText, "ungraded bialgebra: group:<n> or functions:<n>");
  cCobar->add_option("--comodule-algebra", comoduleAlgebraText, "trivial, regular or subgroup:<step>");
  cCobar->callback([&] {
    action = [&] {
      const int chosen = int(!coalgebraText.empty()) + int(randomInstance) + int(!bialgebraText.empty());
      if (chosen != 1) throw UsageFailure("give exactly one of --coalgebra, --random, --bialgebra");
      json::Json j;
      if (!bialgebraText.empty()) {
        const Bialgebra B = parseBialgebra(bialgebraText);
        ComoduleAlgebra C;
        if (comoduleAlgebraText == "trivial") C = trivialComoduleAlgebra(B);
        else if (comoduleAlgebraText == "regular") C = regularComoduleAlgebra(B);
        else if (comoduleAlgebraText.rfind("subgroup:", 0) == 0 && bialgebraText.rfind("group:", 0) == 0)
          C = subgroupComoduleAlgebra(B.rank(), std::stoi(comoduleAlgebraText.substr(9)));
        else throw UsageFailure("bad --comodule-algebra '" + comoduleAlgebraText + "'");
        if (auto c = checkComoduleAlgebra(B, C); !c.ok) throw UsageFailure(c.detail);
        j = {{"bialgebra", json::bialgebra(B)},
             {"unreduced", json::complexSummary(unreducedCobar(B, g.truncate), 1)},
             {"unreducedRelative", json::complexSummary(unreducedRelativeCobar(B, C, g.truncate), 1)}};
        for (const char* key : {"unreduced", "unreducedRelative"}) {
          json::Json kept = json::Json::array();
          for (const auto& h : j[key]["homology"])
            if (h["degree"].get<int>() > -g.truncate) kept.push_back(h);
          j[key]["homology"] = kept;
        }
      } else {
        DGCoalgebra C;
        DGComodule N;
        std::string desc;
        if (randomInstance) {
          std::mt19937_64 rng(g.seed);
          const CobarInstance inst = randomCobarInstance(rng);
          C = inst.C;
          N = inst.N;
          desc = inst.description;
        } else {
          std::vector<DGCoalgebra> factors;
          C = parseCoalgebra(coalgebraText, &factors);
          desc = coalgebraText + " " + comoduleText;
          if (comoduleText == "trivial") N = trivialComodule();
          else if (comoduleText == "regular") N = regularComodule(C);
          else if (factors.size() == 2) N = factorComodule(factors[0], factors[1]);
          else throw UsageFailure("--comodule factor needs a coalgebra with two factors");
        }
        if (!C.isOneReduced()) throw UsageFailure("the coalgebra must be 1-reduced");
        auto top = [&](json::Json s) {
          json::Json kept = json::Json::array();
          for (const auto& h : s["homology"])
            if (h["degree"].get<int>() < g.truncate) kept.push_back(h);
          s["homology"] = kept;
          return s;
        };
        j = {{"instance", desc},
             {"coalgebra", json::coalgebra(C)},
             {"comodule", json::comodule(N)},
             {"cobar", top(json::complexSummary(cobarComplex(C, nullptr, g.truncate)))},
             {"relativeCobar", top(json::complexSummary(cobarComplex(C, &N, g.truncate)))},
             {"universalTwistingPair", relativeTwistingCheck(C, N, universalTwisting(C), universalModuleMap(N)).ok}};
      }
      if (g.json) {
        out << j.dump(2) << "\n";
      } else {
        if (j.contains("instance")) out << "instance " << j["instance"].get<std::string>() << "\n";
        for (const auto& [key, val] : j.items()) {
          if (!val.is_object() || !val.contains("homology")) continue;
          out << "  " << key << ":";
          for (const auto& h : val["homology"]) {
            out << " H" << h["degree"] << "=Z^" << h["rank"];
            for (const auto& t : h["torsion"]) out << "+Z/" << t;
          }
          out << "\n";
        }
        if (j.contains("universalTwistingPair"))
          out << "  universal pair is relative twisting: " << (j["universalTwistingPair"].get<bool>() ? "yes" : "no")
              << "\n";
      }
      return int(Success);
    };
  });

  // verify
  std::vector<std::string> suites;
  VerifyOptions vo;
  bool timing = false;
  auto* cVerify = app.add_subcommand("verify", "run invariant suites");
  cVerify->add_option("--suite", suites, "suite name or 'all'")->check(CLI::IsMember([] {
    auto names = suiteNames();
    names.push_back("all");
    return names;
  }()));
  cVerify->add_option("--max-tokens", vo.maxTokens)->check(CLI::Range(0, 8));
  cVerify->add_option("--max-labels", vo.maxLabels)->check(CLI::Range(1, 4));
  cVerify->add_option("--samples", vo.samples)->check(CLI::Range(0, 10000000));
  cVerify->add_flag("--timing", timing, "include wall-clock seconds");
  cVerify->callback([&] {
    action = [&] {
      vo.m = g.m;
      vo.seed = g.seed;
      vo.truncate = g.truncate;
      std::vector<std::string> names;
      for (const auto& s : suites.empty() ? std::vector<std::string>{"all"} : suites) {
        if (s == "all")
          names.insert(names.end(), suiteNames().begin(), suiteNames().end());
        else
          names.push_back(s);
      }
      bool ok = true;
      json::Json arr = json::Json::array();
      for (const auto& n : names) {
        const SuiteReport r = runSuite(n, vo);
        ok = ok && r.ok();
        if (g.json) {
          arr.push_back(json::report(r, timing));
          continue;
        }
        out << (r.ok() ? "PASS " : "FAIL ") << r.suite;
        if (timing) out << " (" << r.seconds << " s)";
        out << "\n";
        for (const auto& c : r.checks) {
          out << "  " << (c.ok() ? "ok   " : "FAIL ") << c.name << ": " << c.cases << " cases, " << c.failures
              << " failures";
          if (!c.ok()) out << "; first: " << c.firstFailure;
          out << "\n";
        }
      }
      if (g.json) out << arr.dump(2) << "\n";
      return int(ok ? Success : VerificationFailure);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int(Success) : int(UsageError);
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "error: " << kindName(e.kind) << ": " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  }
  return UsageError;
}

}  // namespace operadix::cli
