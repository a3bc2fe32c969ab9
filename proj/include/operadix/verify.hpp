#pragma once

#include "operadix/cobar.hpp"
#include "operadix/geometry.hpp"
#include "operadix/graph.hpp"
#include "operadix/lattice.hpp"
#include "operadix/loop.hpp"
#include "operadix/surjection.hpp"
#include "operadix/unreduced.hpp"

#include <chrono>
#include <cstdint>
#include <deque>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace operadix {

struct CheckLine {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string firstFailure;

  bool ok() const { return failures == 0; }

  template <class Describe>
  bool record(bool passed, Describe&& describe) {
    ++cases;
    if (!passed) {
      if (failures++ == 0) firstFailure = describe();
    }
    return passed;
  }
};

struct SuiteReport {
  std::string suite;
  std::deque<CheckLine> checks;  // stable references for add()
  double seconds = 0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
  CheckLine& add(const std::string& name) {
    checks.emplace_back().name = name;
    return checks.back();
  }
  const CheckLine* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct VerifyOptions {
  int maxTokens = 6;
  int maxLabels = 3;
  int m = 2;
  std::uint64_t seed = 1;
  int samples = -1;  // suite default when negative
  int truncate = 5;
};

namespace detail {

inline std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// All strings in the corpus, bucketed for fast lookup of insertable strings.
class StringCorpus {
 public:
  StringCorpus(int maxTokens, int maxLabels)
      : maxTokens_(maxTokens), maxLabels_(maxLabels), all_(allStrings(maxTokens, maxLabels)) {
    for (const auto& x : all_) buckets_[{barCount(x), x.outputOpen, letterCount(x), arity(x)}].push_back(&x);
  }
  const std::vector<IntegerString>& all() const { return all_; }

  // Strings g with output colour c such that f o_i g stays inside the bounds.
  template <class Fn>
  void forInsertable(const IntegerString& f, int i, Fn&& fn) const {
    const Colour c = inputColour(f, i);
    const int rest = static_cast<int>(f.tokens.size()) - c.index - 1;
    for (int letters = 0; letters <= maxTokens_ - rest; ++letters)
      for (int a = 0; a <= maxLabels_ - arity(f) + 1; ++a) {
        auto it = buckets_.find({c.index, c.open, letters, a});
        if (it == buckets_.end()) continue;
        for (const IntegerString* g : it->second) fn(*g);
      }
  }

 private:
  int maxTokens_, maxLabels_;
  std::vector<IntegerString> all_;
  std::map<std::tuple<int, bool, int, int>, std::vector<const IntegerString*>> buckets_;
};

inline std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Permutation of f o_i g induced by tau acting on the inserted labels.
inline std::vector<int> insertedPermutation(int k, int i, const std::vector<int>& tau) {
  const int l = static_cast<int>(tau.size());
  std::vector<int> out;
  for (int p = 1; p < i; ++p) out.push_back(p);
  for (int t : tau) out.push_back(i - 1 + t);
  for (int p = i + 1; p <= k; ++p) out.push_back(p + l - 1);
  return out;
}

inline std::string triple(const IntegerString& f, int i, const IntegerString& g, int j, const IntegerString& h) {
  return print(f) + " o" + std::to_string(i) + " " + print(g) + " o" + std::to_string(j) + " " + print(h);
}

}  // namespace detail

// ---- worked examples ---------------------------------------------------------------------------

inline SuiteReport verifyExamples(const VerifyOptions&) {
  SuiteReport r;
  r.suite = "examples";
  {
    auto& c = r.add("lattice-composition");
    const auto got = print(compose(parse("(1u2|1u4u231||u2u4)^o"), 2, parse("(1u3|21u3|u31)^o")));
    c.record(got == "(12u4|1u632u451||u42u6)^o", [&] { return got; });
  }
  {
    auto& c = r.add("lattice-symmetric-action");
    const auto got = print(symAct({2, 3, 1}, parse("(1u2|3u211||u21)^o")));
    c.record(got == "(2u3|1u322||u32)^o", [&] { return got; });
  }
  {
    auto& c = r.add("surjection-composition");
    SurjComb expect;
    expect.add(parse("(1u312)^o"), 1);
    expect.add(parse("(12u32)^o"), 1);
    const SurjComb got = rsCompose(parse("(1u21)^o"), 1, parse("(12)^c"));
    c.record(got == expect, [&] {
      std::string s;
      for (const auto& [u, k] : got) s += k.str() + "*" + print(u) + " ";
      return s;
    });
  }
  {
    auto& c = r.add("tree-string-correspondence");
    using N = TreeNode;
    RootedTree t;
    t.outputOpen = true;
    t.top = {N::marked(1, false, {N::terminal(), N::leaf()}),
             N::marked(3, false,
                       {N::joint({N::terminal(), N::terminal()}), N::marked(2, true, {}),
                        N::marked(4, true, {N::terminal(), N::terminal(), N::leaf()})})};
    const auto x = parse("(1|113||3u23u4|u4|u4u43)^o");
    c.record(print(treeToString(t)) == print(x), [&] { return print(treeToString(t)); });
    c.record(treeView(x) == t, [&] { return drawTree(treeView(x)); });
  }
  return r;
}

// ---- lattice operad laws -------------------------------------------------------------------

inline SuiteReport verifyLatticeOperad(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "rl-operad";
  const detail::StringCorpus corpus(o.maxTokens, o.maxLabels);
  auto& roundTrip = r.add("print-parse-round-trip");
  auto& unit = r.add("unit");
  auto& seq = r.add("sequential-associativity");
  auto& par = r.add("parallel-associativity");
  auto& equiv = r.add("equivariance");
  std::map<int, std::vector<std::vector<int>>> perms;
  for (int k = 0; k <= o.maxLabels + 1; ++k) perms[k] = detail::permutations(k);

  for (const auto& f : corpus.all()) {
    roundTrip.record(parse(print(f)) == f, [&] { return print(f); });
    const int k = arity(f);
    unit.record(compose(identityString(outputColour(f)), 1, f) == f, [&] { return "left unit " + print(f); });
    for (int i = 1; i <= k; ++i) {
      unit.record(compose(f, i, identityString(inputColour(f, i))) == f,
                  [&] { return "right unit " + print(f) + " slot " + std::to_string(i); });
      corpus.forInsertable(f, i, [&](const IntegerString& g) {
        const IntegerString fg = compose(f, i, g);
        const int l = arity(g);
        for (int j = 1; j <= l; ++j)
          corpus.forInsertable(fg, i - 1 + j, [&](const IntegerString& h) {
            seq.record(compose(fg, i - 1 + j, h) == compose(f, i, compose(g, j, h)),
                       [&] { return detail::triple(f, i, g, j, h); });
          });
        for (int j = i + 1; j <= k; ++j)
          corpus.forInsertable(fg, j + l - 1, [&](const IntegerString& h) {
            par.record(compose(fg, j + l - 1, h) == compose(compose(f, j, h), i, g),
                       [&] { return detail::triple(f, i, g, j, h); });
          });
        for (const auto& sigma : perms[k])
          equiv.record(compose(symAct(sigma, f), sigma[i - 1], g) == symAct(blockPermutation(sigma, i, l), fg),
                       [&] { return "sigma " + detail::show(sigma) + " on " + print(f) + " o" + std::to_string(i) + " " + print(g); });
        for (const auto& tau : perms[l])
          equiv.record(compose(f, i, symAct(tau, g)) == symAct(detail::insertedPermutation(k, i, tau), fg),
                       [&] { return "tau " + detail::show(tau) + " on " + print(f) + " o" + std::to_string(i) + " " + print(g); });
      });
    }
  }
  return r;
}

// ---- filtrations and q ------------------------------------------------------------------------

inline SuiteReport verifyFiltration(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "filtration";
  const detail::StringCorpus corpus(o.maxTokens, o.maxLabels);
  const int maxM = 3;
  std::vector<CheckLine*> closeStd, closePrimed, qFilt;
  for (int m = 1; m <= maxM; ++m) closeStd.push_back(&r.add("closure-standard-m" + std::to_string(m)));
  for (int m = 1; m <= maxM; ++m) closePrimed.push_back(&r.add("closure-primed-m" + std::to_string(m)));
  auto& strict = r.add("q-strict-morphism");
  auto& lax = r.add("q-lax-morphism");
  auto& qEquiv = r.add("q-equivariance");
  for (int m = 1; m <= maxM; ++m) qFilt.push_back(&r.add("q-preserves-filtration-m" + std::to_string(m)));

  std::map<int, std::vector<std::vector<int>>> perms;
  for (int k = 0; k <= o.maxLabels; ++k) perms[k] = detail::permutations(k);

  for (const auto& f : corpus.all()) {
    const GraphElement qf = q(f);
    for (int m = 1; m <= maxM; ++m)
      if (inFiltration(f, m)) qFilt[m - 1]->record(inFiltration(qf, m), [&] { return print(f); });
    for (const auto& sigma : perms[arity(f)])
      qEquiv.record(q(symAct(sigma, f)) == symAct(sigma, qf), [&] { return detail::show(sigma) + " " + print(f); });
    for (int i = 1; i <= arity(f); ++i)
      corpus.forInsertable(f, i, [&](const IntegerString& g) {
        const IntegerString fg = compose(f, i, g);
        for (int m = 1; m <= maxM; ++m) {
          if (inFiltration(f, m) && inFiltration(g, m))
            closeStd[m - 1]->record(inFiltration(fg, m), [&] { return print(f) + " o" + std::to_string(i) + " " + print(g); });
          if (inFiltration(f, m, FiltrationVariant::Primed) && inFiltration(g, m, FiltrationVariant::Primed))
            closePrimed[m - 1]->record(inFiltration(fg, m, FiltrationVariant::Primed),
                                       [&] { return print(f) + " o" + std::to_string(i) + " " + print(g); });
        }
        const GraphElement lhs = q(fg), rhs = compose(qf, i, q(g));
        auto what = [&] { return print(f) + " o" + std::to_string(i) + " " + print(g); };
        strict.record(lhs == rhs, what);
        lax.record(leq(lhs, rhs), what);
      });
  }
  return r;
}

// ---- surjection dg-operad ------------------------------------------------------------------

inline std::vector<Surjection> surjectionPool(int maxLabels, int m) {
  std::vector<Surjection> pool;
  for (int k = 1; k <= maxLabels; ++k)
    for (int mask = 0; mask < (1 << k); ++mask)
      for (int oo = 0; oo < 2; ++oo) {
        std::vector<bool> open(k);
        for (int a = 0; a < k; ++a) open[a] = (mask >> a) & 1;
        for (const auto& [d, list] : componentBasis(open, oo, m))
          pool.insert(pool.end(), list.begin(), list.end());
      }
  return pool;
}

inline SuiteReport verifySurjection(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "surjection";
  auto& dd = r.add("d-squared");
  auto& leib = r.add("leibniz");
  const auto pool = surjectionPool(o.maxLabels, o.m);
  for (const auto& s : pool) dd.record(differential(differential(s)).isZero(), [&] { return print(s); });
  std::mt19937_64 rng(o.seed);
  const int samples = o.samples < 0 ? 1000 : o.samples;
  while (static_cast<int>(leib.cases) < samples) {
    const auto& f = pool[rng() % pool.size()];
    const auto& g = pool[rng() % pool.size()];
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(arity(f)));
    if (isOpenLabel(f, i) != g.outputOpen) continue;
    const SurjComb lhs = differential(rsCompose(f, i, g));
    SurjComb rhs = rsCompose(differential(f), i, SurjComb(g));
    rhs.add(rsCompose(SurjComb(f), i, differential(g)), Int(signOf(degree(f))));
    leib.record(lhs == rhs, [&] { return print(f) + " o" + std::to_string(i) + " " + print(g); });
  }
  return r;
}

// ---- homology of the four basic components -----------------------------------------------------

struct ComponentTarget {
  std::string name;
  std::vector<bool> inputs;
  bool output;
  std::vector<std::size_t> ranks;  // degrees 0,1,...; higher degrees must vanish
};

inline std::vector<ComponentTarget> swissCheeseTargets() {
  return {{"c,c:c", {false, false}, false, {1, 1}},
          {"o,o:o", {true, true}, true, {2}},
          {"c:o", {false}, true, {1}},
          {"c,o:o", {false, true}, true, {1}}};
}

inline std::string describeHomology(const std::vector<HomologyGroup>& hs) {
  std::string s;
  for (const auto& h : hs) {
    s += "H" + std::to_string(h.degree) + "=Z^" + std::to_string(h.rank);
    for (const auto& t : h.torsion) s += "+Z/" + t.str();
    s += " ";
  }
  return s;
}

inline SuiteReport verifyHomology(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "homology";
  for (const auto& t : swissCheeseTargets()) {
    auto& c = r.add("component-" + t.name);
    const auto hs = componentHomology(t.inputs, t.output, o.m);
    bool ok = true;
    for (const auto& h : hs) {
      const std::size_t want = h.degree >= 0 && h.degree < static_cast<int>(t.ranks.size()) ? t.ranks[h.degree] : 0;
      if (h.rank != want || !h.torsion.empty()) ok = false;
    }
    c.record(ok && !hs.empty(), [&] { return describeHomology(hs); });
  }
  return r;
}

inline SuiteReport verifyGenerators(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "generators";
  auto& c = r.add("generated-up-to-sign");
  const auto rep = isGeneratedUpTo(o.maxLabels, o.maxTokens, o.m);
  c.cases = rep.basisSize;
  c.failures = rep.missing.size();
  if (!rep.missing.empty()) c.firstFailure = print(rep.missing.front());
  return r;
}

// ---- cellulation ---------------------------------------------------------------------------

inline SuiteReport verifyCells(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "cells";
  auto& valid = r.add("sample-valid");
  auto& minimal = r.add("cell-index-minimal");
  auto& mono = r.add("cell-monotone");
  auto& comp = r.add("composition-inequality");
  std::mt19937_64 rng(o.seed);
  const int samples = o.samples < 0 ? 10000 : o.samples;
  auto randomColours = [&](int k, bool outputOpen) {
    std::vector<bool> open(k);
    for (int a = 0; a < k; ++a) open[a] = outputOpen && (rng() % 2);
    return open;
  };
  for (int s = 0; s < samples; ++s) {
    const int m = o.m + static_cast<int>(s % 2);
    const bool outOpen = rng() % 2;
    const int k = 1 + static_cast<int>(rng() % 3);
    const CubeConfig x = randomConfig(rng, m, randomColours(k, outOpen), outOpen);
    valid.record(validConfig(x), [&] { return describe(x); });
    const GraphElement alpha = cellIndex(x);
    bool ok = cellContains(alpha, x);
    for (const auto& beta : strictlyBelow(alpha))
      if (cellContains(beta, x)) ok = false;
    minimal.record(ok, [&] { return describe(x); });
    // a random graph above alpha, and every graph above it, contains x
    GraphElement gamma = alpha;
    for (auto& e : gamma.edges)
      if (e.mu < m && rng() % 2) e = {e.mu + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(m - e.mu)), rng() % 2 == 0};
    mono.record(leq(alpha, gamma) && cellContains(gamma, x), [&] { return describe(x) + " in " + describe(gamma); });
    const int i = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
    const bool yOpen = x.open[i - 1];
    const int l = 1 + static_cast<int>(rng() % 2);
    const CubeConfig y = randomConfig(rng, m, randomColours(l, yOpen), yOpen);
    const CubeConfig z = scCompose(x, i, y);
    comp.record(validConfig(z) && leq(cellIndex(z), compose(alpha, i, cellIndex(y))),
                [&] { return describe(x) + " o" + std::to_string(i) + " " + describe(y); });
  }
  return r;
}

// ---- loop model ----------------------------------------------------------------------------

inline SuiteReport verifyLoops(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "loops";
  auto& cos = r.add("cosimplicial-identities");
  auto& wide = r.add("wide-bimodule-coherence");
  auto& hId = r.add("homotopy-H-commutator");
  auto& hLit = r.add("homotopy-H-literal-on-cocycles");
  auto& assoc = r.add("sqcup-associative");
  auto& t2 = r.add("brace-T2-cup-commutator");
  auto& t2Lit = r.add("brace-T2-literal-on-cocycles");
  const int maxLevel = std::min(o.truncate, 3);
  struct Pair {
    std::string name;
    FiniteMonoid M;
    std::vector<int> N;
  };
  const std::vector<Pair> pairs{{"Z/2 > Z/2", FiniteMonoid::cyclic(2), {0, 1}},
                                {"Z/3 > 1", FiniteMonoid::cyclic(3), {0}}};
  for (const auto& [pname, M, N] : pairs) {
    const LoopModel L(M, N);
    auto sgn = [](long long e) { return Int(signOf(e)); };
    auto cells = [&](int k, bool rel) { return L.levelBasis(k, rel); };
    // cosimplicial identities on every cell of level <= maxLevel
    for (int k = 0; k <= maxLevel; ++k)
      for (const auto& u : cells(k, true)) {
        auto what = [&] { return pname + " " + toString(u, M); };
        for (int j = 1; j <= k + 2; ++j)
          for (int i = 0; i < j; ++i)
            cos.record(L.coface(L.coface(u, i), j) == L.coface(L.coface(u, j - 1), i), what);
        for (int j = 0; j <= k; ++j)
          for (int i = 0; i <= k + 1; ++i) {
            const LoopCell lhs = L.codegeneracy(L.coface(u, i), j);
            LoopCell rhs;
            if (i < j) rhs = L.coface(L.codegeneracy(u, j - 1), i);
            else if (i == j || i == j + 1) rhs = u;
            else rhs = L.coface(L.codegeneracy(u, j), i - 1);
            cos.record(lhs == rhs, what);
          }
        for (int j = 0; j + 1 < k; ++j)
          for (int i = 0; i <= j; ++i)
            cos.record(L.codegeneracy(L.codegeneracy(u, j + 1), i) == L.codegeneracy(L.codegeneracy(u, i), j), what);
      }
    // wide bimodule coherence over words of length <= 2
    std::vector<std::vector<int>> words;
    for (int k = 1; k <= 2; ++k)
      for (const auto& c : cells(k, false)) words.push_back(c.word);
    std::vector<LoopCell> rel;
    for (int k = 0; k <= 2; ++k)
      for (const auto& c : cells(k, true)) rel.push_back(c);
    auto rhoAt = [&](const LoopCell& u, int p, const std::vector<int>& h) {
      std::vector<std::vector<int>> gs(u.level(), std::vector<int>{L.unit()});
      gs.at(p - 1) = h;
      return L.rho(u, gs);
    };
    for (const auto& f : words) {
      const int k = static_cast<int>(f.size());
      for (int i = 1; i <= k; ++i) {
        for (const auto& g : words)
          wide.record(L.varsigmaAt(f, i, L.iota(g)) == L.iota(L.gammaPartial(f, i, g)),
                      [&] { return pname + " stability " + detail::show(f) + detail::show(g); });
        for (const auto& u : rel) {
          const int l = u.level();
          const LoopCell lu = L.varsigmaAt(f, i, u);
          for (const auto& h : words)
            for (int p = 1; p <= k + l - 1; ++p) {
              LoopCell rhs;
              if (p < i) rhs = L.varsigmaAt(L.gammaPartial(f, p, h), i + static_cast<int>(h.size()) - 1, u);
              else if (p <= i + l - 1) rhs = L.varsigmaAt(f, i, rhoAt(u, p - i + 1, h));
              else rhs = L.varsigmaAt(L.gammaPartial(f, p - l + 1, h), i, u);
              wide.record(rhoAt(lu, p, h) == rhs, [&] { return pname + " bimodule " + detail::show(f) + toString(u, M); });
            }
          for (const auto& f2 : words)
            for (int j = 1; j <= static_cast<int>(f2.size()); ++j) {
              const LoopCell inner = L.varsigmaAt(f2, j, u);
              wide.record(L.varsigmaAt(f, i, inner) == L.varsigmaAt(L.gammaPartial(f, i, f2), i + j - 1, u),
                          [&] { return pname + " left associativity"; });
              for (int i2 = 1; i2 <= k; ++i2) {
                if (i2 == i) continue;
                for (const auto& w : rel) {
                  std::vector<std::optional<LoopCell>> a1(k), a3(k + f2.size() - 1);
                  a1[i - 1] = inner;
                  a1[i2 - 1] = w;
                  a3[i + j - 2] = u;
                  a3[i2 < i ? i2 - 1 : i2 + f2.size() - 2] = w;
                  wide.record(L.varsigmaPrime(f, a1) == L.varsigmaPrime(L.gammaPartial(f, i, f2), a3),
                              [&] { return pname + " wide associativity"; });
                }
              }
            }
        }
      }
    }
    // homotopy identities
    auto D = [&](const LoopComb& x) { return L.differential(x); };
    auto H = [&](const LoopComb& x, const LoopComb& y) {
      return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return L.homotopyH(a, b); });
    };
    auto T2 = [&](const LoopComb& x, const LoopComb& y) {
      return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return L.braceT2(a, b); });
    };
    auto sq = [&](const LoopComb& x, const LoopComb& y) {
      return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return L.sqcup(a, b); });
    };
    auto cupC = [&](const LoopComb& x, const LoopComb& y) {
      return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return LoopModel::cup(a, b); });
    };
    auto incC = [&](const LoopComb& x) { return x.map([&](const LoopCell& a) { return LoopComb(L.inc(a)); }); };
    auto hIdentity = [&](const LoopComb& f, int p, const LoopComb& u, int qd, bool literal) {
      LoopComb lhs = sq(incC(f), u);
      lhs.add(sq(u, incC(f)), -sgn(static_cast<long long>(p) * qd));
      LoopComb rhs = D(H(f, u));
      if (!literal) {
        rhs.add(H(D(f), u));
        rhs.add(H(f, D(u)), sgn(p));
      }
      return lhs == rhs;
    };
    auto tIdentity = [&](const LoopComb& f, int p, const LoopComb& g, int qd, bool literal) {
      LoopComb lhs = cupC(f, g);
      lhs.add(cupC(g, f), -sgn(static_cast<long long>(p) * qd));
      LoopComb rhs = D(T2(f, g));
      if (!literal) {
        rhs.add(T2(D(f), g));
        rhs.add(T2(f, D(g)), sgn(p));
      }
      return lhs == rhs;
    };
    for (int p = 0; p <= maxLevel; ++p)
      for (int qd = 0; qd <= maxLevel; ++qd) {
        for (const auto& f : cells(p, false)) {
          for (const auto& u : cells(qd, true))
            hId.record(hIdentity(LoopComb(f), p, LoopComb(u), qd, false),
                       [&] { return pname + " " + toString(f, M) + " " + toString(u, M); });
          for (const auto& g : cells(qd, false))
            t2.record(tIdentity(LoopComb(f), p, LoopComb(g), qd, false),
                      [&] { return pname + " " + toString(f, M) + " " + toString(g, M); });
        }
        if (p + qd <= maxLevel)
          for (const auto& u : cells(p, true))
            for (const auto& v : cells(qd, true))
              for (const auto& w : cells(std::max(0, maxLevel - p - qd), true))
                assoc.record(L.sqcup(L.sqcup(u, v), w) == L.sqcup(u, L.sqcup(v, w)),
                             [&] { return pname + " " + toString(u, M) + toString(v, M) + toString(w, M); });
      }
    // cocycles in the normalized complex
    auto cocycles = [&](int k, bool relative) {
      const auto basis = L.normalizedBasis(k, relative);
      const auto upper = L.levelBasis(k + 1, relative);
      std::map<LoopCell, std::size_t> idx;
      for (std::size_t t = 0; t < upper.size(); ++t) idx[upper[t]] = t;
      IntMatrix Dm(upper.size(), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c)
        for (const auto& [v, e] : D(basis[c])) Dm(idx.at(v), c) += e;
      std::vector<LoopComb> out;
      for (const auto& vec : integerKernel(Dm)) {
        LoopComb x;
        for (std::size_t c = 0; c < basis.size(); ++c) x.add(basis[c], vec[c]);
        out.push_back(x);
      }
      return out;
    };
    for (int p = 0; p <= 2; ++p)
      for (int qd = 0; qd <= 2; ++qd) {
        const auto fs = cocycles(p, false);
        for (const auto& f : fs) {
          for (const auto& u : cocycles(qd, true))
            hLit.record(hIdentity(f, p, u, qd, true), [&] { return pname + " levels " + std::to_string(p) + "," + std::to_string(qd); });
          for (const auto& g : cocycles(qd, false))
            t2Lit.record(tIdentity(f, p, g, qd, true), [&] { return pname + " levels " + std::to_string(p) + "," + std::to_string(qd); });
        }
      }
  }
  return r;
}

// ---- cobar -----------------------------------------------------------------------------------

struct BialgebraInstance {
  Bialgebra B;
  ComoduleAlgebra C;
  std::string description;
};

inline BialgebraInstance randomBialgebraInstance(std::mt19937_64& rng) {
  const int order = 2 + static_cast<int>(rng() % 2);
  const bool group = rng() % 2;
  Bialgebra B = group ? groupBialgebra(order) : functionBialgebra(order);
  std::string desc = (group ? "Z[Z/" : "Z^(Z/") + std::to_string(order) + (group ? "]" : ")");
  const int kind = static_cast<int>(rng() % 3);
  if (kind == 0) return {B, trivialComoduleAlgebra(B), desc + " trivial"};
  if (kind == 1 || !group) return {B, regularComoduleAlgebra(B), desc + " regular"};
  return {B, subgroupComoduleAlgebra(order, order), desc + " subgroup"};
}

// Structure checks for M_B and Z_{B,C} over words of length <= 2.
inline void checkMultiplicativeModule(const Bialgebra& B, const ComoduleAlgebra& C, const std::string& name,
                                      CheckLine& operad, CheckLine& module, CheckLine& cosimplicial) {
  const int r = B.rank();
  std::vector<Tuple> words;
  for (int k = 1; k <= 2; ++k)
    for (const auto& t : allTuples(r, k)) words.push_back(t);
  std::vector<ZCell> cells;
  for (int k = 0; k <= 2; ++k)
    for (const auto& t : allTuples(r, k))
      for (int c = 0; c < C.rank(); ++c) cells.push_back({t, c});
  const TensorComb unit = unitOperation(B);
  for (const auto& f : words) {
    const int k = static_cast<int>(f.size());
    operad.record(mBCompose(B, unit, 1, TensorComb(f)) == TensorComb(f), [&] { return name + " left unit"; });
    for (int i = 1; i <= k; ++i) {
      operad.record(mBCompose(B, f, i, unit) == TensorComb(f), [&] { return name + " right unit"; });
      for (const auto& g : words) {
        const int l = static_cast<int>(g.size());
        const TensorComb fg = mBCompose(B, f, i, TensorComb(g));
        for (const auto& h : words) {
          for (int j = 1; j <= l; ++j)
            operad.record(mBCompose(B, fg, i - 1 + j, TensorComb(h)) ==
                              mBCompose(B, TensorComb(f), i, mBCompose(B, g, j, TensorComb(h))),
                          [&] { return name + " sequential"; });
          for (int j = i + 1; j <= k; ++j)
            operad.record(mBCompose(B, fg, j + l - 1, TensorComb(h)) ==
                              mBCompose(B, mBCompose(B, f, j, TensorComb(h)), i, TensorComb(g)),
                          [&] { return name + " parallel"; });
        }
        module.record(lambdaI(B, C, TensorComb(f), i, iotaB(C, TensorComb(g))) ==
                          iotaB(C, mBCompose(B, f, i, TensorComb(g))),
                      [&] { return name + " stability"; });
      }
      for (const auto& z : cells) {
        const int l = static_cast<int>(z.first.size());
        const ZComb lz = lambdaI(B, C, TensorComb(f), i, ZComb(z));
        for (const auto& h : words) {
          const int m = static_cast<int>(h.size());
          for (int p = 1; p <= k + l - 1; ++p) {
            ZComb rhs;
            if (p < i) rhs = lambdaI(B, C, mBCompose(B, f, p, TensorComb(h)), i + m - 1, ZComb(z));
            else if (p <= i + l - 1) rhs = lambdaI(B, C, TensorComb(f), i, rhoAt(B, ZComb(z), p - i + 1, TensorComb(h)));
            else rhs = lambdaI(B, C, mBCompose(B, f, p - l + 1, TensorComb(h)), i, ZComb(z));
            module.record(rhoAt(B, lz, p, TensorComb(h)) == rhs, [&] { return name + " bimodule"; });
          }
        }
        for (const auto& f2 : words)
          for (int j = 1; j <= static_cast<int>(f2.size()); ++j) {
            const ZComb inner = lambdaI(B, C, TensorComb(f2), j, ZComb(z));
            module.record(lambdaI(B, C, TensorComb(f), i, inner) ==
                              lambdaI(B, C, mBCompose(B, f, i, TensorComb(f2)), i + j - 1, ZComb(z)),
                          [&] { return name + " left associativity"; });
            for (int i2 = 1; i2 <= k; ++i2) {
              if (i2 == i) continue;
              for (const auto& w : cells) {
                std::vector<std::optional<ZComb>> a1(k), a3(k + f2.size() - 1);
                a1[i - 1] = inner;
                a1[i2 - 1] = ZComb(w);
                a3[i + j - 2] = ZComb(z);
                a3[i2 < i ? i2 - 1 : i2 + f2.size() - 2] = ZComb(w);
                module.record(lambdaPrime(B, C, TensorComb(f), a1) ==
                                  lambdaPrime(B, C, mBCompose(B, f, i, TensorComb(f2)), a3),
                              [&] { return name + " wide associativity"; });
              }
            }
          }
      }
    }
    std::vector<TensorComb> gs;
    for (int t = 0; t < k; ++t) gs.push_back(TensorComb(words[(t * 3 + 1) % words.size()]));
    module.record(rhoB(B, iotaB(C, TensorComb(f)), gs) == iotaB(C, mBGamma(B, f, gs)),
                  [&] { return name + " right action on the image of iota"; });
  }
  // cosimplicial identities and the totalization differential
  auto apply = [&](const ZComb& x, auto&& op) {
    ZComb out;
    for (const auto& [z, c] : x) out.add(op(z), c);
    return out;
  };
  for (const auto& z : cells) {
    const int n = static_cast<int>(z.first.size());
    ZComb tot;
    for (int i = 0; i <= n + 1; ++i) tot.add(zCoface(B, C, z, i), Int(signOf(i)));
    cosimplicial.record(tot == unreducedRelativeDifferential(B, C, z), [&] { return name + " totalization"; });
    for (int j = 1; j <= n + 2; ++j)
      for (int i = 0; i < j; ++i)
        cosimplicial.record(apply(zCoface(B, C, z, i), [&](const ZCell& w) { return zCoface(B, C, w, j); }) ==
                                apply(zCoface(B, C, z, j - 1), [&](const ZCell& w) { return zCoface(B, C, w, i); }),
                            [&] { return name + " coface identity"; });
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const ZComb lhs = apply(zCoface(B, C, z, i), [&](const ZCell& w) { return zCodegeneracy(B, w, j); });
        ZComb rhs;
        if (i < j) rhs = apply(zCodegeneracy(B, z, j - 1), [&](const ZCell& w) { return zCoface(B, C, w, i); });
        else if (i == j || i == j + 1) rhs = ZComb(z);
        else rhs = apply(zCodegeneracy(B, z, j), [&](const ZCell& w) { return zCoface(B, C, w, i - 1); });
        cosimplicial.record(lhs == rhs, [&] { return name + " codegeneracy identity"; });
      }
  }
}

inline SuiteReport verifyCobar(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "cobar";
  auto& axioms = r.add("coalgebra-comodule-axioms");
  auto& dAbs = r.add("d-squared-absolute");
  auto& dRel = r.add("d-squared-relative");
  auto& leib = r.add("module-leibniz");
  auto& equiv = r.add("twisting-iff-module-map");
  auto& scalar = r.add("scaled-universal-twisting");
  auto& uAxioms = r.add("bialgebra-axioms");
  auto& uD = r.add("d-squared-unreduced");
  auto& uLeib = r.add("module-leibniz-unreduced");
  auto& mbOperad = r.add("multiplicative-operad-axioms");
  auto& mbModule = r.add("wide-module-axioms");
  auto& mbCos = r.add("cosimplicial-identities");
  std::mt19937_64 rng(o.seed);
  const int instances = o.samples < 0 ? 100 : o.samples;
  const int T = o.truncate;
  for (int s = 0; s < instances; ++s) {
    const CobarInstance inst = randomCobarInstance(rng);
    const DGCoalgebra& C = inst.C;
    const DGComodule& N = inst.N;
    const std::string tag = "#" + std::to_string(s) + " " + inst.description;
    auto ca = checkCoalgebra(C), cm = checkComodule(C, N);
    axioms.record(ca.ok && cm.ok, [&] { return tag + ": " + ca.detail + cm.detail; });
    int minDeg = 0;
    for (int d : N.degrees) minDeg = std::min(minDeg, d);
    for (int d = 0; d <= T; ++d)
      for (const auto& w : wordsOfDegree(C, nullptr, d))
        dAbs.record(cobarDifferential(C, cobarDifferential(C, w)).isZero(), [&] { return tag + " " + toString(C, nullptr, w); });
    for (int d = minDeg; d <= T; ++d)
      for (const auto& w : wordsOfDegree(C, &N, d))
        dRel.record(relativeDifferential(C, N, relativeDifferential(C, N, w)).isZero(), [&] { return tag + " " + toString(C, &N, w); });
    // D(a.u) = Da.u + (-1)^{|a|} a.Du
    for (int da = 1; da <= T / 2; ++da)
      for (const auto& a : wordsOfDegree(C, nullptr, da))
        for (int du = minDeg; du + da <= T; ++du)
          for (const auto& u : wordsOfDegree(C, &N, du)) {
            const CobarComb lhs = relativeDifferential(C, N, concat(a, u));
            CobarComb rhs = concat(cobarDifferential(C, a), CobarComb(u));
            rhs.add(concat(CobarComb(a), relativeDifferential(C, N, u)), Int(signOf(da)));
            leib.record(lhs == rhs, [&] { return tag + " " + toString(C, nullptr, a) + " . " + toString(C, &N, u); });
          }
    // relative twisting pair <=> induced map is a dg-module map
    const CobarMap f = universalTwisting(C);
    const CobarMap g0 = universalModuleMap(N);
    for (int variant = 0; variant < 3; ++variant) {
      CobarMap g = g0;
      for (int n = 0; n < N.rank(); ++n) {
        if (variant == 1) g[n] = Int(2) * g0[n];
        if (variant == 2) {
          const auto words = wordsOfDegree(C, &N, N.degrees[n]);
          for (const auto& w : words)
            if (rng() % 3 == 0) g[n].add(w, Int(static_cast<int>(rng() % 5) - 2));
        }
      }
      const bool twisting = relativeTwistingCheck(C, N, f, g).ok;
      const bool moduleMap = dgModuleMapCheck(C, N, f, g, T).ok;
      equiv.record(twisting == moduleMap && (variant == 2 || twisting),
                   [&] { return tag + " variant " + std::to_string(variant); });
    }
    // lambda * tau is twisting iff lambda^2 = lambda, unless the reduced coproduct vanishes
    bool quadratic = false;
    for (int x = 1; x < C.rank(); ++x)
      if (!C.reducedCoproduct(x).isZero()) quadratic = true;
    for (int lambda : {-1, 0, 1, 2}) {
      CobarMap fl = f;
      for (auto& x : fl) x *= Int(lambda);
      const bool ok = twistingCheck(C, fl).ok;
      scalar.record(ok == (!quadratic || lambda == 0 || lambda == 1),
                    [&] { return tag + " lambda " + std::to_string(lambda); });
    }
    // unreduced constructions over a random ungraded bialgebra
    const BialgebraInstance bi = randomBialgebraInstance(rng);
    const std::string btag = "#" + std::to_string(s) + " " + bi.description;
    auto cb = checkBialgebra(bi.B), cc = checkComoduleAlgebra(bi.B, bi.C);
    uAxioms.record(cb.ok && cc.ok, [&] { return btag + ": " + cb.detail + cc.detail; });
    const int UT = std::min(T, 3);
    for (const bool relative : {false, true}) {
      bool ok = true;
      try {
        (relative ? unreducedRelativeCobar(bi.B, bi.C, UT) : unreducedCobar(bi.B, UT)).validate();
      } catch (const InvalidComplex&) {
        ok = false;
      }
      uD.record(ok, [&] { return btag + (relative ? " relative" : " absolute"); });
    }
    for (int la = 0; la <= 1; ++la)
      for (const auto& a : allTuples(bi.B.rank(), la))
        for (int lu = 0; lu + la <= 2; ++lu)
          for (const auto& t : allTuples(bi.B.rank(), lu))
            for (int c = 0; c < bi.C.rank(); ++c) {
              ZCell u{t, c}, au{a, c};
              au.first.insert(au.first.end(), t.begin(), t.end());
              const ZComb lhs = unreducedRelativeDifferential(bi.B, bi.C, au);
              ZComb rhs;
              for (const auto& [w, e] : unreducedDifferential(bi.B, a)) {
                Tuple x = w;
                x.insert(x.end(), t.begin(), t.end());
                rhs.add({x, c}, e);
              }
              for (const auto& [z, e] : unreducedRelativeDifferential(bi.B, bi.C, u)) {
                Tuple x = a;
                x.insert(x.end(), z.first.begin(), z.first.end());
                rhs.add({x, z.second}, e * signOf(la));
              }
              uLeib.record(lhs == rhs, [&] { return btag; });
            }
  }
  // exhaustive structure checks for Z[Z/2]
  const Bialgebra B2 = groupBialgebra(2);
  checkMultiplicativeModule(B2, trivialComoduleAlgebra(B2), "Z[Z/2] trivial", mbOperad, mbModule, mbCos);
  checkMultiplicativeModule(B2, regularComoduleAlgebra(B2), "Z[Z/2] regular", mbOperad, mbModule, mbCos);
  return r;
}

// ---- experimental RS_2 relations on reduced cobar constructions -----------------------------------

inline SuiteReport verifyRS2Experimental(const VerifyOptions& o) {
  SuiteReport r;
  r.suite = "rs2-experimental";
  auto& dd = r.add("d-squared");
  auto& inc = r.add("inc-chain-map");
  auto& unit = r.add("mu-o-unit");
  auto& leib = r.add("mu-o-leibniz");
  auto& assoc = r.add("mu-o-associative");
  auto& e11 = r.add("E11-homotopy-commutes-concatenation");
  auto& eOpen = r.add("E-open-homotopy-commutes-mu-o");
  auto& brace = r.add("E1k-brace-associativity");
  const std::vector<BialgebraInstance> instances = {
      {groupBialgebra(2), trivialComoduleAlgebra(groupBialgebra(2)), "Z[Z/2] trivial"},
      {groupBialgebra(2), regularComoduleAlgebra(groupBialgebra(2)), "Z[Z/2] regular"},
      {groupBialgebra(3), trivialComoduleAlgebra(groupBialgebra(3)), "Z[Z/3] trivial"},
      {groupBialgebra(3), regularComoduleAlgebra(groupBialgebra(3)), "Z[Z/3] regular"},
      {functionBialgebra(2), trivialComoduleAlgebra(functionBialgebra(2)), "Z^(Z/2) trivial"},
      {functionBialgebra(2), regularComoduleAlgebra(functionBialgebra(2)), "Z^(Z/2) regular"},
      {functionBialgebra(3), trivialComoduleAlgebra(functionBialgebra(3)), "Z^(Z/3) trivial"}};
  const int maxLen = std::min(o.truncate, 2);
  auto sgn = [](long long e) { return Int(signOf(e)); };
  for (const auto& [B, C, name] : instances) {
    auto D = [&](const TensorComb& x) { return reducedCobarDifferential(B, x); };
    auto DR = [&](const ZComb& x) { return reducedRelativeDifferential(B, C, x); };
    std::vector<std::pair<TensorComb, int>> absWords;
    std::vector<std::pair<ZComb, int>> relWords;
    for (int n = 0; n <= maxLen; ++n) {
      const auto ws = n ? reducedWords(B, n) : std::vector<TensorComb>{TensorComb(Tuple{})};
      for (const auto& w : ws) {
        if (n) absWords.push_back({w, n});
        for (int c = 0; c < C.rank(); ++c) relWords.push_back({zOf(w, Vec(c)), n});
      }
    }
    const ZComb one = zOf(TensorComb(Tuple{}), C.unit);
    for (const auto& [f, n] : absWords) {
      dd.record(D(D(f)).isZero(), [&] { return name; });
      inc.record(DR(incCobar(C, f)) == incCobar(C, D(f)), [&] { return name; });
    }
    for (const auto& [u, l] : relWords) {
      dd.record(DR(DR(u)).isZero(), [&] { return name; });
      unit.record(muPrimeO(B, C, one, u) == u && muPrimeO(B, C, u, one) == u, [&] { return name; });
    }
    for (const auto& [u, l] : relWords)
      for (const auto& [v, l2] : relWords) {
        ZComb rhs = muPrimeO(B, C, DR(u), v);
        rhs.add(muPrimeO(B, C, u, DR(v)), sgn(l));
        leib.record(DR(muPrimeO(B, C, u, v)) == rhs, [&] { return name; });
        if (l + l2 <= 2)
          for (const auto& [w, l3] : relWords)
            if (l + l2 + l3 <= maxLen)
              assoc.record(muPrimeO(B, C, muPrimeO(B, C, u, v), w) == muPrimeO(B, C, u, muPrimeO(B, C, v, w)),
                           [&] { return name; });
      }
    for (const auto& [f, n] : absWords) {
      for (const auto& [g, l] : absWords) {
        TensorComb lhs = concatTensors(f, g);
        lhs.add(concatTensors(g, f), -sgn(static_cast<long long>(n) * l));
        TensorComb rhs = D(ePrime1k(B, f, {g}));
        rhs.add(ePrime1k(B, D(f), {g}));
        rhs.add(ePrime1k(B, f, {D(g)}), sgn(n));
        e11.record(lhs == -rhs, [&] { return name; });
        // f{g}{h} = (-1)^{n+1} f{g{h}} + (-1)^{m(l+1)} (f{g,h} + f{h,g}), lengths n, l, m
        if (n + l <= 3)
          for (const auto& [h, m] : absWords) {
            if (n + l + m > 5) continue;
            TensorComb left = ePrime1k(B, ePrime1k(B, f, {g}), {h});
            TensorComb right = ePrime1k(B, f, {ePrime1k(B, g, {h})});
            right *= sgn(n + 1);
            right.add(ePrime1k(B, f, {g, h}), sgn(static_cast<long long>(m) * (l + 1)));
            right.add(ePrime1k(B, f, {h, g}), sgn(static_cast<long long>(m) * (l + 1)));
            brace.record(left == right, [&] { return name; });
          }
      }
      for (const auto& [u, l] : relWords) {
        ZComb lhs = muPrimeO(B, C, incCobar(C, f), u);
        lhs.add(muPrimeO(B, C, u, incCobar(C, f)), -sgn(static_cast<long long>(n) * l));
        ZComb rhs = DR(ePrimeOpen(B, C, f, {u}));
        rhs.add(ePrimeOpen(B, C, D(f), {u}));
        rhs.add(ePrimeOpen(B, C, f, {DR(u)}), sgn(n));
        eOpen.record(lhs == -rhs, [&] { return name; });
      }
    }
  }
  return r;
}

// ---- registry ---------------------------------------------------------------------------------

inline const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"examples", "rl-operad", "filtration", "surjection", "homology",
                                              "generators", "cells", "loops", "cobar", "rs2-experimental"};
  return names;
}

inline SuiteReport runSuite(const std::string& name, const VerifyOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  if (name == "examples") r = verifyExamples(o);
  else if (name == "rl-operad") r = verifyLatticeOperad(o);
  else if (name == "filtration") r = verifyFiltration(o);
  else if (name == "surjection") r = verifySurjection(o);
  else if (name == "homology") r = verifyHomology(o);
  else if (name == "generators") r = verifyGenerators(o);
  else if (name == "cells") r = verifyCells(o);
  else if (name == "loops") r = verifyLoops(o);
  else if (name == "cobar") r = verifyCobar(o);
  else if (name == "rs2-experimental") r = verifyRS2Experimental(o);
  else throw std::invalid_argument("unknown suite '" + name + "'");
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace operadix
