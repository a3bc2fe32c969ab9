#pragma once

#include "operadix/chain.hpp"
#include "operadix/lattice.hpp"

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace operadix {

using Surjection = IntegerString;  // bar-free, nondegenerate
using SurjComb = LinComb<IntegerString>;

inline int degree(const IntegerString& u) { return letterCount(u) - arity(u); }

// No two adjacent tokens carry the same letter.
inline bool isNondegenerate(const IntegerString& u) {
  for (std::size_t p = 1; p < u.tokens.size(); ++p)
    if (!u.tokens[p].isBar() && u.tokens[p].label == u.tokens[p - 1].label) return false;
  return true;
}

inline bool isSurjectionBasis(const IntegerString& u) {
  return barCount(u) == 0 && isNondegenerate(u) && (arity(u) > 0 || u.tokens.empty());
}

// Letter positions that are not the last occurrence of their label, in order.
inline std::vector<std::size_t> caesuras(const IntegerString& u) {
  std::map<int, std::size_t> last;
  for (std::size_t p = 0; p < u.tokens.size(); ++p)
    if (!u.tokens[p].isBar()) last[u.tokens[p].label] = p;
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < u.tokens.size(); ++p)
    if (!u.tokens[p].isBar() && last[u.tokens[p].label] != p) out.push_back(p);
  return out;
}

// Deleting the e-th caesura has sign (-1)^e; deleting a last occurrence has the
// opposite sign of deleting the previous occurrence of the same label.
inline SurjComb differential(const IntegerString& u) {
  SurjComb out;
  const auto cs = caesuras(u);
  std::map<std::size_t, int> index;
  for (std::size_t e = 0; e < cs.size(); ++e) index[cs[e]] = static_cast<int>(e);
  for (std::size_t p = 0; p < u.tokens.size(); ++p) {
    const Token t = u.tokens[p];
    if (t.isBar() || occurrences(u, t.label) < 2) continue;
    int sign;
    if (auto it = index.find(p); it != index.end()) {
      sign = signOf(it->second);
    } else {
      std::size_t prev = p;
      while (u.tokens[--prev].label != t.label) {}
      sign = -signOf(index[prev]);
    }
    IntegerString v = u;
    v.tokens.erase(v.tokens.begin() + static_cast<std::ptrdiff_t>(p));
    if (isNondegenerate(v)) out.add(v, Int(sign));
  }
  return out;
}

inline SurjComb differential(const SurjComb& x) {
  return x.map([](const IntegerString& u) { return differential(u); });
}

// Cuts positions p_1 <= ... <= p_n of the letter sequence; each cut duplicates
// the letter with a bar in between.  Sign: Koszul reorder of [cuts, caesuras].
inline SurjComb vartheta(const Surjection& t, int n) {
  SurjComb out;
  const std::size_t len = t.tokens.size();
  if (n == 0) {
    out.add(t, 1);
    return out;
  }
  if (len == 0) return out;
  const auto cs = caesuras(t);
  std::map<std::size_t, int> cidx;
  for (std::size_t e = 0; e < cs.size(); ++e) cidx[cs[e]] = static_cast<int>(e);
  std::vector<std::size_t> cuts(n, 0);
  for (;;) {
    IntegerString y;
    y.outputOpen = t.outputOpen;
    std::vector<int> order;
    std::size_t next = 0;
    int cutNo = 0;
    for (std::size_t p = 0; p < len; ++p) {
      while (next < cuts.size() && cuts[next] == p) {
        y.tokens.push_back(t.tokens[p]);
        order.push_back(cutNo++);
        y.tokens.push_back(Token::bar());
        ++next;
      }
      y.tokens.push_back(t.tokens[p]);
      if (cidx.count(p)) order.push_back(n + cidx[p]);
    }
    out.add(y, Int(permutationSign(order)));
    int q = n - 1;
    while (q >= 0 && cuts[q] == len - 1) --q;
    if (q < 0) break;
    ++cuts[q];
    for (int r = q + 1; r < n; ++r) cuts[r] = cuts[q];
  }
  return out;
}

inline SurjComb rsCompose(const Surjection& f, int i, const Surjection& g) {
  const int kf = arity(f), kg = arity(g);
  if (i < 1 || i > kf) throw LabelOutOfRange("slot " + std::to_string(i));
  if (isOpenLabel(f, i) != g.outputOpen)
    throw ColourMismatch("slot " + std::to_string(i) + " openness differs from the inserted output");
  const int n = occurrences(f, i);
  const std::size_t L = g.tokens.size();
  SurjComb out;
  if (L == 0) return out;

  // reference index of every caesura of f and g
  const auto fc = caesuras(f), gc = caesuras(g);
  std::map<std::size_t, int> fRef, gRef;
  int ref = 0;
  for (std::size_t p : fc) fRef[p] = ref++;
  for (std::size_t p : gc) gRef[p] = ref++;
  std::vector<int> sRef;  // reference index of the r-th occurrence of i (r < n-1)
  for (std::size_t p : fc)
    if (f.tokens[p].label == i) sRef.push_back(fRef[p]);

  std::vector<std::size_t> bounds(n + 1, 0);
  bounds[n] = L - 1;
  std::vector<std::size_t> cuts(n > 1 ? n - 1 : 0, 0);
  for (;;) {
    for (int r = 1; r < n; ++r) bounds[r] = cuts[r - 1];
    IntegerString res;
    res.outputOpen = f.outputOpen;
    std::vector<int> tags;  // reference index per token, -1 when not a caesura source
    int r = 0;
    for (std::size_t p = 0; p < f.tokens.size(); ++p) {
      const Token t = f.tokens[p];
      if (t.label == i) {
        for (std::size_t gp = bounds[r]; gp <= bounds[r + 1]; ++gp) {
          const Token gt = g.tokens[gp];
          res.tokens.push_back({gt.label + i - 1, gt.open});
          if (gp == bounds[r + 1] && r < n - 1)
            tags.push_back(sRef[r]);
          else
            tags.push_back(gRef.count(gp) ? gRef[gp] : -1);
        }
        ++r;
      } else {
        res.tokens.push_back(t.label > i ? Token{t.label + kg - 1, t.open} : t);
        tags.push_back(fRef.count(p) ? fRef[p] : -1);
      }
    }
    if (isNondegenerate(res)) {
      std::vector<int> order;
      for (std::size_t p : caesuras(res)) order.push_back(tags[p]);
      out.add(res, Int(permutationSign(order)));
    }
    int q = static_cast<int>(cuts.size()) - 1;
    while (q >= 0 && cuts[q] == L - 1) --q;
    if (q < 0) break;
    ++cuts[q];
    for (std::size_t s = q + 1; s < cuts.size(); ++s) cuts[s] = cuts[q];
  }
  return out;
}

inline SurjComb rsCompose(const SurjComb& f, int i, const SurjComb& g) {
  SurjComb out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) out.add(rsCompose(a, i, b), ca * cb);
  return out;
}

inline SurjComb symAct(const std::vector<int>& sigma, const SurjComb& x) {
  SurjComb out;
  for (const auto& [a, c] : x) out.add(symAct(sigma, a), c);
  return out;
}

// ---- generators -------------------------------------------------------------

inline Surjection surjectionFromLetters(const std::vector<int>& labels, const std::vector<bool>& open,
                                        bool outputOpen) {
  Surjection s;
  s.outputOpen = outputOpen;
  for (int l : labels) s.tokens.push_back({l, open[l - 1]});
  return s;
}

// The closed and open Hirsch-type generators (1213..1k1) and (1u21u3..1uj1)^o.
inline Surjection braceGenerator(int k, bool openArguments) {
  std::vector<int> labels{1};
  std::vector<bool> open(k, openArguments);
  open[0] = false;
  for (int a = 2; a <= k; ++a) {
    labels.push_back(a);
    labels.push_back(1);
  }
  return surjectionFromLetters(labels, open, openArguments);
}

// Generators of RS_2 with at most maxLabels inputs.
inline std::vector<Surjection> generators(int maxLabels = 3) {
  std::vector<Surjection> g;
  g.push_back(surjectionFromLetters({1}, {false}, false));
  g.push_back(surjectionFromLetters({1}, {true}, true));
  g.push_back(surjectionFromLetters({1}, {false}, true));  // inc
  if (maxLabels >= 2) {
    g.push_back(surjectionFromLetters({1, 2}, {false, false}, false));
    g.push_back(surjectionFromLetters({1, 2}, {true, true}, true));
  }
  for (int k = 2; k <= maxLabels; ++k) {
    g.push_back(braceGenerator(k, false));
    g.push_back(braceGenerator(k, true));
  }
  return g;
}

// ---- components -------------------------------------------------------------

// Basis of RS_m(inputs; output) grouped by degree.
inline std::map<int, std::vector<Surjection>> componentBasis(const std::vector<bool>& inputOpen,
                                                            bool outputOpen, int m) {
  std::map<int, std::vector<Surjection>> out;
  const int k = static_cast<int>(inputOpen.size());
  if (!outputOpen)
    for (bool o : inputOpen)
      if (o) return out;
  if (k == 0) return out;
  std::vector<std::pair<std::string, Surjection>> found;
  Surjection cur;
  cur.outputOpen = outputOpen;
  // The complexity of each pair only grows under extension; prune on the raw
  // count, which bounds c and c' from below.
  auto pairOk = [&](const Surjection& s) {
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        const int c = cij(s, a, b);
        const int bound = (inputOpen[a - 1] && inputOpen[b - 1]) ? m - 1 : m;
        if (c > bound) return false;
      }
    return true;
  };
  std::function<void()> rec = [&]() {
    bool all = true;
    for (int a = 1; a <= k; ++a)
      if (occurrences(cur, a) == 0) all = false;
    if (all && inFiltration(cur, m)) found.emplace_back(print(cur), cur);
    for (int a = 1; a <= k; ++a) {
      if (!cur.tokens.empty() && cur.tokens.back().label == a) continue;
      // labels first appear in increasing order of first use only via symmetry; keep all
      cur.tokens.push_back({a, inputOpen[a - 1]});
      if (pairOk(cur)) rec();
      cur.tokens.pop_back();
    }
  };
  rec();
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (auto& [text, s] : found) out[degree(s)].push_back(s);
  return out;
}

inline ChainComplex componentComplex(const std::vector<bool>& inputOpen, bool outputOpen, int m) {
  const auto basis = componentBasis(inputOpen, outputOpen, m);
  ChainComplex C;
  std::map<int, std::map<IntegerString, std::size_t>> index;
  for (const auto& [d, list] : basis) {
    auto& names = C.bases[d];
    for (std::size_t p = 0; p < list.size(); ++p) {
      names.push_back(print(list[p]));
      index[d][list[p]] = p;
    }
  }
  for (const auto& [d, list] : basis) {
    if (!basis.count(d - 1)) continue;
    IntMatrix M(basis.at(d - 1).size(), list.size());
    for (std::size_t col = 0; col < list.size(); ++col)
      for (const auto& [v, c] : differential(list[col])) {
        auto it = index[d - 1].find(v);
        if (it == index[d - 1].end()) throw InvalidComplex("boundary leaves the component: " + print(v));
        M(it->second, col) = c;
      }
    C.boundary[d] = M;
  }
  C.validate();
  return C;
}

inline std::vector<HomologyGroup> componentHomology(const std::vector<bool>& inputOpen, bool outputOpen,
                                                    int m) {
  return allHomology(componentComplex(inputOpen, outputOpen, m));
}

// ---- generation check ---------------------------------------------------------

struct GenerationReport {
  std::size_t basisSize = 0;
  std::size_t reached = 0;
  std::vector<Surjection> missing;
  bool complete() const { return missing.empty(); }
};

// Closes the generators under symAct and rsCompose within the bound.  A basis
// element is reached when it is a generator, a relabelling, or the only
// unreached term (with unit coefficient) of a composite of reached elements.
inline GenerationReport isGeneratedUpTo(int maxLabels, int maxLength, int m = 2) {
  std::set<Surjection> universe;
  for (int k = 1; k <= maxLabels; ++k)
    for (int mask = 0; mask < (1 << k); ++mask)
      for (int oo = 0; oo < 2; ++oo) {
        std::vector<bool> open(k);
        for (int a = 0; a < k; ++a) open[a] = (mask >> a) & 1;
        for (const auto& [d, list] : componentBasis(open, oo, m))
          for (const auto& s : list)
            if (static_cast<int>(s.tokens.size()) <= maxLength) universe.insert(s);
      }
  std::set<Surjection> reached;
  std::deque<Surjection> frontier;
  auto reach = [&](const Surjection& s) {
    if (!universe.count(s) || reached.count(s)) return;
    reached.insert(s);
    frontier.push_back(s);
  };
  for (const auto& g : generators(maxLabels)) reach(g);
  std::vector<Surjection> done;
  auto tryPair = [&](const Surjection& a, const Surjection& b) {
    const int ka = arity(a), kb = arity(b);
    if (ka + kb - 1 > maxLabels) return;
    if (static_cast<int>(a.tokens.size() + b.tokens.size()) - 1 > maxLength) return;
    for (int i = 1; i <= ka; ++i) {
      if (isOpenLabel(a, i) != b.outputOpen) continue;
      std::vector<std::pair<Surjection, Int>> fresh;
      for (const auto& [v, coef] : rsCompose(a, i, b))
        if (!reached.count(v)) fresh.emplace_back(v, coef);
      if (fresh.size() == 1 && abs(fresh[0].second) == 1) reach(fresh[0].first);
    }
  };
  for (;;) {
    while (!frontier.empty()) {
      Surjection s = frontier.front();
      frontier.pop_front();
      std::vector<int> sigma(arity(s));
      std::iota(sigma.begin(), sigma.end(), 1);
      while (std::next_permutation(sigma.begin(), sigma.end())) reach(symAct(sigma, s));
      done.push_back(s);
      for (std::size_t idx = 0; idx < done.size(); ++idx) {
        const Surjection t = done[idx];
        tryPair(s, t);
        tryPair(t, s);
      }
    }
    // a later element can resolve a composite seen earlier; sweep once more
    const std::size_t before = reached.size();
    for (std::size_t x = 0; x < done.size(); ++x)
      for (std::size_t y = 0; y < done.size(); ++y) tryPair(done[x], done[y]);
    if (reached.size() == before) break;
  }
  GenerationReport rep;
  rep.basisSize = universe.size();
  rep.reached = reached.size();
  for (const auto& s : universe)
    if (!reached.count(s)) rep.missing.push_back(s);
  return rep;
}

}  // namespace operadix
