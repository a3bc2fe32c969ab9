#pragma once

#include "operadix/cobar.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace operadix {

using Tuple = std::vector<int>;
using TensorComb = LinComb<Tuple>;                    // element of B^{(x)k}
using ZCell = std::pair<Tuple, int>;                  // b_1 (x) ... (x) b_k (x) c
using ZComb = LinComb<ZCell>;

// Ungraded unital and counital bialgebra given by structure constants.
struct Bialgebra {
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> product;
  Vec unit;
  std::vector<Vec2> coproduct;
  std::vector<Int> counit;

  int rank() const { return static_cast<int>(names.size()); }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) r.add(product[a][b], ca * cb);
    return r;
  }
  Int eps(const Vec& x) const {
    Int s = 0;
    for (const auto& [a, c] : x) s += c * counit[a];
    return s;
  }
};

// Left B-comodule algebra: coaction c -> sum z (x) c'.
struct ComoduleAlgebra {
  std::vector<std::string> names;
  std::vector<std::vector<Vec>> product;
  Vec unit;
  std::vector<Vec2> coaction;

  int rank() const { return static_cast<int>(names.size()); }
  Vec mul(const Vec& x, const Vec& y) const {
    Vec r;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) r.add(product[a][b], ca * cb);
    return r;
  }
};

// ---- examples -------------------------------------------------------------------------

inline Bialgebra groupBialgebra(int order) {
  Bialgebra B;
  for (int g = 0; g < order; ++g) B.names.push_back("g" + std::to_string(g));
  B.product.assign(order, std::vector<Vec>(order));
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) B.product[g][h] = Vec((g + h) % order);
  B.unit = Vec(0);
  for (int g = 0; g < order; ++g) {
    B.coproduct.push_back(Vec2({g, g}));
    B.counit.push_back(1);
  }
  return B;
}

// Integer-valued functions on a cyclic group; basis of point indicators.
inline Bialgebra functionBialgebra(int order) {
  Bialgebra B;
  for (int g = 0; g < order; ++g) B.names.push_back("d" + std::to_string(g));
  B.product.assign(order, std::vector<Vec>(order));
  for (int g = 0; g < order; ++g) {
    B.product[g][g] = Vec(g);
    B.unit.add(g, 1);
  }
  for (int g = 0; g < order; ++g) {
    Vec2 cp;
    for (int h = 0; h < order; ++h) cp.add({h, ((g - h) % order + order) % order}, 1);
    B.coproduct.push_back(cp);
    B.counit.push_back(g == 0 ? 1 : 0);
  }
  return B;
}

inline ComoduleAlgebra trivialComoduleAlgebra(const Bialgebra& B) {
  ComoduleAlgebra C;
  C.names = {"1"};
  C.product = {{Vec(0)}};
  C.unit = Vec(0);
  Vec2 co;
  for (const auto& [b, c] : B.unit) co.add({b, 0}, c);
  C.coaction = {co};
  return C;
}

inline ComoduleAlgebra regularComoduleAlgebra(const Bialgebra& B) {
  ComoduleAlgebra C;
  C.names = B.names;
  C.product = B.product;
  C.unit = B.unit;
  C.coaction = B.coproduct;
  return C;
}

// The subgroup algebra of multiples of step inside Z[Z/order].
inline ComoduleAlgebra subgroupComoduleAlgebra(int order, int step) {
  if (step <= 0 || order % step) throw std::invalid_argument("step must divide the order");
  const int sz = order / step;
  ComoduleAlgebra C;
  for (int h = 0; h < sz; ++h) C.names.push_back("g" + std::to_string(h * step));
  C.product.assign(sz, std::vector<Vec>(sz));
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) C.product[a][b] = Vec((a + b) % sz);
  C.unit = Vec(0);
  for (int h = 0; h < sz; ++h) C.coaction.push_back(Vec2({h * step, h}));
  return C;
}

inline CheckResult checkBialgebra(const Bialgebra& B) {
  const int r = B.rank();
  for (int a = 0; a < r; ++a) {
    if (B.mul(B.unit, Vec(a)) != Vec(a) || B.mul(Vec(a), B.unit) != Vec(a))
      return CheckResult::fail("unit law fails on " + B.names[a]);
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        if (B.mul(B.mul(Vec(a), Vec(b)), Vec(c)) != B.mul(Vec(a), B.mul(Vec(b), Vec(c))))
          return CheckResult::fail("product not associative");
    Vec left, right;
    detail::Vec3 x, y;
    for (const auto& [p, c] : B.coproduct[a]) {
      left.add(p.second, c * B.counit[p.first]);
      right.add(p.first, c * B.counit[p.second]);
      for (const auto& [q, e] : B.coproduct[p.first]) x.add({q.first, q.second, p.second}, c * e);
      for (const auto& [q, e] : B.coproduct[p.second]) y.add({p.first, q.first, q.second}, c * e);
    }
    if (left != Vec(a) || right != Vec(a)) return CheckResult::fail("counit law fails on " + B.names[a]);
    if (x != y) return CheckResult::fail("coproduct not coassociative on " + B.names[a]);
    for (int b = 0; b < r; ++b) {
      // coproduct multiplicative, counit multiplicative
      Vec2 lhs;
      for (const auto& [m, cm] : B.product[a][b]) lhs.add(B.coproduct[m], cm);
      Vec2 rhs;
      for (const auto& [p, c] : B.coproduct[a])
        for (const auto& [q, e] : B.coproduct[b])
          for (const auto& [u, cu] : B.product[p.first][q.first])
            for (const auto& [v, cv] : B.product[p.second][q.second]) rhs.add({u, v}, c * e * cu * cv);
      if (lhs != rhs) return CheckResult::fail("coproduct not an algebra map");
      if (B.eps(B.product[a][b]) != B.counit[a] * B.counit[b]) return CheckResult::fail("counit not multiplicative");
    }
  }
  Vec2 du;
  for (const auto& [u, c] : B.unit) du.add(B.coproduct[u], c);
  Vec2 uu;
  for (const auto& [u, c] : B.unit)
    for (const auto& [v, e] : B.unit) uu.add({u, v}, c * e);
  if (du != uu || B.eps(B.unit) != 1) return CheckResult::fail("unit not grouplike");
  return {};
}

inline CheckResult checkComoduleAlgebra(const Bialgebra& B, const ComoduleAlgebra& C) {
  const int r = C.rank();
  auto coact = [&](const Vec& v) {
    Vec2 o;
    for (const auto& [a, c] : v) o.add(C.coaction[a], c);
    return o;
  };
  for (int a = 0; a < r; ++a) {
    if (C.mul(C.unit, Vec(a)) != Vec(a) || C.mul(Vec(a), C.unit) != Vec(a))
      return CheckResult::fail("unit law fails on " + C.names[a]);
    Vec cu;
    detail::Vec3 x, y;
    for (const auto& [p, c] : C.coaction[a]) {
      cu.add(p.second, c * B.counit[p.first]);
      for (const auto& [q, e] : B.coproduct[p.first]) x.add({q.first, q.second, p.second}, c * e);
      for (const auto& [q, e] : C.coaction[p.second]) y.add({p.first, q.first, q.second}, c * e);
    }
    if (cu != Vec(a)) return CheckResult::fail("counit law fails on " + C.names[a]);
    if (x != y) return CheckResult::fail("coaction not coassociative on " + C.names[a]);
    for (int b = 0; b < r; ++b) {
      Vec2 lhs = coact(C.mul(Vec(a), Vec(b)));
      Vec2 rhs;
      for (const auto& [p, c] : C.coaction[a])
        for (const auto& [q, e] : C.coaction[b])
          for (const auto& [u, cu2] : B.product[p.first][q.first])
            for (const auto& [v, cv] : C.product[p.second][q.second]) rhs.add({u, v}, c * e * cu2 * cv);
      if (lhs != rhs) return CheckResult::fail("coaction not an algebra map");
    }
  }
  Vec2 uu;
  for (const auto& [u, c] : B.unit)
    for (const auto& [v, e] : C.unit) uu.add({u, v}, c * e);
  if (coact(C.unit) != uu) return CheckResult::fail("coaction not unital");
  return {};
}

// ---- tensor helpers ------------------------------------------------------------------------

inline TensorComb tensorOf(const std::vector<Vec>& factors) {
  TensorComb r(Tuple{});
  for (const Vec& f : factors) {
    TensorComb next;
    for (const auto& [t, c] : r)
      for (const auto& [b, e] : f) {
        Tuple u = t;
        u.push_back(b);
        next.add(u, c * e);
      }
    r = next;
  }
  return r;
}

inline TensorComb concatTensors(const TensorComb& x, const TensorComb& y) {
  return bilinear(x, y, [](const Tuple& a, const Tuple& b) {
    Tuple r = a;
    r.insert(r.end(), b.begin(), b.end());
    return TensorComb(r);
  });
}

// Componentwise product in B^{(x)k}.
inline TensorComb mulTensors(const Bialgebra& B, const TensorComb& x, const TensorComb& y) {
  TensorComb r;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) {
      if (a.size() != b.size()) throw ShapeError("tensor lengths differ");
      std::vector<Vec> f;
      for (std::size_t i = 0; i < a.size(); ++i) f.push_back(B.product[a[i]][b[i]]);
      r.add(tensorOf(f), ca * cb);
    }
  return r;
}

// Iterated coproduct into k factors: k=0 is the counit, k=1 the identity.
inline TensorComb iteratedCoproduct(const Bialgebra& B, const Vec& a, int k) {
  TensorComb r;
  if (k == 0) {
    r.add(Tuple{}, B.eps(a));
    return r;
  }
  for (const auto& [b, c] : a) r.add(Tuple{b}, c);
  for (int step = 1; step < k; ++step) {
    TensorComb next;
    for (const auto& [t, c] : r)
      for (const auto& [p, e] : B.coproduct[t.front()]) {
        Tuple u{p.first, p.second};
        u.insert(u.end(), t.begin() + 1, t.end());
        next.add(u, c * e);
      }
    r = next;
  }
  return r;
}

// a < (b_1..b_l) and (b_1..b_l) > a.
inline TensorComb leftAct(const Bialgebra& B, const Vec& a, const TensorComb& g) {
  TensorComb r;
  for (const auto& [t, c] : g) r.add(mulTensors(B, iteratedCoproduct(B, a, static_cast<int>(t.size())), TensorComb(t)), c);
  return r;
}

inline TensorComb rightAct(const Bialgebra& B, const TensorComb& g, const Vec& a) {
  TensorComb r;
  for (const auto& [t, c] : g) r.add(mulTensors(B, TensorComb(t), iteratedCoproduct(B, a, static_cast<int>(t.size()))), c);
  return r;
}

// Iterated coaction into k factors of B and the coefficient.
inline ZComb iteratedCoaction(const Bialgebra& B, const ComoduleAlgebra& C, const Vec& c, int k) {
  ZComb r;
  if (k == 0) {
    for (const auto& [x, e] : c) r.add({Tuple{}, x}, e);
    return r;
  }
  for (const auto& [x, e] : c)
    for (const auto& [p, f] : C.coaction[x])
      for (const auto& [t, g] : iteratedCoproduct(B, Vec(p.first), k)) r.add({t, p.second}, e * f * g);
  return r;
}

// ---- the multiplicative operad of tensor powers ---------------------------------------------

inline TensorComb unitOperation(const Bialgebra& B) { return tensorOf({B.unit}); }
inline TensorComb multiplication(const Bialgebra& B) { return tensorOf({B.unit, B.unit}); }

inline TensorComb mBCompose(const Bialgebra& B, const Tuple& f, int i, const TensorComb& g) {
  if (i < 1 || i > static_cast<int>(f.size())) throw LabelOutOfRange("slot " + std::to_string(i));
  TensorComb left(Tuple(f.begin(), f.begin() + (i - 1)));
  TensorComb right(Tuple(f.begin() + i, f.end()));
  return concatTensors(concatTensors(left, leftAct(B, Vec(f[i - 1]), g)), right);
}

inline TensorComb mBCompose(const Bialgebra& B, const TensorComb& f, int i, const TensorComb& g) {
  TensorComb r;
  for (const auto& [t, c] : f) r.add(mBCompose(B, t, i, g), c);
  return r;
}

inline TensorComb mBGamma(const Bialgebra& B, const Tuple& f, const std::vector<TensorComb>& gs) {
  if (gs.size() != f.size()) throw ShapeError("need one argument per slot");
  TensorComb r(Tuple{});
  for (std::size_t i = 0; i < f.size(); ++i) r = concatTensors(r, leftAct(B, Vec(f[i]), gs[i]));
  return r;
}

inline TensorComb mBGamma(const Bialgebra& B, const TensorComb& f, const std::vector<TensorComb>& gs) {
  TensorComb r;
  for (const auto& [t, c] : f) r.add(mBGamma(B, t, gs), c);
  return r;
}

// ---- the module Z_{B,C} -------------------------------------------------------------------

inline ZComb zOf(const TensorComb& t, const Vec& c) {
  ZComb r;
  for (const auto& [u, a] : t)
    for (const auto& [x, b] : c) r.add({u, x}, a * b);
  return r;
}

// Wide left action: slots holding nullopt are padded.  Slot t receives the
// product, later arguments on the left, of z_{c_a}^{(t - beta_a)} over the
// arguments a placed before t; argument slots receive g > (that product).
inline ZComb lambdaPrime(const Bialgebra& B, const ComoduleAlgebra& C, const Tuple& f,
                         const std::vector<std::optional<ZCell>>& args) {
  const int k = static_cast<int>(f.size());
  if (static_cast<int>(args.size()) != k) throw ShapeError("need one entry per slot");
  std::vector<int> pos;
  for (int t = 0; t < k; ++t)
    if (args[t]) pos.push_back(t + 1);
  const std::size_t s = pos.size();
  std::vector<std::vector<std::pair<ZCell, Int>>> expansions(s);
  for (std::size_t a = 0; a < s; ++a)
    for (const auto& [z, c] : iteratedCoaction(B, C, Vec(args[pos[a] - 1]->second), k - pos[a]))
      expansions[a].emplace_back(z, c);
  ZComb out;
  std::vector<std::size_t> choice(s, 0);
  for (;;) {
    bool empty = false;
    for (std::size_t a = 0; a < s; ++a)
      if (expansions[a].empty()) empty = true;
    if (empty) break;
    Int coef = 1;
    for (std::size_t a = 0; a < s; ++a) coef *= expansions[a][choice[a]].second;
    TensorComb word(Tuple{});
    std::size_t argNo = 0;
    for (int t = 1; t <= k; ++t) {
      Vec P = B.unit;
      // product z_{c_b}^{(t-beta_b)} ... z_{c_1}^{(t-beta_1)} over b with beta_b < t
      for (std::size_t a = 0; a < s && pos[a] < t; ++a) {
        const Tuple& zs = expansions[a][choice[a]].first.first;
        P = B.mul(Vec(zs[t - pos[a] - 1]), P);
      }
      if (args[t - 1]) {
        TensorComb g(args[t - 1]->first);
        word = concatTensors(word, leftAct(B, Vec(f[t - 1]), rightAct(B, g, P)));
        ++argNo;
      } else {
        word = concatTensors(word, tensorOf({B.mul(Vec(f[t - 1]), P)}));
      }
    }
    Vec coeff = C.unit;
    for (std::size_t a = 0; a < s; ++a) coeff = C.mul(Vec(expansions[a][choice[a]].first.second), coeff);
    out.add(zOf(word, coeff), coef);
    std::size_t q = 0;
    while (q < s && ++choice[q] == expansions[q].size()) choice[q++] = 0;
    if (q == s) break;
  }
  return out;
}

inline ZComb lambdaPrime(const Bialgebra& B, const ComoduleAlgebra& C, const TensorComb& f,
                         const std::vector<std::optional<ZComb>>& args) {
  // multilinear extension over f and every present argument
  ZComb out;
  std::vector<std::size_t> present;
  for (std::size_t t = 0; t < args.size(); ++t)
    if (args[t]) present.push_back(t);
  for (const auto& [ft, fc] : f) {
    std::function<void(std::size_t, std::vector<std::optional<ZCell>>&, Int)> rec =
        [&](std::size_t p, std::vector<std::optional<ZCell>>& cur, Int coef) {
          if (p == present.size()) {
            out.add(lambdaPrime(B, C, ft, cur), coef);
            return;
          }
          for (const auto& [z, c] : *args[present[p]]) {
            cur[present[p]] = z;
            rec(p + 1, cur, coef * c);
          }
        };
    std::vector<std::optional<ZCell>> cur(args.size());
    rec(0, cur, fc);
  }
  return out;
}

inline ZComb lambdaI(const Bialgebra& B, const ComoduleAlgebra& C, const TensorComb& f, int i, const ZComb& z) {
  if (f.isZero()) return {};
  const std::size_t k = f.begin()->first.size();
  std::vector<std::optional<ZComb>> args(k);
  args.at(i - 1) = z;
  return lambdaPrime(B, C, f, args);
}

inline ZComb lambdaFull(const Bialgebra& B, const ComoduleAlgebra& C, const TensorComb& f,
                        const std::vector<ZComb>& zs) {
  std::vector<std::optional<ZComb>> args(zs.begin(), zs.end());
  return lambdaPrime(B, C, f, args);
}

inline ZComb iotaB(const ComoduleAlgebra& C, const TensorComb& f) { return zOf(f, C.unit); }

inline ZComb rhoB(const Bialgebra& B, const ZComb& z, const std::vector<TensorComb>& gs) {
  ZComb out;
  for (const auto& [cell, c] : z) {
    const TensorComb t = mBGamma(B, cell.first, gs);
    for (const auto& [u, e] : t) out.add({u, cell.second}, c * e);
  }
  return out;
}

// Partial right action at slot i.
inline ZComb rhoAt(const Bialgebra& B, const ZComb& z, int i, const TensorComb& g) {
  ZComb out;
  for (const auto& [cell, c] : z) {
    std::vector<TensorComb> gs(cell.first.size(), unitOperation(B));
    gs.at(i - 1) = g;
    for (const auto& [u, e] : mBGamma(B, cell.first, gs)) out.add({u, cell.second}, c * e);
  }
  return out;
}

// ---- cosimplicial structure and unreduced cobar ------------------------------------------

inline ZComb zCoface(const Bialgebra& B, const ComoduleAlgebra& C, const ZCell& z, int i) {
  const int n = static_cast<int>(z.first.size());
  const TensorComb mu = multiplication(B);
  if (i == 0) return lambdaI(B, C, mu, 2, ZComb(z));
  if (i == n + 1) return lambdaI(B, C, mu, 1, ZComb(z));
  return rhoAt(B, ZComb(z), i, mu);
}

inline ZComb zCodegeneracy(const Bialgebra& B, const ZCell& z, int j) {
  ZComb out;
  Tuple t = z.first;
  const Int e = B.counit[t.at(j)];
  t.erase(t.begin() + j);
  out.add({t, z.second}, e);
  return out;
}

inline ZComb unreducedRelativeDifferential(const Bialgebra& B, const ComoduleAlgebra& C, const ZCell& z) {
  const int n = static_cast<int>(z.first.size());
  ZComb out = zOf(concatTensors(tensorOf({B.unit}), TensorComb(z.first)), Vec(z.second));
  for (int i = 1; i <= n; ++i) {
    Tuple pre(z.first.begin(), z.first.begin() + (i - 1)), post(z.first.begin() + i, z.first.end());
    TensorComb mid;
    for (const auto& [p, c] : B.coproduct[z.first[i - 1]]) mid.add(Tuple{p.first, p.second}, c);
    out.add(zOf(concatTensors(concatTensors(TensorComb(pre), mid), TensorComb(post)), Vec(z.second)),
            Int(signOf(i)));
  }
  for (const auto& [p, c] : C.coaction[z.second]) {
    Tuple t = z.first;
    t.push_back(p.first);
    out.add({t, p.second}, c * signOf(n + 1));
  }
  return out;
}

inline TensorComb unreducedDifferential(const Bialgebra& B, const Tuple& w) {
  const int n = static_cast<int>(w.size());
  TensorComb out = concatTensors(tensorOf({B.unit}), TensorComb(w));
  for (int i = 1; i <= n; ++i) {
    Tuple pre(w.begin(), w.begin() + (i - 1)), post(w.begin() + i, w.end());
    TensorComb mid;
    for (const auto& [p, c] : B.coproduct[w[i - 1]]) mid.add(Tuple{p.first, p.second}, c);
    out.add(concatTensors(concatTensors(TensorComb(pre), mid), TensorComb(post)), Int(signOf(i)));
  }
  out.add(concatTensors(TensorComb(w), tensorOf({B.unit})), Int(signOf(n + 1)));
  return out;
}

inline std::vector<Tuple> allTuples(int rank, int length) {
  std::vector<Tuple> out;
  Tuple t(length, 0);
  for (;;) {
    out.push_back(t);
    int p = length - 1;
    while (p >= 0 && t[p] == rank - 1) t[p--] = 0;
    if (p < 0) break;
    ++t[p];
  }
  return out;
}

// Tensor length n sits in degree -n.
inline ChainComplex unreducedCobar(const Bialgebra& B, int truncate) {
  ChainComplex K;
  for (int n = 0; n <= truncate; ++n)
    for (const Tuple& t : allTuples(B.rank(), n)) {
      std::string s = "[";
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + B.names[t[i]];
      K.bases[-n].push_back(s + "]");
    }
  for (int n = 0; n < truncate; ++n) {
    const auto src = allTuples(B.rank(), n), dst = allTuples(B.rank(), n + 1);
    std::map<Tuple, std::size_t> idx;
    for (std::size_t i = 0; i < dst.size(); ++i) idx[dst[i]] = i;
    IntMatrix M(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [t, e] : unreducedDifferential(B, src[c])) M(idx.at(t), c) = e;
    K.boundary[-n] = M;
  }
  return K;
}

inline ChainComplex unreducedRelativeCobar(const Bialgebra& B, const ComoduleAlgebra& C, int truncate) {
  ChainComplex K;
  auto cells = [&](int n) {
    std::vector<ZCell> v;
    for (const Tuple& t : allTuples(B.rank(), n))
      for (int c = 0; c < C.rank(); ++c) v.push_back({t, c});
    return v;
  };
  for (int n = 0; n <= truncate; ++n)
    for (const ZCell& z : cells(n)) {
      std::string s = "[";
      for (std::size_t i = 0; i < z.first.size(); ++i) s += (i ? "|" : "") + B.names[z.first[i]];
      K.bases[-n].push_back(s + "]" + C.names[z.second]);
    }
  for (int n = 0; n < truncate; ++n) {
    const auto src = cells(n), dst = cells(n + 1);
    std::map<ZCell, std::size_t> idx;
    for (std::size_t i = 0; i < dst.size(); ++i) idx[dst[i]] = i;
    IntMatrix M(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [z, e] : unreducedRelativeDifferential(B, C, src[c])) M(idx.at(z), c) = e;
    K.boundary[-n] = M;
  }
  return K;
}

// ---- reduced cobar of an ungraded bialgebra and the E' operations -------------------------

// A Z-basis of the kernel of the counit.
inline std::vector<Vec> augmentationIdealBasis(const Bialgebra& B) {
  IntMatrix row(1, B.rank());
  for (int a = 0; a < B.rank(); ++a) row(0, a) = B.counit[a];
  std::vector<Vec> out;
  for (const auto& v : integerKernel(row)) {
    Vec x;
    for (int a = 0; a < B.rank(); ++a) x.add(a, v[a]);
    out.push_back(x);
  }
  return out;
}

// Words [a_1..a_n] in the augmentation ideal, n letters in degree -n.
inline std::vector<TensorComb> reducedWords(const Bialgebra& B, int n) {
  const auto ideal = augmentationIdealBasis(B);
  std::vector<TensorComb> out;
  for (const Tuple& t : allTuples(static_cast<int>(ideal.size()), n)) {
    std::vector<Vec> f;
    for (int i : t) f.push_back(ideal[i]);
    out.push_back(tensorOf(f));
  }
  return out;
}

inline TensorComb reducedCoproductAt(const Bialgebra& B, const Tuple& w, int i) {
  TensorComb mid;
  const int b = w[i];
  for (const auto& [p, c] : B.coproduct[b]) mid.add(Tuple{p.first, p.second}, c);
  mid.add(tensorOf({Vec(b), B.unit}), Int(-1));
  mid.add(tensorOf({B.unit, Vec(b)}), Int(-1));
  return concatTensors(concatTensors(TensorComb(Tuple(w.begin(), w.begin() + i)), mid),
                       TensorComb(Tuple(w.begin() + i + 1, w.end())));
}

inline TensorComb reducedCobarDifferential(const Bialgebra& B, const TensorComb& x) {
  TensorComb out;
  for (const auto& [w, c] : x)
    for (std::size_t i = 0; i < w.size(); ++i)
      out.add(reducedCoproductAt(B, w, static_cast<int>(i)), c * signOf(static_cast<long long>(i)));
  return out;
}

// D(w;c) = Dw;c + (-1)^n (w, z; c') over the reduced coaction.
inline ZComb reducedRelativeDifferential(const Bialgebra& B, const ComoduleAlgebra& C, const ZComb& x) {
  ZComb out;
  for (const auto& [cell, c] : x) {
    const int n = static_cast<int>(cell.first.size());
    for (const auto& [w, e] : reducedCobarDifferential(B, TensorComb(cell.first))) out.add({w, cell.second}, c * e);
    Vec2 red = C.coaction[cell.second];
    for (const auto& [u, e] : B.unit) red.add({u, cell.second}, -e);
    for (const auto& [p, e] : red) {
      Tuple t = cell.first;
      t.push_back(p.first);
      out.add({t, p.second}, c * e * signOf(n));
    }
  }
  return out;
}

inline std::size_t wordLength(const TensorComb& x) { return x.isZero() ? 0 : x.begin()->first.size(); }
inline std::size_t wordLength(const ZComb& x) { return x.isZero() ? 0 : x.begin()->first.first.size(); }

inline ZComb incCobar(const ComoduleAlgebra& C, const TensorComb& f) { return zOf(f, C.unit); }

// mu'_o((a;c),(b;c')) = (a, b > z_c; c' c'').
inline ZComb muPrimeO(const Bialgebra& B, const ComoduleAlgebra& C, const ZComb& u, const ZComb& v) {
  ZComb out;
  for (const auto& [x, cx] : u)
    for (const auto& [y, cy] : v)
      for (const auto& [p, e] : C.coaction[x.second]) {
        TensorComb right = rightAct(B, TensorComb(y.first), Vec(p.first));
        TensorComb word = concatTensors(TensorComb(x.first), right);
        out.add(zOf(word, C.mul(Vec(y.second), Vec(p.second))), cx * cy * e);
      }
  return out;
}

// Sum over slots i_1 < ... < i_k of f receiving g_s via a < g_s; sign
// prod (-1)^{i_s + i_s l_s + n l_s}.
inline TensorComb ePrime1k(const Bialgebra& B, const TensorComb& f, const std::vector<TensorComb>& gs) {
  TensorComb out;
  for (const auto& [w, c] : f) {
    const int n = static_cast<int>(w.size()), k = static_cast<int>(gs.size());
    if (k > n) continue;
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 1);
    for (;;) {
      TensorComb word(Tuple{});
      long long e = 0;
      std::size_t s = 0;
      for (int t = 1; t <= n; ++t) {
        if (s < pos.size() && pos[s] == t) {
          const long long l = static_cast<long long>(wordLength(gs[s]));
          e += t + t * l + n * l;
          word = concatTensors(word, leftAct(B, Vec(w[t - 1]), gs[s]));
          ++s;
        } else {
          word = concatTensors(word, TensorComb(Tuple{w[t - 1]}));
        }
      }
      out.add(word, c * signOf(e));
      int q = k - 1;
      while (q >= 0 && pos[q] == n - (k - 1 - q)) --q;
      if (q < 0) break;
      ++pos[q];
      for (int r = q + 1; r < k; ++r) pos[r] = pos[r - 1] + 1;
    }
  }
  return out;
}

// Open-output brace: relative arguments placed in distinct slots through the
// wide left action, with the same sign rule as ePrime1k.
inline ZComb ePrimeOpen(const Bialgebra& B, const ComoduleAlgebra& C, const TensorComb& f,
                        const std::vector<ZComb>& us) {
  ZComb out;
  for (const auto& [w, c] : f) {
    const int n = static_cast<int>(w.size()), k = static_cast<int>(us.size());
    if (k > n) continue;
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 1);
    for (;;) {
      std::vector<std::optional<ZComb>> args(n);
      long long e = 0;
      for (int s = 0; s < k; ++s) {
        const long long l = static_cast<long long>(wordLength(us[s]));
        e += pos[s] + pos[s] * l + n * l;
        args[pos[s] - 1] = us[s];
      }
      out.add(lambdaPrime(B, C, TensorComb(w), args), c * signOf(e));
      int q = k - 1;
      while (q >= 0 && pos[q] == n - (k - 1 - q)) --q;
      if (q < 0) break;
      ++pos[q];
      for (int r = q + 1; r < k; ++r) pos[r] = pos[r - 1] + 1;
    }
  }
  return out;
}

}  // namespace operadix
