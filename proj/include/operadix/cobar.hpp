#pragma once

#include "operadix/chain.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace operadix {

using Vec = LinComb<int>;
using Vec2 = LinComb<std::pair<int, int>>;

struct CheckResult {
  bool ok = true;
  std::string detail;
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

class NotOneReduced : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite-rank graded coalgebra; basis element 0 is the coaugmentation 1 and
// the counit is its dual.
struct DGCoalgebra {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<Vec> d;
  std::vector<Vec2> coproduct;

  int rank() const { return static_cast<int>(names.size()); }

  Vec2 reducedCoproduct(int x) const {
    Vec2 r = coproduct[x];
    r.add({x, 0}, -1);
    r.add({0, x}, -1);
    return r;
  }

  bool isOneReduced() const {
    for (int i = 1; i < rank(); ++i)
      if (degrees[i] <= 1) return false;
    return rank() > 0 && degrees[0] == 0;
  }
};

// Left comodule: coaction n -> sum c (x) n'.
struct DGComodule {
  std::vector<std::string> names;
  std::vector<int> degrees;
  std::vector<Vec> d;
  std::vector<Vec2> coaction;

  int rank() const { return static_cast<int>(names.size()); }

  Vec2 reducedCoaction(int n) const {
    Vec2 r = coaction[n];
    r.add({0, n}, -1);
    return r;
  }
};

namespace detail {

template <class F>
Vec2 applyLeft(const Vec2& x, F&& f) {  // f: int -> Vec, applied to the first factor
  Vec2 r;
  for (const auto& [p, c] : x)
    for (const auto& [a, ca] : f(p.first)) r.add({a, p.second}, c * ca);
  return r;
}

template <class F>
Vec2 applyRight(const Vec2& x, F&& f) {
  Vec2 r;
  for (const auto& [p, c] : x)
    for (const auto& [b, cb] : f(p.second)) r.add({p.first, b}, c * cb);
  return r;
}

using Vec3 = LinComb<std::tuple<int, int, int>>;

}  // namespace detail

inline CheckResult checkCoalgebra(const DGCoalgebra& C) {
  const int r = C.rank();
  if (static_cast<int>(C.degrees.size()) != r || static_cast<int>(C.d.size()) != r ||
      static_cast<int>(C.coproduct.size()) != r)
    return CheckResult::fail("structure arrays have inconsistent sizes");
  auto dv = [&](const Vec& v) { return v.map([&](int i) { return C.d[i]; }); };
  for (int x = 0; x < r; ++x) {
    if (!dv(C.d[x]).isZero()) return CheckResult::fail("d^2 != 0 on " + C.names[x]);
    for (const auto& [y, c] : C.d[x])
      if (C.degrees[y] != C.degrees[x] - 1) return CheckResult::fail("d does not lower degree");
    // counit laws
    Vec left, right;
    for (const auto& [p, c] : C.coproduct[x]) {
      if (C.degrees[p.first] + C.degrees[p.second] != C.degrees[x])
        return CheckResult::fail("coproduct not homogeneous on " + C.names[x]);
      if (p.first == 0) left.add(p.second, c);
      if (p.second == 0) right.add(p.first, c);
    }
    if (left != Vec(x) || right != Vec(x)) return CheckResult::fail("counit law fails on " + C.names[x]);
    // coassociativity
    detail::Vec3 a, b;
    for (const auto& [p, c] : C.coproduct[x]) {
      for (const auto& [q, e] : C.coproduct[p.first]) a.add({q.first, q.second, p.second}, c * e);
      for (const auto& [q, e] : C.coproduct[p.second]) b.add({p.first, q.first, q.second}, c * e);
    }
    if (a != b) return CheckResult::fail("coassociativity fails on " + C.names[x]);
    // d is a coderivation
    Vec2 lhs;
    for (const auto& [y, c] : C.d[x]) lhs.add(C.coproduct[y], c);
    Vec2 rhs;
    for (const auto& [p, c] : C.coproduct[x]) {
      for (const auto& [y, e] : C.d[p.first]) rhs.add({y, p.second}, c * e);
      for (const auto& [y, e] : C.d[p.second]) rhs.add({p.first, y}, c * e * signOf(C.degrees[p.first]));
    }
    if (lhs != rhs) return CheckResult::fail("coproduct does not commute with d on " + C.names[x]);
  }
  return {};
}

inline CheckResult checkComodule(const DGCoalgebra& C, const DGComodule& N) {
  const int r = N.rank();
  for (int n = 0; n < r; ++n) {
    if (!N.d[n].map([&](int i) { return N.d[i]; }).isZero()) return CheckResult::fail("d^2 != 0 on " + N.names[n]);
    Vec unitPart;
    for (const auto& [p, c] : N.coaction[n]) {
      if (C.degrees[p.first] + N.degrees[p.second] != N.degrees[n])
        return CheckResult::fail("coaction not homogeneous on " + N.names[n]);
      if (p.first == 0) unitPart.add(p.second, c);
    }
    if (unitPart != Vec(n)) return CheckResult::fail("counit law fails on " + N.names[n]);
    detail::Vec3 a, b;
    for (const auto& [p, c] : N.coaction[n]) {
      for (const auto& [q, e] : C.coproduct[p.first]) a.add({q.first, q.second, p.second}, c * e);
      for (const auto& [q, e] : N.coaction[p.second]) b.add({p.first, q.first, q.second}, c * e);
    }
    if (a != b) return CheckResult::fail("coaction not coassociative on " + N.names[n]);
    Vec2 lhs;
    for (const auto& [y, c] : N.d[n]) lhs.add(N.coaction[y], c);
    Vec2 rhs;
    for (const auto& [p, c] : N.coaction[n]) {
      for (const auto& [y, e] : C.d[p.first]) rhs.add({y, p.second}, c * e);
      for (const auto& [y, e] : N.d[p.second]) rhs.add({p.first, y}, c * e * signOf(C.degrees[p.first]));
    }
    if (lhs != rhs) return CheckResult::fail("coaction does not commute with d on " + N.names[n]);
  }
  return {};
}

// ---- example coalgebras -------------------------------------------------------

// Homology coalgebra of a sphere: 1 and a primitive class in degree n.
inline DGCoalgebra sphereCoalgebra(int n, const std::string& name = "x") {
  DGCoalgebra C;
  C.names = {"1", name};
  C.degrees = {0, n};
  C.d = {Vec(), Vec()};
  Vec2 one({0, 0});
  Vec2 x({1, 0});
  x.add({0, 1}, 1);
  C.coproduct = {one, x};
  return C;
}

// Two primitive classes a (degree n) and b (degree n+1) with d b = a.
inline DGCoalgebra diskPairCoalgebra(int n, const std::string& a = "a", const std::string& b = "b") {
  DGCoalgebra C;
  C.names = {"1", a, b};
  C.degrees = {0, n, n + 1};
  C.d = {Vec(), Vec(), Vec(1)};
  Vec2 pa({1, 0});
  pa.add({0, 1}, 1);
  Vec2 pb({2, 0});
  pb.add({0, 2}, 1);
  C.coproduct = {Vec2({0, 0}), pa, pb};
  return C;
}

// Basis (i,j) has index i*rank(D)+j; coproduct carries the Koszul sign.
inline DGCoalgebra tensorProduct(const DGCoalgebra& A, const DGCoalgebra& B) {
  DGCoalgebra C;
  const int rb = B.rank();
  auto idx = [rb](int i, int j) { return i * rb + j; };
  for (int i = 0; i < A.rank(); ++i)
    for (int j = 0; j < rb; ++j) {
      std::string nm = i == 0 ? B.names[j] : (j == 0 ? A.names[i] : A.names[i] + "." + B.names[j]);
      C.names.push_back(nm);
      C.degrees.push_back(A.degrees[i] + B.degrees[j]);
      Vec dv;
      for (const auto& [y, c] : A.d[i]) dv.add(idx(y, j), c);
      for (const auto& [y, c] : B.d[j]) dv.add(idx(i, y), c * signOf(A.degrees[i]));
      C.d.push_back(dv);
      Vec2 cp;
      for (const auto& [p, c] : A.coproduct[i])
        for (const auto& [q, e] : B.coproduct[j])
          cp.add({idx(p.first, q.first), idx(p.second, q.second)},
                 c * e * signOf(static_cast<long long>(A.degrees[p.second]) * B.degrees[q.first]));
      C.coproduct.push_back(cp);
    }
  return C;
}

// Unimodular change of basis: new basis vector i is sum_j P(j,i) e_j; Q = P^{-1}.
inline DGCoalgebra changeBasis(const DGCoalgebra& C, const IntMatrix& P, const IntMatrix& Q) {
  const int r = C.rank();
  auto toOld = [&](int i) {
    Vec v;
    for (int j = 0; j < r; ++j) v.add(j, P(j, i));
    return v;
  };
  auto toNew = [&](const Vec& v) {
    Vec w;
    for (const auto& [j, c] : v)
      for (int i = 0; i < r; ++i) w.add(i, Q(i, j) * c);
    return w;
  };
  DGCoalgebra D = C;
  for (int i = 0; i < r; ++i) {
    Vec old = toOld(i);
    D.d[i] = toNew(old.map([&](int j) { return C.d[j]; }));
    Vec2 cp;
    for (const auto& [j, c] : old) cp.add(C.coproduct[j], c);
    cp = detail::applyLeft(cp, [&](int a) { return toNew(Vec(a)); });
    cp = detail::applyRight(cp, [&](int b) { return toNew(Vec(b)); });
    D.coproduct[i] = cp;
    D.names[i] = i == 0 ? "1" : "e" + std::to_string(i);
  }
  return D;
}

inline DGComodule changeBasis(const DGComodule& N, const IntMatrix& P, const IntMatrix& Q) {
  const int r = N.rank();
  auto toNew = [&](const Vec& v) {
    Vec w;
    for (const auto& [j, c] : v)
      for (int i = 0; i < r; ++i) w.add(i, Q(i, j) * c);
    return w;
  };
  DGComodule M = N;
  for (int i = 0; i < r; ++i) {
    Vec old;
    for (int j = 0; j < r; ++j) old.add(j, P(j, i));
    M.d[i] = toNew(old.map([&](int j) { return N.d[j]; }));
    Vec2 ca;
    for (const auto& [j, c] : old) ca.add(N.coaction[j], c);
    M.coaction[i] = detail::applyRight(ca, [&](int b) { return toNew(Vec(b)); });
    M.names[i] = "n" + std::to_string(i);
  }
  return M;
}

// Random product of elementary operations mixing basis elements of equal
// degree; indices in `frozen` are left untouched.
inline std::pair<IntMatrix, IntMatrix> randomUnimodular(std::mt19937_64& rng, const std::vector<int>& degrees,
                                                        int frozen, int steps = 6) {
  const std::size_t r = degrees.size();
  IntMatrix P = IntMatrix::identity(r), Q = IntMatrix::identity(r);
  for (int s = 0; s < steps; ++s) {
    if (r < 2) break;
    const std::size_t i = rng() % r, j = rng() % r;
    if (i == j || static_cast<int>(i) < frozen || static_cast<int>(j) < frozen || degrees[i] != degrees[j])
      continue;
    const long long k = static_cast<long long>(rng() % 5) - 2;
    if (k == 0) continue;
    // new_i = old_i + k old_j : column op on P, inverse row op on Q
    for (std::size_t t = 0; t < r; ++t) P(t, i) += k * P(t, j);
    for (std::size_t t = 0; t < r; ++t) Q(j, t) -= k * Q(i, t);
  }
  return {P, Q};
}

// ---- example comodules ----------------------------------------------------------

inline DGComodule trivialComodule() {
  DGComodule N;
  N.names = {"1"};
  N.degrees = {0};
  N.d = {Vec()};
  N.coaction = {Vec2({0, 0})};
  return N;
}

inline DGComodule regularComodule(const DGCoalgebra& C) {
  DGComodule N;
  N.names = C.names;
  N.degrees = C.degrees;
  N.d = C.d;
  N.coaction = C.coproduct;
  return N;
}

// Corestriction along a coalgebra map phi: C' -> C given on basis elements.
inline DGComodule corestrict(const DGComodule& N, const std::function<Vec(int)>& phi) {
  DGComodule M = N;
  for (int n = 0; n < N.rank(); ++n) M.coaction[n] = detail::applyLeft(N.coaction[n], phi);
  return M;
}

// The first tensor factor A of A (x) B as a comodule via a -> a (x) 1.
inline DGComodule factorComodule(const DGCoalgebra& A, const DGCoalgebra& B) {
  const int rb = B.rank();
  return corestrict(regularComodule(A), [rb](int i) { return Vec(i * rb); });
}

// ---- cobar words ------------------------------------------------------------------

// [x_1|...|x_k] with an optional comodule tail (tail < 0 means none).
struct CobarWord {
  std::vector<int> letters;
  int tail = -1;
  auto operator<=>(const CobarWord&) const = default;
};

using CobarComb = LinComb<CobarWord>;

inline int wordDegree(const DGCoalgebra& C, const std::vector<int>& letters) {
  int s = 0;
  for (int x : letters) s += C.degrees[x] - 1;
  return s;
}

inline int wordDegree(const DGCoalgebra& C, const DGComodule* N, const CobarWord& w) {
  return wordDegree(C, w.letters) + (w.tail >= 0 && N ? N->degrees[w.tail] : 0);
}

inline std::string toString(const DGCoalgebra& C, const DGComodule* N, const CobarWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.letters.size(); ++i) s += (i ? "|" : "") + C.names[w.letters[i]];
  s += "]";
  if (w.tail >= 0) s += "(x)" + (N ? N->names[w.tail] : std::to_string(w.tail));
  return s;
}

inline CobarWord concat(const CobarWord& a, const CobarWord& b) {
  CobarWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  r.tail = b.tail;
  return r;
}

inline CobarComb concat(const CobarComb& a, const CobarComb& b) {
  return bilinear(a, b, [](const CobarWord& x, const CobarWord& y) { return CobarComb(concat(x, y)); });
}

// D(s^-1 x) = -s^-1 dx + sum (-1)^{|x'|} [x'|x''] over the reduced coproduct.
inline CobarComb letterDifferential(const DGCoalgebra& C, int x) {
  CobarComb r;
  for (const auto& [y, c] : C.d[x]) r.add(CobarWord{{y}, -1}, -c);
  for (const auto& [p, c] : C.reducedCoproduct(x))
    r.add(CobarWord{{p.first, p.second}, -1}, c * signOf(C.degrees[p.first]));
  return r;
}

inline CobarComb cobarDifferential(const DGCoalgebra& C, const CobarWord& w) {
  CobarComb r;
  int eps = 0;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    for (const auto& [mid, c] : letterDifferential(C, w.letters[i])) {
      CobarWord v;
      v.letters.assign(w.letters.begin(), w.letters.begin() + i);
      v.letters.insert(v.letters.end(), mid.letters.begin(), mid.letters.end());
      v.letters.insert(v.letters.end(), w.letters.begin() + i + 1, w.letters.end());
      v.tail = w.tail;
      r.add(v, c * signOf(eps));
    }
    eps += C.degrees[w.letters[i]] - 1;
  }
  return r;
}

// D(w (x) n) = Dw (x) n + (-1)^{|w|} w (1 (x) dn + sum [z] (x) n'').
inline CobarComb relativeDifferential(const DGCoalgebra& C, const DGComodule& N, const CobarWord& w) {
  if (w.tail < 0) return cobarDifferential(C, w);
  CobarComb r = cobarDifferential(C, w);
  const int s = signOf(wordDegree(C, w.letters));
  for (const auto& [m, c] : N.d[w.tail]) r.add(CobarWord{w.letters, m}, c * s);
  for (const auto& [p, c] : N.reducedCoaction(w.tail)) {
    CobarWord v{w.letters, p.second};
    v.letters.push_back(p.first);
    r.add(v, c * s);
  }
  return r;
}

inline CobarComb cobarDifferential(const DGCoalgebra& C, const CobarComb& x) {
  return x.map([&](const CobarWord& w) { return cobarDifferential(C, w); });
}

inline CobarComb relativeDifferential(const DGCoalgebra& C, const DGComodule& N, const CobarComb& x) {
  return x.map([&](const CobarWord& w) { return relativeDifferential(C, N, w); });
}

// Words of total degree exactly deg, optionally with every tail of matching degree.
inline std::vector<CobarWord> wordsOfDegree(const DGCoalgebra& C, const DGComodule* N, int deg) {
  if (!C.isOneReduced()) throw NotOneReduced("cobar construction needs a 1-reduced coalgebra");
  std::vector<CobarWord> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (N) {
      for (int n = 0; n < N->rank(); ++n)
        if (N->degrees[n] == remaining) out.push_back({cur, n});
    } else if (remaining == 0) {
      out.push_back({cur, -1});
    }
    for (int x = 1; x < C.rank(); ++x) {
      const int e = C.degrees[x] - 1;
      if (e > remaining) continue;
      cur.push_back(x);
      rec(remaining - e);
      cur.pop_back();
    }
  };
  if (deg >= 0) rec(deg);
  std::sort(out.begin(), out.end());
  return out;
}

inline ChainComplex cobarComplex(const DGCoalgebra& C, const DGComodule* N, int truncate) {
  ChainComplex K;
  std::map<int, std::map<CobarWord, std::size_t>> idx;
  std::map<int, std::vector<CobarWord>> basis;
  int minDeg = 0;
  if (N)
    for (int d : N->degrees) minDeg = std::min(minDeg, d);
  for (int d = minDeg; d <= truncate; ++d) {
    basis[d] = wordsOfDegree(C, N, d);
    for (std::size_t i = 0; i < basis[d].size(); ++i) {
      idx[d][basis[d][i]] = i;
      K.bases[d].push_back(toString(C, N, basis[d][i]));
    }
  }
  for (int d = minDeg + 1; d <= truncate; ++d) {
    IntMatrix M(basis[d - 1].size(), basis[d].size());
    for (std::size_t c = 0; c < basis[d].size(); ++c) {
      CobarComb img = N ? relativeDifferential(C, *N, basis[d][c]) : cobarDifferential(C, basis[d][c]);
      for (const auto& [w, coef] : img) M(idx[d - 1].at(w), c) = coef;
    }
    K.boundary[d] = M;
  }
  return K;
}

// ---- twisting cochains ------------------------------------------------------------------

// A degree -1 map C -> cobar(C) or a degree 0 map N -> relative cobar, given on basis elements.
using CobarMap = std::vector<CobarComb>;

// The universal twisting cochain x -> [x] (zero on the unit).
inline CobarMap universalTwisting(const DGCoalgebra& C) {
  CobarMap f(C.rank());
  for (int x = 1; x < C.rank(); ++x) f[x] = CobarComb(CobarWord{{x}, -1});
  return f;
}

inline CobarMap universalModuleMap(const DGComodule& N) {
  CobarMap g(N.rank());
  for (int n = 0; n < N.rank(); ++n) g[n] = CobarComb(CobarWord{{}, n});
  return g;
}

inline CobarComb applyMap(const CobarMap& f, const Vec& v) {
  CobarComb r;
  for (const auto& [i, c] : v) r.add(f[i], c);
  return r;
}

// d f + f d = sum (-1)^{|x'|} f(x') f(x'').
inline CheckResult twistingCheck(const DGCoalgebra& C, const CobarMap& f) {
  for (int x = 0; x < C.rank(); ++x) {
    CobarComb lhs = cobarDifferential(C, f[x]) + applyMap(f, C.d[x]);
    CobarComb rhs;
    for (const auto& [p, c] : C.coproduct[x])
      rhs.add(concat(f[p.first], f[p.second]), c * signOf(C.degrees[p.first]));
    if (lhs != rhs) return CheckResult::fail("twisting equation fails on " + C.names[x]);
  }
  return {};
}

// f twisting and d g - g d = sum f(z) g(n'').
inline CheckResult relativeTwistingCheck(const DGCoalgebra& C, const DGComodule& N, const CobarMap& f,
                                         const CobarMap& g) {
  if (auto t = twistingCheck(C, f); !t.ok) return t;
  for (int n = 0; n < N.rank(); ++n) {
    CobarComb lhs = relativeDifferential(C, N, g[n]) - applyMap(g, N.d[n]);
    CobarComb rhs;
    for (const auto& [p, c] : N.coaction[n]) rhs.add(concat(f[p.first], g[p.second]), c);
    if (lhs != rhs) return CheckResult::fail("relative twisting equation fails on " + N.names[n]);
  }
  return {};
}

// The f-equivariant extension: [x_1|...|x_k] (x) n -> f(x_1)...f(x_k) g(n).
inline CobarComb overlineFG(const CobarMap& f, const CobarMap& g, const CobarWord& w) {
  CobarComb acc(CobarWord{{}, -1});
  for (int x : w.letters) acc = concat(acc, f[x]);
  return concat(acc, g[w.tail]);
}

inline CheckResult dgModuleMapCheck(const DGCoalgebra& C, const DGComodule& N, const CobarMap& f,
                                    const CobarMap& g, int truncate) {
  int minDeg = 0;
  for (int d : N.degrees) minDeg = std::min(minDeg, d);
  for (int d = minDeg; d <= truncate; ++d)
    for (const CobarWord& w : wordsOfDegree(C, &N, d)) {
      CobarComb lhs = relativeDifferential(C, N, w).map([&](const CobarWord& v) { return overlineFG(f, g, v); });
      CobarComb rhs = relativeDifferential(C, N, overlineFG(f, g, w));
      if (lhs != rhs) return CheckResult::fail("map does not commute with D on " + toString(C, &N, w));
    }
  return {};
}

// ---- random instances ---------------------------------------------------------------------

struct CobarInstance {
  DGCoalgebra C;
  DGComodule N;
  std::string description;
};

inline CobarInstance randomCobarInstance(std::mt19937_64& rng) {
  auto factor = [&](int which, int tag) -> std::pair<DGCoalgebra, std::string> {
    const std::string t = std::to_string(tag);
    switch (which) {
      case 0: return {sphereCoalgebra(2, "x" + t), "S2"};
      case 1: return {sphereCoalgebra(3, "y" + t), "S3"};
      default: return {diskPairCoalgebra(2, "a" + t, "b" + t), "D3"};
    }
  };
  const int nf = 1 + static_cast<int>(rng() % 2);
  auto [A, da] = factor(static_cast<int>(rng() % 3), 1);
  DGCoalgebra C = A;
  std::string desc = da;
  DGCoalgebra B;
  if (nf == 2) {
    auto [B2, db] = factor(static_cast<int>(rng() % 3), 2);
    B = B2;
    C = tensorProduct(A, B);
    desc += "x" + db;
  }
  DGComodule N;
  const int kind = static_cast<int>(rng() % 3);
  if (kind == 0) {
    N = trivialComodule();
    desc += " trivial";
  } else if (kind == 1 || nf == 1) {
    N = regularComodule(C);
    desc += " regular";
  } else {
    N = factorComodule(A, B);
    desc += " factor";
  }
  // mix the basis of C and N; the unit is kept fixed
  auto [P, Q] = randomUnimodular(rng, C.degrees, 1);
  C = changeBasis(C, P, Q);
  if (kind == 1 || (kind == 2 && nf == 1)) {
    N = regularComodule(C);
  } else {
    // re-express the coaction in the new basis of C
    N = corestrict(N, [&](int i) {
      Vec w;
      for (int j = 0; j < C.rank(); ++j) w.add(j, Q(j, i));
      return w;
    });
  }
  auto [Pn, Qn] = randomUnimodular(rng, N.degrees, 0);
  N = changeBasis(N, Pn, Qn);
  return {C, N, desc};
}

}  // namespace operadix
