#pragma once

#include "operadix/chain.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace operadix {

class NotSubmonoid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FiniteMonoid {
 public:
  FiniteMonoid(std::vector<std::vector<int>> table, int unit, std::vector<std::string> names = {})
      : table_(std::move(table)), unit_(unit), names_(std::move(names)) {
    const int n = size();
    if (n == 0 || unit < 0 || unit >= n) throw std::invalid_argument("monoid needs a unit element");
    for (const auto& row : table_)
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table is not square");
    for (int a = 0; a < n; ++a) {
      if (mul(unit, a) != a || mul(a, unit) != a) throw std::invalid_argument("unit law fails");
      for (int b = 0; b < n; ++b) {
        if (table_[a][b] < 0 || table_[a][b] >= n) throw std::invalid_argument("product out of range");
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw std::invalid_argument("not associative");
      }
    }
    if (names_.empty())
      for (int a = 0; a < n; ++a) names_.push_back(std::to_string(a));
  }

  static FiniteMonoid cyclic(int order) {
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) t[a][b] = (a + b) % order;
    return FiniteMonoid(std::move(t), 0);
  }

  // Self-maps of a two-point set under composition; element 0 is the identity.
  static FiniteMonoid endomorphismsOfTwoPoints() {
    const std::vector<std::pair<int, int>> maps{{0, 1}, {1, 0}, {0, 0}, {1, 1}};
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        auto ap = [&](int m, int x) { return x == 0 ? maps[m].first : maps[m].second; };
        std::pair<int, int> c{ap(a, ap(b, 0)), ap(a, ap(b, 1))};
        t[a][b] = static_cast<int>(std::find(maps.begin(), maps.end(), c) - maps.begin());
      }
    return FiniteMonoid(std::move(t), 0, {"id", "swap", "c0", "c1"});
  }

  int size() const { return static_cast<int>(table_.size()); }
  int unit() const { return unit_; }
  int mul(int a, int b) const { return table_[a][b]; }
  const std::string& name(int a) const { return names_[a]; }

 private:
  std::vector<std::vector<int>> table_;
  int unit_;
  std::vector<std::string> names_;
};

// A submonoid given by its elements inside an ambient monoid.
inline std::vector<int> checkSubmonoid(const FiniteMonoid& m, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto has = [&](int a) { return std::binary_search(elems.begin(), elems.end(), a); };
  if (!has(m.unit())) throw NotSubmonoid("submonoid must contain the unit");
  for (int a : elems) {
    if (a < 0 || a >= m.size()) throw NotSubmonoid("element out of range");
    for (int b : elems)
      if (!has(m.mul(a, b))) throw NotSubmonoid("not closed under multiplication");
  }
  return elems;
}

// A basis cell (x_1..x_k; y) of omega(M,N) at level k.  For omega(M) the tail is the unit.
struct LoopCell {
  std::vector<int> word;
  int tail = 0;
  int level() const { return static_cast<int>(word.size()); }
  auto operator<=>(const LoopCell&) const = default;
};

using LoopComb = LinComb<LoopCell>;

inline std::string toString(const LoopCell& c, const FiniteMonoid& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.word.size(); ++i) s += (i ? "," : "") + m.name(c.word[i]);
  return s + ";" + m.name(c.tail) + ")";
}

class LoopModel {
 public:
  LoopModel(FiniteMonoid m, std::vector<int> sub) : m_(std::move(m)), n_(checkSubmonoid(m_, std::move(sub))) {}

  const FiniteMonoid& monoid() const { return m_; }
  const std::vector<int>& submonoid() const { return n_; }
  int mul(int a, int b) const { return m_.mul(a, b); }
  int unit() const { return m_.unit(); }

  // ---- cosimplicial structure ----

  LoopCell coface(const LoopCell& u, int i) const {
    const int k = u.level();
    if (i < 0 || i > k + 1) throw std::out_of_range("coface index");
    LoopCell r = u;
    if (i == 0)
      r.word.insert(r.word.begin(), unit());
    else if (i <= k)
      r.word.insert(r.word.begin() + i, u.word[i - 1]);
    else
      r.word.push_back(u.tail);
    return r;
  }

  // Deletes x_{j+1}; defined for 0 <= j <= k-1.
  LoopCell codegeneracy(const LoopCell& u, int j) const {
    if (j < 0 || j >= u.level()) throw std::out_of_range("codegeneracy index");
    LoopCell r = u;
    r.word.erase(r.word.begin() + j);
    return r;
  }

  LoopComb differential(const LoopCell& u) const {
    LoopComb out;
    for (int i = 0; i <= u.level() + 1; ++i) out.add(coface(u, i), Int(signOf(i)));
    return out;
  }
  LoopComb differential(const LoopComb& x) const {
    return x.map([&](const LoopCell& u) { return differential(u); });
  }

  std::vector<LoopCell> levelBasis(int k, bool relative) const {
    std::vector<LoopCell> out;
    std::vector<int> tails = relative ? n_ : std::vector<int>{unit()};
    std::vector<int> w(k, 0);
    for (;;) {
      for (int t : tails) out.push_back({w, t});
      int p = k - 1;
      while (p >= 0 && w[p] == m_.size() - 1) w[p--] = 0;
      if (p < 0) break;
      ++w[p];
    }
    return out;
  }

  // Integer basis of the intersection of the kernels of all codegeneracies.
  std::vector<LoopComb> normalizedBasis(int k, bool relative) const {
    const auto basis = levelBasis(k, relative);
    if (k == 0) {
      std::vector<LoopComb> out;
      for (const auto& b : basis) out.push_back(LoopComb(b));
      return out;
    }
    const auto lower = levelBasis(k - 1, relative);
    std::map<LoopCell, std::size_t> idx;
    for (std::size_t p = 0; p < lower.size(); ++p) idx[lower[p]] = p;
    IntMatrix S(static_cast<std::size_t>(k) * lower.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (int j = 0; j < k; ++j) S(j * lower.size() + idx[codegeneracy(basis[c], j)], c) += 1;
    std::vector<LoopComb> out;
    for (const auto& v : integerKernel(S)) {
      LoopComb x;
      for (std::size_t c = 0; c < basis.size(); ++c) x.add(basis[c], v[c]);
      out.push_back(x);
    }
    return out;
  }

  bool isNormalized(const LoopComb& x) const {
    std::map<int, LoopComb> images;
    for (const auto& [u, c] : x)
      for (int j = 0; j < u.level(); ++j) images[j].add(codegeneracy(u, j), c);
    for (const auto& [j, img] : images)
      if (!img.isZero()) return false;
    return true;
  }

  // ---- operad and module structure ----

  std::vector<int> gammaPartial(const std::vector<int>& f, int i, const std::vector<int>& g) const {
    if (i < 1 || i > static_cast<int>(f.size())) throw std::out_of_range("slot index");
    std::vector<int> r(f.begin(), f.begin() + (i - 1));
    for (int y : g) r.push_back(mul(f[i - 1], y));
    r.insert(r.end(), f.begin() + i, f.end());
    return r;
  }

  std::vector<int> gamma(const std::vector<int>& f, const std::vector<std::vector<int>>& gs) const {
    if (gs.size() != f.size()) throw std::invalid_argument("need one argument per slot");
    std::vector<int> r;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (int y : gs[i]) r.push_back(mul(f[i], y));
    return r;
  }

  std::vector<int> rightTranslate(const std::vector<int>& g, int n) const {
    std::vector<int> r;
    for (int x : g) r.push_back(mul(x, n));
    return r;
  }

  // Slots holding nullopt are padded by the product of the preceding arguments' tails.
  LoopCell varsigmaPrime(const std::vector<int>& f, const std::vector<std::optional<LoopCell>>& args) const {
    if (args.size() != f.size()) throw std::invalid_argument("need one entry per slot");
    int acc = unit();
    std::vector<std::vector<int>> gs;
    for (const auto& a : args) {
      if (a) {
        gs.push_back(rightTranslate(a->word, acc));
        acc = mul(a->tail, acc);
      } else {
        gs.push_back({acc});
      }
    }
    return {gamma(f, gs), acc};
  }

  LoopCell varsigmaAt(const std::vector<int>& f, int i, const LoopCell& u) const {
    std::vector<std::optional<LoopCell>> args(f.size());
    args.at(i - 1) = u;
    return varsigmaPrime(f, args);
  }

  LoopCell varsigma(const std::vector<int>& f, const std::vector<LoopCell>& us) const {
    std::vector<std::optional<LoopCell>> args(us.begin(), us.end());
    return varsigmaPrime(f, args);
  }

  LoopCell iota(const std::vector<int>& f) const { return {f, unit()}; }

  LoopCell rho(const LoopCell& u, const std::vector<std::vector<int>>& gs) const {
    return {gamma(u.word, gs), u.tail};
  }

  // ---- operations on totalizations ----

  static LoopCell cup(const LoopCell& f, const LoopCell& g) {
    LoopCell r = f;
    r.word.insert(r.word.end(), g.word.begin(), g.word.end());
    return r;
  }

  LoopCell sqcup(const LoopCell& u, const LoopCell& v) const {
    LoopCell r = u;
    for (int x : v.word) r.word.push_back(mul(x, u.tail));
    r.tail = mul(v.tail, u.tail);
    return r;
  }

  LoopCell inc(const LoopCell& f) const { return {f.word, unit()}; }

  LoopComb homotopyH(const LoopCell& f, const LoopCell& u) const {
    const int k = f.level(), g = u.level();
    LoopComb out;
    for (int i = 1; i <= k; ++i) out.add(varsigmaAt(f.word, i, u), Int(signOf(i + i * g + k * g)));
    return out;
  }

  LoopComb braceT2(const LoopCell& f, const LoopCell& g) const {
    const int k = f.level(), l = g.level();
    LoopComb out;
    for (int i = 1; i <= k; ++i)
      out.add(LoopCell{gammaPartial(f.word, i, g.word), unit()}, Int(signOf(i + i * l + k * l)));
    return out;
  }

  // Sum over slots p_1 < ... < p_r of f receiving g_1..g_r, other slots units.
  LoopComb braceTk(const LoopCell& f, const std::vector<LoopCell>& gs) const {
    LoopComb out;
    const int k = f.level();
    forEachPlacement(k, static_cast<int>(gs.size()), [&](const std::vector<int>& pos) {
      std::vector<std::vector<int>> args(k);
      for (int t = 0; t < k; ++t) args[t] = {unit()};
      int e = 0;
      for (std::size_t s = 0; s < gs.size(); ++s) {
        args[pos[s] - 1] = gs[s].word;
        e += pos[s] + pos[s] * gs[s].level() + k * gs[s].level();
      }
      out.add(LoopCell{gamma(f.word, args), unit()}, Int(signOf(e)));
    });
    return out;
  }

  LoopComb braceTj(const LoopCell& f, const std::vector<LoopCell>& us) const {
    LoopComb out;
    const int k = f.level();
    forEachPlacement(k, static_cast<int>(us.size()), [&](const std::vector<int>& pos) {
      std::vector<std::optional<LoopCell>> args(k);
      int e = 0;
      for (std::size_t s = 0; s < us.size(); ++s) {
        args[pos[s] - 1] = us[s];
        e += pos[s] + pos[s] * us[s].level() + k * us[s].level();
      }
      out.add(varsigmaPrime(f.word, args), Int(signOf(e)));
    });
    return out;
  }

  // Bilinear extensions.
  template <class Op>
  LoopComb extend(const LoopComb& x, const LoopComb& y, Op op) const {
    LoopComb out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) out.add(toComb(op(a, b)), ca * cb);
    return out;
  }

 private:
  static LoopComb toComb(const LoopCell& c) { return LoopComb(c); }
  static LoopComb toComb(const LoopComb& c) { return c; }

  static void forEachPlacement(int k, int r, const std::function<void(const std::vector<int>&)>& fn) {
    if (r > k) return;
    std::vector<int> pos(r);
    std::iota(pos.begin(), pos.end(), 1);
    for (;;) {
      fn(pos);
      int q = r - 1;
      while (q >= 0 && pos[q] == k - (r - 1 - q)) --q;
      if (q < 0) return;
      ++pos[q];
      for (int t = q + 1; t < r; ++t) pos[t] = pos[t - 1] + 1;
    }
  }

  FiniteMonoid m_;
  std::vector<int> n_;
};

}  // namespace operadix
