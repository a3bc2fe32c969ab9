#pragma once

#include "operadix/cobar.hpp"
#include "operadix/geometry.hpp"
#include "operadix/graph.hpp"
#include "operadix/lattice.hpp"
#include "operadix/loop.hpp"
#include "operadix/surjection.hpp"
#include "operadix/unreduced.hpp"
#include "operadix/verify.hpp"

#include <nlohmann/json.hpp>

namespace operadix::json {

using Json = nlohmann::ordered_json;

// Small integers as numbers, anything wider as a decimal string.
inline Json integer(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

inline Json colour(const Colour& c) { return {{"n", c.index}, {"open", c.open}}; }

inline Json string(const IntegerString& x) {
  const Signature s = colours(x);
  Json inputs = Json::array();
  for (const auto& c : s.inputs) inputs.push_back(colour(c));
  return {{"string", print(x)}, {"inputs", inputs}, {"output", colour(s.output)}};
}

inline Json graph(const GraphElement& a) {
  Json cols = Json::array(), edges = Json::array();
  for (bool o : a.vertexOpen) cols.push_back(o ? "o" : "c");
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j) {
      const Edge& e = a.edge(i, j);
      edges.push_back({{"i", i}, {"j", j}, {"mu", e.mu}, {"orient", e.iToJ ? "iToJ" : "jToI"}});
    }
  return {{"colours", cols}, {"edges", edges}, {"outputOpen", a.outputOpen}};
}

inline Json matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(integer(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json homologyGroup(const HomologyGroup& h) {
  Json t = Json::array();
  for (const auto& x : h.torsion) t.push_back(integer(x));
  return {{"degree", h.degree}, {"rank", h.rank}, {"torsion", t}};
}

inline Json homology(const std::vector<HomologyGroup>& hs) {
  Json a = Json::array();
  for (const auto& h : hs) a.push_back(homologyGroup(h));
  return a;
}

inline Json linComb(const SurjComb& x) {
  Json terms = Json::array();
  for (const auto& [u, c] : x) terms.push_back({{"coeff", integer(c)}, {"string", print(u)}});
  return {{"terms", terms}};
}

inline Json rational(const Rational& r) {
  return Json::array({integer(numerator(r)), integer(denominator(r))});
}

inline Json box(const Box& b) {
  Json axes = Json::array();
  for (const auto& I : b.axes) axes.push_back(Json::array({rational(I.lo), rational(I.hi)}));
  return axes;
}

// Closed and open boxes keep label order; "colours" records how they interleave.
inline Json config(const CubeConfig& x) {
  Json closed = Json::array(), open = Json::array(), cols = Json::array();
  for (int b = 0; b < x.size(); ++b) {
    (x.open[b] ? open : closed).push_back(box(x.boxes[b]));
    cols.push_back(x.open[b] ? "o" : "c");
  }
  return {{"m", x.m}, {"colours", cols}, {"closed", closed}, {"open", open}, {"outputOpen", x.outputOpen}};
}

inline Json monoid(const FiniteMonoid& M) {
  Json names = Json::array(), table = Json::array();
  for (int a = 0; a < M.size(); ++a) {
    names.push_back(M.name(a));
    Json row = Json::array();
    for (int b = 0; b < M.size(); ++b) row.push_back(M.mul(a, b));
    table.push_back(row);
  }
  return {{"elements", names}, {"unit", M.unit()}, {"table", table}};
}

// Terms grouped by cosimplicial level.
inline Json loopElement(const LoopComb& x, const FiniteMonoid& M) {
  std::map<int, Json> byLevel;
  for (const auto& [u, c] : x) {
    Json word = Json::array();
    for (int a : u.word) word.push_back(M.name(a));
    byLevel[u.level()].push_back({{"coeff", integer(c)}, {"word", word}, {"tail", M.name(u.tail)}});
  }
  Json out = Json::array();
  for (auto& [k, terms] : byLevel) out.push_back({{"degree", k}, {"terms", terms}});
  return out;
}

inline Json coalgebra(const DGCoalgebra& C) {
  Json basis = Json::array(), d = Json::array(), cop = Json::array();
  for (int x = 0; x < C.rank(); ++x) {
    basis.push_back({{"name", C.names[x]}, {"degree", C.degrees[x]}});
    for (const auto& [y, c] : C.d[x]) d.push_back(Json::array({x, y, integer(c)}));
    for (const auto& [p, c] : C.coproduct[x]) cop.push_back(Json::array({x, p.first, p.second, integer(c)}));
  }
  return {{"basis", basis}, {"differential", d}, {"coproduct", cop}};
}

inline Json comodule(const DGComodule& N) {
  Json basis = Json::array(), d = Json::array(), co = Json::array();
  for (int x = 0; x < N.rank(); ++x) {
    basis.push_back({{"name", N.names[x]}, {"degree", N.degrees[x]}});
    for (const auto& [y, c] : N.d[x]) d.push_back(Json::array({x, y, integer(c)}));
    for (const auto& [p, c] : N.coaction[x]) co.push_back(Json::array({x, p.first, p.second, integer(c)}));
  }
  return {{"basis", basis}, {"differential", d}, {"coaction", co}};
}

inline Json bialgebra(const Bialgebra& B) {
  Json basis = Json::array(), prod = Json::array(), cop = Json::array(), unit = Json::array(),
       counit = Json::array();
  for (int a = 0; a < B.rank(); ++a) {
    basis.push_back({{"name", B.names[a]}, {"degree", 0}});
    for (int b = 0; b < B.rank(); ++b)
      for (const auto& [c, k] : B.product[a][b]) prod.push_back(Json::array({a, b, c, integer(k)}));
    for (const auto& [p, k] : B.coproduct[a]) cop.push_back(Json::array({a, p.first, p.second, integer(k)}));
    counit.push_back(integer(B.counit[a]));
  }
  for (const auto& [a, k] : B.unit) unit.push_back(Json::array({a, integer(k)}));
  return {{"basis", basis}, {"product", prod}, {"unit", unit}, {"coproduct", cop}, {"counit", counit}};
}

inline Json complexSummary(const ChainComplex& K, int skipAbove = std::numeric_limits<int>::max()) {
  Json dims = Json::array(), hs = Json::array();
  for (const auto& [d, b] : K.bases) dims.push_back({{"degree", d}, {"dim", b.size()}});
  for (const auto& h : allHomology(K))
    if (h.degree <= skipAbove) hs.push_back(homologyGroup(h));
  return {{"dimensions", dims}, {"homology", hs}};
}

inline Json report(const SuiteReport& r, bool timing = false) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"ok", c.ok()}};
    if (!c.ok()) j["firstFailure"] = c.firstFailure;
    checks.push_back(j);
  }
  Json out = {{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}};
  if (timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace operadix::json
