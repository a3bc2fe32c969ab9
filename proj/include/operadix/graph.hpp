#pragma once

#include "operadix/lattice.hpp"

#include <functional>
#include <string>
#include <vector>

namespace operadix {

struct Edge {
  int mu = 1;
  bool iToJ = true;  // orientation for the stored pair i<j
  auto operator<=>(const Edge&) const = default;
};

// Vertices are 1-based; edges are stored for i<j in row-major pair order.
struct GraphElement {
  std::vector<bool> vertexOpen;
  std::vector<Edge> edges;
  bool outputOpen = false;

  int size() const { return static_cast<int>(vertexOpen.size()); }

  static std::size_t pairIndex(int n, int i, int j) {
    // i<j, 1-based
    std::size_t before = 0;
    for (int r = 1; r < i; ++r) before += static_cast<std::size_t>(n - r);
    return before + static_cast<std::size_t>(j - i - 1);
  }

  const Edge& edge(int i, int j) const { return edges.at(pairIndex(size(), i, j)); }
  Edge& edge(int i, int j) { return edges.at(pairIndex(size(), i, j)); }

  // True when the edge between a and b (any order) points from a to b.
  bool pointsTo(int a, int b) const {
    return a < b ? edge(a, b).iToJ : !edge(b, a).iToJ;
  }
  int colour(int a, int b) const { return a < b ? edge(a, b).mu : edge(b, a).mu; }

  static GraphElement make(std::vector<bool> open, bool outputOpen) {
    GraphElement g;
    const int n = static_cast<int>(open.size());
    g.vertexOpen = std::move(open);
    g.edges.assign(static_cast<std::size_t>(n * (n - 1) / 2), Edge{});
    g.outputOpen = outputOpen;
    return g;
  }

  auto operator<=>(const GraphElement&) const = default;
};

inline bool validate(const GraphElement& a) {
  const int n = a.size();
  if (static_cast<int>(a.edges.size()) != n * (n - 1) / 2) return false;
  if (!a.outputOpen)
    for (bool o : a.vertexOpen)
      if (o) return false;
  std::set<int> mus;
  for (const Edge& e : a.edges) {
    if (e.mu < 1) return false;
    mus.insert(e.mu);
  }
  for (int nu : mus) {
    // Kahn's algorithm on the edges of colour nu
    std::vector<int> indeg(n + 1, 0);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (a.edge(i, j).mu == nu) ++indeg[a.edge(i, j).iToJ ? j : i];
    std::vector<int> stack;
    for (int v = 1; v <= n; ++v)
      if (!indeg[v]) stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++removed;
      for (int w = 1; w <= n; ++w) {
        if (w == v || a.colour(v, w) != nu || !a.pointsTo(v, w)) continue;
        if (--indeg[w] == 0) stack.push_back(w);
      }
    }
    if (removed != n) return false;
  }
  return true;
}

inline bool leq(const GraphElement& a, const GraphElement& b) {
  if (a.vertexOpen != b.vertexOpen || a.outputOpen != b.outputOpen)
    throw ShapeError("graph elements have different vertex colours");
  for (std::size_t p = 0; p < a.edges.size(); ++p)
    if (!(a.edges[p] == b.edges[p]) && !(a.edges[p].mu < b.edges[p].mu)) return false;
  return true;
}

inline bool inFiltration(const GraphElement& a, int m) {
  const int n = a.size();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Edge& e = a.edge(i, j);
      const bool oi = a.vertexOpen[i - 1], oj = a.vertexOpen[j - 1];
      int bound = m;
      if (oi && oj) {
        bound = m - 1;
      } else if (oi != oj) {
        // an edge pointing into the open vertex gets the smaller bound
        const bool intoOpen = oj ? e.iToJ : !e.iToJ;
        bound = intoOpen ? m - 1 : m;
      }
      if (e.mu > bound) return false;
    }
  return true;
}

// Full composition alpha(beta_1, ..., beta_n).
inline GraphElement compose(const GraphElement& alpha, const std::vector<GraphElement>& betas) {
  const int n = alpha.size();
  if (static_cast<int>(betas.size()) != n) throw ShapeError("need one graph per vertex");
  std::vector<int> block, start;
  std::vector<bool> open;
  for (int p = 0; p < n; ++p) {
    if (betas[p].outputOpen != alpha.vertexOpen[p])
      throw ColourMismatch("vertex " + std::to_string(p + 1) + " colour differs from the inserted output");
    start.push_back(static_cast<int>(open.size()));
    for (int v = 0; v < betas[p].size(); ++v) {
      block.push_back(p);
      open.push_back(betas[p].vertexOpen[v]);
    }
  }
  GraphElement r = GraphElement::make(open, alpha.outputOpen);
  const int total = r.size();
  for (int a = 1; a <= total; ++a)
    for (int b = a + 1; b <= total; ++b) {
      const int pa = block[a - 1], pb = block[b - 1];
      if (pa == pb)
        r.edge(a, b) = betas[pa].edge(a - start[pa], b - start[pb]);
      else
        r.edge(a, b) = alpha.edge(pa + 1, pb + 1);
    }
  return r;
}

inline GraphElement unitGraph(bool open) { return GraphElement::make({open}, open); }

inline GraphElement compose(const GraphElement& alpha, int i, const GraphElement& beta) {
  if (i < 1 || i > alpha.size()) throw LabelOutOfRange("vertex " + std::to_string(i));
  std::vector<GraphElement> bs;
  for (int p = 1; p <= alpha.size(); ++p)
    bs.push_back(p == i ? beta : unitGraph(alpha.vertexOpen[p - 1]));
  return compose(alpha, bs);
}

inline GraphElement symAct(const std::vector<int>& sigma, const GraphElement& a) {
  const int n = a.size();
  if (static_cast<int>(sigma.size()) != n) throw ShapeError("permutation size differs");
  std::vector<bool> open(n);
  for (int i = 1; i <= n; ++i) open[sigma[i - 1] - 1] = a.vertexOpen[i - 1];
  GraphElement r = GraphElement::make(open, a.outputOpen);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int si = sigma[i - 1], sj = sigma[j - 1];
      const Edge& e = a.edge(i, j);
      if (si < sj)
        r.edge(si, sj) = e;
      else
        r.edge(sj, si) = {e.mu, !e.iToJ};
    }
  return r;
}

// Edge i->j exactly when i first appears after j; colour is the complexity.
inline GraphElement q(const IntegerString& x) {
  const int k = arity(x);
  std::vector<bool> open;
  for (int i = 1; i <= k; ++i) open.push_back(isOpenLabel(x, i));
  GraphElement g = GraphElement::make(open, x.outputOpen);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      g.edge(i, j) = {std::max(1, cij(x, i, j)), firstOccurrence(x, i) > firstOccurrence(x, j)};
  return g;
}

// Orientation is a total order (the image class of q).
inline bool isTotallyAcyclic(const GraphElement& a) {
  GraphElement flat = a;
  for (Edge& e : flat.edges) e.mu = 1;
  return validate(flat);
}

// All valid elements with the given vertex colours and colour values at most maxMu.
inline std::vector<GraphElement> enumerateComponent(const std::vector<bool>& open, bool outputOpen,
                                                    int maxMu) {
  std::vector<GraphElement> out;
  GraphElement g = GraphElement::make(open, outputOpen);
  const std::size_t e = g.edges.size();
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == e) {
      if (validate(g)) out.push_back(g);
      return;
    }
    for (int mu = 1; mu <= maxMu; ++mu)
      for (int o = 0; o < 2; ++o) {
        g.edges[p] = {mu, o == 0};
        rec(p + 1);
      }
  };
  rec(0);
  return out;
}

inline std::string describe(const GraphElement& a) {
  std::string s = "[";
  for (int i = 0; i < a.size(); ++i) s += a.vertexOpen[i] ? 'o' : 'c';
  s += ";";
  for (int i = 1; i <= a.size(); ++i)
    for (int j = i + 1; j <= a.size(); ++j) {
      const Edge& e = a.edge(i, j);
      s += " " + std::to_string(e.iToJ ? i : j) + ">" + std::to_string(e.iToJ ? j : i) + ":" +
           std::to_string(e.mu);
    }
  s += a.outputOpen ? "]^o" : "]^c";
  return s;
}

}  // namespace operadix
