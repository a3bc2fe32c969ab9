#pragma once

#include "operadix/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace operadix {

struct Interval {
  Rational lo, hi;
  bool operator==(const Interval&) const = default;
};

struct Box {
  std::vector<Interval> axes;  // axis h is axes[h-1]
  int dim() const { return static_cast<int>(axes.size()); }
  bool operator==(const Box&) const = default;
};

// Boxes live in [-1,1]^m; with an open output the ambient is the half cube
// [-1,1]^{m-1} x [0,1] and open boxes rest on the face x_m = 0.
struct CubeConfig {
  int m = 2;
  std::vector<Box> boxes;
  std::vector<bool> open;
  bool outputOpen = false;
  int size() const { return static_cast<int>(boxes.size()); }
};

class NoSeparation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool disjointOnAxis(const Box& a, const Box& b, int h) {
  const Interval &p = a.axes[h - 1], &q = b.axes[h - 1];
  return p.hi < q.lo || q.hi < p.lo;
}

inline bool belowOnAxis(const Box& a, const Box& b, int h) { return a.axes[h - 1].hi < b.axes[h - 1].lo; }

inline bool boxSep(const Box& a, const Box& b, int mu) {
  for (int h = 1; h < mu && h <= a.dim(); ++h)
    if (disjointOnAxis(a, b, h)) return true;
  return mu <= a.dim() && belowOnAxis(a, b, mu);
}

inline bool validConfig(const CubeConfig& x) {
  if (static_cast<int>(x.open.size()) != x.size()) return false;
  const Rational lowest = x.outputOpen ? Rational(0) : Rational(-1);
  for (int b = 0; b < x.size(); ++b) {
    const Box& B = x.boxes[b];
    if (B.dim() != x.m) return false;
    if (x.open[b] && !x.outputOpen) return false;
    for (int h = 1; h <= x.m; ++h) {
      const Interval& I = B.axes[h - 1];
      if (!(I.lo < I.hi) || I.hi > 1 || I.lo < -1) return false;
      if (h == x.m) {
        if (x.open[b] && I.lo != 0) return false;
        if (!x.open[b] && I.lo <= lowest) return false;
      }
    }
  }
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b) {
      bool sep = false;
      for (int h = 1; h <= x.m && !sep; ++h) sep = disjointOnAxis(x.boxes[a], x.boxes[b], h);
      if (!sep) return false;
    }
  return true;
}

inline bool cellContains(const GraphElement& alpha, const CubeConfig& x) {
  if (alpha.size() != x.size()) throw ShapeError("graph and configuration sizes differ");
  for (int i = 1; i <= x.size(); ++i)
    if (alpha.vertexOpen[i - 1] != x.open[i - 1]) throw ShapeError("vertex colours differ");
  for (int i = 1; i <= alpha.size(); ++i)
    for (int j = i + 1; j <= alpha.size(); ++j) {
      const Edge& e = alpha.edge(i, j);
      const Box &bi = x.boxes[i - 1], &bj = x.boxes[j - 1];
      if (!(e.iToJ ? boxSep(bi, bj, e.mu) : boxSep(bj, bi, e.mu))) return false;
    }
  return true;
}

inline GraphElement cellIndex(const CubeConfig& x) {
  GraphElement g = GraphElement::make(x.open, x.outputOpen);
  for (int i = 1; i <= x.size(); ++i)
    for (int j = i + 1; j <= x.size(); ++j) {
      const Box &bi = x.boxes[i - 1], &bj = x.boxes[j - 1];
      int h = 1;
      while (h <= x.m && !disjointOnAxis(bi, bj, h)) ++h;
      if (h > x.m) throw NoSeparation("boxes " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      g.edge(i, j) = {h, belowOnAxis(bi, bj, h)};
    }
  return g;
}

// Every graph strictly below alpha (pairwise: same edge, or a smaller colour).
inline std::vector<GraphElement> strictlyBelow(const GraphElement& alpha) {
  std::vector<GraphElement> out;
  GraphElement cur = alpha;
  const std::size_t e = alpha.edges.size();
  std::function<void(std::size_t, bool)> rec = [&](std::size_t p, bool changed) {
    if (p == e) {
      if (changed) out.push_back(cur);
      return;
    }
    cur.edges[p] = alpha.edges[p];
    rec(p + 1, changed);
    for (int mu = 1; mu < alpha.edges[p].mu; ++mu)
      for (int o = 0; o < 2; ++o) {
        cur.edges[p] = {mu, o == 0};
        rec(p + 1, true);
      }
    cur.edges[p] = alpha.edges[p];
  };
  rec(0, false);
  return out;
}

// Axis-aligned affine image of y inside box i of x.
inline CubeConfig scCompose(const CubeConfig& x, int i, const CubeConfig& y) {
  if (i < 1 || i > x.size()) throw LabelOutOfRange("slot " + std::to_string(i));
  if (x.m != y.m) throw ShapeError("dimensions differ");
  if (x.open[i - 1] != y.outputOpen) throw ColourMismatch("slot openness differs from the inserted output");
  const Box& host = x.boxes[i - 1];
  auto place = [&](const Box& b) {
    Box r;
    for (int h = 1; h <= x.m; ++h) {
      const Interval& H = host.axes[h - 1];
      const Interval& I = b.axes[h - 1];
      if (h == x.m && y.outputOpen) {
        // half-cube axis [0,1] onto [0, H.hi]
        r.axes.push_back({I.lo * H.hi, I.hi * H.hi});
      } else {
        const Rational half = (H.hi - H.lo) / 2;
        r.axes.push_back({H.lo + (I.lo + 1) * half, H.lo + (I.hi + 1) * half});
      }
    }
    return r;
  };
  CubeConfig r;
  r.m = x.m;
  r.outputOpen = x.outputOpen;
  for (int b = 0; b < x.size(); ++b) {
    if (b == i - 1) {
      for (int c = 0; c < y.size(); ++c) {
        r.boxes.push_back(place(y.boxes[c]));
        r.open.push_back(y.open[c]);
      }
    } else {
      r.boxes.push_back(x.boxes[b]);
      r.open.push_back(x.open[b]);
    }
  }
  return r;
}

inline CubeConfig permuteConfig(const std::vector<int>& sigma, const CubeConfig& x) {
  CubeConfig r = x;
  for (int i = 1; i <= x.size(); ++i) {
    r.boxes[sigma[i - 1] - 1] = x.boxes[i - 1];
    r.open[sigma[i - 1] - 1] = x.open[i - 1];
  }
  return r;
}

// Rejection sampling on the grid of multiples of 1/denominator.
inline CubeConfig randomConfig(std::mt19937_64& rng, int m, const std::vector<bool>& open, bool outputOpen,
                               int denominator = 16, int maxTries = 10000) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {  // uniform in [lo, hi]
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  const std::int64_t D = denominator;
  for (int attempt = 0; attempt < maxTries; ++attempt) {
    CubeConfig x;
    x.m = m;
    x.outputOpen = outputOpen;
    x.open = open;
    for (bool o : open) {
      Box b;
      for (int h = 1; h <= m; ++h) {
        std::int64_t lo, hi;
        if (h == m && o) {
          lo = 0;
          hi = pick(1, D);
        } else {
          const std::int64_t floor = (h == m && outputOpen) ? 1 : -D + 1;
          lo = pick(floor, D - 2);
          hi = pick(lo + 1, std::min<std::int64_t>(lo + D / 2, D - 1));
        }
        b.axes.push_back({Rational(lo, D), Rational(hi, D)});
      }
      x.boxes.push_back(std::move(b));
    }
    if (validConfig(x)) return x;
  }
  throw std::runtime_error("random configuration sampling did not converge");
}

inline std::string toString(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string describe(const CubeConfig& x) {
  std::string s;
  for (int b = 0; b < x.size(); ++b) {
    s += x.open[b] ? "o" : "c";
    s += std::to_string(b + 1) + ":";
    for (const Interval& I : x.boxes[b].axes) s += "[" + toString(I.lo) + "," + toString(I.hi) + "]";
    s += " ";
  }
  return s + (x.outputOpen ? "^o" : "^c");
}

}  // namespace operadix
