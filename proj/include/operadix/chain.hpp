#pragma once

#include "operadix/core.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace operadix {

class InvalidComplex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    for (const auto& row : init)
      for (long long v : row) a.emplace_back(v);
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Int& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool isZero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
  }
  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw ShapeError("matrix product shape mismatch");
    IntMatrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }
};

// Determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
  if (m.rows != m.cols) throw ShapeError("determinant of non-square matrix");
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

struct SmithResult {
  IntMatrix D, U, V;  // D = U * M * V
  std::vector<Int> diagonal;  // nonzero invariant factors d1 | d2 | ...
  std::size_t rank() const { return diagonal.size(); }
};

// Smith normal form with unimodular transforms over arbitrary-precision integers.
inline SmithResult smithNormalForm(const IntMatrix& M) {
  SmithResult r{M, IntMatrix::identity(M.rows), IntMatrix::identity(M.cols), {}};
  IntMatrix& D = r.D;
  IntMatrix& U = r.U;
  IntMatrix& V = r.V;
  const std::size_t m = D.rows, n = D.cols;

  auto swapRows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(U(i, c), U(j, c));
  };
  auto swapCols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m; ++c) std::swap(D(c, i), D(c, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(V(c, i), V(c, j));
  };
  // row_i += q * row_j
  auto addRow = [&](std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < n; ++c) D(i, c) += q * D(j, c);
    for (std::size_t c = 0; c < m; ++c) U(i, c) += q * U(j, c);
  };
  auto addCol = [&](std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t c = 0; c < m; ++c) D(c, i) += q * D(c, j);
    for (std::size_t c = 0; c < n; ++c) V(c, i) += q * V(c, j);
  };
  auto negRow = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) D(i, c) = -D(i, c);
    for (std::size_t c = 0; c < m; ++c) U(i, c) = -U(i, c);
  };

  std::size_t t = 0;
  while (t < m && t < n) {
    // pivot: smallest nonzero absolute value in the remaining block
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
          found = true;
          best = abs(D(i, j));
          pi = i;
          pj = j;
        }
    if (!found) break;
    swapRows(t, pi);
    swapCols(t, pj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = D(i, t) / D(t, t);
        addRow(i, t, -q);
        if (D(i, t) != 0) {
          swapRows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = D(t, j) / D(t, t);
        addCol(j, t, -q);
        if (D(t, j) != 0) {
          swapCols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility: pivot must divide every remaining entry
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            addRow(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) negRow(t);
    r.diagonal.push_back(D(t, t));
    ++t;
  }
  return r;
}

// Columns form a Z-basis of the integer kernel {v : M v = 0}.
inline std::vector<std::vector<Int>> integerKernel(const IntMatrix& M) {
  SmithResult s = smithNormalForm(M);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = s.rank(); j < M.cols; ++j) {
    std::vector<Int> v(M.cols);
    for (std::size_t i = 0; i < M.cols; ++i) v[i] = s.V(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Int> torsion;
  bool operator==(const HomologyGroup&) const = default;
};

// Homological grading: boundary(d) maps degree d to degree d-1.
// Matrices have rows indexed by the basis in degree d-1 and columns by degree d.
struct ChainComplex {
  std::map<int, std::vector<std::string>> bases;
  std::map<int, IntMatrix> boundary;

  std::size_t dim(int d) const {
    auto it = bases.find(d);
    return it == bases.end() ? 0 : it->second.size();
  }

  IntMatrix boundaryAt(int d) const {
    auto it = boundary.find(d);
    if (it != boundary.end()) return it->second;
    return IntMatrix(dim(d - 1), dim(d));
  }

  int minDegree() const { return bases.empty() ? 0 : bases.begin()->first; }
  int maxDegree() const { return bases.empty() ? 0 : bases.rbegin()->first; }

  void validate() const {
    for (const auto& [d, m] : boundary) {
      if (m.rows != dim(d - 1) || m.cols != dim(d))
        throw InvalidComplex("boundary matrix shape mismatch in degree " + std::to_string(d));
    }
    for (const auto& [d, m] : boundary) {
      auto it = boundary.find(d - 1);
      if (it == boundary.end()) continue;
      if (!(it->second * m).isZero())
        throw InvalidComplex("boundary squared is nonzero at degree " + std::to_string(d));
    }
  }
};

inline HomologyGroup homology(const ChainComplex& C, int d) {
  C.validate();
  HomologyGroup h;
  h.degree = d;
  const std::size_t n = C.dim(d);
  std::size_t rankOut = n && C.dim(d - 1) ? smithNormalForm(C.boundaryAt(d)).rank() : 0;
  std::size_t rankIn = 0;
  if (n && C.dim(d + 1)) {
    SmithResult s = smithNormalForm(C.boundaryAt(d + 1));
    rankIn = s.rank();
    for (const Int& x : s.diagonal)
      if (x > 1) h.torsion.push_back(x);
  }
  h.rank = n - rankOut - rankIn;
  return h;
}

inline std::vector<HomologyGroup> allHomology(const ChainComplex& C) {
  std::vector<HomologyGroup> out;
  if (C.bases.empty()) return out;
  for (int d = C.minDegree(); d <= C.maxDegree(); ++d) out.push_back(homology(C, d));
  return out;
}

// Koszul convention: d(a (x) b) = da (x) b + (-1)^{|a|} a (x) db.
inline ChainComplex tensor(const ChainComplex& C, const ChainComplex& D) {
  ChainComplex T;
  std::map<int, std::vector<std::pair<std::pair<int, std::size_t>, std::pair<int, std::size_t>>>> idx;
  for (const auto& [p, bp] : C.bases)
    for (const auto& [q, bq] : D.bases)
      for (std::size_t i = 0; i < bp.size(); ++i)
        for (std::size_t j = 0; j < bq.size(); ++j) {
          T.bases[p + q].push_back(bp[i] + "⊗" + bq[j]);
          idx[p + q].push_back({{p, i}, {q, j}});
        }
  for (const auto& [n, list] : idx) {
    if (!T.bases.count(n - 1)) continue;
    const auto& target = idx[n - 1];
    std::map<std::pair<std::pair<int, std::size_t>, std::pair<int, std::size_t>>, std::size_t> pos;
    for (std::size_t r = 0; r < target.size(); ++r) pos[target[r]] = r;
    IntMatrix M(target.size(), list.size());
    for (std::size_t c = 0; c < list.size(); ++c) {
      auto [ai, bi] = list[c];
      auto [p, i] = ai;
      auto [q, j] = bi;
      if (C.dim(p - 1)) {
        IntMatrix dC = C.boundaryAt(p);
        for (std::size_t r = 0; r < C.dim(p - 1); ++r)
          if (dC(r, i) != 0) M(pos.at({{p - 1, r}, {q, j}}), c) += dC(r, i);
      }
      if (D.dim(q - 1)) {
        IntMatrix dD = D.boundaryAt(q);
        for (std::size_t r = 0; r < D.dim(q - 1); ++r)
          if (dD(r, j) != 0) M(pos.at({{p, i}, {q - 1, r}}), c) += Int(signOf(p)) * dD(r, j);
      }
    }
    T.boundary[n] = std::move(M);
  }
  return T;
}

}  // namespace operadix
