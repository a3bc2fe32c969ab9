#include "operadix/chain.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace operadix;

namespace {

bool isUnimodular(const IntMatrix& m) {
  const Int d = determinant(m);
  return d == 1 || d == -1;
}

void expectSmithInvariants(const IntMatrix& M) {
  const SmithResult s = smithNormalForm(M);
  EXPECT_EQ(s.U * M * s.V, s.D);
  EXPECT_TRUE(isUnimodular(s.U));
  EXPECT_TRUE(isUnimodular(s.V));
  for (std::size_t i = 0; i < s.D.rows; ++i)
    for (std::size_t j = 0; j < s.D.cols; ++j)
      if (i != j) EXPECT_EQ(s.D(i, j), 0);
  for (std::size_t i = 0; i < s.rank(); ++i) {
    EXPECT_EQ(s.D(i, i), s.diagonal[i]);
    EXPECT_GT(s.diagonal[i], 0);
    if (i + 1 < s.rank()) EXPECT_EQ(s.diagonal[i + 1] % s.diagonal[i], 0);
  }
}

ChainComplex circle() {
  // vertices a,b,c; edges ab, bc, ca with boundary head - tail
  ChainComplex C;
  C.bases[0] = {"a", "b", "c"};
  C.bases[1] = {"ab", "bc", "ca"};
  C.boundary[1] = IntMatrix{{-1, 0, 1}, {1, -1, 0}, {0, 1, -1}};
  return C;
}

}  // namespace

TEST(Smith, Examples) {
  const SmithResult s = smithNormalForm(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(s.diagonal, (std::vector<Int>{2, 4}));
  EXPECT_TRUE(smithNormalForm(IntMatrix(3, 2)).diagonal.empty());
  EXPECT_EQ(smithNormalForm(IntMatrix::identity(3)).diagonal, (std::vector<Int>{1, 1, 1}));
  expectSmithInvariants(IntMatrix{{2, 4}, {6, 8}});
}

TEST(Smith, RandomMatchesDeterminantAndGcd) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix M(r, c);
    for (auto& x : M.a) x = entry(rng);
    expectSmithInvariants(M);
    const SmithResult s = smithNormalForm(M);
    if (r == c) {
      Int prod = 1;
      for (const auto& d : s.diagonal) prod *= d;
      const Int det = determinant(M);
      EXPECT_EQ(s.rank() == r ? prod : Int(0), det < 0 ? Int(-det) : det);
    }
    Int g = 0;
    for (const auto& x : M.a) g = gcd(g, x);
    if (g != 0) EXPECT_EQ(s.diagonal.front(), g);
  }
}

TEST(Kernel, Basis) {
  const auto k = integerKernel(IntMatrix{{1, 1, 1}});
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(v[0] + v[1] + v[2], 0);
}

TEST(Homology, Circle) {
  const auto hs = allHomology(circle());
  ASSERT_EQ(hs.size(), 2u);
  EXPECT_EQ(hs[0], (HomologyGroup{0, 1, {}}));
  EXPECT_EQ(hs[1], (HomologyGroup{1, 1, {}}));
}

TEST(Homology, ZeroDifferentials) {
  ChainComplex C;
  C.bases[0] = {"a", "b"};
  C.bases[1] = {"x"};
  C.bases[2] = {"y", "z", "w"};
  const auto hs = allHomology(C);
  EXPECT_EQ(hs[0].rank, 2u);
  EXPECT_EQ(hs[1].rank, 1u);
  EXPECT_EQ(hs[2].rank, 3u);
}

TEST(Homology, ProjectivePlaneTorsion) {
  ChainComplex C;
  C.bases[0] = {"v"};
  C.bases[1] = {"e"};
  C.bases[2] = {"f"};
  C.boundary[1] = IntMatrix{{0}};
  C.boundary[2] = IntMatrix{{2}};
  const auto hs = allHomology(C);
  EXPECT_EQ(hs[0], (HomologyGroup{0, 1, {}}));
  EXPECT_EQ(hs[1], (HomologyGroup{1, 0, {2}}));
  EXPECT_EQ(hs[2], (HomologyGroup{2, 0, {}}));
}

TEST(Validate, RejectsBadComplexes) {
  ChainComplex C = circle();
  C.boundary[1] = IntMatrix{{1, 0}, {0, 1}};
  EXPECT_THROW(C.validate(), InvalidComplex);
  ChainComplex D;
  D.bases[0] = {"a"};
  D.bases[1] = {"b"};
  D.bases[2] = {"c"};
  D.boundary[1] = IntMatrix{{1}};
  D.boundary[2] = IntMatrix{{1}};
  EXPECT_THROW(D.validate(), InvalidComplex);
}

TEST(Tensor, UnitAndInterval) {
  ChainComplex unit;
  unit.bases[0] = {"1"};
  const ChainComplex C = circle();
  const ChainComplex T = tensor(C, unit);
  EXPECT_EQ(T.dim(0), 3u);
  EXPECT_EQ(T.dim(1), 3u);
  EXPECT_EQ(T.boundaryAt(1), C.boundaryAt(1));

  ChainComplex I;
  I.bases[0] = {"0", "1"};
  I.bases[1] = {"e"};
  I.boundary[1] = IntMatrix{{-1}, {1}};
  const ChainComplex sq = tensor(I, I);
  EXPECT_NO_THROW(sq.validate());
  EXPECT_EQ(sq.dim(0), 4u);
  EXPECT_EQ(sq.dim(1), 4u);
  EXPECT_EQ(sq.dim(2), 1u);
  const auto hs = allHomology(sq);
  EXPECT_EQ(hs[0].rank, 1u);
  EXPECT_EQ(hs[1].rank, 0u);
  EXPECT_EQ(hs[2].rank, 0u);
  EXPECT_EQ(allHomology(tensor(C, C))[1].rank, 2u);
}
