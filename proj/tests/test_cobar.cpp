#include "operadix/cobar.hpp"

#include <gtest/gtest.h>

using namespace operadix;

namespace {

std::vector<std::size_t> ranks(const ChainComplex& K, int below) {
  std::vector<std::size_t> r;
  for (const auto& h : allHomology(K))
    if (h.degree < below) {
      EXPECT_TRUE(h.torsion.empty()) << "degree " << h.degree;
      r.push_back(h.rank);
    }
  return r;
}

void expectDSquaredZero(const DGCoalgebra& C, const DGComodule* N, int truncate) {
  for (int d = 0; d <= truncate; ++d)
    for (const CobarWord& w : wordsOfDegree(C, N, d)) {
      const CobarComb once = N ? relativeDifferential(C, *N, w) : cobarDifferential(C, w);
      const CobarComb twice = N ? relativeDifferential(C, *N, once) : cobarDifferential(C, once);
      EXPECT_TRUE(twice.isZero()) << toString(C, N, w);
    }
}

}  // namespace

TEST(Coalgebras, Axioms) {
  const DGCoalgebra s2 = sphereCoalgebra(2), d3 = diskPairCoalgebra(2);
  EXPECT_TRUE(checkCoalgebra(s2).ok);
  EXPECT_TRUE(checkCoalgebra(d3).ok);
  const DGCoalgebra t = tensorProduct(s2, sphereCoalgebra(3, "y"));
  EXPECT_TRUE(checkCoalgebra(t).ok) << checkCoalgebra(t).detail;
  EXPECT_TRUE(t.isOneReduced());
  EXPECT_FALSE(sphereCoalgebra(1).isOneReduced());
  EXPECT_TRUE(checkComodule(t, factorComodule(s2, sphereCoalgebra(3, "y"))).ok);
  EXPECT_TRUE(checkComodule(t, regularComodule(t)).ok);
  EXPECT_TRUE(checkComodule(t, trivialComodule()).ok);
  EXPECT_THROW(wordsOfDegree(sphereCoalgebra(1), nullptr, 1), NotOneReduced);
}

TEST(Cobar, SpherePolynomial) {
  const DGCoalgebra s2 = sphereCoalgebra(2);
  // one word [x|...|x] per degree and D = 0
  for (int d = 0; d <= 5; ++d) EXPECT_EQ(wordsOfDegree(s2, nullptr, d).size(), 1u);
  EXPECT_TRUE(cobarDifferential(s2, CobarWord{{1, 1}, -1}).isZero());
  EXPECT_EQ(ranks(cobarComplex(s2, nullptr, 5), 5), (std::vector<std::size_t>(5, 1)));
}

TEST(Cobar, ProductOfSpheres) {
  const DGCoalgebra t = tensorProduct(sphereCoalgebra(2), sphereCoalgebra(3, "y"));
  // H of the loop space of S2 x S3: Z[u1] (x) Z[u2]
  EXPECT_EQ(ranks(cobarComplex(t, nullptr, 6), 6), (std::vector<std::size_t>{1, 1, 2, 2, 3, 3}));
}

TEST(Cobar, AcyclicPieces) {
  const DGCoalgebra d = diskPairCoalgebra(2);
  EXPECT_EQ(ranks(cobarComplex(d, nullptr, 5), 5), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
  const DGCoalgebra t = tensorProduct(sphereCoalgebra(2), sphereCoalgebra(3, "y"));
  const DGComodule reg = regularComodule(t);
  EXPECT_EQ(ranks(cobarComplex(t, &reg, 5), 5), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
}

TEST(Cobar, DSquaredZero) {
  const DGCoalgebra A = sphereCoalgebra(2), B = diskPairCoalgebra(3, "a", "b");
  const DGCoalgebra t = tensorProduct(A, B);
  expectDSquaredZero(t, nullptr, 6);
  const DGComodule f = factorComodule(A, B), r = regularComodule(t), u = trivialComodule();
  expectDSquaredZero(t, &f, 6);
  expectDSquaredZero(t, &r, 6);
  expectDSquaredZero(t, &u, 6);
}

TEST(Cobar, RandomInstancesDSquaredAndLeibniz) {
  std::mt19937_64 rng(42);
  for (int s = 0; s < 20; ++s) {
    const CobarInstance inst = randomCobarInstance(rng);
    ASSERT_TRUE(checkCoalgebra(inst.C).ok) << inst.description;
    ASSERT_TRUE(checkComodule(inst.C, inst.N).ok) << inst.description;
    expectDSquaredZero(inst.C, nullptr, 5);
    expectDSquaredZero(inst.C, &inst.N, 5);
    for (int da = 0; da <= 3; ++da)
      for (const CobarWord& a : wordsOfDegree(inst.C, nullptr, da))
        for (int du = 0; du <= 3; ++du)
          for (const CobarWord& u : wordsOfDegree(inst.C, &inst.N, du)) {
            const CobarComb lhs = relativeDifferential(inst.C, inst.N, concat(a, u));
            CobarComb rhs = concat(cobarDifferential(inst.C, a), CobarComb(u));
            rhs.add(concat(CobarComb(a), relativeDifferential(inst.C, inst.N, u)), signOf(da));
            EXPECT_EQ(lhs, rhs) << inst.description;
          }
  }
}

TEST(Twisting, UniversalPair) {
  const DGCoalgebra t = tensorProduct(sphereCoalgebra(2), diskPairCoalgebra(2, "a", "b"));
  const DGComodule N = regularComodule(t);
  const CobarMap f = universalTwisting(t), g = universalModuleMap(N);
  EXPECT_TRUE(twistingCheck(t, f).ok);
  EXPECT_TRUE(relativeTwistingCheck(t, N, f, g).ok);
  EXPECT_TRUE(dgModuleMapCheck(t, N, f, g, 5).ok);
  // unit word goes to g(n); a one-letter word to f(x) g(n)
  EXPECT_EQ(overlineFG(f, g, CobarWord{{}, 2}), g[2]);
  EXPECT_EQ(overlineFG(f, g, CobarWord{{1}, 0}), CobarComb(CobarWord{{1}, 0}));
}

TEST(Twisting, ZeroMaps) {
  const DGCoalgebra s = sphereCoalgebra(3);
  const DGComodule N = regularComodule(s);
  const CobarMap zero(s.rank()), zeroN(N.rank());
  EXPECT_TRUE(twistingCheck(s, zero).ok);
  EXPECT_TRUE(relativeTwistingCheck(s, N, universalTwisting(s), zeroN).ok);
}

TEST(Twisting, EquivalenceWithModuleMaps) {
  std::mt19937_64 rng(9);
  for (int s = 0; s < 20; ++s) {
    const CobarInstance inst = randomCobarInstance(rng);
    const CobarMap f = universalTwisting(inst.C);
    CobarMap g = universalModuleMap(inst.N);
    EXPECT_EQ(relativeTwistingCheck(inst.C, inst.N, f, g).ok, dgModuleMapCheck(inst.C, inst.N, f, g, 4).ok);
    for (auto& x : g) x *= Int(2);
    EXPECT_EQ(relativeTwistingCheck(inst.C, inst.N, f, g).ok, dgModuleMapCheck(inst.C, inst.N, f, g, 4).ok);
    CobarMap bad = universalModuleMap(inst.N);
    if (inst.N.rank() > 1) {
      bad[0] = CobarComb(CobarWord{{}, 1});
      EXPECT_EQ(relativeTwistingCheck(inst.C, inst.N, f, bad).ok, dgModuleMapCheck(inst.C, inst.N, f, bad, 4).ok);
    }
  }
}
