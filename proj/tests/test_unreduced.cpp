#include "operadix/unreduced.hpp"

#include <gtest/gtest.h>

using namespace operadix;

namespace {

struct Instance {
  Bialgebra B;
  ComoduleAlgebra C;
};

std::vector<Instance> instances() {
  const Bialgebra g2 = groupBialgebra(2), f2 = functionBialgebra(2), g3 = groupBialgebra(3);
  return {{g2, trivialComoduleAlgebra(g2)},
          {g2, regularComoduleAlgebra(g2)},
          {f2, regularComoduleAlgebra(f2)},
          {g3, subgroupComoduleAlgebra(3, 3)}};
}

}  // namespace

TEST(Bialgebras, Axioms) {
  for (const auto& [B, C] : instances()) {
    EXPECT_TRUE(checkBialgebra(B).ok) << checkBialgebra(B).detail;
    EXPECT_TRUE(checkComoduleAlgebra(B, C).ok) << checkComoduleAlgebra(B, C).detail;
  }
  EXPECT_THROW(subgroupComoduleAlgebra(4, 3), std::invalid_argument);
}

TEST(IteratedCoproduct, CounitAndIdentity) {
  const Bialgebra B = functionBialgebra(3);
  EXPECT_EQ(iteratedCoproduct(B, Vec(0), 0), TensorComb(Tuple{}));
  EXPECT_TRUE(iteratedCoproduct(B, Vec(1), 0).isZero());
  EXPECT_EQ(iteratedCoproduct(B, Vec(2), 1), TensorComb(Tuple{2}));
  EXPECT_EQ(iteratedCoproduct(B, Vec(1), 3).size(), 9u);
}

TEST(MultiplicativeOperad, UnitAndMultiplication) {
  const Bialgebra B = groupBialgebra(2);
  EXPECT_EQ(multiplication(B), TensorComb(Tuple{0, 0}));
  const Tuple f{1, 0};
  for (int i = 1; i <= 2; ++i) EXPECT_EQ(mBCompose(B, f, i, unitOperation(B)), TensorComb(f));
  EXPECT_EQ(mBCompose(B, unitOperation(B), 1, TensorComb(f)), TensorComb(f));
  // the associative operad maps in: mu o_1 mu = mu o_2 mu
  EXPECT_EQ(mBCompose(B, multiplication(B), 1, multiplication(B)),
            mBCompose(B, multiplication(B), 2, multiplication(B)));
  EXPECT_EQ(mBCompose(B, f, 1, TensorComb(Tuple{1, 1})), TensorComb(Tuple{0, 0, 0}));
}

TEST(MultiplicativeOperad, AssociativityExhaustive) {
  const Bialgebra B = functionBialgebra(2);
  for (int lf = 1; lf <= 2; ++lf)
    for (const Tuple& f : allTuples(B.rank(), lf))
      for (const Tuple& g : allTuples(B.rank(), 2))
        for (const Tuple& h : allTuples(B.rank(), 1))
          for (int i = 1; i <= lf; ++i)
            for (int j = 1; j <= 2; ++j)
              EXPECT_EQ(mBCompose(B, mBCompose(B, f, i, TensorComb(g)), i + j - 1, TensorComb(h)),
                        mBCompose(B, f, i, mBCompose(B, g, j, TensorComb(h))));
}

TEST(WideModule, StabilityCollapsesToComposition) {
  for (const auto& [B, C] : instances())
    for (const Tuple& f : allTuples(B.rank(), 2))
      for (const Tuple& g : allTuples(B.rank(), 2))
        for (int i = 1; i <= 2; ++i)
          EXPECT_EQ(lambdaI(B, C, TensorComb(f), i, iotaB(C, TensorComb(g))),
                    iotaB(C, mBCompose(B, f, i, TensorComb(g))));
}

TEST(Cosimplicial, IdentitiesAndTotalization) {
  for (const auto& [B, C] : instances())
    for (int n = 0; n <= 2; ++n)
      for (const Tuple& t : allTuples(B.rank(), n))
        for (int c = 0; c < C.rank(); ++c) {
          const ZCell z{t, c};
          auto face = [&](const ZComb& x, int i) {
            ZComb r;
            for (const auto& [y, e] : x) r.add(zCoface(B, C, y, i), e);
            return r;
          };
          for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i)
              EXPECT_EQ(face(zCoface(B, C, z, i), j), face(zCoface(B, C, z, j - 1), i));
          ZComb alt;
          for (int i = 0; i <= n + 1; ++i) alt.add(zCoface(B, C, z, i), Int(signOf(i)));
          EXPECT_EQ(alt, unreducedRelativeDifferential(B, C, z));
        }
}

TEST(UnreducedCobar, LengthOneDifferential) {
  const Bialgebra B = groupBialgebra(2);
  TensorComb expected(Tuple{0, 1});
  expected.add(Tuple{1, 1}, -1);
  expected.add(Tuple{1, 0}, 1);
  EXPECT_EQ(unreducedDifferential(B, Tuple{1}), expected);
}

TEST(UnreducedCobar, Homology) {
  auto hom = [](const ChainComplex& K, int truncate) {
    std::vector<HomologyGroup> r;
    for (const auto& h : allHomology(K))
      if (h.degree > -truncate) r.push_back(h);
    return r;
  };
  const Bialgebra g2 = groupBialgebra(2), f2 = functionBialgebra(2);
  const auto hg = hom(unreducedCobar(g2, 4), 4);
  for (const auto& h : hg) EXPECT_EQ(h, (HomologyGroup{h.degree, h.degree == 0 ? 1u : 0u, {}}));
  // cohomology of Z/2 with integer coefficients: Z, 0, Z/2, 0, ...
  const auto hf = hom(unreducedCobar(f2, 4), 4);
  ASSERT_EQ(hf.size(), 4u);
  EXPECT_EQ(hf[1], (HomologyGroup{-2, 0, {2}}));
  EXPECT_EQ(hf[3], (HomologyGroup{0, 1, {}}));
  EXPECT_NO_THROW(unreducedRelativeCobar(f2, regularComoduleAlgebra(f2), 4).validate());
}

TEST(ReducedCobar, DSquaredZero) {
  for (const auto& [B, C] : instances())
    for (int n = 0; n <= 3; ++n)
      for (const TensorComb& w : reducedWords(B, n)) {
        EXPECT_TRUE(reducedCobarDifferential(B, reducedCobarDifferential(B, w)).isZero());
        const ZComb z = zOf(w, C.unit);
        EXPECT_TRUE(reducedRelativeDifferential(B, C, reducedRelativeDifferential(B, C, z)).isZero());
      }
}
