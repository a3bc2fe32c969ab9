#include "operadix/loop.hpp"

#include <gtest/gtest.h>

using namespace operadix;

namespace {

LoopModel z2() { return LoopModel(FiniteMonoid::cyclic(2), {0, 1}); }
LoopModel z3() { return LoopModel(FiniteMonoid::cyclic(3), {0}); }

}  // namespace

TEST(Monoid, Construction) {
  const FiniteMonoid e = FiniteMonoid::endomorphismsOfTwoPoints();
  EXPECT_EQ(e.size(), 4);
  EXPECT_EQ(e.mul(1, 1), 0);  // swap twice
  EXPECT_EQ(e.mul(2, 1), 2);  // constant after swap
  EXPECT_EQ(e.mul(1, 2), 3);
  EXPECT_THROW(FiniteMonoid({{0, 1}, {1, 1}}, 1), std::invalid_argument);
  EXPECT_THROW(LoopModel(FiniteMonoid::cyclic(3), {0, 1}), NotSubmonoid);
  EXPECT_NO_THROW(LoopModel(e, {0, 2, 3}));
}

TEST(Cosimplicial, LevelBasisAndFaces) {
  const LoopModel L = z2();
  EXPECT_EQ(L.levelBasis(1, true).size(), 4u);
  EXPECT_EQ(L.levelBasis(2, false).size(), 4u);
  const LoopCell u{{1, 0}, 1};
  EXPECT_EQ(L.coface(u, 0), (LoopCell{{0, 1, 0}, 1}));
  EXPECT_EQ(L.coface(u, 1), (LoopCell{{1, 1, 0}, 1}));
  EXPECT_EQ(L.coface(u, 3), (LoopCell{{1, 0, 1}, 1}));
  EXPECT_EQ(L.codegeneracy(u, 0), (LoopCell{{0}, 1}));
  EXPECT_THROW(L.codegeneracy(u, 2), std::out_of_range);
}

TEST(Cosimplicial, Identities) {
  for (const LoopModel& L : {z2(), z3()})
    for (int k = 0; k <= 3; ++k)
      for (const auto& u : L.levelBasis(k, true)) {
        for (int j = 1; j <= k + 2; ++j)
          for (int i = 0; i < j; ++i) EXPECT_EQ(L.coface(L.coface(u, i), j), L.coface(L.coface(u, j - 1), i));
        EXPECT_TRUE(L.differential(L.differential(u)).isZero());
      }
}

TEST(Normalized, KernelOfCodegeneracies) {
  const LoopModel L = z3();
  for (int k = 0; k <= 3; ++k) {
    const auto basis = L.normalizedBasis(k, false);
    // Normalized cochains of the bar-type complex: one generator per word in the non-unit elements.
    std::size_t expected = 1;
    for (int t = 0; t < k; ++t) expected *= 2;
    EXPECT_EQ(basis.size(), expected);
    for (const auto& x : basis) EXPECT_TRUE(L.isNormalized(x));
  }
}

TEST(Operad, GammaPartial) {
  const LoopModel L = z3();
  EXPECT_EQ(L.gammaPartial({1, 2}, 1, {1, 1}), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(L.gammaPartial({1, 2}, 2, {}), (std::vector<int>{1}));
  EXPECT_EQ(L.gammaPartial({1, 2}, 1, {}), (std::vector<int>{2}));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const std::vector<int> f{a, b}, g{b, a}, h{a};
      EXPECT_EQ(L.gammaPartial(L.gammaPartial(f, 1, g), 2, h), L.gammaPartial(f, 1, L.gammaPartial(g, 2, h)));
      EXPECT_EQ(L.gammaPartial(L.gammaPartial(f, 1, g), 3, h), L.gammaPartial(L.gammaPartial(f, 2, h), 1, g));
    }
}

TEST(Module, VarsigmaCases) {
  const LoopModel L = z3();
  const std::vector<int> f{1, 2};
  EXPECT_EQ(L.varsigmaPrime(f, {std::nullopt, std::nullopt}), L.iota(f));
  const LoopCell u{{1}, 2};
  // one argument: earlier slots padded by the unit, later slots by the tail
  EXPECT_EQ(L.varsigmaAt(f, 1, u), (LoopCell{{2, 1}, 2}));
  EXPECT_EQ(L.varsigmaAt(f, 2, u), (LoopCell{{1, 0}, 2}));
  // all slots: accumulated right translations
  const LoopCell v{{0}, 1};
  EXPECT_EQ(L.varsigma(f, {u, v}), (LoopCell{{2, 1}, 0}));
  for (int a = 0; a < 3; ++a) EXPECT_EQ(L.rho(LoopCell{{a}, 2}, {{0}}), (LoopCell{{a}, 2}));
}

TEST(Products, SqcupAssociativeAndUnital) {
  const LoopModel L = z2();
  const LoopCell unit{{}, 0};
  for (int k = 0; k <= 2; ++k)
    for (const auto& u : L.levelBasis(k, true)) {
      EXPECT_EQ(L.sqcup(unit, u), u);
      EXPECT_EQ(L.sqcup(u, unit), u);
      for (const auto& v : L.levelBasis(1, true))
        for (const auto& w : L.levelBasis(1, true))
          EXPECT_EQ(L.sqcup(L.sqcup(u, v), w), L.sqcup(u, L.sqcup(v, w)));
    }
}

TEST(Homotopies, HCommutator) {
  const LoopModel L = z2();
  auto sq = [&](const LoopComb& x, const LoopComb& y) {
    return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return L.sqcup(a, b); });
  };
  auto H = [&](const LoopComb& x, const LoopComb& y) {
    return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return L.homotopyH(a, b); });
  };
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (const auto& f : L.levelBasis(p, false))
        for (const auto& u : L.levelBasis(q, true)) {
          const LoopComb F(f), U(u);
          LoopComb lhs = sq(LoopComb(L.inc(f)), U);
          lhs.add(sq(U, LoopComb(L.inc(f))), -Int(signOf(p * q)));
          LoopComb rhs = L.differential(H(F, U));
          rhs.add(H(L.differential(F), U));
          rhs.add(H(F, L.differential(U)), Int(signOf(p)));
          EXPECT_EQ(lhs, rhs) << toString(f, L.monoid()) << " " << toString(u, L.monoid());
        }
}

TEST(Homotopies, T2CupCommutator) {
  const LoopModel L = z3();
  auto cup = [&](const LoopComb& x, const LoopComb& y) {
    return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return LoopModel::cup(a, b); });
  };
  auto T2 = [&](const LoopComb& x, const LoopComb& y) {
    return L.extend(x, y, [&](const LoopCell& a, const LoopCell& b) { return L.braceT2(a, b); });
  };
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q)
      for (const auto& f : L.levelBasis(p, false))
        for (const auto& g : L.levelBasis(q, false)) {
          const LoopComb F(f), G(g);
          LoopComb lhs = cup(F, G);
          lhs.add(cup(G, F), -Int(signOf(p * q)));
          LoopComb rhs = L.differential(T2(F, G));
          rhs.add(T2(L.differential(F), G));
          rhs.add(T2(F, L.differential(G)), Int(signOf(p)));
          EXPECT_EQ(lhs, rhs);
        }
}

TEST(Braces, T2IsTkWithOneArgument) {
  const LoopModel L = z2();
  for (const auto& f : L.levelBasis(2, false))
    for (const auto& g : L.levelBasis(1, false)) EXPECT_EQ(L.braceTk(f, {g}), L.braceT2(f, g));
  for (const auto& f : L.levelBasis(2, false))
    for (const auto& u : L.levelBasis(1, true)) EXPECT_EQ(L.braceTj(f, {u}), L.homotopyH(f, u));
}
