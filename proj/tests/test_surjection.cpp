#include "operadix/surjection.hpp"

#include <gtest/gtest.h>

using namespace operadix;

namespace {

SurjComb comb(std::initializer_list<std::pair<const char*, int>> terms) {
  SurjComb r;
  for (const auto& [s, c] : terms) r.add(parse(s), c);
  return r;
}

}  // namespace

TEST(Basis, DegreeAndNondegeneracy) {
  EXPECT_EQ(degree(parse("(121)^c")), 1);
  EXPECT_EQ(degree(parse("(12)^c")), 0);
  EXPECT_TRUE(isSurjectionBasis(parse("(121)^c")));
  EXPECT_FALSE(isSurjectionBasis(parse("(112)^c")));
  EXPECT_FALSE(isSurjectionBasis(parse("(1|1)^c")));
}

TEST(Differential, Examples) {
  EXPECT_TRUE(differential(parse("(12)^c")).isZero());
  EXPECT_EQ(differential(parse("(121)^c")), comb({{"(21)^c", 1}, {"(12)^c", -1}}));
  EXPECT_EQ(differential(parse("(1u21)^o")), comb({{"(u21)^o", 1}, {"(1u2)^o", -1}}));
}

TEST(Differential, SquaresToZero) {
  for (const auto& u : allStrings(6, 3)) {
    if (!isSurjectionBasis(u)) continue;
    EXPECT_TRUE(differential(differential(u)).isZero()) << print(u);
  }
}

TEST(Vartheta, Examples) {
  EXPECT_EQ(vartheta(parse("(12)^c"), 0), comb({{"(12)^c", 1}}));
  const SurjComb one = vartheta(parse("(12)^c"), 1);
  EXPECT_EQ(one.size(), 2u);
  EXPECT_NE(one.coeff(parse("(1|12)^c")), 0);
  EXPECT_NE(one.coeff(parse("(12|2)^c")), 0);
  const SurjComb single = vartheta(parse("(1)^c"), 1);
  EXPECT_EQ(single.size(), 1u);
  EXPECT_NE(single.coeff(parse("(1|1)^c")), 0);
}

TEST(Compose, WorkedExample) {
  EXPECT_EQ(rsCompose(parse("(1u21)^o"), 1, parse("(12)^c")),
            comb({{"(1u312)^o", 1}, {"(12u32)^o", 1}}));
}

TEST(Compose, OverlappingBlocks) {
  EXPECT_EQ(rsCompose(parse("(121)^c"), 1, parse("(12)^c")), comb({{"(1232)^c", 1}, {"(1312)^c", 1}}));
}

TEST(Compose, Units) {
  const Surjection f = parse("(1u21)^o");
  EXPECT_EQ(rsCompose(f, 1, parse("(1)^c")), comb({{"(1u21)^o", 1}}));
  EXPECT_EQ(rsCompose(f, 2, parse("(u1)^o")), comb({{"(1u21)^o", 1}}));
  EXPECT_EQ(rsCompose(parse("(1)^c"), 1, parse("(121)^c")), comb({{"(121)^c", 1}}));
}

TEST(Compose, Leibniz) {
  const std::vector<std::string> fs{"(121)^c", "(1213)^c", "(1u21)^o", "(12)^c", "(u1u2)^o", "(2121)^c"};
  const std::vector<std::string> gs{"(12)^c", "(121)^c", "(212)^c", "(1)^c", "(1u21)^o"};
  for (const auto& fs_ : fs)
    for (const auto& gs_ : gs) {
      const Surjection f = parse(fs_), g = parse(gs_);
      for (int i = 1; i <= arity(f); ++i) {
        if (isOpenLabel(f, i) != g.outputOpen) continue;
        const SurjComb lhs = differential(rsCompose(f, i, g));
        SurjComb rhs = rsCompose(differential(SurjComb(f)), i, SurjComb(g));
        rhs.add(rsCompose(SurjComb(f), i, differential(SurjComb(g))), signOf(degree(f)));
        EXPECT_EQ(lhs, rhs) << fs_ << " o" << i << " " << gs_;
      }
    }
}

TEST(Generators, ListAndClosure) {
  const auto gens = generators(3);
  auto has = [&](const char* s) { return std::find(gens.begin(), gens.end(), parse(s)) != gens.end(); };
  EXPECT_TRUE(has("(12)^c"));
  EXPECT_TRUE(has("(u1u2)^o"));
  EXPECT_TRUE(has("(1)^o"));
  EXPECT_TRUE(has("(121)^c"));
  EXPECT_TRUE(has("(1u21)^o"));
  const GenerationReport r = isGeneratedUpTo(2, 4);
  EXPECT_TRUE(r.complete());
  EXPECT_EQ(r.reached, r.basisSize);
}

TEST(Components, Bases) {
  const auto cc = componentBasis({false, false}, false, 2);
  ASSERT_EQ(cc.size(), 2u);
  EXPECT_EQ(cc.at(0).size(), 2u);
  EXPECT_EQ(cc.at(1).size(), 2u);
  const auto oo = componentBasis({true, true}, true, 2);
  ASSERT_EQ(oo.size(), 1u);
  EXPECT_EQ(oo.at(0).size(), 2u);
  const auto co = componentBasis({false, true}, true, 2);
  EXPECT_EQ(co.at(0).size(), 2u);
  EXPECT_EQ(co.at(1).size(), 1u);
}

TEST(Components, Homology) {
  auto ranks = [](const std::vector<HomologyGroup>& hs) {
    std::vector<std::size_t> r;
    for (const auto& h : hs) {
      EXPECT_TRUE(h.torsion.empty());
      r.push_back(h.rank);
    }
    return r;
  };
  EXPECT_EQ(ranks(componentHomology({false, false}, false, 2)), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(ranks(componentHomology({true, true}, true, 2)), (std::vector<std::size_t>{2}));
  EXPECT_EQ(ranks(componentHomology({false}, true, 2)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(ranks(componentHomology({false, true}, true, 2)), (std::vector<std::size_t>{1, 0}));
}
