#include "operadix/lattice.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace operadix;

namespace {

Colour closed(int n) { return {n, false}; }
Colour open(int n) { return {n, true}; }

ParseError::Kind parseErrorKind(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.kind;
  }
  ADD_FAILURE() << "no error for " << s;
  return ParseError::Kind::UnknownToken;
}

}  // namespace

TEST(Parse, RoundTrip) {
  for (const char* s : {"(1u2|u211||u21)^o", "(1)^c", "()^c", "(|)^o", "(12u4|1u632u451||u42u6)^o"})
    EXPECT_EQ(print(parse(s)), s);
  EXPECT_EQ(print(parse("( 1 u2 1 )^o")), "(1u21)^o");
}

TEST(Parse, BracedLabels) {
  const IntegerString x = parse("(123456789{10}{11})^c");
  EXPECT_EQ(arity(x), 11);
  EXPECT_EQ(print(x), "(123456789{10}{11})^c");
}

TEST(Parse, Errors) {
  EXPECT_EQ(parseErrorKind("(12u2)^o"), ParseError::Kind::MixedDecoration);
  EXPECT_EQ(parseErrorKind("(13)^c"), ParseError::Kind::MissingLabel);
  EXPECT_EQ(parseErrorKind("(1u2)^c"), ParseError::Kind::ClosedOutputWithOpenLetter);
  EXPECT_EQ(parseErrorKind("(1x)^c"), ParseError::Kind::UnknownToken);
  EXPECT_EQ(parseErrorKind("(12)"), ParseError::Kind::UnknownToken);
  EXPECT_EQ(parseErrorKind("12^c"), ParseError::Kind::UnknownToken);
}

TEST(Colours, Examples) {
  EXPECT_EQ(colours(parse("(1u2|u211||u21)^o")), (Signature{{closed(3), open(2)}, open(3)}));
  EXPECT_EQ(colours(parse("(1)^c")), (Signature{{closed(0)}, closed(0)}));
  EXPECT_EQ(colours(parse("(121)^c")), (Signature{{closed(1), closed(0)}, closed(0)}));
}

TEST(Colours, IdentityStrings) {
  EXPECT_EQ(print(identityString(closed(0))), "(1)^c");
  EXPECT_EQ(print(identityString(closed(2))), "(1|1|1)^c");
  EXPECT_EQ(print(identityString(open(1))), "(u1|u1)^o");
}

TEST(Compose, WorkedExample) {
  const auto r = compose(parse("(1u2|1u4u231||u2u4)^o"), 2, parse("(1u3|21u3|u31)^o"));
  EXPECT_EQ(print(r), "(12u4|1u632u451||u42u6)^o");
}

TEST(Compose, SmallCases) {
  EXPECT_EQ(print(compose(parse("(12)^c"), 1, parse("(12)^c"))), "(123)^c");
  EXPECT_EQ(print(compose(parse("(12)^c"), 2, parse("(12)^c"))), "(123)^c");
  EXPECT_EQ(print(compose(parse("(121)^c"), 2, parse("(12)^c"))), "(1231)^c");
  EXPECT_EQ(print(compose(parse("(121)^c"), 1, parse("(1|12)^c"))), "(1312)^c");
}

TEST(Compose, Unit) {
  const IntegerString f = parse("(1u2|u211||u21)^o");
  for (int i = 1; i <= arity(f); ++i)
    EXPECT_EQ(compose(f, i, identityString(inputColour(f, i))), f);
  EXPECT_EQ(compose(identityString(outputColour(f)), 1, f), f);
}

TEST(Compose, ColourMismatch) {
  EXPECT_THROW(compose(parse("(12)^c"), 1, parse("(1|1)^c")), ColourMismatch);
  EXPECT_THROW(compose(parse("(12)^c"), 3, parse("(1)^c")), LabelOutOfRange);
}

TEST(SymAct, WorkedExample) {
  EXPECT_EQ(print(symAct({2, 3, 1}, parse("(1u2|3u211||u21)^o"))), "(2u3|1u322||u32)^o");
}

TEST(SymAct, IdentityAndComposition) {
  const IntegerString x = parse("(1u2|3u211||u21)^o");
  EXPECT_EQ(symAct({1, 2, 3}, x), x);
  for (const auto& s : std::vector<std::vector<int>>{{1, 2}, {2, 1}})
    for (const auto& t : std::vector<std::vector<int>>{{1, 2}, {2, 1}}) {
      std::vector<int> st{s[t[0] - 1], s[t[1] - 1]};
      EXPECT_EQ(symAct(st, parse("(12)^c")), symAct(s, symAct(t, parse("(12)^c"))));
    }
  EXPECT_THROW(symAct({1, 1}, parse("(12)^c")), std::invalid_argument);
}

TEST(Complexity, Examples) {
  EXPECT_EQ(cij(parse("(1212)^c"), 1, 2), 3);
  EXPECT_EQ(cij(parse("(12)^c"), 1, 2), 1);
  EXPECT_EQ(cij(parse("(1|1)^c"), 1, 1), 0);
  EXPECT_EQ(cPrimeij(parse("(1u21)^o"), 1, 2), 2);
  EXPECT_EQ(cDblPrimeij(parse("(1u21)^o"), 1, 2), 3);
  EXPECT_EQ(cPrimeij(parse("(u21)^o"), 1, 2), 2);
}

TEST(Filtration, Membership) {
  EXPECT_TRUE(inFiltration(parse("(121)^c"), 2));
  EXPECT_FALSE(inFiltration(parse("(1212)^c"), 2));
  EXPECT_TRUE(inFiltration(parse("(1212)^c"), 3));
  EXPECT_FALSE(inFiltration(parse("(u1u2u1)^o"), 2));
  EXPECT_TRUE(inFiltration(parse("(u1u2u1)^o"), 3));
  for (int n = 0; n < 3; ++n) {
    EXPECT_TRUE(inFiltration(identityString(closed(n)), 1));
    EXPECT_TRUE(inFiltration(identityString(open(n)), 1));
  }
}

TEST(Joyal, Examples) {
  EXPECT_EQ(print(joyalToString({1, 1, {0, 1}})), "(1|1)^c");
  EXPECT_EQ(print(joyalToString({0, 0, {0}})), "(1)^c");
}

TEST(Joyal, RoundTripOnHom12) {
  const auto maps = allMonotoneMaps(1, 2);
  ASSERT_EQ(maps.size(), 6u);
  std::set<std::string> images;
  for (const auto& psi : maps) {
    const IntegerString x = joyalToString(psi);
    images.insert(print(x));
    EXPECT_EQ(stringToJoyal(x), psi);
  }
  EXPECT_EQ(images.size(), 6u);
}

TEST(Enumerate, Examples) {
  const auto one = enumerate({closed(0), closed(0)}, closed(0), 1);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(print(one[0]), "(12)^c");
  EXPECT_EQ(print(one[1]), "(21)^c");
  const auto nullary = enumerate({}, closed(0), 1);
  ASSERT_EQ(nullary.size(), 1u);
  EXPECT_EQ(print(nullary[0]), "()^c");
}

TEST(Enumerate, MatchesBruteForceFilter) {
  // Oracle: all arrangements of the letters 1,1,2, filtered by c12 <= 2.
  const auto list = enumerate({closed(1), closed(0)}, closed(0), 2);
  std::set<std::string> got;
  for (const auto& x : list) got.insert(print(x));
  const std::set<std::string> expected{"(112)^c", "(121)^c", "(211)^c"};
  EXPECT_EQ(got, expected);
  EXPECT_EQ(enumerate({closed(1), closed(0)}, closed(0), 1).size(), 2u);
}

TEST(Tree, WorkedExample) {
  using N = TreeNode;
  const RootedTree t{{N::marked(1, false, {N::terminal(), N::leaf()}),
                      N::marked(3, false,
                                {N::joint({N::terminal(), N::terminal()}), N::marked(2, true, {}),
                                 N::marked(4, true, {N::terminal(), N::terminal(), N::leaf()})})},
                     true};
  const IntegerString x = parse("(1|113||3u23u4|u4|u4u43)^o");
  EXPECT_EQ(print(treeToString(t)), print(x));
  EXPECT_EQ(treeView(x), t);
}

TEST(Tree, RoundTripOnComponent) {
  for (const auto& x : enumerate({closed(1), closed(0)}, closed(0), 2))
    EXPECT_EQ(treeToString(treeView(x)), x) << print(x);
  for (const auto& x : enumerate({open(1), closed(1)}, open(1), 2))
    EXPECT_EQ(treeToString(treeView(x)), x) << print(x);
  EXPECT_THROW(treeView(parse("(1212)^c")), NotPlanar);
}

TEST(AllStrings, CountsAndValidity) {
  const auto all = allStrings(3, 2);
  std::set<std::string> seen;
  for (const auto& x : all) {
    EXPECT_NO_THROW(validate(x));
    EXPECT_LE(x.tokens.size(), 3u);
    EXPECT_LE(arity(x), 2);
    seen.insert(print(x));
  }
  EXPECT_EQ(seen.size(), all.size());
  EXPECT_TRUE(seen.count("()^c"));
  EXPECT_TRUE(seen.count("(u1|)^o"));
}
