#include "operadix/graph.hpp"

#include <gtest/gtest.h>

using namespace operadix;

namespace {

GraphElement closedGraph(int n) { return GraphElement::make(std::vector<bool>(n, false), false); }

}  // namespace

TEST(Validate, MonochromaticAcyclicity) {
  GraphElement two = closedGraph(2);
  for (int mu = 1; mu <= 3; ++mu)
    for (bool o : {true, false}) {
      two.edge(1, 2) = {mu, o};
      EXPECT_TRUE(validate(two));
    }
  GraphElement cyc = closedGraph(3);
  cyc.edge(1, 2) = {1, true};
  cyc.edge(2, 3) = {1, true};
  cyc.edge(1, 3) = {1, false};  // 3 -> 1
  EXPECT_FALSE(validate(cyc));
  cyc.edge(1, 3) = {2, false};
  EXPECT_TRUE(validate(cyc));
}

TEST(Validate, OpenVertexNeedsOpenOutput) {
  EXPECT_FALSE(validate(GraphElement::make({true, false}, false)));
  EXPECT_TRUE(validate(GraphElement::make({true, false}, true)));
}

TEST(Order, Examples) {
  GraphElement a = closedGraph(2), b = closedGraph(2);
  a.edge(1, 2) = {1, true};
  b.edge(1, 2) = {2, false};
  EXPECT_TRUE(leq(a, a));
  EXPECT_TRUE(leq(a, b));
  EXPECT_FALSE(leq(b, a));
  b.edge(1, 2) = {1, false};
  EXPECT_FALSE(leq(a, b));
  EXPECT_FALSE(leq(b, a));
}

TEST(Filtration, BoundTable) {
  GraphElement cc = closedGraph(2);
  cc.edge(1, 2) = {2, true};
  EXPECT_TRUE(inFiltration(cc, 2));
  EXPECT_FALSE(inFiltration(cc, 1));

  GraphElement oo = GraphElement::make({true, true}, true);
  oo.edge(1, 2) = {2, true};
  EXPECT_FALSE(inFiltration(oo, 2));
  oo.edge(1, 2) = {1, true};
  EXPECT_TRUE(inFiltration(oo, 2));

  GraphElement mixed = GraphElement::make({true, false}, true);
  mixed.edge(1, 2) = {2, true};  // open -> closed
  EXPECT_TRUE(inFiltration(mixed, 2));
  mixed.edge(1, 2) = {2, false};  // closed -> open
  EXPECT_FALSE(inFiltration(mixed, 2));
  EXPECT_TRUE(inFiltration(mixed, 3));
}

TEST(Compose, UnitsAndBlocks) {
  GraphElement alpha = closedGraph(2);
  alpha.edge(1, 2) = {2, true};
  GraphElement beta = closedGraph(2);
  beta.edge(1, 2) = {1, true};

  EXPECT_EQ(compose(alpha, {unitGraph(false), unitGraph(false)}), alpha);
  EXPECT_EQ(compose(unitGraph(false), {beta}), beta);

  const GraphElement r = compose(alpha, 1, beta);
  ASSERT_EQ(r.size(), 3);
  EXPECT_EQ(r.edge(1, 2), (Edge{1, true}));
  EXPECT_EQ(r.edge(1, 3), (Edge{2, true}));
  EXPECT_EQ(r.edge(2, 3), (Edge{2, true}));

  const GraphElement s = compose(alpha, 2, beta);
  EXPECT_EQ(s.edge(1, 2), (Edge{2, true}));
  EXPECT_EQ(s.edge(1, 3), (Edge{2, true}));
  EXPECT_EQ(s.edge(2, 3), (Edge{1, true}));

  EXPECT_THROW(compose(alpha, 1, GraphElement::make({true}, true)), ColourMismatch);
}

TEST(SymAct, RelabelsEdges) {
  GraphElement a = closedGraph(3);
  a.edge(1, 2) = {1, true};
  a.edge(1, 3) = {2, false};
  a.edge(2, 3) = {3, true};
  EXPECT_EQ(symAct({1, 2, 3}, a), a);
  const GraphElement b = symAct({2, 3, 1}, a);  // 1->2, 2->3, 3->1
  EXPECT_TRUE(b.pointsTo(2, 3));
  EXPECT_EQ(b.colour(2, 3), 1);
  EXPECT_TRUE(b.pointsTo(1, 2));
  EXPECT_EQ(b.colour(1, 2), 2);
  EXPECT_TRUE(b.pointsTo(3, 1));
  EXPECT_EQ(b.colour(3, 1), 3);
  EXPECT_EQ(symAct({3, 1, 2}, b), a);
}

TEST(Q, Examples) {
  const GraphElement a = q(parse("(12)^c"));
  EXPECT_EQ(a.colour(1, 2), 1);
  EXPECT_TRUE(a.pointsTo(2, 1));

  EXPECT_EQ(q(parse("(1)^c")).edges.size(), 0u);

  const GraphElement b = q(parse("(1u21)^o"));
  EXPECT_EQ(b.colour(1, 2), 2);
  EXPECT_TRUE(b.pointsTo(2, 1));
  EXPECT_TRUE(b.vertexOpen[1]);
  EXPECT_TRUE(b.outputOpen);
}

TEST(Q, ImageIsTotallyAcyclic) {
  for (const auto& x : allStrings(5, 3)) EXPECT_TRUE(isTotallyAcyclic(q(x))) << print(x);
}

TEST(EnumerateComponent, Counts) {
  // Three vertices, one colour: acyclic tournaments are the 3! linear orders.
  EXPECT_EQ(enumerateComponent({false, false, false}, false, 1).size(), 6u);
  // Two vertices: every (mu, orientation) pair.
  EXPECT_EQ(enumerateComponent({false, false}, false, 3).size(), 6u);
  for (const auto& g : enumerateComponent({false, true, true}, true, 2)) EXPECT_TRUE(validate(g));
}
