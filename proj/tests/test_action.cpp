#include <gtest/gtest.h>

#include "wreathlab/action.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/structure.hpp"

using namespace wreathlab;

TEST(Action, RegularIsTransitiveAndFree) {
  auto g = construct_named("D:5");
  auto a = regular_action(g);
  EXPECT_EQ(a.size(), 10u);
  EXPECT_TRUE(a.is_transitive());
  EXPECT_EQ(a.stabilizer_order(3), 1u);
}

TEST(Action, RejectsBrokenTable) {
  auto c2 = construct_named("C:2");
  EXPECT_THROW(FiniteGSet::from_table(c2, 2, {1, 0, 1, 0}), InvariantError);
  auto c3 = construct_named("C:3");
  // Generator acting as a transposition on 2 points does not respect order 3.
  EXPECT_THROW(FiniteGSet::from_table(c3, 2, {0, 1, 1, 0, 0, 1}), InvariantError);
}

TEST(Action, CosetsOfPointStabilizer) {
  auto s4 = construct_named("S:4");
  std::vector<Element> stab;
  for (Element x = 0; x < s4.order(); ++x)
    if (s4.permutations()->of(x)[0] == 0) stab.push_back(x);
  auto h = subgroup_from_elements(s4, stab);
  auto ca = coset_action(s4, h);
  EXPECT_EQ(ca.action.size(), 4u);
  EXPECT_TRUE(ca.action.is_transitive());
  EXPECT_EQ(ca.representatives.choice.front(), s4.identity());
  for (Point w = 0; w < 4; ++w) EXPECT_EQ(ca.coset_of[ca.representatives(w)], w);
  // Cosets of the stabilizer of 0 correspond to images of 0; the coset action
  // must be equivalent to the natural one through that bijection.
  std::vector<Point> xi(4);
  for (Point w = 0; w < 4; ++w) xi[w] = s4.permutations()->of(ca.representatives(w))[0];
  EXPECT_TRUE(check_equivariant(xi, ca.action, natural_action(4, s4), GroupHom::identity(s4)));
}

TEST(Action, NaturalRequiresDegree) {
  auto s3 = construct_named("S:3");
  EXPECT_EQ(natural_action(3, s3).size(), 3u);
  EXPECT_THROW(natural_action(4, s3), InvariantError);
  EXPECT_THROW(natural_action(construct_named("Q8")), InvariantError);
}

TEST(Action, EquivarianceFailsForWrongBijection) {
  auto s3 = construct_named("S:3");
  auto nat = natural_action(s3);
  const Point swap[] = {1, 0, 2};
  EXPECT_TRUE(check_equivariant(std::vector<Point>{0, 1, 2}, nat, nat, GroupHom::identity(s3)));
  EXPECT_FALSE(check_equivariant(swap, nat, nat, GroupHom::identity(s3)));
}
