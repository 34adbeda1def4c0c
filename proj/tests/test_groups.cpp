#include <doctest.h>

#include "gpi/group.hpp"

using namespace gpi;

TEST_CASE("builders") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  CHECK(c4->order() == 4);
  CHECK(c4->mul(1, 3) == 0);  // t * t3 = e

  GroupPtr c3c3 = FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
  CHECK(c3c3->order() == 9);
  for (int g = 0; g < 9; ++g) CHECK(c3c3->mul(g, c3c3->mul(g, g)) == 0);  // exponent 3

  CHECK(FiniteGroup::symmetric(3)->order() == 6);
  CHECK(FiniteGroup::dihedral(4)->order() == 8);
  CHECK(FiniteGroup::trivial()->order() == 1);
}

TEST_CASE("invalid tables rejected") {
  // Subtraction mod 3: rows are fine but column 0 is not the identity map,
  // and the operation is not associative either.
  std::vector<std::vector<int>> sub{{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  CHECK(((1 - 1) - 1 + 3) % 3 != (1 - ((1 - 1) + 3) % 3 + 3) % 3);  // oracle
  CHECK_THROWS_WITH_AS(
      FiniteGroup("bad", {"e", "a", "b"}, sub), doctest::Contains("NotAGroup"), Error);

  // Not a Latin square.
  std::vector<std::vector<int>> rep{{0, 1}, {1, 1}};
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", {"e", "a"}, rep),
                       doctest::Contains("NotAGroup"), Error);
}

TEST_CASE("quotients") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  QuotientMap q = quotient(c4, {0, 2});
  CHECK(q.target->order() == 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      CHECK(q.project(c4->mul(a, b)) == q.target->mul(q.project(a), q.project(b)));

  QuotientMap triv = quotient(c4, {0});
  CHECK(triv.target->order() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b) CHECK(triv.project(a) != triv.project(b));

  GroupPtr s3 = FiniteGroup::symmetric(3);
  int transposition = -1;
  for (int g = 1; g < 6; ++g)
    if (s3->mul(g, g) == 0) { transposition = g; break; }
  REQUIRE(transposition != -1);
  CHECK_THROWS_WITH_AS(quotient(s3, {0, transposition}),
                       doctest::Contains("NotNormal"), Error);
  CHECK_THROWS_WITH_AS(quotient(c4, {0, 1}), doctest::Contains("NotASubgroup"), Error);
}

TEST_CASE("transversals") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  CHECK(transversal(c4, {0, 2}) == std::vector<int>{0, 1});
  CHECK(transversal(c4, {0, 1, 2, 3}) == std::vector<int>{0});
  CHECK(transversal(c4, {0}) == std::vector<int>{0, 1, 2, 3});

  GroupPtr s3 = FiniteGroup::symmetric(3);
  for (const std::vector<int>& h :
       {std::vector<int>{0}, std::vector<int>{0, 1, 2, 3, 4, 5}}) {
    CHECK(static_cast<int>(transversal(s3, h).size()) * static_cast<int>(h.size()) == 6);
  }
}

TEST_CASE("separating quotients") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  // t^2 collapses to e under <t^2>, so only the trivial kernel separates
  // length-2 products of t.
  QuotientMap q = separating_quotient(c4, {1}, 2, {{0, 2}, {0}});
  CHECK(q.kernel == std::vector<int>{0});

  GroupPtr c3c3 = FiniteGroup::product(FiniteGroup::cyclic(3), FiniteGroup::cyclic(3));
  int sigma = 3, tau = 1;  // (t,e) and (e,t) in a-major indexing
  CHECK(c3c3->mul(tau, tau) == 2);
  QuotientMap q2 = separating_quotient(c3c3, {sigma}, 2, {{0, 1, 2}, {0}});
  CHECK(q2.kernel == std::vector<int>{0, 1, 2});

  CHECK_THROWS_WITH_AS(separating_quotient(c4, {1}, 2, {}),
                       doctest::Contains("NoCandidate"), Error);
}

TEST_CASE("subgroup helpers") {
  GroupPtr c4 = FiniteGroup::cyclic(4);
  CHECK(c4->is_subgroup({0, 2}));
  CHECK_FALSE(c4->is_subgroup({0, 1}));
  CHECK(c4->generated_subgroup({2}) == std::vector<int>{0, 2});
  CHECK(c4->generated_subgroup({1}) == std::vector<int>{0, 1, 2, 3});

  GroupPtr s3 = FiniteGroup::symmetric(3);
  std::vector<int> rot = s3->generated_subgroup({[&] {
    for (int g = 1; g < 6; ++g)
      if (s3->mul(g, g) != 0 && s3->mul(g, s3->mul(g, g)) == 0) return g;
    return -1;
  }()});
  CHECK(rot.size() == 3);
  CHECK(s3->is_normal(rot));
}
