#include <numeric>

#include "ainfty/errors.hpp"
#include "ainfty/trees.hpp"
#include "doctest.h"

using namespace ainfty;

namespace {

// Small Schröder numbers by the recurrence (n+1) s(n) = 3(2n-1) s(n-1) - (n-2) s(n-2),
// indexed so that schroeder(k) counts planar trees with k+1 leaves.
long schroeder(int k) {
  std::vector<long> s{1, 1};
  for (int n = 2; n <= k; ++n) s.push_back((3 * (2 * n - 1) * s[n - 1] - (n - 2) * s[n - 2]) / (n + 1));
  return s[static_cast<std::size_t>(k)];
}

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("face counts follow the Schröder and Catalan numbers") {
  for (int n = 2; n <= 7; ++n) {
    CHECK(static_cast<long>(faces_of(n).size()) == schroeder(n - 1));
    const auto by_dim = enumerate_faces(n);
    CHECK(static_cast<long>(by_dim.at(0).size()) == catalan(n - 1));
    CHECK(by_dim.at(n - 2).size() == 1);
  }
  CHECK(schroeder(1) == 1);
  CHECK(schroeder(3) == 11);
  CHECK(schroeder(6) == 903);
}

TEST_CASE("enumeration is sorted by encoding within each dimension") {
  for (const auto& [dim, faces] : enumerate_faces(5)) {
    for (std::size_t i = 1; i < faces.size(); ++i) CHECK(faces[i - 1] < faces[i]);
    for (const auto& f : faces) CHECK(f.dim() == dim);
  }
}

TEST_CASE("encoding round-trips") {
  for (const auto& f : faces_of(6)) CHECK(Face::parse(f.code()) == f);
  CHECK(Face::corolla(3).code() == "3");
  CHECK(left_comb(3).code() == "(2,1)");
  CHECK(right_comb(3).code() == "(1,2)");
  CHECK(Face::parse("(2,(2,1))").leaves() == 5);
}

TEST_CASE("boundary squares to zero") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& f : faces_of(n)) CHECK(boundary(boundary(f)).empty());
  }
}

TEST_CASE("boundary of K3 and K4 top cells") {
  const auto b3 = boundary(Face::corolla(3));
  CHECK(b3 == FaceChain{Face::parse("(2,1)"), Face::parse("(1,2)")});
  // the pentagon has five edges
  const auto b4 = boundary(Face::corolla(4));
  CHECK(b4.size() == 5);
  for (const auto& e : b4) CHECK(e.dim() == 1);
}

TEST_CASE("level_rep examples") {
  CHECK(level_rep(Face::corolla(5)).descent() == std::vector<LeafSeq>{{5}});
  CHECK(level_rep(Face::parse("(1,2)")).descent() == std::vector<LeafSeq>{{1, 2}, {2}});
  CHECK(level_rep(left_comb(4)).descent() == std::vector<LeafSeq>{{2, 1, 1}, {2, 1}, {2}});
  // two eligible nodes: the leftmost is pruned first
  CHECK(level_rep(Face::parse("(2,2)")).descent() == std::vector<LeafSeq>{{2, 1, 1}, {1, 2}, {2}});
}

TEST_CASE("level_rep is a leveling of its face") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& f : faces_of(n)) {
      const auto t = level_rep(f);
      CHECK(t.face() == f);
      CHECK(t.levels() == static_cast<int>(node_arities(f.tree()).size()));
      CHECK(LevelTree(descent_sequence(t)) == t);
    }
  }
}

TEST_CASE("every leveling forgets to its face") {
  const Face f = Face::parse("((2,1),2)");
  const auto all = all_levelings(f);
  // the root is last; the inner binary node must sit above its parent
  CHECK(all.size() == 3);
  for (const auto& t : all) CHECK(t.face() == f);
}

TEST_CASE("leaf coproduct splits at interior levels") {
  const LevelTree t({{2, 1, 1}, {2, 1}, {2}});
  const auto terms = leaf_coproduct(t);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].first.descent() == std::vector<LeafSeq>{{2, 1, 1}, {3}});
  CHECK(terms[0].second.descent() == std::vector<LeafSeq>{{2, 1}, {2}});
  CHECK(terms[1].first.descent() == std::vector<LeafSeq>{{2, 1, 1}, {2, 1}, {2}});
  CHECK(terms[1].second.descent() == std::vector<LeafSeq>{{2}});
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(terms[i].first.levels() + terms[i].second.levels() == t.levels() + 1);
  }
  CHECK(leaf_coproduct(LevelTree(std::vector<LeafSeq>{{4}})).empty());
}

TEST_CASE("corolla_of locates the unique node") {
  CHECK(corolla_of({1, 3, 1}) == std::pair{1, 3});
  CHECK(corolla_of({2}) == std::pair{0, 2});
}

TEST_CASE("invalid input is rejected") {
  CHECK_THROWS_AS(PlanarTree::corolla(1), InvalidArity);
  CHECK_THROWS_AS(enumerate_faces(1), InvalidArity);
  CHECK_THROWS_AS(Face::parse("(2,"), ParseError);
  CHECK_THROWS_AS(Face::parse("(2,1"), ParseError);
  CHECK_THROWS_AS(LevelTree({}), InvariantViolation);
  CHECK_THROWS_AS(LevelTree({{2, 1}, {3}}), InvariantViolation);
  CHECK_THROWS_AS(LevelTree({{2, 1}}), InvariantViolation);
}

TEST_CASE("grafting substitutes internal nodes") {
  const auto shape = Face::parse("(2,1)").tree();
  CHECK(graft(shape, {PlanarTree::corolla(2), PlanarTree::corolla(2)}).encode() == "(2,1)");
  CHECK(graft(Face::parse("(3,1)").tree(), {PlanarTree::corolla(2), Face::parse("(1,2)").tree()}).encode() ==
        "((1,2),1)");
  CHECK_THROWS_AS(graft(PlanarTree::corolla(2), {PlanarTree::corolla(3)}), InvalidArity);
  CHECK(node_arities(Face::parse("(2,(1,3))").tree()) == std::vector<int>{2, 2, 2, 3});
}
