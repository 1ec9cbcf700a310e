#include "ainfty/biderivative.hpp"
#include "ainfty/errors.hpp"
#include "doctest.h"

using namespace ainfty;

namespace {

OpExpr P(const char* s) { return parse_opexpr(s); }

MatrixSum singles(std::initializer_list<const char*> terms) {
  MatrixSum out;
  for (const char* t : terms) out.toggle(Monomial::single(P(t)));
  return out;
}

MatrixSum dual(const MatrixSum& s) {
  MatrixSum out;
  for (const auto& m : s) out.toggle(Monomial::single(dualize(m.at(0, 0))));
  return out;
}

// Σ_{r+s+t=n} m_{r+1+t} ∘ (1^r ⊗ m_s ⊗ 1^t) with m_1 = d, built by hand.
MatrixSum classical(int n, int max_m) {
  auto op = [&](int k) -> std::optional<OpExpr> {
    if (k == 1) return OpExpr::d();
    if (k <= max_m) return OpExpr::m(k);
    return std::nullopt;
  };
  MatrixSum out;
  for (int s = 1; s <= n; ++s) {
    for (int r = 0; r + s <= n; ++r) {
      const int t = n - r - s;
      const auto outer = op(r + 1 + t);
      const auto inner = op(s);
      if (!outer || !inner) continue;
      std::vector<OpExpr> layer;
      if (r) layer.push_back(OpExpr::identity(r));
      layer.push_back(*inner);
      if (t) layer.push_back(OpExpr::identity(t));
      out.toggle(Monomial::single(*outer * OpExpr::tensor(layer)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the (2,2) relation is the classical bialgebra compatibility") {
  const auto r = generate_relation(2, 2);
  CHECK(r.kind == Relation::Kind::Bialgebra);
  CHECK(r.label == "(2,2)");
  CHECK(r.arrow.start == Point{2, 1});
  CHECK(r.arrow.end == Point{1, 2});
  CHECK(r.lhs == singles({"Δ2∘m2"}));
  CHECK(r.rhs == singles({"(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)"}));
  CHECK(r.rhs_left == MatrixSum{Monomial::column({P("m2"), P("m2")})});
  CHECK(r.rhs_right == MatrixSum{Monomial::row({P("Δ2"), P("Δ2")})});
  CHECK_FALSE(r.diagonal_dependent);
}

TEST_CASE("the (3,2) relation") {
  const auto r = generate_relation(3, 2);
  CHECK(r.lhs == singles({"Δ2∘m3"}));
  CHECK(r.rhs_right == MatrixSum{Monomial::row({P("Δ2"), P("Δ2"), P("Δ2")})});
  CHECK(r.rhs == singles({"(1⊗m2)∘(m3⊗1⊗m2)∘σ{2,3}∘(Δ2⊗Δ2⊗Δ2)",
                          "(m2⊗1)∘π{1,3,2}∘(m2⊗m3⊗1)∘π{1,3,2,4,6,5}∘(Δ2⊗Δ2⊗Δ2)"}));
}

TEST_CASE("relations are self-dual under i and j exchange") {
  for (auto [i, j] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}}) {
    const auto r = generate_relation(i, j);
    const auto s = generate_relation(j, i);
    CHECK(s.lhs == dual(r.lhs));
    CHECK(s.rhs == dual(r.rhs));
  }
}

TEST_CASE("diagonal dependence starts at arity four") {
  CHECK_FALSE(generate_relation(3, 3).diagonal_dependent);
  CHECK(generate_relation(4, 2).diagonal_dependent);
  CHECK(generate_relation(2, 4).diagonal_dependent);
}

TEST_CASE("classical A-infinity relations") {
  const auto ops = OperationSet::standard(4, 4);
  for (int n = 1; n <= 5; ++n) {
    const auto a = algebra_relation(n, ops);
    CHECK(a.lhs == classical(n, 4));
    CHECK(a.rhs.empty());
    CHECK(coalgebra_relation(n, ops).lhs == dual(classical(n, 4)));
  }
  CHECK(algebra_relation(1, ops).kind == Relation::Kind::Differential);
  CHECK(algebra_relation(3, ops).label == "ainfty 3");
  CHECK(coalgebra_relation(2, ops).label == "coainfty 2");
  CHECK(algebra_relation(2, OperationSet::standard(2, 2, false)).lhs.empty());
  CHECK_THROWS_AS(algebra_relation(0, ops), InvalidArity);
}

TEST_CASE("bd0 counts") {
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 4; ++q) {
      std::size_t expected = 1;
      for (int k = 2; k <= q; ++k) expected += static_cast<std::size_t>(k);
      for (int k = 2; k <= p; ++k) expected += static_cast<std::size_t>(k);
      CHECK(bd0(OpExpr::d(), p, q).size() == expected);
    }
  }
  const auto b = bd0(OpExpr::d(), 2, 2);
  CHECK(b.contains(Monomial::single(P("d"))));
  CHECK(b.contains(Monomial::column({P("d"), P("1")})));
  CHECK(b.contains(Monomial::row({P("1"), P("d")})));
}

TEST_CASE("restricted biderivative") {
  const Truncation bounds{2, 2};
  const MatrixSum d{Monomial::single(P("d"))};
  CHECK(restricted_biderivative(d, bounds) == bd0(OpExpr::d(), 2, 2));
  // larger matrices lie outside M0 + M1
  CHECK(restricted_biderivative(MatrixSum{Monomial::column({P("d"), P("d")})}, bounds).empty());
  const MatrixSum twice{Monomial::single(P("m2")), Monomial::single(P("m2∘π{2,1}"))};
  CHECK_THROWS_AS(restricted_biderivative(twice, bounds), InvariantViolation);
  const auto m2 = restricted_biderivative(MatrixSum{Monomial::single(P("m2"))}, bounds);
  CHECK(m2.contains(Monomial::single(P("m2"))));
  CHECK(m2.contains(Monomial::column({P("m2"), P("m2")})));
}

TEST_CASE("structure equation of a (2,2) truncation") {
  const auto eq = structure_equation_terms(OmegaSpec::standard(2, 2));
  const auto* diff = eq.find(Relation::Kind::Differential, 1, 1);
  REQUIRE(diff);
  CHECK(diff->terms() == singles({"d∘d"}));
  const auto* alg = eq.find(Relation::Kind::Algebra, 2);
  REQUIRE(alg);
  CHECK(alg->terms() == classical(2, 2));
  const auto* co = eq.find(Relation::Kind::Coalgebra, 2);
  REQUIRE(co);
  CHECK(co->terms() == dual(classical(2, 2)));
  const auto* bi = eq.find(Relation::Kind::Bialgebra, 2, 2);
  REQUIRE(bi);
  CHECK(bi->terms() == generate_relation(2, 2).terms());
  CHECK(eq.residual.size() == 4);
  CHECK_FALSE(eq.notes.empty());
}

TEST_CASE("structure equation recovers A-infinity algebras") {
  const auto omega = OmegaSpec::algebra(4);
  const auto eq = structure_equation_terms(omega);
  for (int n = 2; n <= 4; ++n) {
    const auto* r = eq.find(Relation::Kind::Algebra, n);
    REQUIRE(r);
    CHECK(r->terms() == classical(n, 4));
  }
  CHECK(eq.find(Relation::Kind::Bialgebra, 2, 2) == nullptr);
  CHECK(eq.find(Relation::Kind::Coalgebra, 2) == nullptr);
}

TEST_CASE("the (3,2) group matches the generated relation") {
  const auto eq = structure_equation_terms(OmegaSpec::standard(3, 2, false));
  const auto* bi = eq.find(Relation::Kind::Bialgebra, 3, 2);
  REQUIRE(bi);
  CHECK(bi->terms() == generate_relation(3, 2).terms());
}
