#include "ainfty/cochain.hpp"
#include "doctest.h"

using namespace ainfty;

namespace {

OpExpr P(const char* s) { return parse_opexpr(s); }

// The m's composed along the tree, read off the tree directly.
OpExpr m_composite(const PlanarTree& t) {
  if (t.is_leaf()) return OpExpr::identity();
  std::vector<OpExpr> children;
  for (const auto& c : t.children()) children.push_back(m_composite(c));
  return OpExpr::m(t.arity()) * OpExpr::tensor(children);
}

OpExpr delta_composite(const PlanarTree& t) {
  if (t.is_leaf()) return OpExpr::identity();
  std::vector<OpExpr> children;
  for (const auto& c : t.children()) children.push_back(delta_composite(c));
  return OpExpr::tensor(children) * OpExpr::delta(t.arity());
}

}  // namespace

TEST_CASE("standard operation sets") {
  const auto ops = OperationSet::standard(4, 3);
  REQUIRE(ops.d);
  CHECK(ops.max_m() == 4);
  CHECK(ops.max_delta() == 3);
  CHECK(*ops.product(3) == OpExpr::m(3));
  CHECK(ops.product(5) == nullptr);
  CHECK(*ops.coproduct(2) == OpExpr::delta(2));
  CHECK_FALSE(OperationSet::standard(2, 2, false).d);
}

TEST_CASE("phi and psi live on top cells") {
  const auto ops = OperationSet::standard(4, 4);
  CHECK(phi(ops)(Face::corolla(3)) == MatrixSum{Monomial::single(P("m3"))});
  CHECK(psi(ops)(Face::corolla(4)) == MatrixSum{Monomial::single(P("Δ4"))});
  CHECK(phi(ops)(Face::parse("(2,1)")).empty());
  CHECK(phi(ops)(Face::corolla(5)).empty());
}

TEST_CASE("codimension-one values of the coderivation and derivation cochains") {
  const auto ops = OperationSet::standard(4, 4);
  const auto phic = coderivation_cochain(ops);
  const auto psia = derivation_cochain(ops);
  CHECK(phic(Face::parse("(2,1)")) == MatrixSum{Monomial::row({P("m2"), P("1")})});
  CHECK(phic(Face::parse("(1,3)")) == MatrixSum{Monomial::row({P("1"), P("m3")})});
  CHECK(phic(Face::parse("(1,2,1)")) == MatrixSum{Monomial::row({P("1"), P("m2"), P("1")})});
  CHECK(psia(Face::parse("(1,2)")) == MatrixSum{Monomial::column({P("1"), P("Δ2")})});
  CHECK(phic(Face::parse("((2,1),1)")).empty());
  CHECK(phic(Face::corolla(4)) == MatrixSum{Monomial::single(P("m4"))});
}

TEST_CASE("xi and zeta are the composites along the tree") {
  const auto ops = OperationSet::standard(6, 6);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& f : faces_of(n)) {
      CHECK(xi(ops, f) == MatrixSum{Monomial::single(m_composite(f.tree()))});
      CHECK(zeta(ops, f) == MatrixSum{Monomial::single(delta_composite(f.tree()))});
    }
  }
  CHECK(xi(ops, Face::parse("(2,1)")) == MatrixSum{Monomial::single(P("m2∘(m2⊗1)"))});
}

TEST_CASE("xi vanishes where an arity is missing") {
  auto ops = OperationSet::standard(4, 2);
  ops.m.erase(3);
  CHECK(xi(ops, Face::parse("(3,1)")).empty());
  CHECK_FALSE(xi(ops, Face::parse("((2,1),1)")).empty());
}

TEST_CASE("leaf cups vanish on one-level trees") {
  const auto ops = OperationSet::standard(3, 3);
  const auto c = cup_leaf_wedge(coderivation_cochain(ops), coderivation_cochain(ops));
  CHECK(c(Face::corolla(3)).empty());
  CHECK(leaf_power_wedge(coderivation_cochain(ops), 1)(Face::corolla(3)) ==
        MatrixSum{Monomial::single(P("m3"))});
}

TEST_CASE("cup orders: wedge evaluates f on the lower factor") {
  const auto ops = OperationSet::standard(3, 3);
  const auto phic = coderivation_cochain(ops);
  const auto psia = derivation_cochain(ops);
  const Face f = Face::parse("(2,1)");
  // leaf coproduct of ((2,1),(2)) is ((2,1),(2)) ⊗ ((2))
  CHECK(cup_leaf_wedge(phic, phic)(f) == MatrixSum{Monomial::single(P("m2∘(m2⊗1)"))});
  CHECK(cup_leaf_cech(psia, psia)(Face::parse("(1,2)")) ==
        MatrixSum{Monomial::single(P("(1⊗Δ2)∘Δ2"))});
}

TEST_CASE("xi powers stack over the iterated diagonal") {
  const auto ops = OperationSet::standard(4, 4);
  CHECK(xi_power(ops, 1, Face::corolla(3)) == xi(ops, Face::corolla(3)));
  CHECK(xi_power(ops, 2, Face::corolla(2)) == MatrixSum{Monomial::column({P("m2"), P("m2")})});
  CHECK(zeta_power(ops, 2, Face::corolla(2)) == MatrixSum{Monomial::row({P("Δ2"), P("Δ2")})});
  CHECK(xi_power(ops, 2, Face::corolla(3)) ==
        MatrixSum{Monomial::column({P("m2∘(m2⊗1)"), P("m3")}), Monomial::column({P("m3"), P("m2∘(1⊗m2)")})});

  const Diagonal& diag = default_diagonal();
  for (int k = 1; k <= 3; ++k) {
    for (int n = 2; n <= 4; ++n) {
      const Face e = Face::corolla(n);
      MatrixSum expected;
      for (const auto& term : diag.iterate(e, k)) {
        std::vector<OpExpr> col;
        for (const auto& a : term) col.push_back(m_composite(a.tree()));
        expected.toggle(Monomial::column(col));
      }
      CHECK(xi_power(ops, k, e) == expected);
    }
  }
}

TEST_CASE("zeta powers concatenate over the iterated diagonal") {
  const auto ops = OperationSet::standard(4, 4);
  const Diagonal& diag = default_diagonal();
  for (int k = 1; k <= 3; ++k) {
    const Face e = Face::corolla(4);
    MatrixSum expected;
    for (const auto& term : diag.iterate(e, k)) {
      std::vector<OpExpr> row;
      for (const auto& a : term) row.push_back(delta_composite(a.tree()));
      expected.toggle(Monomial::row(row));
    }
    CHECK(zeta_power(ops, k, e) == expected);
  }
}
