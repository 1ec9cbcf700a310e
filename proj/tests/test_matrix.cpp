#include <algorithm>

#include "ainfty/errors.hpp"
#include "ainfty/matrix.hpp"
#include "doctest.h"

using namespace ainfty;

namespace {

OpExpr P(const char* s) { return parse_opexpr(s); }

}  // namespace

TEST_CASE("shape and arrow") {
  const auto col = Monomial::column({P("m2"), P("m2")});
  CHECK(col.x() == std::vector<int>{2});
  CHECK(col.y() == std::vector<int>{1, 1});
  CHECK(col.arrow().start == Point{2, 2});
  CHECK(col.arrow().end == Point{1, 2});
  CHECK(col.str() == "[m2; m2]");

  const auto row = Monomial::row({P("m2"), P("m3")});
  CHECK(row.arrow().start == Point{5, 1});
  CHECK(row.arrow().end == Point{2, 1});
  CHECK(row.str() == "[m2 m3]");
  CHECK(to_string(row.arrow()) == "(5,1)→(2,1)");
  CHECK(Monomial::row({P("Δ2"), P("Δ2∘d")}).ascii() == "[D2 D2 . d]");
}

TEST_CASE("entries are normalised on construction") {
  const auto a = Monomial::single(P("(m2⊗1)∘(1⊗1⊗m2)"));
  const auto b = Monomial::single(P("(1⊗m2)∘(m2⊗1⊗1)"));
  CHECK(a == b);
  CHECK(a.at(0, 0) == P("m2⊗m2"));
}

TEST_CASE("inconsistent shapes are rejected") {
  CHECK_THROWS_AS(Monomial::column({P("m2"), P("m3")}), InvariantViolation);
  CHECK_THROWS_AS(Monomial::row({P("Δ2"), P("m2")}), InvariantViolation);
  CHECK_THROWS_AS(Monomial({{P("d"), P("d")}, {P("d")}}), InvariantViolation);
  CHECK_THROWS_AS(Monomial({}), InvariantViolation);
}

TEST_CASE("BTP detection and block sizes") {
  const auto col = Monomial::column({P("m2"), P("m2")});
  const auto row = Monomial::row({P("Δ2"), P("Δ2")});
  const auto blocks = btp_decompose(col, row);
  REQUIRE(blocks);
  CHECK(blocks->u == std::vector<int>{2});
  CHECK(blocks->v == std::vector<int>{2});
  CHECK(is_tp(Monomial::single(P("Δ2")), Monomial::single(P("m2"))));
  CHECK_FALSE(btp_decompose(row, col));
  CHECK(is_tp(col, row));
  CHECK_FALSE(is_tp(row, col));
}

TEST_CASE("gamma") {
  CHECK(gamma({P("m2"), P("m2")}, {P("Δ2"), P("Δ2")}) == P("(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)"));
  CHECK(gamma({P("Δ2")}, {P("m2")}) == P("Δ2∘m2"));
  CHECK_THROWS_AS(gamma({P("m2")}, {P("Δ2"), P("Δ2")}), TransversalityError);
  CHECK_THROWS_AS(gamma({}, {P("d")}), TransversalityError);
}

TEST_CASE("upsilon on the classical bialgebra pair") {
  const auto prod = upsilon(Monomial::column({P("m2"), P("m2")}), Monomial::row({P("Δ2"), P("Δ2")}));
  CHECK(prod == MatrixSum{Monomial::single(P("(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)"))});
  CHECK(upsilon(Monomial::single(P("Δ2")), Monomial::single(P("m2"))) ==
        MatrixSum{Monomial::single(P("Δ2∘m2"))});
  // not a BTP: zero
  CHECK(upsilon(Monomial::single(P("m2")), Monomial::single(P("Δ2"))).empty());
}

TEST_CASE("upsilon is associative on a composable triple") {
  const MatrixSum a{Monomial::single(P("Δ2"))};
  const MatrixSum b{Monomial::single(P("m2"))};
  const MatrixSum c{Monomial::row({P("m2"), P("m2")})};
  const auto left = upsilon(upsilon(a, b), c);
  const auto right = upsilon(a, upsilon(b, c));
  CHECK(left == right);
  CHECK(left == MatrixSum{Monomial::single(P("Δ2∘m2∘(m2⊗m2)"))});
}

TEST_CASE("upsilon is bilinear over GF(2)") {
  const MatrixSum a{Monomial::single(P("Δ2")), Monomial::single(P("Δ3"))};
  const MatrixSum b{Monomial::single(P("m2"))};
  CHECK(upsilon(a, b).size() == 2);
  CHECK(upsilon(a + a, b).empty());
}

TEST_CASE("wedge and Čech cross products") {
  const auto m2 = Monomial::single(P("m2"));
  const auto d2 = Monomial::single(P("Δ2"));
  CHECK(wedge_cross(m2, m2) == MatrixSum{Monomial::column({P("m2"), P("m2")})});
  CHECK(wedge_cross(m2, d2).empty());
  CHECK(cech_cross(d2, d2) == MatrixSum{Monomial::row({P("Δ2"), P("Δ2")})});
  CHECK(cech_cross(d2, m2).empty());
}

TEST_CASE("rendering of sums") {
  const MatrixSum s{Monomial::single(P("Δ2∘m2")), Monomial::column({P("d"), P("d")})};
  const auto terms = render_terms(s);
  CHECK(terms.size() == 2);
  CHECK(std::find(terms.begin(), terms.end(), "Δ2∘m2") != terms.end());
  CHECK(std::find(terms.begin(), terms.end(), "[d; d]") != terms.end());
  const auto ascii = render_terms(s, true);
  CHECK(std::find(ascii.begin(), ascii.end(), "D2 . m2") != ascii.end());
}
