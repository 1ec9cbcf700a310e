#include "ainfty/errors.hpp"
#include "ainfty/opexpr.hpp"
#include "doctest.h"

using namespace ainfty;

TEST_CASE("biarity of generators and composites") {
  CHECK(OpExpr::m(3).inputs() == 3);
  CHECK(OpExpr::m(3).outputs() == 1);
  CHECK(OpExpr::delta(2).outputs() == 2);
  const auto e = OpExpr::m(2) * OpExpr::tensor({OpExpr::identity(), OpExpr::m(2)});
  CHECK(e.inputs() == 3);
  CHECK(e.outputs() == 1);
  CHECK(generator_count(e) == 2);
  CHECK(OpExpr::sigma(2, 3).inputs() == 6);
}

TEST_CASE("rendering") {
  const auto e = OpExpr::m(2) * OpExpr::tensor({OpExpr::identity(), OpExpr::m(2)});
  CHECK(e.str() == "m2∘(1⊗m2)");
  CHECK(e.ascii() == "m2 . (1 x m2)");
  CHECK(OpExpr::sigma(2, 2).str() == "σ{2,2}");
  CHECK(OpExpr::sigma(2, 2).ascii() == "s{2,2}");
  CHECK(OpExpr::delta(3).str() == "Δ3");
  CHECK(OpExpr::delta(3).ascii() == "D3");
  CHECK(OpExpr::permutation({0, 2, 1}).str() == "π{1,3,2}");
  CHECK(OpExpr::symbol("θ", 1, 2).str() == "θ{1,2}");
}

TEST_CASE("sigma source map") {
  // σ_{2,2} swaps the middle strands
  CHECK(OpExpr::sigma(2, 2).source() == std::vector<int>{0, 2, 1, 3});
  // σ_{q,p}: output k·p + ℓ carries input ℓ·q + k
  const int q = 2, p = 3;
  const auto src = OpExpr::sigma(q, p).source();
  for (int k = 0; k < q; ++k) {
    for (int l = 0; l < p; ++l) CHECK(src[static_cast<std::size_t>(k * p + l)] == l * q + k);
  }
  CHECK(OpExpr::sigma(1, 3).is_identity());
}

TEST_CASE("construction simplifies identities") {
  CHECK(OpExpr::tensor({OpExpr::identity(), OpExpr::identity(2)}).is_identity());
  CHECK(OpExpr::compose({OpExpr::identity(), OpExpr::d(), OpExpr::identity()}) == OpExpr::d());
  const auto nested = OpExpr::tensor({OpExpr::m(2), OpExpr::tensor({OpExpr::d(), OpExpr::m(2)})});
  CHECK(nested.parts().size() == 3);
}

TEST_CASE("biarity mismatch") {
  CHECK_THROWS_AS(OpExpr::m(2) * OpExpr::m(2), BiarityError);
  CHECK_THROWS_AS(parse_opexpr("m2∘m3"), BiarityError);
}

TEST_CASE("parser accepts Unicode and ASCII") {
  const char* samples[] = {"m2∘(1⊗m2)", "m2∘(m2⊗1)", "(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)", "Δ3∘d", "θ{2,1}∘η{1,3}",
                           "π{2,1}∘Δ2", "d⊗1⊗d"};
  for (const char* s : samples) {
    const auto e = parse_opexpr(s);
    CHECK(e.str() == s);
    // Greek symbol names are transliterated, so only generators round-trip
    if (e.str().find("θ") == std::string::npos) CHECK(parse_opexpr(e.ascii()) == e);
  }
  CHECK(parse_opexpr("θ{2,1}∘η{1,3}").ascii() == "th{2,1} . eta{1,3}");
  CHECK(parse_opexpr("(m2 x m2) . s{2,2} . (D2 x D2)") == parse_opexpr("(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)"));
  CHECK(parse_opexpr("m2 . (1 * m2)") == parse_opexpr("m2∘(1⊗m2)"));
  CHECK(parse_opexpr("p{1,3,2}") == OpExpr::permutation({0, 2, 1}));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_opexpr(""), ParseError);
  CHECK_THROWS_AS(parse_opexpr("m2∘("), ParseError);
  CHECK_THROWS_AS(parse_opexpr("q"), ParseError);
  CHECK_THROWS_AS(parse_opexpr("π{1,1}"), ParseError);
  try {
    parse_opexpr("m2 ∘ ∘");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("normal form identifies isotopic diagrams") {
  const auto interchange_a = parse_opexpr("(m2⊗1)∘(1⊗1⊗m2)");
  const auto interchange_b = parse_opexpr("(1⊗m2)∘(m2⊗1⊗1)");
  CHECK(normalize(interchange_a) == normalize(interchange_b));
  CHECK(normalize(interchange_a) == parse_opexpr("m2⊗m2"));
  CHECK(equivalent(parse_opexpr("σ{2,2}∘σ{2,2}"), OpExpr::identity(4)));
  CHECK(equivalent(parse_opexpr("(d⊗1)∘π{2,1}"), parse_opexpr("π{2,1}∘(1⊗d)")));
  // associativity is not an identity of diagrams
  CHECK_FALSE(equivalent(parse_opexpr("m2∘(m2⊗1)"), parse_opexpr("m2∘(1⊗m2)")));
  CHECK_FALSE(equivalent(OpExpr::m(2), OpExpr::m(2) * OpExpr::permutation({1, 0})));
  CHECK_FALSE(equivalent(OpExpr::m(2), OpExpr::m(3)));
}

TEST_CASE("normalisation is idempotent") {
  const char* samples[] = {"(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)", "(m2⊗1)∘(1⊗Δ2)", "Δ2∘m2∘(d⊗1)", "(1⊗m2)∘(m3⊗1⊗m2)∘σ{2,3}∘(Δ2⊗Δ2⊗Δ2)"};
  for (const char* s : samples) {
    const auto n = normalize(parse_opexpr(s));
    CHECK(normalize(n) == n);
    CHECK(generator_count(n) == generator_count(parse_opexpr(s)));
  }
}

TEST_CASE("dualisation") {
  CHECK(dualize(OpExpr::m(3)) == OpExpr::delta(3));
  CHECK(dualize(parse_opexpr("m2∘(1⊗m2)")) == parse_opexpr("(1⊗Δ2)∘Δ2"));
  CHECK(dualize(OpExpr::permutation({1, 2, 0})) == OpExpr::permutation({2, 0, 1}));
  CHECK(dualize(OpExpr::symbol("θ", 1, 2)).str() == "θ*{2,1}");
  const auto e = parse_opexpr("(m2⊗m2)∘σ{2,2}∘(Δ2⊗Δ2)∘(d⊗d)");
  CHECK(dualize(dualize(e)) == e);
}
