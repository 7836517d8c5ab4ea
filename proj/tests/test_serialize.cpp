#include "curves.hpp"
#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "drinfeld/serialize.hpp"
#include "drinfeld/shtuka.hpp"

using namespace drinfeld;
using namespace testing_curves;

TEST_CASE("curve spec files") {
  for (const char* name : {"ex82.json", "ex83.json"}) {
    CurveSpec spec = load_curve_spec(std::string(DRINFELD_DATA_DIR) + "/" + name);
    CurveSpec again = curve_spec_from_json(to_json(spec));
    CHECK(to_json(again) == to_json(spec));
    auto ctx = make_context(spec);
    auto ref = std::string(name) == "ex82.json" ? ex82() : ex83();
    CHECK(ctx->q() == ref->q());
    CHECK(ctx->coeffs() == ref->coeffs());
  }
  CHECK_THROWS_AS(curve_spec_from_json(Json::parse(R"({"p":3,"a":[[0],[0]]})")), DomainError);
  CHECK_THROWS_AS(load_curve_spec("/nonexistent/spec.json"), DomainError);
}

TEST_CASE("A-expression parser") {
  auto c3 = ex82();
  const KContext& K = *c3;
  KElem th = KElem::theta(K), eta = KElem::eta(K);
  CHECK(parse_a_expr(K, "1") == KElem::one(K));
  CHECK(parse_a_expr(K, "T^2 + 2") == th * th + kc(K, 2));
  CHECK(parse_a_expr(K, "T*Y + 1") == th * eta + KElem::one(K));
  CHECK(parse_a_expr(K, "-T + Y") == eta - th);
  CHECK(parse_a_expr(K, "2*T^3*Y - 1") == kc(K, 2) * th.pow(3) * eta - KElem::one(K));
  CHECK(parse_a_expr(K, "4") == KElem::one(K));
  KElem x = parse_a_expr(K, "T*Y + 1");
  CHECK(parse_a_expr(K, format_a_expr(x)) == x);

  auto c4 = ex83();
  const KContext& L = *c4;
  KElem c = KElem::constant(L, L.field().from_digits(std::vector<int>{0, 1}));
  CHECK(parse_a_expr(L, "[0,1]*T + Y") == c * KElem::theta(L) + KElem::eta(L));
  CHECK(parse_a_expr(L, "[1,1]") == c + KElem::one(L));

  try {
    parse_a_expr(K, "T + Y^2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_a_expr(K, "T*Y*Y"), ParseError);
  CHECK_THROWS_AS(parse_a_expr(K, ""), ParseError);
  CHECK_THROWS_AS(parse_a_expr(K, "T +"), ParseError);
  CHECK_THROWS_AS(parse_a_expr(K, "T ^"), ParseError);
  CHECK_THROWS_AS(parse_a_expr(K, "x"), ParseError);
  CHECK_THROWS_AS(parse_a_expr(K, "[3]"), ParseError);
  CHECK_THROWS_AS(format_a_expr(th.inverse()), DomainError);
}

TEST_CASE("JSON round trips") {
  for (auto c : {ex82(), ex83()}) {
    const KContext& K = *c;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      KElem x = random_kelem(K, rng, 4);
      Json j = to_json(x);
      CHECK(kelem_from_json(K, Json::parse(j.dump())) == x);
      KRoot r{x, trial % 3};
      KRoot r2 = kroot_from_json(K, to_json(r));
      CHECK(r2.power == r.power);
      CHECK(r2.depth == r.depth);
    }
    ShtukaData S = shtuka(K);
    CHECK(point_from_json(K, to_json(S.V)) == S.V);
    CHECK(point_from_json(K, to_json(Point::infinity())) == Point::infinity());
    CHECK(curvefunc_from_json(K, Json::parse(to_json(S.f).dump())) == S.f);
    TensorBasis B = tensor_basis(K, S, 2);
    for (const auto& g : B.g) CHECK(curvefunc_from_json(K, to_json(g)) == g);
    KMatrix M = KMatrix::identity(K, 2);
    M(0, 1) = KElem::eta(K);
    CHECK(kmatrix_from_json(K, to_json(M)) == M);
    LaurentK s(K.field(), -3, {1, 0, 1}, 10);
    LaurentK s2 = laurent_from_json(K.field(), to_json(s));
    CHECK(s2.valuation() == s.valuation());
    CHECK(s2.precision() == s.precision());
    CHECK(s2.coeffs() == s.coeffs());
    CHECK_THROWS_AS(point_from_json(K, Json{{"x", to_json(KElem::one(K))}, {"y", to_json(KElem::one(K))}}),
                    NotOnCurve);
  }
}

TEST_CASE("pretty printing") {
  auto c3 = ex82();
  const KContext& K = *c3;
  KElem th = KElem::theta(K), eta = KElem::eta(K);
  CHECK(pretty(th + KElem::one(K)) == "θ + 1");
  CHECK(pretty(eta) == "η");
  CHECK(pretty(-(eta.pow(3)) / (eta * eta + KElem::one(K))) != "");
  CHECK(pretty(KElem::zero(K)) == "0");
  CHECK(pretty(Point::infinity()) == "∞");
  auto c4 = ex83();
  CHECK(pretty(c4->field(), c4->field().from_digits(std::vector<int>{1, 1})) == "c+1");
}
