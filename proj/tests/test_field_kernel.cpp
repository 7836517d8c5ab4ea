#include <random>

#include "curves.hpp"
#include "doctest.h"
#include "drinfeld/errors.hpp"

using namespace drinfeld;
using namespace testing_curves;

namespace {

KElem poly_elem(const KContext& ctx, std::vector<FqCode> u, std::vector<FqCode> v = {}) {
  return KElem::from_poly(ctx, FqPoly(ctx.field(), std::move(u)), FqPoly(ctx.field(), std::move(v)));
}

}  // namespace

TEST_CASE("finite field tables") {
  FiniteField F4(2, 2, {1, 1, 1});
  CHECK(F4.q() == 4);
  FqCode c = F4.from_digits(std::vector<int>{0, 1});
  CHECK(F4.add(F4.mul(c, c), c) == 1);
  for (int a = 1; a < 4; ++a) CHECK(F4.mul(static_cast<FqCode>(a), F4.inv(static_cast<FqCode>(a))) == 1);
  CHECK(FiniteField::default_modulus(2, 3) == std::vector<int>{1, 1, 0, 1});
  CHECK_THROWS_AS(FiniteField(4, 1), DomainError);
  CHECK_THROWS_AS(FiniteField(2, 2, {1, 0, 1}), DomainError);
  CHECK_THROWS_AS(FiniteField(2, 9), DomainError);
  FiniteField F9(3, 2);
  for (int a = 0; a < 9; ++a) CHECK(F9.pow(static_cast<FqCode>(a), 9) == a);
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937_64 rng(11);
  FiniteField F(3, 1);
  for (int i = 0; i < 200; ++i) {
    FqPoly a = random_poly(F, rng, 120), b = random_poly(F, rng, 90), c = random_poly(F, rng, 60);
    if (b.is_zero()) continue;
    auto [qq, r] = FqPoly::divmod(a, b);
    CHECK(qq * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK((a * b) * c == a * (b * c));
    if (!c.is_zero()) CHECK(gcd(a * c, b * c).degree() >= c.degree());
  }
}

TEST_CASE("eta squared follows the curve relation") {
  auto c2 = ex82();
  KElem eta = KElem::eta(*c2);
  CHECK(eta * eta == poly_elem(*c2, {2, 2, 0, 1}));

  auto c3 = ex83();
  KElem eta3 = KElem::eta(*c3);
  // theta^3 + c + eta
  CHECK(eta3 * eta3 == poly_elem(*c3, {2, 0, 0, 1}, {1}));
}

TEST_CASE("degree and sign") {
  auto c = ex82();
  KElem th = KElem::theta(*c), eta = KElem::eta(*c);
  CHECK(th.deg_sgn().deg == 2);
  CHECK(th.deg_sgn().sgn == 1);
  CHECK((th + KElem::one(*c)).deg_sgn().deg == 2);
  auto ds = ((eta + th) / th).deg_sgn();
  CHECK(ds.deg == 1);
  CHECK(ds.sgn == 1);
  CHECK_THROWS_AS(KElem::zero(*c).deg_sgn(), DomainError);
}

TEST_CASE("frobenius and q-th roots") {
  auto c = ex82();
  KElem th = KElem::theta(*c), eta = KElem::eta(*c);
  CHECK(th.frobenius(1) == th.pow(3));
  CHECK(KElem::one(*c).frobenius(2) == KElem::one(*c));
  CHECK(eta.frobenius(1) == eta * poly_elem(*c, {2, 2, 0, 1}));
  CHECK(*th.pow(3).qth_root() == th);
  CHECK_FALSE(eta.qth_root().has_value());
  KElem x = eta * eta + KElem::one(*c);
  CHECK(*x.frobenius(1).qth_root() == x);
}

TEST_CASE("division by zero is reported") {
  auto c = ex83();
  CHECK_THROWS_AS(KElem::one(*c) / KElem::zero(*c), DivisionByZero);
  CHECK_THROWS_AS(k_arith(ArithOp::div, KElem::eta(*c), KElem::zero(*c)), DivisionByZero);
}

TEST_CASE("random field axioms and frobenius homomorphism") {
  for (auto ctx : {ex82(), ex83()}) {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
      KElem x = random_kelem(*ctx, rng), y = random_kelem(*ctx, rng), z = random_kelem(*ctx, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * KElem::one(*ctx) == x);
      if (!x.is_zero()) CHECK(x * x.inverse() == KElem::one(*ctx));
      CHECK((x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1));
      CHECK((x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1));
      if (!x.is_zero() && !y.is_zero()) {
        auto dx = x.deg_sgn(), dy = y.deg_sgn(), dxy = (x * y).deg_sgn();
        CHECK(dxy.deg == dx.deg + dy.deg);
        CHECK(dxy.sgn == ctx->field().mul(dx.sgn, dy.sgn));
        int cu = x.U().is_zero() ? -1 : 2 * x.U().degree();
        int cv = x.V().is_zero() ? -1 : 3 + 2 * x.V().degree();
        CHECK(cu != cv);
      }
      if (i < 200) CHECK(*x.frobenius(1).qth_root() == x);
    }
  }
}

TEST_CASE("gcd of long polynomials agrees with plain euclid") {
  auto euclid = [](FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
      FqPoly r = FqPoly::divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  };
  std::mt19937_64 rng(77);
  for (const FiniteField& F : {FiniteField(2, 1), FiniteField(2, 2, {1, 1, 1}), FiniteField(2, 3), FiniteField(3, 1)}) {
    for (int trial = 0; trial < 20; ++trial) {
      FqPoly c = random_poly(F, rng, 1 + trial * 7);
      if (c.is_zero()) c = FqPoly::constant(F, 1);
      FqPoly a = random_poly(F, rng, 60 + trial * 13) * c;
      FqPoly b = random_poly(F, rng, 70 + trial * 11) * c;
      FqPoly g = gcd(a, b);
      CHECK(g == euclid(a, b));
      if (!a.is_zero() && !b.is_zero()) {
        CHECK(FqPoly::divmod(a, g).second.is_zero());
        CHECK(FqPoly::divmod(b, g).second.is_zero());
        CHECK(FqPoly::divmod(g, c.monic()).second.is_zero());
      }
    }
  }
}
