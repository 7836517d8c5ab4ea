#include <random>

#include "curves.hpp"
#include "doctest.h"
#include "drinfeld/divisors.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"

using namespace drinfeld;
using namespace testing_curves;

namespace {

CurveFunc cst(const KElem& c) { return CurveFunc::constant(c); }

struct Q3Setup {
  std::shared_ptr<const KContext> ctx = ex82();
  const KContext& K = *ctx;
  KElem th = KElem::theta(K), eta = KElem::eta(K), one = KElem::one(K);
  CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K);
  Point xi = xi_point(K);
  Point V = Point(th + one, eta);
  CurveFunc nu = y - cst(eta) - cst(eta) * (t - cst(th));
  CurveFunc delta = t - cst(th + one);
  CurveFunc f = nu / delta;
};

}  // namespace

TEST_CASE("curve relation and arithmetic") {
  Q3Setup e;
  CHECK(e.y * e.y == e.t * e.t * e.t - e.t - CurveFunc::one(e.K));
  CHECK(e.f * e.delta == e.nu);
  CHECK(e.f * CurveFunc::one(e.K) == e.f);
  CHECK(cf_arith(FuncOp::div, e.nu, e.delta) == e.f);
  CHECK_THROWS_AS(e.f / CurveFunc::zero(e.K), DivisionByZero);
}

TEST_CASE("twisting") {
  Q3Setup e;
  KElem th3 = e.th.pow(3), eta3 = e.eta.pow(3);
  CurveFunc expected = (e.y - cst(eta3) - cst(eta3) * (e.t - cst(th3))) / (e.t - cst(th3 + e.one));
  CHECK(e.f.twisted(1) == expected);
  CHECK(e.t.twisted(3) == e.t);
  CHECK(cst(kc(e.K, 2)).twisted(1) == cst(kc(e.K, 2)));
  CHECK_THROWS_AS(e.f.twisted(-1), DomainError);
}

TEST_CASE("evaluation, degree and orders") {
  Q3Setup e;
  CHECK(cf_eval(e.K, e.f, e.xi).is_zero());
  CHECK(cf_eval(e.K, e.delta, e.V).is_zero());
  CHECK_THROWS_AS(cf_eval(e.K, e.f, e.V), PoleError);
  auto ds = e.f.deg_sgn();
  CHECK(ds.deg == 1);
  CHECK(ds.sgn.is_one());
  CHECK(e.t.deg_sgn().deg == 2);
  CHECK(cf_order_at(e.K, e.f, e.xi) == 1);
  CHECK(cf_order_at(e.K, e.f, e.V) == -1);
  CHECK(cf_order_at(e.K, e.f, point_frobenius(e.K, e.V, 1)) == 1);
}

TEST_CASE("local expansions") {
  Q3Setup e;
  auto ey = cf_local_expand(e.K, e.y, e.xi, 4);
  CHECK(ey.uniformizer == Uniformizer::t_minus_t0);
  CHECK(ey.series.coeff(0) == e.eta);
  auto ed = cf_local_expand(e.K, e.delta, e.xi, 3);
  CHECK(ed.series.valuation() == 0);
  CHECK(ed.series.coeff(0) == -e.one);
  CHECK(ed.series.coeff(1) == e.one);
  CHECK(ed.series.coeff(2).is_zero());
  auto ei = cf_local_expand(e.K, (e.t - cst(e.th)).inverse(), e.xi, 3);
  CHECK(ei.series.valuation() == -1);
  CHECK(ei.series.coeff(-1) == e.one);
  CHECK(ei.series.coeff(0).is_zero());
  CHECK_THROWS_AS(cf_local_expand(e.K, e.y, e.xi, 0), DomainError);
}

TEST_CASE("residues") {
  Q3Setup e;
  CHECK(cf_residue(e.K, e.y * e.t, e.xi).is_zero());
  // 1/(t - theta) has residue 1/(2 eta) against dt/(2y).
  CHECK(cf_residue(e.K, (e.t - cst(e.th)).inverse(), e.xi) == (e.eta + e.eta).inverse());
  CurveFunc F = (e.y + e.t) / (e.t - cst(e.th)).pow(3);
  KElem r = cf_residue(e.K, F, e.xi);
  CHECK(cf_residue_product(e.K, {e.y + e.t, (e.t - cst(e.th)).pow(3).inverse()}, e.xi) == r);
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    CurveFunc G = CurveFunc::from_poly(KPoly(e.K, {random_kelem(e.K, rng, 2), random_kelem(e.K, rng, 2)}),
                                       KPoly(e.K, {random_kelem(e.K, rng, 2)}));
    CHECK(cf_residue(e.K, F + G, e.xi) == r);
  }
}

TEST_CASE("two-torsion charts") {
  // y^2 = t^3 - t over F_5 has the 2-torsion point (0, 0).
  auto ctx = KContext::make(FiniteField(5, 1), Weierstrass{0, 0, 0, 4, 0});
  const KContext& K = *ctx;
  Point P(KElem::zero(K), KElem::zero(K));
  CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K);
  auto ex = cf_local_expand(K, t, P, 4);
  CHECK(ex.uniformizer == Uniformizer::y_minus_y0);
  CHECK(ex.series.valuation() == 2);
  CHECK(cf_order_at(K, y, P) == 1);
  CHECK(cf_order_at(K, y / t, P) == -1);
  // (y/t) dt/(2y) = dt/(2t) and t vanishes to order 2 at P, so the residue is 2/2.
  CHECK(cf_residue(K, y / t, P) == KElem::one(K));
  CHECK(cf_residue(K, y / t, P) == cf_residue_product(K, {y, t.inverse()}, P));
}

TEST_CASE("lines, verticals and Miller functions") {
  Q3Setup e;
  CHECK(vertical(e.K, e.V) == e.delta);
  Point V1 = point_frobenius(e.K, e.V, 1);
  CHECK(line_through(e.K, V1, point_negate(e.K, e.V)) == e.nu);
  Point W = point_add(e.K, e.xi, V1);
  CurveFunc tan = line_through(e.K, W, W);
  auto chk = check_divisor(e.K, tan, {{W, 2}, {point_negate(e.K, point_mul(e.K, 2, W)), 1}, {Point::infinity(), -3}});
  CHECK(chk.ok);
  CHECK(miller(e.K, 1, e.V) == CurveFunc::one(e.K));
  for (int n = 2; n <= 3; ++n) {
    CurveFunc m = miller(e.K, n, e.V);
    Point nV = point_mul(e.K, n, e.V);
    auto c = check_divisor(e.K, m, {{e.V, n}, {nV, -1}, {Point::infinity(), -(n - 1)}});
    CHECK_MESSAGE(c.ok, c.detail);
    CHECK(m.deg_sgn().sgn.is_one());
  }
}

TEST_CASE("randomized function-field properties") {
  for (auto ctx : {ex82(), ex83()}) {
    const KContext& K = *ctx;
    std::mt19937_64 rng(31337);
    Point xi = xi_point(K);
    CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K);
    auto rnd_func = [&] {
      CurveFunc F = CurveFunc::from_poly(KPoly(K, {random_kelem(K, rng, 1), random_kelem(K, rng, 1)}),
                                         KPoly(K, {random_kelem(K, rng, 1)}));
      return F;
    };
    for (int i = 0; i < 30; ++i) {
      CurveFunc F = rnd_func(), G = rnd_func();
      CHECK((F * G).twisted(1) == F.twisted(1) * G.twisted(1));
      CHECK((F + G).twisted(1) == F.twisted(1) + G.twisted(1));
      if (!F.is_zero() && !G.is_zero()) {
        auto a = F.deg_sgn(), b = G.deg_sgn(), c = (F * G).deg_sgn();
        CHECK(c.deg == a.deg + b.deg);
        CHECK(c.sgn == a.sgn * b.sgn);
        KElem v = cf_eval(K, F, xi);
        CHECK(cf_eval(K, F.twisted(1), point_frobenius(K, xi, 1)) == v.frobenius(1));
      }
    }
  }
}
