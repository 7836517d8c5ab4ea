#include "curves.hpp"
#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"
#include "drinfeld/shtuka.hpp"

using namespace drinfeld;
using namespace testing_curves;

namespace {

CurveFunc cst(const KElem& c) { return CurveFunc::constant(c); }

void check_basis_identities(const KContext& K, const ShtukaData& S, int n) {
  CAPTURE(n);
  TensorBasis B = tensor_basis(K, S, n);
  Point nV = point_mul(K, n, S.V);
  CHECK(B.g[0].twisted(1) * B.h[0] == vertical(K, nV).twisted(1));
  CurveFunc fn = S.f.pow(n);
  for (int j = 1; j <= n - 1; ++j) CHECK(B.g[j] * B.h[n - j] == fn * vertical(K, B.P[j]));
  CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K);
  KElem th = KElem::theta(K), eta = KElem::eta(K);
  for (int i = 1; i <= n; ++i) {
    CurveFunc gi = g_extended(S, B, i);
    CHECK(t * gi == cst(th) * gi + cst(B.a[i - 1]) * g_extended(S, B, i + 1) + g_extended(S, B, i + 2));
    CHECK(y * gi == cst(eta) * gi + cst(B.yc[i - 1]) * g_extended(S, B, i + 1) +
                        cst(B.zc[i - 1]) * g_extended(S, B, i + 2) + g_extended(S, B, i + 3));
  }
  for (int i = 1; i < n; ++i) CHECK(B.a[i - 1] == a_closed_form(K, B, i));
  for (int j = 1; j < n; ++j) CHECK(B.b[j - 1] == KRoot{B.a[n - j - 1], 0});
  CHECK(B.b[n - 1].raised(1) == B.a[n - 1]);
  CHECK(B.b[n - 1].depth == 1);
  // Once-twisted wraparound form of the t-relation for the h-basis.
  if (n >= 2) {
    KElem thq = th.frobenius(1);
    CurveFunc lhs = t * B.h[n - 2].twisted(1);
    CurveFunc rhs = cst(thq) * B.h[n - 2].twisted(1) + cst(B.b[n - 2].raised(1)) * B.h[n - 1].twisted(1) +
                    S.f.twisted(1).pow(n) * B.h[0];
    CHECK(lhs == rhs);
  }
  // Twofold twist of the last h relation, which stays inside K.
  KElem thq2 = th.frobenius(2);
  CurveFunc hn2 = h_extended_twisted(S, B, n, 2);
  CHECK(t * hn2 == cst(thq2) * hn2 + cst(B.b[n - 1].raised(2)) * h_extended_twisted(S, B, n + 1, 2) +
                       h_extended_twisted(S, B, n + 2, 2));
}

}  // namespace

TEST_CASE("example q=3: V and f") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  KElem th = KElem::theta(K), eta = KElem::eta(K), one = KElem::one(K);
  Point V = find_V(K);
  CHECK(V == Point(th + one, eta));
  ShtukaData S = shtuka(K, V);
  CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K);
  CHECK(S.f == (y - cst(eta) - cst(eta) * (t - cst(th))) / (t - cst(th + one)));
  CHECK(S.m == eta);
  CHECK(S.f.deg_sgn().sgn.is_one());
}

TEST_CASE("example q=4: V and f") {
  auto ctx = ex83();
  const KContext& K = *ctx;
  KElem th = KElem::theta(K), eta = KElem::eta(K), one = KElem::one(K);
  Point V = find_V(K);
  CHECK(V == Point(th, eta + one));
  ShtukaData S = shtuka(K, V);
  CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K);
  // Slope through Xi and V^(1) is (eta^4 + eta + 1)/(theta^4 + theta) = theta^2.
  CHECK(S.m == th * th);
  CHECK(S.f == (y + cst(eta) + cst(th * th) * (t + cst(th))) / (t + cst(th)));
}

TEST_CASE("class number gate") {
  CHECK_THROWS_AS(find_V(*supersingular_f2()), ClassNumberUnsupported);
}

TEST_CASE("basis for n = 1") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, 1);
  CHECK(B.g[0] == CurveFunc::one(K));
  CHECK(B.h[0] == CurveFunc::t(K) - cst(S.V.x().frobenius(1)));
  CurveFunc f = S.f;
  CHECK(CurveFunc::t(K) == cst(KElem::theta(K)) + cst(B.a[0]) * f + f * f.twisted(1));
}

TEST_CASE("n = 2 divisors on the q=3 curve") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, 2);
  Point V2 = point_mul(K, 2, S.V);
  CHECK(check_divisor(K, B.g[0], {{S.V, -2}, {Point::infinity(), 1}, {V2, 1}}).ok);
  CHECK(check_divisor(K, B.g[1] / B.g[0], {{xi_point(K), 1}, {Point::infinity(), -1}, {B.P[1], 1}, {B.P[0], -1}}).ok);
  CHECK(cf_order_at(K, B.h[0], point_frobenius(K, S.V, 1)) == 2);
  auto ds = B.h[0].deg_sgn();
  CHECK(ds.deg == 3);
  CHECK(ds.sgn.is_one());
}

TEST_CASE("basis identities") {
  {
    auto ctx = ex82();
    ShtukaData S = shtuka(*ctx);
    for (int n = 1; n <= 2; ++n) check_basis_identities(*ctx, S, n);
  }
  {
    auto ctx = ex83();
    ShtukaData S = shtuka(*ctx);
    for (int n = 1; n <= 3; ++n) check_basis_identities(*ctx, S, n);
  }
}
