#include "curves.hpp"
#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"
#include "drinfeld/zeta.hpp"

using namespace drinfeld;
using namespace testing_curves;

namespace {

KElem poly_b(const KContext& K, int which) {
  KElem th = KElem::theta(K), one = KElem::one(K);
  if (which == 0) return one;
  if (which == 1) return th;
  return th + one;
}

}  // namespace

TEST_CASE("monic enumeration") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  CHECK(monic_enumerate(K, 0) == std::vector<KElem>{KElem::one(K)});
  CHECK(monic_enumerate(K, 1).empty());
  auto d2 = monic_enumerate(K, 2);
  REQUIRE(d2.size() == 3);
  KElem th = KElem::theta(K);
  for (int c = 0; c < 3; ++c)
    CHECK(std::find(d2.begin(), d2.end(), th + KElem::constant(K, static_cast<FqCode>(c))) != d2.end());
  for (int d = 2; d <= 5; ++d) {
    auto all = monic_enumerate(K, d);
    CHECK(all.size() == static_cast<std::size_t>(std::pow(3, d - 1)));
    for (const auto& a : all) {
      CHECK(a.in_A());
      CHECK(a.degree() == d);
      CHECK(a.deg_sgn().sgn == 1);
    }
  }
}

TEST_CASE("power sums") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  KElem th = KElem::theta(K);
  CHECK(power_sum_bruteforce(K, 0, 2).is_one());
  CHECK(power_sum_bruteforce(K, 1, 1).is_zero());
  CHECK(power_sum_bruteforce(K, 2, 1) == -(th.pow(3) - th).inverse());
  for (auto c : {ex82(), ex83()}) {
    const KContext& L = *c;
    ShtukaData S = shtuka(L);
    for (int i = 2; i <= 4; ++i)
      for (int s = 1; s <= L.q() - 1; ++s) {
        CAPTURE(i);
        CAPTURE(s);
        CHECK(power_sum_closed(L, S, i, s) == power_sum_bruteforce(L, i, s));
      }
    CHECK_THROWS_AS(power_sum_closed(L, S, 2, L.q()), RangeUnsupported);
  }
}

TEST_CASE("script G") {
  {
    auto ctx = ex82();
    const KContext& K = *ctx;
    ShtukaData S = shtuka(K);
    CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K);
    KElem th = KElem::theta(K), eta = KElem::eta(K);
    CurveFunc expect = (CurveFunc::constant(eta) + y) / (CurveFunc::constant(th) - t) - y;
    CHECK(script_G(K, S) == expect);
  }
  {
    auto ctx = ex83();
    const KContext& K = *ctx;
    ShtukaData S = shtuka(K);
    CurveFunc t = CurveFunc::t(K), y = CurveFunc::y(K), one = CurveFunc::one(K);
    KElem th = KElem::theta(K), eta = KElem::eta(K);
    CurveFunc expect = (CurveFunc::constant(eta) + y + one) / (CurveFunc::constant(th) + t) +
                       (y.pow(4) + y + one) / (t.pow(4) + t);
    CHECK(script_G(K, S) == expect);
  }
  for (auto c : {ex82(), ex83()}) {
    const KContext& K = *c;
    ShtukaData S = shtuka(K);
    CurveFunc G = script_G(K, S);
    for (int i = 1; i <= 3; ++i)
      CHECK(cf_eval(K, G.twisted(i), xi_point(K)) == cf_eval(K, S.f, point_frobenius(K, S.V, i)));
  }
}

TEST_CASE("golden zeta vector on the q=3 curve") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, 2);
  KElem eta = KElem::eta(K), one = KElem::one(K);
  KElem den = eta * eta + one;
  SigmaExpansion E = sigma_expand(K, S, B, one);
  CHECK(E.J == 3);
  REQUIRE(E.d_twisted.size() == 4);
  CHECK(E.d_twisted[0] == std::vector<KElem>{one, -eta.pow(3) / den});
  CHECK(E.d_twisted[1] == std::vector<KElem>{one, eta.pow(5) / den});
  CHECK(E.d_twisted[2] == std::vector<KElem>{one, (eta.pow(3) - eta.pow(5)) / den});
  CHECK(E.d_twisted[3] == std::vector<KElem>{KElem::zero(K), KElem::zero(K)});
  CHECK(E.d_total == std::vector<KElem>{KElem::zero(K), KElem::zero(K)});
  CHECK(E.C == -eta.pow(3) / den);
  CHECK(E.residual.is_zero());
}

TEST_CASE("golden zeta vector on the q=4 curve") {
  auto ctx = ex83();
  const KContext& K = *ctx;
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, 2);
  KElem th = KElem::theta(K);
  KElem u = th.pow(4) + th;
  SigmaExpansion E = sigma_expand(K, S, B, KElem::one(K));
  CHECK(E.d_total == std::vector<KElem>{u.pow(2) + u.pow(4), u + u.pow(3)});
  CHECK(E.C == u.inverse());
  CHECK(E.residual.is_zero());
}

TEST_CASE("per-term zeta identities") {
  for (auto c : {ex82(), ex83()}) {
    const KContext& K = *c;
    CAPTURE(K.q());
    ShtukaData S = shtuka(K);
    TensorBasis B = tensor_basis(K, S, 2);
    CHECK(delta_twist_identity(K, S, B));
    for (int w = 0; w < 3; ++w) {
      KElem b = poly_b(K, w);
      CAPTURE(w);
      ZetaVector Z = zeta_vector(K, S, B, b, 4);
      CHECK(Z.report.reconstruction);
      CHECK(Z.report.top_vanishing);
      CHECK(Z.report.ok());
      CHECK(Z.report.terms[0].term == b);
      CHECK(Z.report.terms[1].term.is_zero());
      for (const auto& t : Z.report.terms) {
        CAPTURE(t.i);
        CHECK(t.term == t.expected);
        CHECK(t.regrouped == Z.expansion.C * t.expected);
      }
    }
  }
}

TEST_CASE("deg b decomposition and one-dimensional case") {
  auto ctx = ex83();
  const KContext& K = *ctx;
  ShtukaData S = shtuka(K);
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    TensorBasis B = tensor_basis(K, S, n);
    CHECK(delta_twist_identity(K, S, B));
    KElem b = KElem::eta(K) + KElem::theta(K);
    ZetaVector Z = zeta_vector(K, S, B, b, 2);
    CHECK(Z.expansion.e == 3 / n);
    CHECK(Z.expansion.b_prime == 3 % n);
    CHECK(Z.expansion.J == 4 + 3 / n);
    CHECK(Z.report.ok());
    if (n == 2) CHECK_FALSE(Z.expansion.dJ[Z.expansion.J][1].is_zero());
  }
}

TEST_CASE("zeta preconditions") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, 2);
  CHECK_THROWS_AS(sigma_expand(K, S, B, KElem::zero(K)), DomainError);
  CHECK_THROWS_AS(sigma_expand(K, S, B, KElem::theta(K).inverse()), DomainError);
  TensorBasis B3 = tensor_basis(K, S, 3);
  CHECK_THROWS_AS(sigma_expand(K, S, B3, KElem::one(K)), RangeUnsupported);
}
