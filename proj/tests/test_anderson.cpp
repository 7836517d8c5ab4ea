#include "curves.hpp"
#include "doctest.h"
#include "drinfeld/anderson.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"

using namespace drinfeld;
using namespace testing_curves;

namespace {

struct Setup {
  std::shared_ptr<const KContext> ctx;
  ShtukaData S;
  TensorBasis B;
  AndersonModule M;
};

Setup setup(std::shared_ptr<const KContext> ctx, int n) {
  ShtukaData S = shtuka(*ctx);
  TensorBasis B = tensor_basis(*ctx, S, n);
  AndersonModule M = build_module(*ctx, B);
  return {ctx, S, B, M};
}

KMatrix random_matrix(const KContext& K, int n, std::mt19937_64& rng) {
  KMatrix m(K, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_kelem(K, rng, 2);
  return m;
}

std::vector<std::pair<std::shared_ptr<const KContext>, int>> cases() {
  return {{ex82(), 1}, {ex82(), 2}, {ex83(), 1}, {ex83(), 2}, {ex83(), 3}};
}

}  // namespace

TEST_CASE("tau polynomials twist coefficients") {
  auto ctx = ex82();
  const KContext& K = *ctx;
  std::mt19937_64 rng(7);
  KMatrix A = random_matrix(K, 2, rng);
  TauPoly tau(K, 2);
  tau.set_coeff(1, KMatrix::identity(K, 2));
  TauPoly lhs = tau * TauPoly(A);
  TauPoly rhs(K, 2);
  rhs.set_coeff(1, A.twisted(1));
  CHECK(lhs == rhs);
  for (int trial = 0; trial < 5; ++trial) {
    TauPoly a(K, 2), b(K, 2), c(K, 2);
    for (int k = 0; k < 2; ++k) {
      a.set_coeff(k, random_matrix(K, 2, rng));
      b.set_coeff(k, random_matrix(K, 2, rng));
      c.set_coeff(k, random_matrix(K, 2, rng));
    }
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("module patterns") {
  {
    Setup s = setup(ex82(), 2);
    const KContext& K = *s.ctx;
    KElem th = KElem::theta(K), one = KElem::one(K);
    KMatrix dt(K, 2, 2), Et(K, 2, 2);
    dt(0, 0) = th, dt(0, 1) = s.B.a[0], dt(1, 1) = th;
    Et(0, 0) = one, Et(1, 0) = s.B.a[1], Et(1, 1) = one;
    CHECK(s.M.d_theta == dt);
    CHECK(s.M.E_theta == Et);
    CHECK(s.M.rho_t.degree() == 1);
    CHECK(s.M.rho_y.degree() == 2);
  }
  for (int n = 2; n <= 3; ++n) {
    Setup s = setup(ex83(), n);
    const KContext& K = *s.ctx;
    KElem th = KElem::theta(K), eta = KElem::eta(K);
    const auto& B = s.B;
    KMatrix dt = KMatrix::scalar(th, n) + diag_pattern(K, n, 1, std::vector<KElem>(B.a.begin(), B.a.end() - 1)) +
                 diag_pattern(K, n, 2);
    KMatrix Et = wrap_pattern(K, n, 1, {B.a[n - 1]}) + wrap_pattern(K, n, 2);
    CHECK(s.M.d_theta == dt);
    CHECK(s.M.E_theta == Et);
    if (n == 3) {
      KMatrix de = KMatrix::scalar(eta, n) + diag_pattern(K, n, 1, {B.yc[0], B.yc[1]}) + diag_pattern(K, n, 2, {B.zc[0]}) +
                   diag_pattern(K, n, 3);
      KMatrix Ee = wrap_pattern(K, n, 1, {B.yc[2]}) + wrap_pattern(K, n, 2, {B.zc[1], B.zc[2]}) + wrap_pattern(K, n, 3);
      CHECK(s.M.d_eta == de);
      CHECK(s.M.E_eta == Ee);
      CHECK(s.M.rho_y.degree() == 1);
    }
  }
  {
    Setup s = setup(ex82(), 1);
    CHECK(s.M.rho_t.degree() == 2);
    CHECK(s.M.rho_y.degree() == 3);
    CHECK(s.M.rho_t.coeff(2).is_diagonal());
    CHECK(s.M.rho_t.coeff(2)(0, 0).is_one());
  }
}

TEST_CASE("module identities") {
  for (auto [ctx, n] : cases()) {
    CAPTURE(n);
    CAPTURE(ctx->q());
    Setup s = setup(ctx, n);
    const KContext& K = *ctx;
    ModuleCheck c = check_module(K, s.M);
    CHECK(c.commute);
    CHECK(c.weierstrass);
    KElem th = KElem::theta(K), eta = KElem::eta(K);
    CHECK(d_of(s.M, th.pow(3)) == s.M.d_theta * s.M.d_theta * s.M.d_theta);
    CHECK(d_of(s.M, th * eta + th) == s.M.d_theta * s.M.d_eta + s.M.d_theta);
    CHECK(rho_of(s.M, th * eta) == s.M.rho_t * s.M.rho_y);
    TauPoly lead = rho_of(s.M, th.pow(2));
    CHECK(lead.coeff(0) == d_of(s.M, th.pow(2)));
    ExpRecursionData R = recursion_data(K, s.M, s.B);
    CHECK(R.M_1 == R.M_1_formal);
    CHECK(R.M_2 == R.M_2_formal);
  }
}

TEST_CASE("beta map is nilpotent") {
  std::mt19937_64 rng(11);
  for (auto [ctx, n] : cases()) {
    if (n < 2) continue;
    Setup s = setup(ctx, n);
    const KContext& K = *ctx;
    ExpRecursionData R = recursion_data(K, s.M, s.B);
    for (int i = 1; i <= 3; ++i) {
      if (md_singular(K, R, i)) continue;
      BetaMap beta = beta_map(K, s.M, R, i);
      KMatrix Y = random_matrix(K, n, rng);
      for (int j = 0; j < 2 * n - 1; ++j) Y = beta(Y);
      CHECK(Y.is_zero());
    }
  }
}

TEST_CASE("exponential coefficients") {
  for (auto [ctx, n] : cases()) {
    CAPTURE(n);
    CAPTURE(ctx->q());
    Setup s = setup(ctx, n);
    const KContext& K = *ctx;
    CoeffSeries Q = exp_coeffs(K, s.M, s.S, s.B, 4);
    REQUIRE(Q.mats.size() == 5);
    CHECK(Q.mats[0] == KMatrix::identity(K, n));
    CHECK(exp_coeffs_functional(K, s.M, 4).mats == Q.mats);
    CHECK(exp_coeffs_recursive(K, s.M, s.B, 4).mats == Q.mats);
    ExpRecursionData R = recursion_data(K, s.M, s.B);
    for (int i = 1; i <= 4; ++i) CHECK(recurrence_residual(K, s.M, R, Q, i).is_zero());
    for (int i = 0; i <= 3; ++i) {
      auto col = exp_first_column(K, s.S, s.B, i);
      for (int l = 0; l < n; ++l) CHECK(col[l] == Q.mats[i](l, 0));
    }
    CHECK(functional_equation_check(s.M, Q, KElem::theta(K), 4).ok);
    CHECK(functional_equation_check(s.M, Q, KElem::eta(K), 4).ok);
  }
}

TEST_CASE("n = 1 exponential closed form") {
  Setup s = setup(ex82(), 1);
  const KContext& K = *s.ctx;
  KElem f1 = cf_eval(K, s.S.f, point_frobenius(K, xi_point(K), 1));
  CoeffSeries Q = exp_coeffs(K, s.M, s.S, s.B, 2);
  CHECK(Q.mats[1](0, 0) == f1.inverse());
}

TEST_CASE("singular diagonal step on the q=4 curve") {
  Setup s = setup(ex83(), 2);
  const KContext& K = *s.ctx;
  ExpRecursionData R = recursion_data(K, s.M, s.B);
  CHECK(md_singular(K, R, 1));
  CHECK_FALSE(md_singular(K, R, 2));
  CoeffSeries Q = exp_coeffs(K, s.M, s.S, s.B, 3);
  CHECK(Q.fallback_steps == std::vector<int>{1});
}

TEST_CASE("logarithm coefficients") {
  for (auto [ctx, n] : cases()) {
    CAPTURE(n);
    CAPTURE(ctx->q());
    Setup s = setup(ctx, n);
    const KContext& K = *ctx;
    int depth = n == 3 ? 2 : 3;
    CoeffSeries Q = exp_coeffs(K, s.M, s.S, s.B, depth);
    CoeffSeries P = log_coeffs(Q);
    CHECK(P.mats[0] == KMatrix::identity(K, n));
    for (int i = 1; i <= depth; ++i) {
      KMatrix comp(K, n, n);
      for (int j = 0; j <= i; ++j) comp += Q.mats[j] * P.mats[i - j].twisted(j);
      CHECK(comp.is_zero());
    }
    for (int i = 0; i <= depth; ++i) {
      CHECK(log_residue_matrix(K, s.S, s.B, i) == P.mats[i]);
      auto row = log_bottom_row(K, s.S, s.B, i);
      for (int k = 0; k < n; ++k) CHECK(row[k] == P.mats[i](n - 1, k));
      if (n == 1) CHECK(drinfeld_log_coeff(K, s.S, i) == P.mats[i](0, 0));
    }
  }
}

TEST_CASE("non-integral input to d[a] is rejected") {
  Setup s = setup(ex82(), 2);
  const KContext& K = *s.ctx;
  CHECK_THROWS_AS(d_of(s.M, KElem::theta(K).inverse()), DomainError);
}
