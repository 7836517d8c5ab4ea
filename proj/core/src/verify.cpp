#include "drinfeld/verify.hpp"

#include <random>
#include <sstream>

#include "drinfeld/divisors.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/infinite.hpp"
#include "drinfeld/local.hpp"
#include "drinfeld/zeta.hpp"

namespace drinfeld {

namespace {

using Rng = std::mt19937_64;

FqPoly random_fq_poly(const FiniteField& F, Rng& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<int> coef(0, F.q() - 1);
  std::vector<FqCode> c(deg(rng) + 1);
  for (auto& x : c) x = static_cast<FqCode>(coef(rng));
  return FqPoly(F, std::move(c));
}

KElem random_k(const KContext& ctx, Rng& rng, int max_deg) {
  FqPoly D;
  do D = random_fq_poly(ctx.field(), rng, max_deg);
  while (D.is_zero());
  return KElem(ctx, random_fq_poly(ctx.field(), rng, max_deg), random_fq_poly(ctx.field(), rng, max_deg), D);
}

KElem random_nonzero_k(const KContext& ctx, Rng& rng, int max_deg) {
  KElem x;
  do x = random_k(ctx, rng, max_deg);
  while (x.is_zero());
  return x;
}

KPoly random_kpoly(const KContext& ctx, Rng& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<KElem> c;
  for (int i = deg(rng); i >= 0; --i) c.push_back(random_k(ctx, rng, 1));
  return KPoly(ctx, std::move(c));
}

CurveFunc random_poly_func(const KContext& ctx, Rng& rng) {
  return CurveFunc::from_poly(random_kpoly(ctx, rng, 2), random_kpoly(ctx, rng, 1));
}

CurveFunc random_nonzero_poly_func(const KContext& ctx, Rng& rng) {
  CurveFunc F;
  do F = random_poly_func(ctx, rng);
  while (F.is_zero());
  return F;
}

CheckResult result(std::string name, int failures, int total) {
  CheckResult r{std::move(name), failures == 0, ""};
  std::ostringstream s;
  s << (total - failures) << "/" << total << " passed";
  r.detail = s.str();
  return r;
}

CheckResult pass_fail(std::string name, const std::string& first_failure) {
  return {std::move(name), first_failure.empty(), first_failure.empty() ? "ok" : first_failure};
}

CurveFunc cst(const KElem& c) { return CurveFunc::constant(c); }

}  // namespace

CheckResult check_field_axioms(const KContext& ctx, std::uint64_t seed, int cases) {
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    KElem x = random_k(ctx, rng, 3), y = random_k(ctx, rng, 3), z = random_k(ctx, rng, 3);
    bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
              x + y == y + x && x * y == y * x && (x - y) + y == x;
    if (!x.is_zero()) ok = ok && (x * x.inverse()).is_one() && (y / x) * x == y;
    if (!ok) ++bad;
  }
  return result("field axioms", bad, cases);
}

CheckResult check_twisting_homomorphism(const KContext& ctx, std::uint64_t seed, int cases) {
  Rng rng(seed);
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    KElem x = random_k(ctx, rng, 3), y = random_k(ctx, rng, 3);
    bool ok = (x + y).frobenius(1) == x.frobenius(1) + y.frobenius(1) &&
              (x * y).frobenius(1) == x.frobenius(1) * y.frobenius(1) && x.frobenius(1) == x.pow(ctx.q());
    auto r = x.frobenius(1).qth_root();
    ok = ok && r && *r == x;
    if (i % 4 == 0) {
      CurveFunc F = random_poly_func(ctx, rng), G = random_poly_func(ctx, rng);
      ok = ok && (F * G).twisted(1) == F.twisted(1) * G.twisted(1) && (F + G).twisted(1) == F.twisted(1) + G.twisted(1);
    }
    if (!ok) ++bad;
  }
  return result("twisting homomorphism", bad, cases);
}

CheckResult check_degree_sign(const KContext& ctx, std::uint64_t seed, int cases) {
  Rng rng(seed);
  int bad = 0;
  const FiniteField& F = ctx.field();
  for (int i = 0; i < cases; ++i) {
    KElem x = random_nonzero_k(ctx, rng, 3), y = random_nonzero_k(ctx, rng, 3);
    auto a = x.deg_sgn(), b = y.deg_sgn(), c = (x * y).deg_sgn();
    bool ok = c.deg == a.deg + b.deg && c.sgn == F.mul(a.sgn, b.sgn);
    if (i % 4 == 0) {
      CurveFunc G = random_nonzero_poly_func(ctx, rng), H = random_nonzero_poly_func(ctx, rng);
      auto g = G.deg_sgn(), h = H.deg_sgn(), gh = (G * H).deg_sgn();
      ok = ok && gh.deg == g.deg + h.deg && gh.sgn == g.sgn * h.sgn;
    }
    if (!ok) ++bad;
  }
  return result("degree and sign multiplicativity", bad, cases);
}

CheckResult check_principal_divisor_degree(const KContext& ctx, std::uint64_t seed, int cases) {
  Rng rng(seed);
  const auto& co = ctx.coeffs();
  KPoly corr(ctx, {KElem::constant(ctx, co.a3), KElem::constant(ctx, co.a1)});
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    CurveFunc P = random_nonzero_poly_func(ctx, rng);
    CurveFunc Q = random_nonzero_poly_func(ctx, rng);
    CurveFunc F = P / Q;
    // Numerator of F as a polynomial function times its conjugate lies in K[t].
    CurveFunc num = CurveFunc::from_poly(F.numU(), F.numV());
    CurveFunc conj = CurveFunc::from_poly(F.numU() - F.numV() * corr, -F.numV());
    CurveFunc norm = num * conj;
    bool ok = norm.numV().is_zero() && norm.is_polynomial();
    // zeros of num - zeros of den - pole order of F at infinity
    int degree = norm.numU().degree() - 2 * F.den().degree() - F.degree();
    ok = ok && degree == 0;
    if (!ok) ++bad;
  }
  return result("principal divisor degree zero", bad, cases);
}

CheckResult check_residue_invariance(const KContext& ctx, std::uint64_t seed, int cases) {
  Rng rng(seed);
  Point xi = xi_point(ctx);
  CurveFunc v = CurveFunc::t(ctx) - cst(KElem::theta(ctx));
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    int k = 1 + i % 2;
    CurveFunc F = random_poly_func(ctx, rng) / v.pow(k);
    CurveFunc G = random_poly_func(ctx, rng);
    bool ok = cf_residue(ctx, F, xi) == cf_residue(ctx, F + G, xi) && cf_residue(ctx, G, xi).is_zero();
    if (!ok) ++bad;
  }
  return result("residue invariance under regular perturbation", bad, cases);
}

CheckResult check_group_law(const KContext& ctx, std::uint64_t seed, int cases) {
  Rng rng(seed);
  Point xi = xi_point(ctx);
  Point base[] = {xi, point_frobenius(ctx, xi, 1), point_negate(ctx, xi)};
  std::uniform_int_distribution<int> k(-3, 3);
  auto random_point = [&] {
    Point P = Point::infinity();
    for (const auto& B : base) P = point_add(ctx, P, point_mul(ctx, k(rng), B));
    return P;
  };
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    Point P = random_point(), Q = random_point(), R = random_point();
    bool ok = on_curve(ctx, P) && point_add(ctx, point_add(ctx, P, Q), R) == point_add(ctx, P, point_add(ctx, Q, R)) &&
              point_add(ctx, P, Q) == point_add(ctx, Q, P) && point_add(ctx, P, point_negate(ctx, P)).is_infinity() &&
              point_frobenius(ctx, point_add(ctx, P, Q), 1) ==
                  point_add(ctx, point_frobenius(ctx, P, 1), point_frobenius(ctx, Q, 1));
    if (!ok) ++bad;
  }
  return result("group law", bad, cases);
}

std::vector<CheckResult> property_suite(const KContext& ctx, std::uint64_t seed, int cases) {
  return {check_field_axioms(ctx, seed, cases), check_twisting_homomorphism(ctx, seed + 1, cases),
          check_degree_sign(ctx, seed + 2, cases), check_principal_divisor_degree(ctx, seed + 3, cases),
          check_residue_invariance(ctx, seed + 4, cases)};
}

CheckResult check_divisors(const KContext& ctx, const ShtukaData& S, const TensorBasis& B) {
  std::string fail;
  Point V1 = point_frobenius(ctx, S.V, 1);
  Divisor df{{V1, 1}, {S.V, -1}, {xi_point(ctx), 1}, {Point::infinity(), -1}};
  auto c = check_divisor(ctx, S.f, df);
  if (!c.ok) fail = "f: " + c.detail;
  for (int j = 1; j <= B.n && fail.empty(); ++j) {
    Divisor dg = expected_g_divisor(ctx, S, B, j), dh = expected_h_divisor(ctx, S, B, j);
    if (divisor_degree(dg) != 0 || divisor_degree(dh) != 0) fail = "expected divisor has nonzero degree";
    auto cg = check_divisor(ctx, B.g[j - 1], dg);
    if (!cg.ok) fail = "g_" + std::to_string(j) + ": " + cg.detail;
    auto ch = check_divisor(ctx, B.h[j - 1], dh);
    if (!ch.ok) fail = "h_" + std::to_string(j) + ": " + ch.detail;
  }
  return pass_fail("divisors of f, g_i, h_i", fail);
}

CheckResult check_basis_products(const KContext& ctx, const ShtukaData& S, const TensorBasis& B) {
  const int n = B.n;
  std::string fail;
  Point nV = point_mul(ctx, n, S.V);
  if (!(B.g[0].twisted(1) * B.h[0] == vertical(ctx, nV).twisted(1))) fail = "g_1^(1) h_1";
  CurveFunc fn = S.f.pow(n);
  for (int j = 1; j <= n - 1 && fail.empty(); ++j)
    if (!(B.g[j] * B.h[n - j] == fn * vertical(ctx, B.P[j]))) fail = "g_" + std::to_string(j + 1) + " h_" + std::to_string(n - j + 1);
  return pass_fail("g h products", fail);
}

CheckResult check_basis_relations(const KContext& ctx, const ShtukaData& S, const TensorBasis& B) {
  const int n = B.n;
  std::string fail;
  CurveFunc t = CurveFunc::t(ctx), y = CurveFunc::y(ctx);
  KElem th = KElem::theta(ctx), eta = KElem::eta(ctx);
  for (int i = 1; i <= n && fail.empty(); ++i) {
    CurveFunc gi = g_extended(S, B, i);
    if (!(t * gi == cst(th) * gi + cst(B.a[i - 1]) * g_extended(S, B, i + 1) + g_extended(S, B, i + 2)))
      fail = "t g_" + std::to_string(i);
    else if (!(y * gi == cst(eta) * gi + cst(B.yc[i - 1]) * g_extended(S, B, i + 1) +
                             cst(B.zc[i - 1]) * g_extended(S, B, i + 2) + g_extended(S, B, i + 3)))
      fail = "y g_" + std::to_string(i);
  }
  for (int j = 1; j < n && fail.empty(); ++j)
    if (!(B.b[j - 1] == KRoot{B.a[n - j - 1], 0})) fail = "b_" + std::to_string(j);
  if (fail.empty() && !(B.b[n - 1].raised(1) == B.a[n - 1])) fail = "b_n^q";
  return pass_fail("basis relations", fail);
}

CheckResult check_module_identities(const KContext& ctx, const AndersonModule& M) {
  ModuleCheck c = check_module(ctx, M);
  std::string fail;
  if (!c.commute) fail = "rho_t rho_y != rho_y rho_t";
  else if (!c.weierstrass) fail = "Weierstrass operator identity";
  return pass_fail("module identities", fail);
}

CheckResult check_exp(const KContext& ctx, const AndersonModule& M, const ShtukaData& S, const TensorBasis& B,
                      const CoeffSeries& Q, int depth, int oracle_depth) {
  const int n = B.n;
  std::string fail;
  if (!(Q.mats.at(0) == KMatrix::identity(ctx, n))) fail = "Q_0 != I";
  ExpRecursionData R = recursion_data(ctx, M, B);
  for (int i = 1; i <= depth && fail.empty(); ++i)
    if (!recurrence_residual(ctx, M, R, Q, i).is_zero()) fail = "recurrence residual at i=" + std::to_string(i);
  for (int i = 0; i <= oracle_depth && fail.empty(); ++i) {
    auto col = exp_first_column(ctx, S, B, i);
    for (int l = 0; l < n; ++l)
      if (!(col[l] == Q.mats[i](l, 0))) fail = "first column at i=" + std::to_string(i);
  }
  if (n == 1)
    for (int i = 0; i <= depth && fail.empty(); ++i)
      if (!(drinfeld_exp_coeff(ctx, S, i) == Q.mats[i](0, 0))) fail = "rank-one closed form at i=" + std::to_string(i);
  return pass_fail("exponential coefficients", fail);
}

CheckResult check_log(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const CoeffSeries& Q,
                      const CoeffSeries& P, int depth, int oracle_depth) {
  const int n = B.n;
  std::string fail;
  if (!(P.mats.at(0) == KMatrix::identity(ctx, n))) fail = "P_0 != I";
  for (int m = 1; m <= depth && fail.empty(); ++m) {
    KMatrix comp(ctx, n, n);
    for (int j = 0; j <= m; ++j) comp += Q.mats[j] * P.mats[m - j].twisted(j);
    if (!comp.is_zero()) fail = "inversion at m=" + std::to_string(m);
  }
  for (int i = 0; i <= oracle_depth && fail.empty(); ++i) {
    if (!(log_residue_matrix(ctx, S, B, i) == P.mats[i])) fail = "residue matrix at i=" + std::to_string(i);
    auto row = log_bottom_row(ctx, S, B, i);
    for (int k = 0; k < n && fail.empty(); ++k)
      if (!(row[k] == P.mats[i](n - 1, k))) fail = "bottom row at i=" + std::to_string(i);
  }
  if (n == 1)
    for (int i = 0; i <= depth && fail.empty(); ++i)
      if (!(drinfeld_log_coeff(ctx, S, i) == P.mats[i](0, 0))) fail = "rank-one closed form at i=" + std::to_string(i);
  return pass_fail("logarithm coefficients", fail);
}

CheckResult check_functional_equation(const AndersonModule& M, const CoeffSeries& Q, int depth) {
  const KContext& ctx = M.d_theta.context();
  std::string fail;
  for (const KElem& a : {KElem::theta(ctx), KElem::eta(ctx)}) {
    FunctionalCheck c = functional_equation_check(M, Q, a, depth);
    if (!c.ok && fail.empty()) fail = "first mismatch at tau-degree " + std::to_string(c.first_bad);
  }
  return pass_fail("exponential functional equation", fail);
}

CheckResult check_power_sums(const KContext& ctx, const ShtukaData& S, int max_i) {
  std::string fail;
  for (int i = 2; i <= max_i && fail.empty(); ++i)
    for (int s = 1; s <= ctx.q() - 1 && fail.empty(); ++s)
      if (!(power_sum_closed(ctx, S, i, s) == power_sum_bruteforce(ctx, i, s)))
        fail = "S_" + std::to_string(i) + "(" + std::to_string(s) + ")";
  return pass_fail("power sums", fail);
}

CheckResult check_zeta_terms(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b,
                             int terms) {
  ZetaVector Z = zeta_vector(ctx, S, B, b, terms);
  std::string fail;
  if (!Z.report.reconstruction) fail = "sigma expansion residual";
  else if (!Z.report.top_vanishing) fail = "top sigma coefficients";
  else if (!Z.report.delta_identity) fail = "delta twist identity";
  for (const auto& t : Z.report.terms)
    if (!t.ok && fail.empty()) fail = "term " + std::to_string(t.i);
  return pass_fail("zeta terms", fail);
}

CheckResult check_tail(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b, int T,
                       int precision) {
  SigmaExpansion E = sigma_expand(ctx, S, B, b);
  CheckResult r{"tail check", false, ""};
  try {
    TailCheck t = tail_check(ctx, S, B, E, T, T, precision);
    r.ok = t.pass;
    std::ostringstream s;
    s << "valuation " << t.val_first << " at T=" << T << ", " << t.val_second << " at T=" << T + 2;
    r.detail = s.str();
  } catch (const PrecisionError& e) {
    r.detail = e.what();
  }
  return r;
}

std::vector<CheckResult> verify_suite(const KContext& ctx, const VerifyOptions& opt) {
  std::vector<CheckResult> out = property_suite(ctx, opt.seed, opt.cases);
  out.push_back(check_group_law(ctx, opt.seed + 5, std::max(1, opt.cases / 10)));
  ShtukaData S = shtuka(ctx);
  TensorBasis B = tensor_basis(ctx, S, opt.n);
  out.push_back(check_divisors(ctx, S, B));
  out.push_back(check_basis_products(ctx, S, B));
  out.push_back(check_basis_relations(ctx, S, B));
  AndersonModule M = build_module(ctx, B);
  out.push_back(check_module_identities(ctx, M));
  CoeffSeries Q = exp_coeffs(ctx, M, S, B, opt.depth);
  CoeffSeries P = log_coeffs(Q);
  out.push_back(check_exp(ctx, M, S, B, Q, opt.depth, opt.depth));
  out.push_back(check_log(ctx, S, B, Q, P, opt.depth, opt.depth));
  out.push_back(check_functional_equation(M, Q, opt.depth));
  out.push_back(check_power_sums(ctx, S, 4));
  if (class_number(ctx) == 1 && opt.n <= ctx.q() - 1) {
    KElem one = KElem::one(ctx);
    out.push_back(check_zeta_terms(ctx, S, B, one, 4));
    out.push_back(check_tail(ctx, S, B, one, opt.tail_terms, opt.precision));
  }
  return out;
}

}  // namespace drinfeld
