#include "drinfeld/shtuka.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"
#include "drinfeld/matrix.hpp"

namespace drinfeld {

namespace {

void require(const DivisorCheck& c, const std::string& what) {
  if (!c.ok) throw InternalError(what + ": " + c.detail);
}

CurveFunc sgn_one(const CurveFunc& F, const std::string& what) {
  if (!F.deg_sgn().sgn.is_one()) throw InternalError(what + " is not sign normalized");
  return F;
}

}  // namespace

Point find_V(const KContext& ctx) {
  long long h = class_number(ctx);
  if (h != 1) throw ClassNumberUnsupported(h);
  const int q = ctx.q();
  Point xi = xi_point(ctx);
  std::vector<Point> found;
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c)
      for (int d = 0; d < q; ++d) {
        KElem alpha = KElem::theta(ctx) + KElem::constant(ctx, static_cast<FqCode>(b));
        KElem beta = KElem::eta(ctx) + KElem::theta(ctx).scaled(static_cast<FqCode>(c)) +
                     KElem::constant(ctx, static_cast<FqCode>(d));
        if (!weierstrass_residual(ctx, alpha, beta).is_zero()) continue;
        Point V(alpha, beta);
        if (point_sub(ctx, V, point_frobenius(ctx, V, 1)) == xi) found.push_back(V);
      }
  if (found.empty()) throw SearchExhausted("no integral point V with V - V^(1) = Xi of the expected shape");
  if (found.size() > 1) throw InternalError("the point V is not unique");
  return found.front();
}

ShtukaData shtuka(const KContext& ctx, const Point& V) {
  Point xi = xi_point(ctx);
  Point V1 = point_frobenius(ctx, V, 1);
  CurveFunc nu = line_through(ctx, xi, V1);
  if (nu.numV().is_zero()) throw InternalError("degenerate shtuka numerator");
  KElem m = -nu.numU().coeff(1);
  CurveFunc delta = vertical(ctx, V);
  ShtukaData S{V, m, nu, delta, nu / delta};
  require(check_divisor(ctx, S.f, {{V1, 1}, {V, -1}, {xi, 1}, {Point::infinity(), -1}}), "shtuka divisor");
  sgn_one(S.f, "shtuka function");
  return S;
}

ShtukaData shtuka(const KContext& ctx) { return shtuka(ctx, find_V(ctx)); }

std::vector<Point> basis_points(const KContext& ctx, const ShtukaData& S, int n) {
  Point V1 = point_frobenius(ctx, S.V, 1);
  std::vector<Point> P;
  for (int k = 0; k <= n; ++k)
    P.push_back(point_add(ctx, point_mul(ctx, k, V1), point_mul(ctx, n - k, S.V)));
  return P;
}

std::vector<CurveFunc> basis_g(const KContext& ctx, const ShtukaData& S, int n, TensorBasis* ratios) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  std::vector<Point> P = basis_points(ctx, S, n);
  Point xi = xi_point(ctx);
  std::vector<CurveFunc> g;
  g.push_back(miller(ctx, n, S.V).inverse());
  for (int k = 1; k < n; ++k) {
    if (P[k - 1].is_infinity()) throw InternalError("basis point at infinity");
    CurveFunc nu = line_through(ctx, xi, P[k]);
    CurveFunc de = vertical(ctx, P[k - 1]);
    if (ratios) {
      ratios->nu_k.push_back(nu);
      ratios->delta_k.push_back(de);
      ratios->m_k.push_back(nu.numV().is_zero() ? KElem::zero(ctx) : -nu.numU().coeff(1));
    }
    g.push_back(g.back() * nu / de);
  }
  return g;
}

std::vector<CurveFunc> basis_h(const KContext& ctx, const ShtukaData& S, int n, const std::vector<CurveFunc>& g) {
  std::vector<Point> P = basis_points(ctx, S, n);
  std::vector<CurveFunc> h(n);
  Point nV = point_mul(ctx, n, S.V);
  h[0] = (vertical(ctx, nV) / g[0]).twisted(1);
  CurveFunc fn = S.f.pow(n);
  for (int j = 1; j <= n - 1; ++j) h[n - j] = fn * vertical(ctx, P[j]) / g[j];
  return h;
}

CurveFunc f_product_power(const ShtukaData& S, int from, int to, int n) {
  CurveFunc p = CurveFunc::one(S.f.context());
  for (int i = from; i <= to; ++i) p *= S.f.twisted(i);
  return p.pow(n);
}

CurveFunc g_extended(const ShtukaData& S, const TensorBasis& B, int i) {
  if (i < 1) throw DomainError("basis index must be positive");
  int j = (i - 1) / B.n;
  int k = (i - 1) % B.n;
  return f_product_power(S, 0, j - 1, B.n) * B.g[k].twisted(j);
}

CurveFunc h_extended_twisted(const ShtukaData& S, const TensorBasis& B, int i, int k) {
  if (i < 1) throw DomainError("basis index must be positive");
  int j = (i - 1) / B.n;
  int r = (i - 1) % B.n;
  if (k < j) throw DomainError("h_i needs a larger twist to be defined over K");
  return f_product_power(S, k + 1 - j, k, B.n) * B.h[r].twisted(k - j);
}

KElem a_closed_form(const KContext& ctx, const TensorBasis& B, int i) {
  const auto& co = ctx.coeffs();
  KElem th = KElem::theta(ctx), eta = KElem::eta(ctx);
  KElem dy = eta + eta + th * KElem::constant(ctx, co.a1) + KElem::constant(ctx, co.a3);
  return dy / (th - B.P[i].x());
}

StructureConstants structure_constants(const KContext& ctx, const ShtukaData& S, int n,
                                       const std::vector<CurveFunc>& g, const std::vector<CurveFunc>& h) {
  TensorBasis B;
  B.n = n;
  B.g = g;
  B.h = h;
  B.P = basis_points(ctx, S, n);
  KElem th = KElem::theta(ctx), eta = KElem::eta(ctx);
  CurveFunc t = CurveFunc::t(ctx), y = CurveFunc::y(ctx);
  CurveFunc tmth = t - CurveFunc::constant(th), ymeta = y - CurveFunc::constant(eta);
  std::vector<CurveFunc> ext;
  for (int i = 1; i <= n + 3; ++i) ext.push_back(g_extended(S, B, i));

  StructureConstants sc;
  for (int i = 1; i <= n; ++i) {
    const CurveFunc& gi = ext[i - 1];
    auto a = solve_constants(tmth * gi - ext[i + 1], {ext[i]});
    if (!a) throw InternalError("t-relation has no constant solution");
    if (i < n && !((*a)[0] == a_closed_form(ctx, B, i))) throw InternalError("a_i differs from its closed form");
    sc.a.push_back((*a)[0]);
    auto yz = solve_constants(ymeta * gi - ext[i + 2], {ext[i], ext[i + 1]});
    if (!yz) throw InternalError("y-relation has no constant solution");
    sc.yc.push_back((*yz)[0]);
    sc.zc.push_back((*yz)[1]);
  }

  for (int j = 1; j <= n; ++j) {
    int k = (j + 1) / n;
    auto H = [&](int i) { return h_extended_twisted(S, B, i, k); };
    CurveFunc lhs = (t - CurveFunc::constant(th.frobenius(k))) * H(j) - H(j + 2);
    auto bk = solve_constants(lhs, {H(j + 1)});
    if (!bk) throw InternalError("h t-relation has no constant solution");
    sc.b.push_back(KRoot::root_of((*bk)[0], k));
  }
  for (int j = 1; j < n; ++j)
    if (!(sc.b[j - 1] == KRoot{sc.a[n - j - 1], 0})) throw InternalError("b_j differs from a_{n-j}");
  if (!(sc.b[n - 1].raised(1) == sc.a[n - 1])) throw InternalError("a_n differs from b_n^q");
  return sc;
}

Divisor expected_g_divisor(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int j) {
  int n = B.n;
  return {{S.V, -n}, {xi_point(ctx), j - 1}, {Point::infinity(), n - j}, {B.P[j - 1], 1}};
}

Divisor expected_h_divisor(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int k) {
  int n = B.n;
  Point V1 = point_frobenius(ctx, S.V, 1);
  return {{V1, n},
          {xi_point(ctx), k - 1},
          {point_negate(ctx, B.P[n - k + 1]), 1},
          {Point::infinity(), -(n + k)}};
}

TensorBasis tensor_basis(const KContext& ctx, const ShtukaData& S, int n) {
  TensorBasis B;
  B.n = n;
  B.P = basis_points(ctx, S, n);
  B.g = basis_g(ctx, S, n, &B);
  B.h = basis_h(ctx, S, n, B.g);
  for (int j = 1; j <= n; ++j) {
    require(check_divisor(ctx, B.g[j - 1], expected_g_divisor(ctx, S, B, j)), "divisor of g_" + std::to_string(j));
    require(check_divisor(ctx, B.h[j - 1], expected_h_divisor(ctx, S, B, j)), "divisor of h_" + std::to_string(j));
    sgn_one(B.g[j - 1], "g_" + std::to_string(j));
    sgn_one(B.h[j - 1], "h_" + std::to_string(j));
  }
  StructureConstants sc = structure_constants(ctx, S, n, B.g, B.h);
  B.a = sc.a;
  B.b = sc.b;
  B.yc = sc.yc;
  B.zc = sc.zc;
  return B;
}

}  // namespace drinfeld
