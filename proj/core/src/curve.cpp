#include "drinfeld/curve.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

KElem cst(const KContext& ctx, FqCode c) { return KElem::constant(ctx, c); }

void require_on_curve(const KContext& ctx, const Point& P) {
  if (!on_curve(ctx, P)) throw NotOnCurve();
}

}  // namespace

Point xi_point(const KContext& ctx) { return Point(KElem::theta(ctx), KElem::eta(ctx)); }

KElem weierstrass_residual(const KContext& ctx, const KElem& x, const KElem& y) {
  const auto& a = ctx.coeffs();
  KElem lhs = y * (y + x * cst(ctx, a.a1) + cst(ctx, a.a3));
  KElem rhs = ((x + cst(ctx, a.a2)) * x + cst(ctx, a.a4)) * x + cst(ctx, a.a6);
  return lhs - rhs;
}

bool on_curve(const KContext& ctx, const Point& P) {
  return P.is_infinity() || weierstrass_residual(ctx, P.x(), P.y()).is_zero();
}

Point point_negate(const KContext& ctx, const Point& P) {
  if (P.is_infinity()) return P;
  const auto& a = ctx.coeffs();
  return Point(P.x(), -P.y() - P.x() * cst(ctx, a.a1) - cst(ctx, a.a3));
}

Point point_add(const KContext& ctx, const Point& P, const Point& Q) {
  require_on_curve(ctx, P);
  require_on_curve(ctx, Q);
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  const auto& a = ctx.coeffs();
  KElem a1 = cst(ctx, a.a1);
  KElem lambda;
  if (P.x() == Q.x()) {
    KElem s = P.y() + Q.y() + a1 * P.x() + cst(ctx, a.a3);
    if (s.is_zero()) return Point::infinity();
    const KElem& x = P.x();
    const auto& F = ctx.field();
    KElem num = x * x * cst(ctx, F.from_int(3)) + x * cst(ctx, F.mul(F.from_int(2), a.a2)) + cst(ctx, a.a4) -
                a1 * P.y();
    lambda = num / (P.y() + P.y() + a1 * x + cst(ctx, a.a3));
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  KElem nu = P.y() - lambda * P.x();
  KElem x3 = lambda * lambda + a1 * lambda - cst(ctx, a.a2) - P.x() - Q.x();
  KElem y3 = -(lambda + a1) * x3 - nu - cst(ctx, a.a3);
  return Point(std::move(x3), std::move(y3));
}

Point point_sub(const KContext& ctx, const Point& P, const Point& Q) {
  return point_add(ctx, P, point_negate(ctx, Q));
}

Point point_mul(const KContext& ctx, long long k, const Point& P) {
  if (k < 0) return point_mul(ctx, -k, point_negate(ctx, P));
  Point result = Point::infinity();
  Point base = P;
  while (k) {
    if (k & 1) result = point_add(ctx, result, base);
    k >>= 1;
    if (k) base = point_add(ctx, base, base);
  }
  return result;
}

Point point_frobenius(const KContext& ctx, const Point& P, int k) {
  (void)ctx;
  if (P.is_infinity()) return P;
  return Point(P.x().frobenius(k), P.y().frobenius(k));
}

std::vector<FqPoint> affine_points(const FiniteField& F, const Weierstrass& a) {
  if (discriminant(F, a) == 0) throw DomainError("singular Weierstrass curve");
  std::vector<FqPoint> pts;
  for (int xi = 0; xi < F.q(); ++xi) {
    auto x = static_cast<FqCode>(xi);
    FqCode rhs = F.add(F.mul(F.add(F.mul(F.add(x, a.a2), x), a.a4), x), a.a6);
    FqCode lin = F.add(F.mul(a.a1, x), a.a3);
    for (int yi = 0; yi < F.q(); ++yi) {
      auto y = static_cast<FqCode>(yi);
      if (F.mul(y, F.add(y, lin)) == rhs) pts.push_back({x, y});
    }
  }
  return pts;
}

long long class_number(const FiniteField& F, const Weierstrass& a) {
  return 1 + static_cast<long long>(affine_points(F, a).size());
}

long long class_number(const KContext& ctx) { return class_number(ctx.field(), ctx.coeffs()); }

}  // namespace drinfeld
