#include "drinfeld/curve_function.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

detail::CurveRelation<KPoly> function_relation(const KContext& ctx) {
  const auto& a = ctx.coeffs();
  auto c = [&](FqCode v) { return KElem::constant(ctx, v); };
  return {KPoly(ctx, {c(a.a6), c(a.a4), c(a.a2), c(1)}), KPoly(ctx, {c(a.a3), c(a.a1)})};
}

CurveFunc::CurveFunc(KPoly numU, KPoly numV, KPoly den) : x_{std::move(numU), std::move(numV), std::move(den)} {
  detail::canonicalize(x_);
}

CurveFunc CurveFunc::zero(const KContext& ctx) {
  return CurveFunc(Frac{KPoly(ctx), KPoly(ctx), KPoly::constant(ctx, KElem::one(ctx))});
}

CurveFunc CurveFunc::constant(const KElem& c) {
  const KContext& ctx = c.context();
  return CurveFunc(Frac{KPoly::constant(ctx, c), KPoly(ctx), KPoly::constant(ctx, KElem::one(ctx))});
}

CurveFunc CurveFunc::t(const KContext& ctx) {
  return CurveFunc(Frac{KPoly::t(ctx), KPoly(ctx), KPoly::constant(ctx, KElem::one(ctx))});
}

CurveFunc CurveFunc::y(const KContext& ctx) {
  return CurveFunc(Frac{KPoly(ctx), KPoly::constant(ctx, KElem::one(ctx)), KPoly::constant(ctx, KElem::one(ctx))});
}

CurveFunc CurveFunc::from_poly(KPoly U, KPoly V) {
  const KContext& ctx = U.context();
  return CurveFunc(Frac{std::move(U), std::move(V), KPoly::constant(ctx, KElem::one(ctx))});
}

CurveFunc CurveFunc::chi(const KElem& a) {
  if (!a.in_A()) throw DomainError("chi requires an element of A");
  const KContext& ctx = a.context();
  auto lift = [&](const FqPoly& p) {
    std::vector<KElem> c;
    for (FqCode x : p.coeffs()) c.push_back(KElem::constant(ctx, x));
    return KPoly(ctx, std::move(c));
  };
  return from_poly(lift(a.U()), lift(a.V()));
}

std::optional<KElem> CurveFunc::as_constant() const {
  if (!x_.v.is_zero() || x_.u.degree() > 0 || !x_.d.is_one()) return std::nullopt;
  return x_.u.coeff(0);
}

CurveFunc& CurveFunc::operator+=(const CurveFunc& o) {
  x_ = detail::add(x_, o.x_);
  return *this;
}

CurveFunc& CurveFunc::operator-=(const CurveFunc& o) {
  x_ = detail::add(x_, detail::negate(o.x_));
  return *this;
}

CurveFunc& CurveFunc::operator*=(const CurveFunc& o) {
  x_ = detail::mul(x_, o.x_, function_relation(context()));
  return *this;
}

CurveFunc& CurveFunc::operator/=(const CurveFunc& o) {
  if (o.is_zero()) throw DivisionByZero();
  auto rel = function_relation(context());
  x_ = detail::mul(x_, detail::inverse(o.x_, rel), rel);
  return *this;
}

CurveFunc CurveFunc::operator-() const { return CurveFunc(detail::negate(x_)); }

CurveFunc CurveFunc::scaled(const KElem& c) const {
  if (c.is_zero()) return zero(context());
  Frac r = x_;
  r.u.scale(c);
  r.v.scale(c);
  return CurveFunc(std::move(r));
}

CurveFunc CurveFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return CurveFunc(detail::inverse(x_, function_relation(context())));
}

CurveFunc CurveFunc::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CurveFunc result = one(context());
  CurveFunc base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CurveFunc CurveFunc::twisted(int k) const {
  if (k < 0) throw DomainError("negative twists are not supported");
  if (k == 0) return *this;
  return CurveFunc(Frac{x_.u.twisted(k), x_.v.twisted(k), x_.d.twisted(k)});
}

CurveDegSign CurveFunc::deg_sgn() const {
  auto [d, s] = detail::deg_sgn(x_);
  return {d, s};
}

CurveFunc cf_arith(FuncOp op, const CurveFunc& F, const CurveFunc& G) {
  switch (op) {
    case FuncOp::add: return F + G;
    case FuncOp::sub: return F - G;
    case FuncOp::mul: return F * G;
    case FuncOp::div: return F / G;
  }
  throw DomainError("unknown arithmetic operation");
}

}  // namespace drinfeld
