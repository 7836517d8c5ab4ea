#include "drinfeld/divisors.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"

namespace drinfeld {

CurveFunc vertical(const KContext& ctx, const Point& P) {
  if (P.is_infinity()) throw DomainError("vertical line through infinity");
  return CurveFunc::from_poly(KPoly::linear(ctx, P.x()), KPoly(ctx));
}

CurveFunc line_through(const KContext& ctx, const Point& P, const Point& Q) {
  if (P.is_infinity() || Q.is_infinity()) throw DomainError("line through infinity");
  if (!on_curve(ctx, P) || !on_curve(ctx, Q)) throw NotOnCurve();
  const auto& a = ctx.coeffs();
  auto c = [&](FqCode v) { return KElem::constant(ctx, v); };
  KElem slope;
  if (P.x() == Q.x()) {
    KElem s = P.y() + Q.y() + c(a.a1) * P.x() + c(a.a3);
    if (s.is_zero()) return vertical(ctx, P);
    const auto& F = ctx.field();
    const KElem& x = P.x();
    KElem num = x * x * c(F.from_int(3)) + x * c(F.mul(F.from_int(2), a.a2)) + c(a.a4) - c(a.a1) * P.y();
    slope = num / s;
  } else {
    slope = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  // y - y_P - m (t - x_P)
  KPoly U(ctx, {-P.y() + slope * P.x(), -slope});
  return CurveFunc::from_poly(U, KPoly::constant(ctx, KElem::one(ctx)));
}

CurveFunc miller(const KContext& ctx, int n, const Point& P) {
  if (n < 1) throw DomainError("Miller functions need n >= 1");
  int top = 0;
  while ((n >> (top + 1)) != 0) ++top;
  CurveFunc f = CurveFunc::one(ctx);
  Point kP = P;
  auto step = [&](const Point& A, const Point& B) {
    Point S = point_add(ctx, A, B);
    CurveFunc l = line_through(ctx, A, B);
    if (!S.is_infinity()) l /= vertical(ctx, S);
    return std::make_pair(S, l);
  };
  for (int bit = top - 1; bit >= 0; --bit) {
    auto [S, l] = step(kP, kP);
    f = f * f * l;
    kP = S;
    if ((n >> bit) & 1) {
      auto [S2, l2] = step(kP, P);
      f *= l2;
      kP = S2;
    }
  }
  return f;
}

Divisor merge_divisor(Divisor D) {
  Divisor out;
  for (auto& [P, m] : D) {
    bool found = false;
    for (auto& [Q, k] : out) {
      if (Q == P) {
        k += m;
        found = true;
        break;
      }
    }
    if (!found) out.emplace_back(P, m);
  }
  Divisor nz;
  for (auto& e : out)
    if (e.second != 0) nz.push_back(e);
  return nz;
}

int divisor_degree(const Divisor& D) {
  int s = 0;
  for (const auto& e : D) s += e.second;
  return s;
}

DivisorCheck check_divisor(const KContext& ctx, const CurveFunc& F, const Divisor& expected) {
  DivisorCheck r;
  Divisor D = merge_divisor(expected);
  if (divisor_degree(D) != 0) {
    r.ok = false;
    r.detail = "expected divisor has nonzero degree";
    return r;
  }
  int inf = 0;
  int sum = 0;
  for (const auto& [P, m] : D) {
    if (P.is_infinity()) {
      inf = m;
      continue;
    }
    int ord = cf_order_at(ctx, F, P);
    sum += ord;
    if (ord != m) {
      r.ok = false;
      r.detail += "order " + std::to_string(ord) + " where " + std::to_string(m) + " was expected; ";
    }
  }
  int deg = F.degree();
  if (-deg != inf) {
    r.ok = false;
    r.detail += "order at infinity " + std::to_string(-deg) + " where " + std::to_string(inf) + " was expected; ";
  }
  if (sum - deg != 0) {
    r.ok = false;
    r.detail += "orders on the support do not sum to zero; ";
  }
  return r;
}

}  // namespace drinfeld
