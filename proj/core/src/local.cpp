#include "drinfeld/local.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

KSeries::KSeries(const KContext& ctx, int val, std::vector<KElem> coeffs)
    : ctx_(&ctx), val_(val), c_(std::move(coeffs)) {
  normalize();
}

KSeries KSeries::exact_poly(const KContext& ctx, std::vector<KElem> coeffs, int prec) {
  coeffs.resize(std::max(prec, 0), KElem::zero(ctx));
  return KSeries(ctx, 0, std::move(coeffs));
}

void KSeries::normalize() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    val_ += static_cast<int>(lead);
  }
}

KElem KSeries::coeff(int exponent) const {
  if (exponent >= precision()) throw PrecisionError("coefficient beyond series precision");
  if (exponent < val_) return KElem::zero(*ctx_);
  return c_[exponent - val_];
}

KSeries KSeries::truncated(int prec) const {
  if (prec >= precision()) return *this;
  std::vector<KElem> c(c_.begin(), c_.begin() + std::max(0, prec - val_));
  if (prec < val_) return KSeries(*ctx_, prec, {});
  return KSeries(*ctx_, val_, std::move(c));
}

KSeries KSeries::operator+(const KSeries& o) const {
  int prec = std::min(precision(), o.precision());
  int val = std::min(val_, o.val_);
  if (val > prec) val = prec;
  std::vector<KElem> c(prec - val, KElem::zero(*ctx_));
  for (int e = val; e < prec; ++e) {
    if (e >= val_) c[e - val] += c_[e - val_];
    if (e >= o.val_) c[e - val] += o.c_[e - o.val_];
  }
  return KSeries(*ctx_, val, std::move(c));
}

KSeries KSeries::operator-() const {
  std::vector<KElem> c = c_;
  for (auto& x : c) x = -x;
  return KSeries(*ctx_, val_, std::move(c));
}

KSeries KSeries::operator-(const KSeries& o) const { return *this + (-o); }

KSeries KSeries::scaled(const KElem& k) const {
  std::vector<KElem> c = c_;
  for (auto& x : c) x *= k;
  return KSeries(*ctx_, val_, std::move(c));
}

KSeries KSeries::operator*(const KSeries& o) const {
  int val = val_ + o.val_;
  if (c_.empty() || o.c_.empty()) {
    int prec = std::min(val_ + o.precision(), o.val_ + precision());
    return KSeries(*ctx_, prec, {});
  }
  std::size_t len = std::min(c_.size(), o.c_.size());
  std::vector<KElem> c(len, KElem::zero(*ctx_));
  for (std::size_t i = 0; i < len; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < len; ++j)
      if (!o.c_[j].is_zero()) c[i + j] += c_[i] * o.c_[j];
  }
  return KSeries(*ctx_, val, std::move(c));
}

KSeries KSeries::inverse() const {
  if (c_.empty()) throw PrecisionError("series is zero to its precision");
  std::size_t len = c_.size();
  KElem inv0 = c_[0].inverse();
  std::vector<KElem> b(len, KElem::zero(*ctx_));
  b[0] = inv0;
  for (std::size_t k = 1; k < len; ++k) {
    KElem acc = KElem::zero(*ctx_);
    for (std::size_t i = 1; i <= k; ++i)
      if (!c_[i].is_zero() && !b[k - i].is_zero()) acc += c_[i] * b[k - i];
    b[k] = -(acc * inv0);
  }
  return KSeries(*ctx_, -val_, std::move(b));
}

KSeries KSeries::operator/(const KSeries& o) const { return *this * o.inverse(); }

namespace {

KElem cst(const KContext& ctx, FqCode c) { return KElem::constant(ctx, c); }

// Evaluate a K[t] polynomial at a series by Horner's rule.
KSeries horner(const KPoly& p, const KSeries& s, int prec) {
  const KContext& ctx = p.context();
  KSeries acc(ctx, prec, {});
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * s + KSeries::exact_poly(ctx, {p.coeff(i)}, prec);
  }
  return acc.truncated(prec);
}

// 2y + a1 t + a3 at P.
KElem partial_y(const KContext& ctx, const Point& P) {
  const auto& a = ctx.coeffs();
  return P.y() + P.y() + cst(ctx, a.a1) * P.x() + cst(ctx, a.a3);
}

// Upper bound for the order of vanishing of a nonzero U + V y at an affine point.
int numerator_bound(const KPoly& U, const KPoly& V) {
  int bu = U.is_zero() ? 0 : 2 * U.degree();
  int bv = V.is_zero() ? 0 : 3 + 2 * V.degree();
  return std::max(bu, bv);
}

}  // namespace

LocalChart local_chart(const KContext& ctx, const Point& P, int prec) {
  if (P.is_infinity()) throw DomainError("local charts are only built at affine points");
  if (prec <= 0) throw DomainError("precision must be positive");
  if (!on_curve(ctx, P)) throw NotOnCurve();
  const auto& a = ctx.coeffs();
  KElem a1 = cst(ctx, a.a1), a2 = cst(ctx, a.a2), a3 = cst(ctx, a.a3), a4 = cst(ctx, a.a4), a6 = cst(ctx, a.a6);
  KElem gy = partial_y(ctx, P);
  auto series = [&](std::vector<KElem> c, int p) { return KSeries::exact_poly(ctx, std::move(c), p); };
  // Series as an exact polynomial of its first `cur` coefficients.
  auto padded = [&](const KSeries& x, int cur) {
    std::vector<KElem> c(cur, KElem::zero(ctx));
    for (int e = std::max(x.valuation(), 0); e < std::min(cur, x.precision()); ++e) c[e] = x.coeff(e);
    return series(std::move(c), cur);
  };
  auto weierstrass = [&](const KSeries& t, const KSeries& y, int cur) {
    KSeries lin = t.scaled(a1) + series({a3}, cur);
    KSeries rhs = ((t + series({a2}, cur)) * t + series({a4}, cur)) * t + series({a6}, cur);
    return y * (y + lin) - rhs;
  };
  if (!gy.is_zero()) {
    // t = x0 + u exactly; Newton iteration for y(u).
    KSeries t = series({P.x(), KElem::one(ctx)}, prec);
    KSeries y = series({P.y()}, prec);
    for (int cur = 1; cur < prec;) {
      cur = std::min(2 * cur, prec);
      KSeries tc = t.truncated(cur), yc = padded(y, cur);
      KSeries dG = yc + yc + tc.scaled(a1) + series({a3}, cur);
      y = padded(yc - weierstrass(tc, yc, cur) / dG, cur);
    }
    return {P, Uniformizer::t_minus_t0, t, y};
  }
  // 2-torsion fiber: y = y0 + w exactly; Newton iteration for t(w).
  KSeries y = series({P.y(), KElem::one(ctx)}, prec);
  KSeries t = series({P.x()}, prec);
  for (int cur = 1; cur < prec;) {
    cur = std::min(2 * cur, prec);
    KSeries tc = padded(t, cur), yc = y.truncated(cur);
    KSeries Gt = yc.scaled(a1) - (tc * tc).scaled(cst(ctx, ctx.field().from_int(3))) - tc.scaled(a2 + a2) -
                 series({a4}, cur);
    t = padded(tc - weierstrass(tc, yc, cur) / Gt, cur);
  }
  return {P, Uniformizer::y_minus_y0, t, y};
}

KSeries expand_in_chart(const CurveFunc& F, const LocalChart& chart, int terms) {
  if (terms <= 0) throw DomainError("number of terms must be positive");
  if (F.is_zero()) throw DomainError("cannot expand the zero function");
  const KContext& ctx = F.context();
  int bn = numerator_bound(F.numU(), F.numV());
  int bd = 2 * std::max(F.den().degree(), 0);
  int need = std::max(bn, bd) + terms + 1;
  if (chart.t.precision() < need) throw PrecisionError("local chart precision too small");
  KSeries num(ctx, 0, {});
  KSeries den(ctx, 0, {});
  if (chart.uniformizer == Uniformizer::t_minus_t0) {
    const KElem& x0 = chart.point.x();
    auto shift = [&](const KPoly& p) { return KSeries::exact_poly(ctx, p.taylor_shift(x0), need); };
    num = shift(F.numU()) + shift(F.numV()) * chart.y.truncated(need);
    den = shift(F.den());
  } else {
    KSeries t = chart.t.truncated(need);
    num = horner(F.numU(), t, need) + horner(F.numV(), t, need) * chart.y.truncated(need);
    den = horner(F.den(), t, need);
  }
  if (num.is_zero_to_precision() || den.is_zero_to_precision())
    throw InternalError("vanishing order exceeds its degree bound");
  KSeries r = num / den;
  return r.truncated(r.valuation() + terms);
}

namespace {

int chart_precision(const CurveFunc& F, int terms) {
  int bn = numerator_bound(F.numU(), F.numV());
  int bd = 2 * std::max(F.den().degree(), 0);
  return std::max(bn, bd) + terms + 1;
}

}  // namespace

LocalExpansion cf_local_expand(const KContext& ctx, const CurveFunc& F, const Point& P, int terms) {
  if (terms <= 0) throw DomainError("number of terms must be positive");
  LocalChart chart = local_chart(ctx, P, chart_precision(F, terms));
  KSeries s = expand_in_chart(F, chart, terms);
  return {P, chart.uniformizer, s, s.precision()};
}

int cf_order_at(const KContext& ctx, const CurveFunc& F, const Point& P) {
  if (F.is_zero()) throw DomainError("order of the zero function is undefined");
  return cf_local_expand(ctx, F, P, 1).series.valuation();
}

KElem cf_eval(const KContext& ctx, const CurveFunc& F, const Point& P) {
  if (P.is_infinity()) throw DomainError("evaluation at infinity is not supported");
  if (F.is_zero()) return KElem::zero(ctx);
  KElem d = F.den().eval(P.x());
  if (!d.is_zero()) return (F.numU().eval(P.x()) + F.numV().eval(P.x()) * P.y()) / d;
  KSeries s = cf_local_expand(ctx, F, P, 1).series;
  if (s.valuation() < 0) throw PoleError(s.valuation());
  return s.coeff(0);
}

namespace {

KSeries differential_factor(const KContext& ctx, const LocalChart& chart, int terms) {
  const auto& a = ctx.coeffs();
  KSeries t = chart.t.truncated(terms), y = chart.y.truncated(terms);
  auto c = [&](FqCode v) { return KSeries::exact_poly(ctx, {KElem::constant(ctx, v)}, terms); };
  if (chart.uniformizer == Uniformizer::t_minus_t0) return (y + y + t * c(a.a1) + c(a.a3)).inverse();
  KSeries Gt = y * c(a.a1) - t * t * c(ctx.field().from_int(3)) - t * c(ctx.field().add(a.a2, a.a2)) - c(a.a4);
  return -Gt.inverse();
}

}  // namespace

KElem cf_residue(const KContext& ctx, const CurveFunc& F, const Point& P, int precision) {
  if (F.is_zero()) return KElem::zero(ctx);
  int terms = precision;
  for (int attempt = 0; attempt < 2; ++attempt) {
    LocalExpansion ex = cf_local_expand(ctx, F, P, terms);
    int v = ex.series.valuation();
    if (v >= 0) return KElem::zero(ctx);
    if (-v <= terms) {
      LocalChart chart = local_chart(ctx, P, -v + 2);
      KSeries w = differential_factor(ctx, chart, -v + 1);
      return (ex.series * w).coeff(-1);
    }
    terms *= 2;
  }
  throw PrecisionError("residue needs more terms than the escalated precision");
}

KElem cf_residue_product(const KContext& ctx, const std::vector<CurveFunc>& factors, const Point& P) {
  int total = 0;
  int maxprec = 0;
  for (const auto& F : factors) {
    if (F.is_zero()) return KElem::zero(ctx);
    total += cf_order_at(ctx, F, P);
  }
  if (total >= 0) return KElem::zero(ctx);
  int terms = -total;
  for (const auto& F : factors) maxprec = std::max(maxprec, chart_precision(F, terms));
  LocalChart chart = local_chart(ctx, P, maxprec);
  KSeries prod = differential_factor(ctx, chart, terms);
  for (const auto& F : factors) prod = prod * expand_in_chart(F, chart, terms);
  return prod.coeff(-1);
}

KElem cf_eval_product(const KContext& ctx, const std::vector<CurveFunc>& factors, const Point& P) {
  int maxprec = 0;
  for (const auto& F : factors) {
    if (F.is_zero()) return KElem::zero(ctx);
    maxprec = std::max(maxprec, chart_precision(F, 1));
  }
  LocalChart chart = local_chart(ctx, P, maxprec);
  int total = 0;
  std::vector<KSeries> parts;
  for (const auto& F : factors) {
    parts.push_back(expand_in_chart(F, chart, 1));
    total += parts.back().valuation();
  }
  if (total < 0) throw PoleError(total);
  if (total > 0) return KElem::zero(ctx);
  KElem v = KElem::one(ctx);
  for (const auto& s : parts) v *= s.coeff(s.valuation());
  return v;
}

}  // namespace drinfeld
