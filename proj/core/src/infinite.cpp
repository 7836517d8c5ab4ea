#include "drinfeld/infinite.hpp"

#include <algorithm>
#include <climits>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

int clamp_prec(long long p) { return static_cast<int>(std::min<long long>(p, LaurentK::kExact)); }

bool is_exact(int prec) { return prec >= LaurentK::kExact / 2; }

}  // namespace

LaurentK::LaurentK(const FiniteField& F, int val, std::vector<FqCode> coeffs, int prec)
    : F_(&F), val_(val), prec_(clamp_prec(prec)), c_(std::move(coeffs)) {
  normalize();
}

void LaurentK::normalize() {
  if (prec_ - val_ < static_cast<int>(c_.size())) c_.resize(std::max(0, prec_ - val_));
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = prec_;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  val_ += static_cast<int>(lead);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqCode LaurentK::coeff(int exponent) const noexcept {
  int k = exponent - val_;
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

LaurentK LaurentK::truncated(int prec) const {
  if (prec >= prec_) return *this;
  return LaurentK(*F_, val_, c_, prec);
}

LaurentK LaurentK::operator+(const LaurentK& o) const {
  int p = std::min(prec_, o.prec_);
  int v = std::min(val_, o.val_);
  if (p <= v) return zero(*F_, p);
  auto end = [](const LaurentK& x) { return x.c_.empty() ? INT_MIN : x.val_ + static_cast<int>(x.c_.size()); };
  int top = std::min(p, std::max(end(*this), end(o)));
  std::vector<FqCode> c(std::max(0, top - v), 0);
  for (std::size_t i = 0; i < c_.size() && val_ + (int)i < top; ++i) c[val_ - v + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size() && o.val_ + (int)i < top; ++i)
    c[o.val_ - v + i] = F_->add(c[o.val_ - v + i], o.c_[i]);
  return LaurentK(*F_, v, std::move(c), p);
}

LaurentK LaurentK::operator-() const {
  LaurentK r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

LaurentK LaurentK::operator-(const LaurentK& o) const { return *this + (-o); }

LaurentK LaurentK::scaled(FqCode c) const {
  if (c == 0) return zero(*F_, prec_);
  LaurentK r = *this;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

LaurentK LaurentK::operator*(const LaurentK& o) const {
  long long v = (long long)val_ + o.val_;
  int p = clamp_prec(std::min((long long)val_ + o.prec_, (long long)o.val_ + prec_));
  if (c_.empty() || o.c_.empty()) return zero(*F_, p);
  long long len = std::min<long long>(p - v, (long long)c_.size() + o.c_.size() - 1);
  std::vector<FqCode> c(static_cast<std::size_t>(std::max<long long>(0, len)), 0);
  for (std::size_t i = 0; i < c_.size() && (long long)i < len; ++i) {
    if (c_[i] == 0) continue;
    const FqCode* row = F_->mul_row(c_[i]);
    std::size_t lim = std::min<std::size_t>(o.c_.size(), static_cast<std::size_t>(len - i));
    for (std::size_t j = 0; j < lim; ++j)
      if (o.c_[j] != 0) c[i + j] = F_->add(c[i + j], row[o.c_[j]]);
  }
  return LaurentK(*F_, static_cast<int>(v), std::move(c), p);
}

LaurentK LaurentK::inverse() const {
  if (c_.empty()) throw DivisionByZero("inverse of a series that vanishes to its precision");
  if (is_exact(prec_)) {
    if (c_.size() != 1) throw PrecisionError("inverse of an exact series needs a finite precision");
    return LaurentK(*F_, -val_, {F_->inv(c_[0])}, kExact);
  }
  int r = relative_precision();
  std::vector<FqCode> inv(r, 0);
  FqCode a0inv = F_->inv(c_[0]);
  inv[0] = a0inv;
  for (int k = 1; k < r; ++k) {
    FqCode s = 0;
    for (int j = 1; j <= k && j < (int)c_.size(); ++j)
      if (c_[j] != 0 && inv[k - j] != 0) s = F_->add(s, F_->mul(c_[j], inv[k - j]));
    inv[k] = F_->neg(F_->mul(s, a0inv));
  }
  return LaurentK(*F_, -val_, std::move(inv), -val_ + r);
}

LaurentK LaurentK::operator/(const LaurentK& o) const { return *this * o.inverse(); }

LaurentK LaurentK::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentK result = one(*F_, kExact), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentK LaurentK::frobenius(int k) const {
  long long Q = 1;
  for (int i = 0; i < k; ++i) Q *= F_->q();
  if (c_.empty()) return zero(*F_, is_exact(prec_) ? kExact : clamp_prec(prec_ * Q));
  long long v = val_ * Q;
  long long p = is_exact(prec_) ? kExact : v + relative_precision();
  long long len = std::min<long long>(p - v, ((long long)c_.size() - 1) * Q + 1);
  std::vector<FqCode> c(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; (long long)i * Q < len; ++i) c[i * Q] = c_[i];
  return LaurentK(*F_, static_cast<int>(v), std::move(c), clamp_prec(p));
}

LaurentK laurent_arith(LaurentOp op, const LaurentK& a, const LaurentK& b) {
  switch (op) {
    case LaurentOp::add: return a + b;
    case LaurentOp::sub: return a - b;
    case LaurentOp::mul: return a * b;
    case LaurentOp::div: return a / b;
  }
  throw DomainError("unknown series operation");
}

InfinityChart infinity_chart(const KContext& ctx, int N) {
  if (N < 1) throw DomainError("precision must be positive");
  const FiniteField& F = ctx.field();
  const auto& a = ctx.coeffs();
  // w = 1/t satisfies w = u^2 (1 + a2 w + a4 w^2 + a6 w^3) - a1 u w - a3 u w^2.
  const int P = N + 4;
  LaurentK u(F, 1, {1}, LaurentK::kExact);
  LaurentK u2 = u * u;
  auto c = [&](FqCode x) { return LaurentK(F, 0, {x}, LaurentK::kExact); };
  LaurentK w = u2.truncated(P);
  for (int it = 0; it < P; ++it) {
    LaurentK w2 = w * w;
    LaurentK next = u2 * (c(1) + c(a.a2) * w + c(a.a4) * w2 + c(a.a6) * w2 * w) - c(a.a1) * u * w - c(a.a3) * u * w2;
    w = next.truncated(P);
  }
  InfinityChart chart;
  chart.N = N;
  chart.t = w.inverse().truncated(-2 + N);
  chart.y = (w.inverse() / u).truncated(-3 + N);
  return chart;
}

LaurentK chart_residual(const KContext& ctx, const InfinityChart& chart) {
  const FiniteField& F = ctx.field();
  const auto& a = ctx.coeffs();
  auto c = [&](FqCode x) { return LaurentK(F, 0, {x}, LaurentK::kExact); };
  const LaurentK& t = chart.t;
  const LaurentK& y = chart.y;
  return y * y + c(a.a1) * t * y + c(a.a3) * y - (t * t * t + c(a.a2) * t * t + c(a.a4) * t + c(a.a6));
}

namespace {

LaurentK horner(const FqPoly& p, const LaurentK& x) {
  const FiniteField& F = x.field();
  LaurentK r = LaurentK::zero(F);
  for (int i = p.degree(); i >= 0; --i) r = r * x + LaurentK(F, 0, {p.coeff(i)}, LaurentK::kExact);
  return r;
}

LaurentK horner(const std::vector<LaurentK>& coeffs, const LaurentK& x) {
  LaurentK r = LaurentK::zero(x.field());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

}  // namespace

LaurentK embed_K(const InfinityChart& chart, const KElem& x) {
  const FiniteField& F = x.context().field();
  if (x.is_zero()) return LaurentK::zero(F);
  LaurentK num = horner(x.U(), chart.t) + horner(x.V(), chart.t) * chart.y;
  LaurentK den = horner(x.D(), chart.t);
  LaurentK r = num / den;
  return r.truncated(r.valuation() + chart.N);
}

LaurentK embed_K(const KContext& ctx, const KElem& x, int N) { return embed_K(infinity_chart(ctx, N), x); }

LaurentK eval_twisted_at_xi(const InfinityChart& chart, const CurveFunc& F, int k) {
  auto lift = [&](const KPoly& p) {
    std::vector<LaurentK> c;
    for (const KElem& a : p.coeffs()) c.push_back(embed_K(chart, a).frobenius(k));
    return horner(c, chart.t);
  };
  LaurentK num = lift(F.numU()) + lift(F.numV()) * chart.y;
  LaurentK den = lift(F.den());
  return num / den;
}

LaurentK power_sum_at_infinity(const KContext& ctx, const InfinityChart& chart, const ShtukaData& S, int i, int s) {
  const FiniteField& F = ctx.field();
  if (i == 0) return LaurentK::one(F, LaurentK::kExact);
  if (i == 1) return LaurentK::zero(F);
  LaurentK den = eval_twisted_at_xi(chart, w_line(ctx, S, i), 1);
  for (int k = 1; k <= i; ++k) den = den * eval_twisted_at_xi(chart, S.f, k);
  return (eval_twisted_at_xi(chart, S.nu, i) / den).pow(s);
}

std::vector<LaurentK> log_bottom_row_at_infinity(const InfinityChart& chart, const ShtukaData& S,
                                                 const TensorBasis& B, int m) {
  const int n = B.n;
  LaurentK den = eval_twisted_at_xi(chart, B.h[0], 0);
  for (int j = 1; j <= m; ++j) den = den * eval_twisted_at_xi(chart, S.f, j).pow(n);
  std::vector<LaurentK> row;
  for (int k = 1; k <= n; ++k) row.push_back(eval_twisted_at_xi(chart, B.h[n - k], m) / den);
  return row;
}

LaurentK zeta_partial_sum(const KContext& ctx, const InfinityChart& chart, const ShtukaData& S,
                          const SigmaExpansion& E, int T_prime) {
  LaurentK sum = LaurentK::zero(ctx.field());
  for (int i = 0; i <= T_prime; ++i) sum = sum + power_sum_at_infinity(ctx, chart, S, i, E.n);
  return embed_K(chart, E.C) * embed_K(chart, E.b) * sum;
}

LaurentK log_partial_sum(const InfinityChart& chart, const ShtukaData& S, const TensorBasis& B,
                         const SigmaExpansion& E, int T) {
  const FiniteField& F = chart.t.field();
  bool zero = std::all_of(E.d_total.begin(), E.d_total.end(), [](const KElem& d) { return d.is_zero(); });
  LaurentK sum = LaurentK::zero(F);
  if (zero) return sum;
  for (int m = 0; m <= T; ++m) {
    auto row = log_bottom_row_at_infinity(chart, S, B, m);
    for (int k = 0; k < E.n; ++k)
      if (!E.d_total[k].is_zero()) sum = sum + row[k] * embed_K(chart, E.d_total[k]).frobenius(m);
  }
  return sum;
}

TailCheck tail_check(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const SigmaExpansion& E, int T,
                     int T_prime, int N) {
  if (T < 0 || T_prime < 0) throw DomainError("tail check needs T, T' >= 0");
  InfinityChart chart = infinity_chart(ctx, N);
  TailCheck c;
  c.T = T;
  c.T_prime = T_prime;
  c.first = zeta_partial_sum(ctx, chart, S, E, T_prime) - log_partial_sum(chart, S, B, E, T);
  c.second = zeta_partial_sum(ctx, chart, S, E, T_prime + 2) - log_partial_sum(chart, S, B, E, T + 2);
  if (c.first.is_zero_to_precision() || c.second.is_zero_to_precision())
    throw PrecisionError("tail difference vanishes to the working precision; increase the precision");
  c.val_first = c.first.valuation();
  c.val_second = c.second.valuation();
  c.pass = c.val_second > c.val_first;
  return c;
}

}  // namespace drinfeld
