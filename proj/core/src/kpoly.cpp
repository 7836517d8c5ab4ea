#include "drinfeld/kpoly.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

KPoly::KPoly(const KContext& ctx, std::vector<KElem> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) { trim(); }

KPoly KPoly::constant(const KContext& ctx, KElem c) { return KPoly(ctx, std::vector<KElem>{std::move(c)}); }

KPoly KPoly::monomial(const KContext& ctx, KElem c, int k) {
  std::vector<KElem> v(k + 1, KElem::zero(ctx));
  v[k] = std::move(c);
  return KPoly(ctx, std::move(v));
}

KPoly KPoly::linear(const KContext& ctx, const KElem& c) {
  return KPoly(ctx, std::vector<KElem>{-c, KElem::one(ctx)});
}

KPoly& KPoly::operator+=(const KPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), KElem::zero(*ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  trim();
  return *this;
}

KPoly& KPoly::operator-=(const KPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), KElem::zero(*ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  trim();
  return *this;
}

KPoly KPoly::operator-() const {
  KPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

KPoly operator*(const KPoly& a, const KPoly& b) {
  const KContext& ctx = a.ctx_ ? *a.ctx_ : *b.ctx_;
  if (a.is_zero() || b.is_zero()) return KPoly(ctx);
  if (b.c_.size() == 1 && b.c_[0].is_one()) return a;
  if (a.c_.size() == 1 && a.c_[0].is_one()) return b;
  std::vector<KElem> out(a.c_.size() + b.c_.size() - 1, KElem::zero(ctx));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return KPoly(ctx, std::move(out));
}

KPoly& KPoly::scale(const KElem& c) {
  if (c.is_zero()) {
    c_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& x : c_) x *= c;
  return *this;
}

KPoly KPoly::pow(unsigned e) const {
  KPoly result = one_like();
  KPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

KPoly KPoly::twisted(int k) const {
  if (k < 0) throw DomainError("negative twist");
  KPoly r = *this;
  for (auto& c : r.c_) c = c.frobenius(k);
  return r;
}

KPoly KPoly::derivative() const {
  if (c_.size() <= 1) return zero_like();
  std::vector<KElem> v;
  const auto& F = ctx_->field();
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i].scaled(F.from_int(static_cast<long long>(i))));
  return KPoly(*ctx_, std::move(v));
}

KElem KPoly::eval(const KElem& x) const {
  KElem acc = KElem::zero(*ctx_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<KElem> KPoly::taylor_shift(const KElem& x0) const {
  // Repeated synthetic division by (t - x0).
  std::vector<KElem> a = c_;
  int n = static_cast<int>(a.size());
  for (int k = 0; k < n; ++k)
    for (int i = n - 2; i >= k; --i) a[i] += a[i + 1] * x0;
  return a;
}

std::pair<KPoly, KPoly> KPoly::divmod(const KPoly& a, const KPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const KContext& ctx = *b.ctx_;
  if (a.degree() < b.degree()) return {KPoly(ctx), a};
  std::vector<KElem> r = a.c_;
  int db = b.degree();
  std::vector<KElem> quot(a.degree() - db + 1, KElem::zero(ctx));
  bool monic = b.is_monic();
  KElem li = monic ? KElem::one(ctx) : b.lead_inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    KElem qc = monic ? r[i] : r[i] * li;
    for (int j = 0; j < db; ++j)
      if (!b.c_[j].is_zero()) r[i - db + j] -= qc * b.c_[j];
    quot[i - db] = std::move(qc);
  }
  r.resize(db, KElem::zero(ctx));
  return {KPoly(ctx, std::move(quot)), KPoly(ctx, std::move(r))};
}

KPoly gcd(KPoly a, KPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    KPoly r = KPoly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace drinfeld
