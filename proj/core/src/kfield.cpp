#include "drinfeld/kfield.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

FqCode discriminant(const FiniteField& F, const Weierstrass& a) {
  auto I = [&](long long v) { return F.from_int(v); };
  auto m = [&](FqCode x, FqCode y) { return F.mul(x, y); };
  auto s = [&](FqCode x, FqCode y) { return F.add(x, y); };
  FqCode b2 = s(m(a.a1, a.a1), m(I(4), a.a2));
  FqCode b4 = s(m(I(2), a.a4), m(a.a1, a.a3));
  FqCode b6 = s(m(a.a3, a.a3), m(I(4), a.a6));
  FqCode b8 = F.sub(s(s(m(m(a.a1, a.a1), a.a6), m(I(4), m(a.a2, a.a6))), m(a.a2, m(a.a3, a.a3))),
                    s(m(a.a1, m(a.a3, a.a4)), m(a.a4, a.a4)));
  FqCode d = F.neg(m(m(b2, b2), b8));
  d = F.sub(d, m(I(8), m(b4, m(b4, b4))));
  d = F.sub(d, m(I(27), m(b6, b6)));
  d = s(d, m(I(9), m(b2, m(b4, b6))));
  return d;
}

std::shared_ptr<const KContext> KContext::make(FiniteField F, Weierstrass a) {
  return std::shared_ptr<const KContext>(new KContext(std::move(F), a));
}

KContext::KContext(FiniteField F, Weierstrass a) : F_(std::move(F)), a_(a) {
  if (discriminant(F_, a_) == 0) throw DomainError("singular Weierstrass curve");
  rel_.F = FqPoly(F_, {a_.a6, a_.a4, a_.a2, 1});
  rel_.H = FqPoly(F_, {a_.a3, a_.a1});
  // Square-and-multiply on pairs P + Q eta in A.
  using Pair = std::pair<FqPoly, FqPoly>;
  auto mul = [&](const Pair& x, const Pair& y) {
    FqPoly qq = x.second * y.second;
    return Pair{x.first * y.first + qq * rel_.F, x.first * y.second + x.second * y.first - qq * rel_.H};
  };
  Pair result{FqPoly::constant(F_, 1), FqPoly(F_)};
  Pair base{FqPoly(F_), FqPoly::constant(F_, 1)};
  for (int e = F_.q(); e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    if (e > 1) base = mul(base, base);
  }
  R_ = result.first;
  S_ = result.second;
}

KElem::KElem(const KContext& ctx)
    : ctx_(&ctx), x_{FqPoly(ctx.field()), FqPoly(ctx.field()), FqPoly::constant(ctx.field(), 1)} {}

KElem::KElem(const KContext& ctx, FqPoly U, FqPoly V, FqPoly D)
    : ctx_(&ctx), x_{std::move(U), std::move(V), std::move(D)} {
  if (!x_.u.field_ptr()) x_.u = FqPoly(ctx.field());
  if (!x_.v.field_ptr()) x_.v = FqPoly(ctx.field());
  detail::canonicalize(x_);
}

KElem KElem::constant(const KContext& ctx, FqCode c) {
  const auto& F = ctx.field();
  return KElem(ctx, Frac{FqPoly::constant(F, c), FqPoly(F), FqPoly::constant(F, 1)});
}

KElem KElem::theta(const KContext& ctx) {
  const auto& F = ctx.field();
  return KElem(ctx, Frac{FqPoly::x(F), FqPoly(F), FqPoly::constant(F, 1)});
}

KElem KElem::eta(const KContext& ctx) {
  const auto& F = ctx.field();
  return KElem(ctx, Frac{FqPoly(F), FqPoly::constant(F, 1), FqPoly::constant(F, 1)});
}

KElem KElem::from_poly(const KContext& ctx, FqPoly U, FqPoly V) {
  const auto& F = ctx.field();
  if (!U.field_ptr()) U = FqPoly(F);
  if (!V.field_ptr()) V = FqPoly(F);
  return KElem(ctx, Frac{std::move(U), std::move(V), FqPoly::constant(F, 1)});
}

std::optional<FqCode> KElem::as_constant() const noexcept {
  if (!x_.v.is_zero() || x_.u.degree() > 0 || !x_.d.is_one()) return std::nullopt;
  return x_.u.coeff(0);
}

KElem& KElem::operator+=(const KElem& o) {
  x_ = detail::add(x_, o.x_);
  return *this;
}

KElem& KElem::operator-=(const KElem& o) {
  x_ = detail::add(x_, detail::negate(o.x_));
  return *this;
}

KElem& KElem::operator*=(const KElem& o) {
  x_ = detail::mul(x_, o.x_, ctx_->relation());
  return *this;
}

KElem& KElem::operator/=(const KElem& o) {
  if (o.is_zero()) throw DivisionByZero();
  x_ = detail::mul(x_, detail::inverse(o.x_, ctx_->relation()), ctx_->relation());
  return *this;
}

KElem KElem::operator-() const { return KElem(*ctx_, detail::negate(x_)); }

KElem KElem::scaled(FqCode c) const {
  if (c == 0) return zero(*ctx_);
  Frac r = x_;
  r.u.scale(c);
  r.v.scale(c);
  return KElem(*ctx_, std::move(r));
}

KElem KElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return KElem(*ctx_, detail::inverse(x_, ctx_->relation()));
}

KElem KElem::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  KElem result = one(*ctx_);
  KElem base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

KElem KElem::frobenius(int k) const {
  if (k < 0) throw DomainError("negative frobenius twist");
  const int q = ctx_->q();
  Frac x = x_;
  for (int i = 0; i < k; ++i) {
    if (x.u.is_zero() && x.v.is_zero()) break;
    FqPoly vq = x.v.substitute_power(q);
    Frac y{x.u.substitute_power(q) + vq * ctx_->eta_q_R(), vq * ctx_->eta_q_S(), x.d.substitute_power(q)};
    detail::canonicalize(y);
    x = std::move(y);
  }
  return KElem(*ctx_, std::move(x));
}

namespace {

// p(theta^q) -> p(theta), or nullopt if p has terms off the theta^q lattice.
std::optional<FqPoly> unsubstitute(const FqPoly& p, int q) {
  std::vector<FqCode> out;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % q == 0) {
      out.push_back(c[i]);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return FqPoly(p.field(), std::move(out));
}

}  // namespace

std::optional<KElem> KElem::qth_root() const {
  if (is_zero()) return *this;
  const int q = ctx_->q();
  // z = (P + Q eta)/D works because z*D is integral over F_q[theta].
  FqPoly Dq1 = x_.d.pow(q - 1);
  FqPoly Uw = x_.u * Dq1;
  FqPoly Vw = x_.v * Dq1;
  auto [Qq, rem] = FqPoly::divmod(Vw, ctx_->eta_q_S());
  if (!rem.is_zero()) return std::nullopt;
  FqPoly Pq = Uw - Qq * ctx_->eta_q_R();
  auto P = unsubstitute(Pq, q);
  auto Q = unsubstitute(Qq, q);
  if (!P || !Q) return std::nullopt;
  KElem z(*ctx_, *P, *Q, x_.d);
  if (!(z.frobenius(1) == *this)) return std::nullopt;
  return z;
}

KRoot KRoot::root_of(KElem x, int depth) {
  while (depth > 0) {
    auto r = x.qth_root();
    if (!r) break;
    x = std::move(*r);
    --depth;
  }
  return {std::move(x), depth};
}

KElem KRoot::raised(int k) const {
  if (k < depth) throw DomainError("root is not in K at this twist");
  return power.frobenius(k - depth);
}

KDegSign KElem::deg_sgn() const {
  auto [d, s] = detail::deg_sgn(x_);
  return {d, s};
}

KElem k_arith(ArithOp op, const KElem& x, const KElem& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
  }
  throw DomainError("unknown arithmetic operation");
}

ThetaRat::ThetaRat(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    den_ = den_.one_like();
    return;
  }
  FqPoly g = gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
  FqCode li = den_.lead_inverse();
  num_.scale(li);
  den_.scale(li);
}

}  // namespace drinfeld
