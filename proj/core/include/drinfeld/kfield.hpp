#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

#include "drinfeld/finite_field.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/quadratic.hpp"

namespace drinfeld {

// Weierstrass coefficients of y^2 + a1 t y + a3 y = t^3 + a2 t^2 + a4 t + a6.
struct Weierstrass {
  FqCode a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  bool operator==(const Weierstrass&) const = default;
};

FqCode discriminant(const FiniteField& F, const Weierstrass& a);

// The field K = F_q(theta, eta) attached to a nonsingular Weierstrass curve.
// Elements keep a raw pointer to their context, which must outlive them.
class KContext {
 public:
  static std::shared_ptr<const KContext> make(FiniteField F, Weierstrass a);

  KContext(const KContext&) = delete;
  KContext& operator=(const KContext&) = delete;

  const FiniteField& field() const noexcept { return F_; }
  const Weierstrass& coeffs() const noexcept { return a_; }
  int q() const noexcept { return F_.q(); }
  const detail::CurveRelation<FqPoly>& relation() const noexcept { return rel_; }
  // eta^q = R(theta) + S(theta) eta
  const FqPoly& eta_q_R() const noexcept { return R_; }
  const FqPoly& eta_q_S() const noexcept { return S_; }

 private:
  KContext(FiniteField F, Weierstrass a);

  FiniteField F_;
  Weierstrass a_;
  detail::CurveRelation<FqPoly> rel_;
  FqPoly R_, S_;
};

struct KDegSign {
  int deg;
  FqCode sgn;
};

// (U + V eta)/D with D monic and gcd(U, V, D) = 1.
class KElem {
 public:
  using Frac = detail::QuadFrac<FqPoly>;

  KElem() = default;
  explicit KElem(const KContext& ctx);
  KElem(const KContext& ctx, FqPoly U, FqPoly V, FqPoly D);

  static KElem zero(const KContext& ctx) { return KElem(ctx); }
  static KElem one(const KContext& ctx) { return constant(ctx, 1); }
  static KElem constant(const KContext& ctx, FqCode c);
  static KElem theta(const KContext& ctx);
  static KElem eta(const KContext& ctx);
  static KElem from_poly(const KContext& ctx, FqPoly U, FqPoly V = {});

  const KContext& context() const noexcept { return *ctx_; }
  const KContext* context_ptr() const noexcept { return ctx_; }
  const FqPoly& U() const noexcept { return x_.u; }
  const FqPoly& V() const noexcept { return x_.v; }
  const FqPoly& D() const noexcept { return x_.d; }

  bool is_zero() const noexcept { return x_.u.is_zero() && x_.v.is_zero(); }
  bool is_one() const noexcept { return x_.u.is_one() && x_.v.is_zero() && x_.d.is_one(); }
  bool in_A() const noexcept { return x_.d.is_one(); }
  // Constant in F_q, if it is one.
  std::optional<FqCode> as_constant() const noexcept;

  KElem& operator+=(const KElem& o);
  KElem& operator-=(const KElem& o);
  KElem& operator*=(const KElem& o);
  KElem& operator/=(const KElem& o);
  KElem operator-() const;
  friend KElem operator+(KElem a, const KElem& b) { return a += b; }
  friend KElem operator-(KElem a, const KElem& b) { return a -= b; }
  friend KElem operator*(KElem a, const KElem& b) { return a *= b; }
  friend KElem operator/(KElem a, const KElem& b) { return a /= b; }
  bool operator==(const KElem& o) const noexcept { return detail::equal(x_, o.x_); }

  KElem scaled(FqCode c) const;
  KElem inverse() const;
  KElem pow(long long e) const;
  KElem frobenius(int k = 1) const;
  // z with z^q = *this, if one exists in K.
  std::optional<KElem> qth_root() const;

  KDegSign deg_sgn() const;
  int degree() const { return deg_sgn().deg; }

 private:
  KElem(const KContext& ctx, Frac x) : ctx_(&ctx), x_(std::move(x)) {}

  const KContext* ctx_ = nullptr;
  Frac x_;
};

// The element power^(1/q^depth) of the perfect closure of K, kept with the smallest depth.
struct KRoot {
  KElem power;
  int depth = 0;

  static KRoot root_of(KElem x, int depth);
  // power^(q^k) when k >= depth.
  KElem raised(int k) const;
  bool operator==(const KRoot& o) const { return depth == o.depth && power == o.power; }
};

enum class ArithOp { add, sub, mul, div };

KElem k_arith(ArithOp op, const KElem& x, const KElem& y);

// Element of F_q(theta).
class ThetaRat {
 public:
  ThetaRat(FqPoly num, FqPoly den);
  const FqPoly& num() const noexcept { return num_; }
  const FqPoly& den() const noexcept { return den_; }
  KElem to_k(const KContext& ctx) const { return KElem(ctx, num_, FqPoly(ctx.field()), den_); }
  bool operator==(const ThetaRat&) const = default;

 private:
  FqPoly num_, den_;
};

}  // namespace drinfeld
