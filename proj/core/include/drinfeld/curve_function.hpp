#pragma once

#include <optional>

#include "drinfeld/curve.hpp"
#include "drinfeld/kpoly.hpp"
#include "drinfeld/quadratic.hpp"

namespace drinfeld {

struct CurveDegSign {
  int deg;
  KElem sgn;
};

// (numU(t) + numV(t) y)/den(t) in K(t, y); den monic, content reduced.
class CurveFunc {
 public:
  using Frac = detail::QuadFrac<KPoly>;

  CurveFunc() = default;
  CurveFunc(KPoly numU, KPoly numV, KPoly den);

  static CurveFunc zero(const KContext& ctx);
  static CurveFunc one(const KContext& ctx) { return constant(KElem::one(ctx)); }
  static CurveFunc constant(const KElem& c);
  static CurveFunc t(const KContext& ctx);
  static CurveFunc y(const KContext& ctx);
  static CurveFunc from_poly(KPoly U, KPoly V);
  // Image of a polynomial in theta, eta under theta -> t, eta -> y.
  static CurveFunc chi(const KElem& a);

  const KContext& context() const noexcept { return x_.d.context(); }
  const KPoly& numU() const noexcept { return x_.u; }
  const KPoly& numV() const noexcept { return x_.v; }
  const KPoly& den() const noexcept { return x_.d; }

  bool is_zero() const noexcept { return x_.u.is_zero() && x_.v.is_zero(); }
  bool is_polynomial() const noexcept { return x_.d.is_one(); }
  std::optional<KElem> as_constant() const;

  CurveFunc& operator+=(const CurveFunc& o);
  CurveFunc& operator-=(const CurveFunc& o);
  CurveFunc& operator*=(const CurveFunc& o);
  CurveFunc& operator/=(const CurveFunc& o);
  CurveFunc operator-() const;
  friend CurveFunc operator+(CurveFunc a, const CurveFunc& b) { return a += b; }
  friend CurveFunc operator-(CurveFunc a, const CurveFunc& b) { return a -= b; }
  friend CurveFunc operator*(CurveFunc a, const CurveFunc& b) { return a *= b; }
  friend CurveFunc operator/(CurveFunc a, const CurveFunc& b) { return a /= b; }
  bool operator==(const CurveFunc& o) const { return detail::equal(x_, o.x_); }

  CurveFunc scaled(const KElem& c) const;
  CurveFunc inverse() const;
  CurveFunc pow(long long e) const;
  CurveFunc twisted(int k) const;

  CurveDegSign deg_sgn() const;
  int degree() const { return deg_sgn().deg; }

 private:
  explicit CurveFunc(Frac x) : x_(std::move(x)) {}

  Frac x_;
};

enum class FuncOp { add, sub, mul, div };

CurveFunc cf_arith(FuncOp op, const CurveFunc& F, const CurveFunc& G);

detail::CurveRelation<KPoly> function_relation(const KContext& ctx);

}  // namespace drinfeld
