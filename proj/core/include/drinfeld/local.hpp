#pragma once

#include <vector>

#include "drinfeld/curve.hpp"
#include "drinfeld/curve_function.hpp"

namespace drinfeld {

// Truncated Laurent series sum c_k u^(val + k), known modulo u^(val + size).
class KSeries {
 public:
  KSeries(const KContext& ctx, int val, std::vector<KElem> coeffs);
  static KSeries exact_poly(const KContext& ctx, std::vector<KElem> coeffs, int prec);

  const KContext& context() const noexcept { return *ctx_; }
  // Exponent of the first nonzero term, or precision() if none is known.
  int valuation() const noexcept { return val_; }
  int precision() const noexcept { return val_ + static_cast<int>(c_.size()); }
  int relative_precision() const noexcept { return static_cast<int>(c_.size()); }
  bool is_zero_to_precision() const noexcept { return c_.empty(); }
  KElem coeff(int exponent) const;
  const std::vector<KElem>& coeffs() const noexcept { return c_; }

  KSeries truncated(int prec) const;
  KSeries operator+(const KSeries& o) const;
  KSeries operator-(const KSeries& o) const;
  KSeries operator*(const KSeries& o) const;
  KSeries operator/(const KSeries& o) const;
  KSeries operator-() const;
  KSeries scaled(const KElem& c) const;
  KSeries inverse() const;

 private:
  void normalize();

  const KContext* ctx_;
  int val_;
  std::vector<KElem> c_;
};

enum class Uniformizer { t_minus_t0, y_minus_y0 };

// Parametrization of a neighbourhood of an affine point: t(u), y(u) to a given precision.
struct LocalChart {
  Point point;
  Uniformizer uniformizer;
  KSeries t;
  KSeries y;
};

struct LocalExpansion {
  Point point;
  Uniformizer uniformizer;
  KSeries series;
  int precision;
};

LocalChart local_chart(const KContext& ctx, const Point& P, int prec);

// Laurent expansion of F with at least `terms` correct terms from its valuation.
KSeries expand_in_chart(const CurveFunc& F, const LocalChart& chart, int terms);

LocalExpansion cf_local_expand(const KContext& ctx, const CurveFunc& F, const Point& P, int terms);
int cf_order_at(const KContext& ctx, const CurveFunc& F, const Point& P);
KElem cf_eval(const KContext& ctx, const CurveFunc& F, const Point& P);
// Residue of F times the invariant differential dt/(2y + a1 t + a3).
KElem cf_residue(const KContext& ctx, const CurveFunc& F, const Point& P, int precision = 16);
// Residue of the product of the factors, expanding each factor separately.
KElem cf_residue_product(const KContext& ctx, const std::vector<CurveFunc>& factors, const Point& P);
// Value at P of the product of the factors (which must be finite there).
KElem cf_eval_product(const KContext& ctx, const std::vector<CurveFunc>& factors, const Point& P);

}  // namespace drinfeld
