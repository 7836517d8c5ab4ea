#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "drinfeld/kfield.hpp"

namespace drinfeld {

// Infinity or an affine point (x, y) of E over K.
class Point {
 public:
  static Point infinity() { return Point(); }
  Point(KElem x, KElem y) : xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const KElem& x() const { return xy_->first; }
  const KElem& y() const { return xy_->second; }
  bool operator==(const Point& o) const {
    if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
    return x() == o.x() && y() == o.y();
  }

 private:
  Point() = default;
  std::optional<std::pair<KElem, KElem>> xy_;
};

// The generic point Xi = (theta, eta).
Point xi_point(const KContext& ctx);

bool on_curve(const KContext& ctx, const Point& P);
// Value of y^2 + a1 x y + a3 y - (x^3 + a2 x^2 + a4 x + a6) at (x, y).
KElem weierstrass_residual(const KContext& ctx, const KElem& x, const KElem& y);

Point point_add(const KContext& ctx, const Point& P, const Point& Q);
Point point_negate(const KContext& ctx, const Point& P);
Point point_sub(const KContext& ctx, const Point& P, const Point& Q);
Point point_mul(const KContext& ctx, long long k, const Point& P);
Point point_frobenius(const KContext& ctx, const Point& P, int k);

struct FqPoint {
  FqCode x, y;
};

std::vector<FqPoint> affine_points(const FiniteField& F, const Weierstrass& a);
// #E(F_q), which is the class number of A.
long long class_number(const FiniteField& F, const Weierstrass& a);
long long class_number(const KContext& ctx);

}  // namespace drinfeld
