#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/curve.hpp"
#include "drinfeld/curve_function.hpp"

namespace drinfeld {

// t - x(P)
CurveFunc vertical(const KContext& ctx, const Point& P);
// Chord or tangent y - y(P) - m (t - x(P)); the vertical line when P = -Q.
CurveFunc line_through(const KContext& ctx, const Point& P, const Point& Q);
// Function with divisor n(P) - ([n]P) - (n-1)(infinity).
CurveFunc miller(const KContext& ctx, int n, const Point& P);

// Formal sum of points with multiplicities; infinity may appear as a point.
using Divisor = std::vector<std::pair<Point, int>>;

Divisor merge_divisor(Divisor D);
int divisor_degree(const Divisor& D);

struct DivisorCheck {
  bool ok = true;
  std::string detail;
};

// Compares the orders of F with the expected divisor at every point of its support and at infinity.
DivisorCheck check_divisor(const KContext& ctx, const CurveFunc& F, const Divisor& expected);

}  // namespace drinfeld
