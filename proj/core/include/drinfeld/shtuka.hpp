#pragma once

#include <vector>

#include "drinfeld/curve.hpp"
#include "drinfeld/curve_function.hpp"
#include "drinfeld/divisors.hpp"

namespace drinfeld {

struct ShtukaData {
  Point V;
  KElem m;
  CurveFunc nu;
  CurveFunc delta;
  CurveFunc f;
};

// The point V = (alpha, beta) with V - V^(1) = Xi, alpha = theta + b, beta = eta + c theta + d.
Point find_V(const KContext& ctx);
ShtukaData shtuka(const KContext& ctx, const Point& V);
ShtukaData shtuka(const KContext& ctx);

struct TensorBasis {
  int n = 0;
  // Index k holds g_{k+1}, h_{k+1}, ...
  std::vector<CurveFunc> g;
  std::vector<CurveFunc> h;
  std::vector<KElem> a, yc, zc;
  std::vector<KRoot> b;
  // Ratio data g_{k+1}/g_k = nu_k/delta_k for k = 1..n-1, stored at index k-1.
  std::vector<CurveFunc> nu_k;
  std::vector<CurveFunc> delta_k;
  std::vector<KElem> m_k;
  // P[k] = [k]V^(1) + [n-k]V for k = 0..n.
  std::vector<Point> P;
};

std::vector<Point> basis_points(const KContext& ctx, const ShtukaData& S, int n);
std::vector<CurveFunc> basis_g(const KContext& ctx, const ShtukaData& S, int n, TensorBasis* ratios = nullptr);
std::vector<CurveFunc> basis_h(const KContext& ctx, const ShtukaData& S, int n, const std::vector<CurveFunc>& g);

struct StructureConstants {
  std::vector<KElem> a, yc, zc;
  std::vector<KRoot> b;
};

StructureConstants structure_constants(const KContext& ctx, const ShtukaData& S, int n,
                                       const std::vector<CurveFunc>& g, const std::vector<CurveFunc>& h);

// Builds and verifies the full basis data for dimension n.
TensorBasis tensor_basis(const KContext& ctx, const ShtukaData& S, int n);

// (dy/dt)(Xi)/(theta - t(P_i)), valid for 1 <= i < n.
KElem a_closed_form(const KContext& ctx, const TensorBasis& B, int i);

// g_i for any i >= 1, using g_{jn+k} = (f f^(1) ... f^(j-1))^n g_k^(j).
CurveFunc g_extended(const ShtukaData& S, const TensorBasis& B, int i);

// (f^(from) f^(from+1) ... f^(to))^n; the empty product is 1.
// h_i^(k) for any i >= 1, using h_{jn+r} = (f f^(-1) ... f^(1-j))^n h_r^(-j); needs k >= j.
CurveFunc h_extended_twisted(const ShtukaData& S, const TensorBasis& B, int i, int k);

CurveFunc f_product_power(const ShtukaData& S, int from, int to, int n);

Divisor expected_g_divisor(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int j);
Divisor expected_h_divisor(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int k);

}  // namespace drinfeld
