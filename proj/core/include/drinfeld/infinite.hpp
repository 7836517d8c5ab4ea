#pragma once

#include <vector>

#include "drinfeld/kfield.hpp"
#include "drinfeld/shtuka.hpp"
#include "drinfeld/zeta.hpp"

namespace drinfeld {

// sum_k c_k u^(val + k) + O(u^prec) over F_q, with u = t/y the uniformizer at infinity.
class LaurentK {
 public:
  // Larger than any precision that arises; marks exact zeros.
  static constexpr int kExact = 1 << 26;

  LaurentK() = default;
  LaurentK(const FiniteField& F, int val, std::vector<FqCode> coeffs, int prec);
  static LaurentK zero(const FiniteField& F, int prec = kExact) { return LaurentK(F, prec, {}, prec); }
  static LaurentK one(const FiniteField& F, int prec) { return LaurentK(F, 0, {1}, prec); }

  const FiniteField& field() const noexcept { return *F_; }
  // Exponent of the first nonzero coefficient, or precision() if none is known.
  int valuation() const noexcept { return val_; }
  int precision() const noexcept { return prec_; }
  int relative_precision() const noexcept { return prec_ - val_; }
  bool is_zero_to_precision() const noexcept { return c_.empty(); }
  FqCode coeff(int exponent) const noexcept;
  const std::vector<FqCode>& coeffs() const noexcept { return c_; }

  LaurentK truncated(int prec) const;
  LaurentK operator+(const LaurentK& o) const;
  LaurentK operator-(const LaurentK& o) const;
  LaurentK operator*(const LaurentK& o) const;
  LaurentK operator/(const LaurentK& o) const;
  LaurentK operator-() const;
  LaurentK scaled(FqCode c) const;
  LaurentK inverse() const;
  LaurentK pow(long long e) const;
  // x^(q^k); keeps the relative precision.
  LaurentK frobenius(int k) const;

 private:
  void normalize();

  const FiniteField* F_ = nullptr;
  int val_ = 0;
  int prec_ = 0;
  std::vector<FqCode> c_;
};

enum class LaurentOp { add, sub, mul, div };
LaurentK laurent_arith(LaurentOp op, const LaurentK& a, const LaurentK& b);

// t(u), y(u) with N correct coefficients each.
struct InfinityChart {
  int N = 0;
  LaurentK t, y;
};
InfinityChart infinity_chart(const KContext& ctx, int N);

// The Weierstrass equation evaluated at t(u), y(u).
LaurentK chart_residual(const KContext& ctx, const InfinityChart& chart);

LaurentK embed_K(const KContext& ctx, const KElem& x, int N);
LaurentK embed_K(const InfinityChart& chart, const KElem& x);

// F^(k)(Xi), with the coefficients of F embedded and then raised to the q^k.
LaurentK eval_twisted_at_xi(const InfinityChart& chart, const CurveFunc& F, int k);

// S_i(s) in K_infinity: 1, 0 for i = 0, 1 and the closed form for i >= 2.
LaurentK power_sum_at_infinity(const KContext& ctx, const InfinityChart& chart, const ShtukaData& S, int i, int s);

// Bottom row of P_m in K_infinity.
std::vector<LaurentK> log_bottom_row_at_infinity(const InfinityChart& chart, const ShtukaData& S,
                                                 const TensorBasis& B, int m);

struct TailCheck {
  int T = 0, T_prime = 0;
  LaurentK first, second;
  int val_first = 0, val_second = 0;
  bool pass = false;
};

// C b sum_{i <= T'} S_i(n) - sum_{m <= T} (bottom row P_m) . d^(m), at (T, T') and (T+2, T'+2).
TailCheck tail_check(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const SigmaExpansion& E, int T,
                     int T_prime, int N);

// The partial sums of the tail check separately.
LaurentK zeta_partial_sum(const KContext& ctx, const InfinityChart& chart, const ShtukaData& S,
                          const SigmaExpansion& E, int T_prime);
LaurentK log_partial_sum(const InfinityChart& chart, const ShtukaData& S, const TensorBasis& B,
                         const SigmaExpansion& E, int T);

}  // namespace drinfeld
