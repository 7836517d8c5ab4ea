#pragma once

#include <utility>
#include <vector>

#include "drinfeld/kfield.hpp"

namespace drinfeld {

// Dense polynomial over K in the variable t, little-endian, no trailing zeros.
class KPoly {
 public:
  using Coeff = KElem;

  KPoly() = default;
  explicit KPoly(const KContext& ctx) : ctx_(&ctx) {}
  KPoly(const KContext& ctx, std::vector<KElem> coeffs);

  static KPoly constant(const KContext& ctx, KElem c);
  static KPoly monomial(const KContext& ctx, KElem c, int k);
  static KPoly t(const KContext& ctx) { return monomial(ctx, KElem::one(ctx), 1); }
  // t - c
  static KPoly linear(const KContext& ctx, const KElem& c);

  const KContext& context() const noexcept { return *ctx_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }
  KElem coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : KElem::zero(*ctx_);
  }
  KElem lead() const { return c_.empty() ? KElem::zero(*ctx_) : c_.back(); }
  KElem lead_inverse() const { return lead().inverse(); }
  const std::vector<KElem>& coeffs() const noexcept { return c_; }

  KPoly zero_like() const { return KPoly(*ctx_); }
  KPoly one_like() const { return constant(*ctx_, KElem::one(*ctx_)); }

  KPoly& operator+=(const KPoly& o);
  KPoly& operator-=(const KPoly& o);
  KPoly& operator*=(const KPoly& o) { return *this = *this * o; }
  KPoly operator-() const;
  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
  friend KPoly operator*(const KPoly& a, const KPoly& b);
  bool operator==(const KPoly& o) const { return c_ == o.c_; }

  KPoly& scale(const KElem& c);
  KPoly scaled(const KElem& c) const {
    KPoly r = *this;
    return r.scale(c);
  }
  KPoly monic() const { return is_zero() ? *this : scaled(lead_inverse()); }
  KPoly pow(unsigned e) const;
  KPoly twisted(int k) const;
  KPoly derivative() const;
  KElem eval(const KElem& x) const;
  // Coefficients of p(x0 + u) in u.
  std::vector<KElem> taylor_shift(const KElem& x0) const;

  static std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
  friend KPoly operator/(const KPoly& a, const KPoly& b) { return divmod(a, b).first; }
  friend KPoly operator%(const KPoly& a, const KPoly& b) { return divmod(a, b).second; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  const KContext* ctx_ = nullptr;
  std::vector<KElem> c_;
};

KPoly gcd(KPoly a, KPoly b);

}  // namespace drinfeld
