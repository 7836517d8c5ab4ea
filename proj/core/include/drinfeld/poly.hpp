#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "drinfeld/finite_field.hpp"

namespace drinfeld {

// Dense polynomial over F_q in one variable (theta), little-endian, no trailing zeros.
class FqPoly {
 public:
  using Coeff = FqCode;

  FqPoly() = default;
  explicit FqPoly(const FiniteField& F) : F_(&F) {}
  FqPoly(const FiniteField& F, std::vector<FqCode> coeffs);

  static FqPoly constant(const FiniteField& F, FqCode c);
  static FqPoly monomial(const FiniteField& F, FqCode c, int k);
  static FqPoly x(const FiniteField& F) { return monomial(F, 1, 1); }

  const FiniteField& field() const noexcept { return *F_; }
  const FiniteField* field_ptr() const noexcept { return F_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  FqCode coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : FqCode{0};
  }
  FqCode lead() const noexcept { return c_.empty() ? FqCode{0} : c_.back(); }
  FqCode lead_inverse() const { return F_->inv(lead()); }
  const std::vector<FqCode>& coeffs() const noexcept { return c_; }

  FqPoly zero_like() const { return FqPoly(*F_); }
  FqPoly one_like() const { return constant(*F_, 1); }
  FqPoly from_coeff(FqCode c) const { return constant(*F_, c); }

  FqPoly& operator+=(const FqPoly& o);
  FqPoly& operator-=(const FqPoly& o);
  FqPoly& operator*=(const FqPoly& o);
  FqPoly operator-() const;
  friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
  friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  bool operator==(const FqPoly& o) const noexcept { return c_ == o.c_; }

  FqPoly& scale(FqCode c);
  FqPoly scaled(FqCode c) const {
    FqPoly r = *this;
    return r.scale(c);
  }
  FqPoly monic() const { return is_zero() ? *this : scaled(lead_inverse()); }
  FqPoly shifted(int k) const;
  FqPoly pow(std::uint64_t e) const;

  // p(theta) -> p(theta^k)
  FqPoly substitute_power(int k) const;
  // Coefficients raised to the p-power frobenius of F_q composed e times.
  FqPoly map_coeffs_pow(std::uint64_t e) const;
  FqCode eval(FqCode x) const noexcept;

  static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }
  friend FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

 private:
  void trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const FiniteField* F_ = nullptr;
  std::vector<FqCode> c_;
};

// Monic gcd; gcd(0, 0) = 0.
FqPoly gcd(FqPoly a, FqPoly b);

}  // namespace drinfeld
