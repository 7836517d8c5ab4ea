#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace drinfeld {

// Elements of F_q are stored as codes sum(digit_i * p^i) over the polynomial basis.
using FqCode = std::uint8_t;

class FiniteField {
 public:
  // modulus holds r+1 little-endian coefficients of a monic irreducible polynomial;
  // leave it empty for r == 1 or to pick the default modulus.
  FiniteField(int p, int r, std::vector<int> modulus = {});

  static std::vector<int> default_modulus(int p, int r);

  int p() const noexcept { return p_; }
  int r() const noexcept { return r_; }
  int q() const noexcept { return q_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  FqCode add(FqCode a, FqCode b) const noexcept { return add_[a * q_ + b]; }
  FqCode sub(FqCode a, FqCode b) const noexcept { return add_[a * q_ + neg_[b]]; }
  FqCode neg(FqCode a) const noexcept { return neg_[a]; }
  FqCode mul(FqCode a, FqCode b) const noexcept { return mul_[a * q_ + b]; }
  FqCode inv(FqCode a) const;
  FqCode div(FqCode a, FqCode b) const { return mul(a, inv(b)); }
  FqCode pow(FqCode a, std::uint64_t e) const noexcept;

  // Image of an integer in the prime field.
  FqCode from_int(long long v) const noexcept;
  FqCode from_digits(std::span<const int> digits) const;
  std::vector<int> digits(FqCode a) const;

  const FqCode* add_row(FqCode a) const noexcept { return add_.data() + a * q_; }
  const FqCode* mul_row(FqCode a) const noexcept { return mul_.data() + a * q_; }
  bool char_two() const noexcept { return p_ == 2; }

  bool operator==(const FiniteField& o) const noexcept {
    return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
  }

 private:
  int p_;
  int r_;
  int q_;
  std::vector<int> modulus_;
  std::vector<FqCode> add_;
  std::vector<FqCode> mul_;
  std::vector<FqCode> neg_;
  std::vector<FqCode> inv_;
};

bool is_prime(int p) noexcept;

// Irreducibility over F_p of a little-endian coefficient vector.
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace drinfeld
