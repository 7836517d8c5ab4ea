#include "drinfeld/finite_field.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

using Digits = std::vector<int>;

Digits trim(Digits a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a modulo b over F_p, b with nonzero leading coefficient.
Digits poly_mod_p(Digits a, const Digits& b, int p) {
  a = trim(std::move(a));
  int db = static_cast<int>(b.size()) - 1;
  int lead_inv = 1;
  while ((lead_inv * b.back()) % p != 1) ++lead_inv;
  while (static_cast<int>(a.size()) - 1 >= db) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    int c = (a.back() * lead_inv) % p;
    for (int i = 0; i <= db; ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    a = trim(std::move(a));
  }
  return a;
}

Digits code_to_digits(int code, int p, int r) {
  Digits d(r);
  for (int i = 0; i < r; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

int digits_to_code(const Digits& d, int p) {
  int code = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

}  // namespace

bool is_prime(int p) noexcept {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<int>& poly, int p) {
  Digits f = trim(poly);
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Digits g = code_to_digits(code, p, d);
      g.push_back(1);
      if (poly_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> FiniteField::default_modulus(int p, int r) {
  if (r == 1) return {};
  if (p == 2 && r == 2) return {1, 1, 1};
  if (p == 2 && r == 3) return {1, 1, 0, 1};
  if (p == 3 && r == 2) return {1, 0, 1};
  int count = 1;
  for (int i = 0; i < r; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Digits g = code_to_digits(code, p, r);
    g.push_back(1);
    if (is_irreducible_mod_p(g, p)) return g;
  }
  throw DomainError("no irreducible polynomial found");
}

FiniteField::FiniteField(int p, int r, std::vector<int> modulus) : p_(p), r_(r) {
  if (!is_prime(p)) throw DomainError("characteristic must be prime");
  if (r < 1) throw DomainError("extension degree must be at least 1");
  q_ = 1;
  for (int i = 0; i < r; ++i) {
    q_ *= p;
    if (q_ > 256) throw DomainError("q must not exceed 256");
  }
  if (r == 1) {
    modulus_.clear();
  } else {
    if (modulus.empty()) modulus = default_modulus(p, r);
    if (static_cast<int>(modulus.size()) != r + 1 || modulus.back() != 1)
      throw DomainError("modulus must be monic of degree r");
    for (int c : modulus)
      if (c < 0 || c >= p) throw DomainError("modulus coefficient out of range");
    if (!is_irreducible_mod_p(modulus, p)) throw DomainError("modulus is not irreducible");
    modulus_ = std::move(modulus);
  }

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    Digits da = code_to_digits(a, p, r);
    Digits na(r);
    for (int i = 0; i < r; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = static_cast<FqCode>(digits_to_code(na, p));
    for (int b = 0; b < q_; ++b) {
      Digits db = code_to_digits(b, p, r);
      Digits s(r);
      for (int i = 0; i < r; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<FqCode>(digits_to_code(s, p));
      Digits prod(2 * r, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      if (r > 1) prod = poly_mod_p(prod, modulus_, p);
      prod.resize(r, 0);
      mul_[a * q_ + b] = static_cast<FqCode>(digits_to_code(prod, p));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<FqCode>(b);
}

FqCode FiniteField::inv(FqCode a) const {
  if (a == 0) throw DivisionByZero();
  return inv_[a];
}

FqCode FiniteField::pow(FqCode a, std::uint64_t e) const noexcept {
  FqCode result = 1;
  FqCode base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FqCode FiniteField::from_int(long long v) const noexcept {
  long long m = v % p_;
  if (m < 0) m += p_;
  return static_cast<FqCode>(m);
}

FqCode FiniteField::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != r_) throw DomainError("element must have exactly r digits");
  Digits d(digits.begin(), digits.end());
  for (int c : d)
    if (c < 0 || c >= p_) throw DomainError("digit out of range");
  return static_cast<FqCode>(digits_to_code(d, p_));
}

std::vector<int> FiniteField::digits(FqCode a) const { return code_to_digits(a, p_, r_); }

}  // namespace drinfeld
