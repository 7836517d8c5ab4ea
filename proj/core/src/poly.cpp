#include "drinfeld/poly.hpp"

#include <algorithm>
#include <cstdint>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

constexpr std::size_t kKaratsubaCutoff = 40;

void add_into(const FiniteField& F, FqCode* out, const FqCode* a, std::size_t n) {
  if (F.char_two()) {
    for (std::size_t i = 0; i < n; ++i) out[i] ^= a[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = F.add(out[i], a[i]);
  }
}

void sub_into(const FiniteField& F, FqCode* out, const FqCode* a, std::size_t n) {
  if (F.char_two()) {
    for (std::size_t i = 0; i < n; ++i) out[i] ^= a[i];
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = F.sub(out[i], a[i]);
  }
}

// out[0 .. na+nb-1) += a*b
void mul_school(const FiniteField& F, const FqCode* a, std::size_t na, const FqCode* b,
                std::size_t nb, FqCode* out) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  const bool two = F.char_two();
  for (std::size_t j = 0; j < nb; ++j) {
    if (b[j] == 0) continue;
    const FqCode* row = F.mul_row(b[j]);
    FqCode* o = out + j;
    if (two) {
      for (std::size_t i = 0; i < na; ++i) o[i] ^= row[a[i]];
    } else {
      for (std::size_t i = 0; i < na; ++i) o[i] = F.add(o[i], row[a[i]]);
    }
  }
}

// out[0 .. 2n-1) += a*b with both operands of length n.
void mul_kara(const FiniteField& F, const FqCode* a, const FqCode* b, std::size_t n, FqCode* out) {
  if (n <= kKaratsubaCutoff) {
    mul_school(F, a, n, b, n, out);
    return;
  }
  std::size_t h = n / 2;
  std::size_t hi = n - h;
  std::vector<FqCode> low(2 * h - 1, 0), high(2 * hi - 1, 0), mid(2 * hi - 1, 0);
  std::vector<FqCode> sa(a + h, a + n), sb(b + h, b + n);
  add_into(F, sa.data(), a, h);
  add_into(F, sb.data(), b, h);
  mul_kara(F, a, b, h, low.data());
  mul_kara(F, a + h, b + h, hi, high.data());
  mul_kara(F, sa.data(), sb.data(), hi, mid.data());
  sub_into(F, mid.data(), low.data(), low.size());
  sub_into(F, mid.data(), high.data(), high.size());
  add_into(F, out, low.data(), low.size());
  add_into(F, out + h, mid.data(), mid.size());
  add_into(F, out + 2 * h, high.data(), high.size());
}

void mul_general(const FiniteField& F, const FqCode* a, std::size_t na, const FqCode* b,
                 std::size_t nb, FqCode* out) {
  if (na < nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  if (nb <= kKaratsubaCutoff) {
    mul_school(F, a, na, b, nb, out);
    return;
  }
  // Split the longer operand into blocks of length nb.
  std::vector<FqCode> block(nb, 0), prod(2 * nb - 1);
  for (std::size_t start = 0; start < na; start += nb) {
    std::size_t len = std::min(nb, na - start);
    if (len < nb) {
      std::fill(prod.begin(), prod.end(), 0);
      mul_school(F, a + start, len, b, nb, prod.data());
      add_into(F, out + start, prod.data(), len + nb - 1);
      continue;
    }
    std::fill(prod.begin(), prod.end(), 0);
    mul_kara(F, a + start, b, nb, prod.data());
    add_into(F, out + start, prod.data(), prod.size());
  }
}

}  // namespace

FqPoly::FqPoly(const FiniteField& F, std::vector<FqCode> coeffs) : F_(&F), c_(std::move(coeffs)) {
  trim();
}

FqPoly FqPoly::constant(const FiniteField& F, FqCode c) {
  return FqPoly(F, std::vector<FqCode>{c});
}

FqPoly FqPoly::monomial(const FiniteField& F, FqCode c, int k) {
  std::vector<FqCode> v(k + 1, 0);
  v[k] = c;
  return FqPoly(F, std::move(v));
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  add_into(*F_, c_.data(), o.c_.data(), o.c_.size());
  trim();
  return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  sub_into(*F_, c_.data(), o.c_.data(), o.c_.size());
  trim();
  return *this;
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  if (a.is_zero() || b.is_zero()) return FqPoly(a.F_ ? *a.F_ : *b.F_);
  std::vector<FqCode> out(a.c_.size() + b.c_.size() - 1, 0);
  mul_general(*a.F_, a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size(), out.data());
  return FqPoly(*a.F_, std::move(out));
}

FqPoly& FqPoly::operator*=(const FqPoly& o) { return *this = *this * o; }

FqPoly& FqPoly::scale(FqCode c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  if (c == 1) return *this;
  const FqCode* row = F_->mul_row(c);
  for (auto& x : c_) x = row[x];
  return *this;
}

FqPoly FqPoly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<FqCode> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return FqPoly(*F_, std::move(v));
}

FqPoly FqPoly::pow(std::uint64_t e) const {
  FqPoly result = one_like();
  FqPoly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

FqPoly FqPoly::substitute_power(int k) const {
  if (is_zero()) return *this;
  std::vector<FqCode> v(static_cast<std::size_t>(degree()) * k + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return FqPoly(*F_, std::move(v));
}

FqPoly FqPoly::map_coeffs_pow(std::uint64_t e) const {
  FqPoly r = *this;
  for (auto& c : r.c_) c = F_->pow(c, e);
  return r;
}

FqCode FqPoly::eval(FqCode x) const noexcept {
  FqCode acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = F_->add(F_->mul(acc, x), *it);
  return acc;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& a, const FqPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const FiniteField& F = *b.F_;
  if (a.degree() < b.degree()) return {FqPoly(F), a};
  std::vector<FqCode> r = a.c_;
  int db = b.degree();
  std::vector<FqCode> quot(a.degree() - db + 1, 0);
  FqCode li = F.inv(b.lead());
  const bool two = F.char_two();
  for (int i = a.degree(); i >= db; --i) {
    FqCode c = r[i];
    if (c == 0) continue;
    FqCode qc = F.mul(c, li);
    quot[i - db] = qc;
    const FqCode* row = F.mul_row(qc);
    FqCode* o = r.data() + (i - db);
    if (two) {
      for (int j = 0; j <= db; ++j) o[j] ^= row[b.c_[j]];
    } else {
      for (int j = 0; j <= db; ++j) o[j] = F.sub(o[j], row[b.c_[j]]);
    }
  }
  r.resize(db);
  return {FqPoly(F, std::move(quot)), FqPoly(F, std::move(r))};
}

namespace {

// a <- a mod b in place; both trimmed, b nonzero.
void reduce_in_place(const FiniteField& F, std::vector<FqCode>& a, const std::vector<FqCode>& b) {
  int db = static_cast<int>(b.size()) - 1;
  FqCode li = F.inv(b.back());
  const bool two = F.char_two();
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    FqCode c = a[i];
    if (c == 0) continue;
    const FqCode* row = F.mul_row(F.mul(c, li));
    FqCode* o = a.data() + (i - db);
    if (two) {
      for (int j = 0; j <= db; ++j) o[j] ^= row[b[j]];
    } else {
      for (int j = 0; j <= db; ++j) o[j] = F.sub(o[j], row[b[j]]);
    }
  }
  a.resize(std::min<std::size_t>(a.size(), db));
  while (!a.empty() && a.back() == 0) a.pop_back();
}

using Word = std::uint64_t;

// Coefficients over GF(2^r) stored as r bit planes; plane k holds bit k of every coefficient.
struct BitPlanes {
  std::vector<std::vector<Word>> plane;
  int deg = -1;

  BitPlanes(const std::vector<FqCode>& c, int r) : plane(r, std::vector<Word>(c.size() / 64 + 2, 0)) {
    for (std::size_t j = 0; j < c.size(); ++j)
      for (int k = 0; k < r; ++k)
        if ((c[j] >> k) & 1) plane[k][j >> 6] |= Word(1) << (j & 63);
    deg = static_cast<int>(c.size()) - 1;
  }
  FqCode at(int j) const {
    FqCode c = 0;
    for (std::size_t k = 0; k < plane.size(); ++k) c |= static_cast<FqCode>(((plane[k][j >> 6] >> (j & 63)) & 1) << k);
    return c;
  }
  std::vector<FqCode> codes() const {
    std::vector<FqCode> c(deg + 1);
    for (int j = 0; j <= deg; ++j) c[j] = at(j);
    return c;
  }
};

// dst ^= src * x^s on the first `words` words of src.
void xor_shifted(std::vector<Word>& dst, const std::vector<Word>& src, int words, int s) {
  int ws = s >> 6, bs = s & 63;
  Word* d = dst.data() + ws;
  if (bs == 0) {
    for (int w = 0; w < words; ++w) d[w] ^= src[w];
    return;
  }
  for (int w = 0; w < words; ++w) {
    d[w] ^= src[w] << bs;
    d[w + 1] ^= src[w] >> (64 - bs);
  }
}

std::vector<FqCode> gcd_char_two(const FiniteField& F, const std::vector<FqCode>& a, const std::vector<FqCode>& b) {
  const int r = F.r();
  // masks[c][l] = bits of c * 2^l, the GF(2)-linear map of multiplication by c.
  std::vector<std::vector<FqCode>> masks(F.q(), std::vector<FqCode>(r));
  for (int c = 0; c < F.q(); ++c)
    for (int l = 0; l < r; ++l) masks[c][l] = F.mul(static_cast<FqCode>(c), static_cast<FqCode>(1 << l));
  BitPlanes x(a, r), y(b, r);
  while (y.deg >= 0) {
    int dy = y.deg, words = dy / 64 + 1;
    FqCode li = F.inv(y.at(dy));
    for (int i = x.deg; i >= dy; --i) {
      FqCode c = x.at(i);
      if (c == 0) continue;
      const auto& m = masks[F.mul(c, li)];
      for (int l = 0; l < r; ++l)
        for (int k = 0; k < r; ++k)
          if ((m[l] >> k) & 1) xor_shifted(x.plane[k], y.plane[l], words, i - dy);
    }
    x.deg = dy - 1;
    while (x.deg >= 0 && x.at(x.deg) == 0) --x.deg;
    std::swap(x, y);
  }
  return x.codes();
}

}  // namespace

FqPoly gcd(FqPoly a, FqPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  if (b.is_zero()) return a.is_zero() ? a : a.monic();
  const FiniteField& F = a.field();
  if (F.char_two() && b.degree() >= 64) return FqPoly(F, gcd_char_two(F, a.coeffs(), b.coeffs())).monic();
  std::vector<FqCode> x = a.coeffs(), y = b.coeffs();
  while (!y.empty()) {
    reduce_in_place(F, x, y);
    std::swap(x, y);
  }
  return FqPoly(F, std::move(x)).monic();
}

}  // namespace drinfeld
