#include "drinfeld/matrix.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

KMatrix::KMatrix(const KContext& ctx, int rows, int cols)
    : ctx_(&ctx), rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, KElem::zero(ctx)) {}

KMatrix KMatrix::identity(const KContext& ctx, int n) { return scalar(KElem::one(ctx), n); }

KMatrix KMatrix::scalar(const KElem& c, int n) {
  KMatrix m(c.context(), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

KMatrix& KMatrix::operator+=(const KMatrix& o) {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
  return *this;
}

KMatrix& KMatrix::operator-=(const KMatrix& o) {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
  return *this;
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
  KMatrix r(*a.ctx_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const KElem& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

KMatrix KMatrix::operator-() const {
  KMatrix r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

KMatrix KMatrix::scaled(const KElem& c) const {
  KMatrix r = *this;
  for (auto& x : r.e_)
    if (!x.is_zero()) x *= c;
  return r;
}

KMatrix KMatrix::twisted(int k) const {
  KMatrix r = *this;
  for (auto& x : r.e_) x = x.frobenius(k);
  return r;
}

bool KMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool KMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

std::optional<std::vector<KElem>> solve_linear(const KContext& ctx, std::vector<std::vector<KElem>> A,
                                               std::vector<KElem> b) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = row;
    while (p < m && A[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(A[p], A[row]);
    std::swap(b[p], b[row]);
    KElem inv = A[row][col].inverse();
    for (int j = col; j < n; ++j) A[row][j] *= inv;
    b[row] *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || A[i][col].is_zero()) continue;
      KElem f = A[i][col];
      for (int j = col; j < n; ++j)
        if (!A[row][j].is_zero()) A[i][j] -= f * A[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  if (row < n) return std::nullopt;
  std::vector<KElem> x(n, KElem::zero(ctx));
  for (int i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<std::vector<KElem>> solve_constants(const CurveFunc& target, const std::vector<CurveFunc>& basis) {
  const KContext& ctx = target.context();
  KPoly L = target.den();
  for (const auto& g : basis) L = L / gcd(L, g.den()) * g.den();
  auto cleared = [&](const CurveFunc& F) {
    KPoly s = L / F.den();
    return std::make_pair(F.numU() * s, F.numV() * s);
  };
  auto [tu, tv] = cleared(target);
  std::vector<std::pair<KPoly, KPoly>> cols;
  int du = tu.degree(), dv = tv.degree();
  for (const auto& g : basis) {
    cols.push_back(cleared(g));
    du = std::max(du, cols.back().first.degree());
    dv = std::max(dv, cols.back().second.degree());
  }
  std::vector<std::vector<KElem>> A;
  std::vector<KElem> b;
  for (int k = 0; k <= du; ++k) {
    std::vector<KElem> row;
    for (const auto& c : cols) row.push_back(c.first.coeff(k));
    A.push_back(std::move(row));
    b.push_back(tu.coeff(k));
  }
  for (int k = 0; k <= dv; ++k) {
    std::vector<KElem> row;
    for (const auto& c : cols) row.push_back(c.second.coeff(k));
    A.push_back(std::move(row));
    b.push_back(tv.coeff(k));
  }
  auto x = solve_linear(ctx, std::move(A), std::move(b));
  if (!x) return x;
  CurveFunc check = CurveFunc::zero(ctx);
  for (std::size_t j = 0; j < basis.size(); ++j) check += basis[j].scaled((*x)[j]);
  if (!(check == target)) return std::nullopt;
  return x;
}

}  // namespace drinfeld
