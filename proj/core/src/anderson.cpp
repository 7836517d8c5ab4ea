#include "drinfeld/anderson.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"

namespace drinfeld {

KMatrix diag_pattern(const KContext& ctx, int n, int i, const std::vector<KElem>& entries) {
  KMatrix m(ctx, n, n);
  int len = n - (i < 0 ? -i : i);
  if (len <= 0) return m;
  if (!entries.empty() && static_cast<int>(entries.size()) != len) throw DomainError("wrong number of pattern entries");
  for (int k = 0; k < len; ++k) {
    KElem x = entries.empty() ? KElem::one(ctx) : entries[k];
    if (i >= 0)
      m(k, k + i) = x;
    else
      m(k - i, k) = x;
  }
  return m;
}

KMatrix wrap_pattern(const KContext& ctx, int n, int i, const std::vector<KElem>& entries) {
  return diag_pattern(ctx, n, i - n, entries);
}

TauPoly::TauPoly(KMatrix c0) : ctx_(&c0.context()), n_(c0.rows()) {
  c_.push_back(std::move(c0));
  trim();
}

TauPoly TauPoly::scalar(const KElem& c, int n) { return TauPoly(KMatrix::scalar(c, n)); }

KMatrix TauPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return KMatrix(*ctx_, n_, n_);
  return c_[k];
}

void TauPoly::set_coeff(int k, KMatrix m) {
  while (degree() < k) c_.emplace_back(*ctx_, n_, n_);
  c_[k] = std::move(m);
  trim();
}

void TauPoly::add_to(int k, int i, int j, const KElem& x) {
  while (degree() < k) c_.emplace_back(*ctx_, n_, n_);
  c_[k](i, j) += x;
  trim();
}

void TauPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
  if (!ctx_) *this = TauPoly(o.context(), o.n_);
  for (int k = 0; k <= o.degree(); ++k) {
    if (k > degree()) c_.push_back(o.c_[k]);
    else c_[k] += o.c_[k];
  }
  trim();
  return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
  if (!ctx_) *this = TauPoly(o.context(), o.n_);
  for (int k = 0; k <= o.degree(); ++k) {
    if (k > degree()) c_.push_back(-o.c_[k]);
    else c_[k] -= o.c_[k];
  }
  trim();
  return *this;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
  if (a.is_zero() || b.is_zero()) return TauPoly(a.ctx_ ? *a.ctx_ : *b.ctx_, a.n_ ? a.n_ : b.n_);
  TauPoly r(*a.ctx_, a.n_);
  r.c_.assign(a.c_.size() + b.c_.size() - 1, KMatrix(*a.ctx_, a.n_, a.n_));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j].twisted(i);
  r.trim();
  return r;
}

AndersonModule build_module(const KContext& ctx, const TensorBasis& B) {
  const int n = B.n;
  AndersonModule M;
  M.n = n;
  M.rho_t = TauPoly(ctx, n);
  M.rho_y = TauPoly(ctx, n);
  KElem one = KElem::one(ctx);
  auto place = [&](TauPoly& rho, int i, int offset, const KElem& c) {
    int idx = i + offset - 1;
    rho.add_to(idx / n, i - 1, idx % n, c);
  };
  for (int i = 1; i <= n; ++i) {
    place(M.rho_t, i, 0, KElem::theta(ctx));
    place(M.rho_t, i, 1, B.a[i - 1]);
    place(M.rho_t, i, 2, one);
    place(M.rho_y, i, 0, KElem::eta(ctx));
    place(M.rho_y, i, 1, B.yc[i - 1]);
    place(M.rho_y, i, 2, B.zc[i - 1]);
    place(M.rho_y, i, 3, one);
  }
  M.d_theta = M.rho_t.coeff(0);
  M.d_eta = M.rho_y.coeff(0);
  M.E_theta = M.rho_t.coeff(1);
  M.E_eta = M.rho_y.coeff(1);
  ModuleCheck c = check_module(ctx, M);
  if (!c.commute) throw InternalError("rho_t and rho_y do not commute");
  if (!c.weierstrass) throw InternalError("rho_t, rho_y do not satisfy the curve equation");
  return M;
}

ModuleCheck check_module(const KContext& ctx, const AndersonModule& M) {
  ModuleCheck c;
  const TauPoly& T = M.rho_t;
  const TauPoly& Y = M.rho_y;
  c.commute = T * Y == Y * T;
  const auto& w = ctx.coeffs();
  auto s = [&](FqCode x) { return TauPoly::scalar(KElem::constant(ctx, x), M.n); };
  TauPoly lhs = Y * Y + s(w.a1) * T * Y + s(w.a3) * Y;
  TauPoly rhs = T * T * T + s(w.a2) * T * T + s(w.a4) * T + s(w.a6);
  c.weierstrass = lhs == rhs;
  return c;
}

namespace {

// Evaluates U(x) + V(x) y for a in A, with Horner's rule in any ring supporting + and *.
template <class R, class Scalar>
R eval_in_A(const KElem& a, const R& x, const R& y, Scalar scalar) {
  if (!a.in_A()) throw DomainError("element is not in A");
  auto horner = [&](const FqPoly& p) {
    R acc = scalar(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + scalar(p.coeff(k));
    return acc;
  };
  return horner(a.U()) + horner(a.V()) * y;
}

}  // namespace

KMatrix d_of(const AndersonModule& M, const KElem& a) {
  const KContext& ctx = a.context();
  return eval_in_A<KMatrix>(a, M.d_theta, M.d_eta,
                            [&](FqCode c) { return KMatrix::scalar(KElem::constant(ctx, c), M.n); });
}

TauPoly rho_of(const AndersonModule& M, const KElem& a) {
  const KContext& ctx = a.context();
  return eval_in_A<TauPoly>(a, M.rho_t, M.rho_y,
                            [&](FqCode c) { return TauPoly::scalar(KElem::constant(ctx, c), M.n); });
}

ExpRecursionData recursion_data(const KContext& ctx, const AndersonModule& M, const TensorBasis& B) {
  const int n = M.n;
  KElem th = KElem::theta(ctx), eta = KElem::eta(ctx);
  std::vector<KElem> zmod;
  auto a_next = [&](int i) { return i < n ? B.a[i] : B.a[0].frobenius(1); };
  for (int i = 1; i <= n; ++i) zmod.push_back(B.zc[i - 1] - a_next(i));
  ExpRecursionData R;
  R.M_m = diag_pattern(ctx, n, 0, zmod);
  TauPoly Mtau(diag_pattern(ctx, n, 1));
  Mtau.set_coeff(1, wrap_pattern(ctx, n, 1));
  TauPoly L = M.rho_y - (Mtau + TauPoly(R.M_m)) * M.rho_t;
  if (L.degree() > 1) throw InternalError("recursion operator has tau-degree above 1");
  R.M_1 = L.coeff(0);
  R.M_2 = L.coeff(1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (!R.M_1(i, j).is_zero()) throw InternalError("M_1 is not upper triangular");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i != n - 1 || j != 0) && !R.M_2(i, j).is_zero()) throw InternalError("M_2 is not a corner matrix");

  std::vector<KElem> p, r;
  for (int i = 1; i <= n; ++i) {
    p.push_back(eta - th * zmod[i - 1]);
    KElem thi = i < n ? th : th.frobenius(1);
    r.push_back(B.yc[i - 1] - thi - B.a[i - 1] * zmod[i - 1]);
  }
  R.M_1_formal = diag_pattern(ctx, n, 0, p);
  if (n > 1) R.M_1_formal += diag_pattern(ctx, n, 1, std::vector<KElem>(r.begin(), r.end() - 1));
  R.M_2_formal = wrap_pattern(ctx, n, 1, {r.back()});
  return R;
}

KMatrix BetaMap::operator()(const KMatrix& Y) const {
  KMatrix T = Y * N_eta_i - (N_1 * Y).scaled(theta_qi) - M_m * Y * N_theta_i - N_1 * Y * N_theta_i - M_n * Y;
  return M_D_inv * T;
}

BetaMap beta_map(const KContext& ctx, const AndersonModule& M, const ExpRecursionData& R, int i) {
  const int n = M.n;
  KElem thq = KElem::theta(ctx).frobenius(i);
  KElem etq = KElem::eta(ctx).frobenius(i);
  BetaMap b;
  b.theta_qi = thq;
  b.N_1 = diag_pattern(ctx, n, 1);
  b.M_m = R.M_m;
  b.N_theta_i = (M.d_theta - KMatrix::scalar(KElem::theta(ctx), n)).twisted(i);
  b.N_eta_i = (M.d_eta - KMatrix::scalar(KElem::eta(ctx), n)).twisted(i);
  KMatrix M_d(ctx, n, n);
  for (int k = 0; k < n; ++k) M_d(k, k) = R.M_1(k, k);
  b.M_n = R.M_1 - M_d;
  b.M_D_inv = KMatrix(ctx, n, n);
  for (int k = 0; k < n; ++k) {
    KElem d = etq - thq * R.M_m(k, k) - M_d(k, k);
    if (d.is_zero()) throw InternalError("M_D is singular");
    b.M_D_inv(k, k) = d.inverse();
  }
  return b;
}

bool md_singular(const KContext& ctx, const ExpRecursionData& R, int i) {
  KElem thq = KElem::theta(ctx).frobenius(i);
  KElem etq = KElem::eta(ctx).frobenius(i);
  for (int k = 0; k < R.M_m.rows(); ++k)
    if ((etq - thq * R.M_m(k, k) - R.M_1(k, k)).is_zero()) return true;
  return false;
}

namespace {

// Y with Y Dp - D Y = Rhs for upper triangular D, Dp whose diagonals are d and dp != d.
KMatrix solve_sylvester_upper(const KMatrix& D, const KMatrix& Dp, const KMatrix& Rhs) {
  const int n = D.rows();
  KElem gap = Dp(0, 0) - D(0, 0);
  KElem ginv = gap.inverse();
  KMatrix Y(D.context(), n, n);
  for (int j = n - 1; j >= 0; --j)
    for (int k = 0; k < n; ++k) {
      KElem s = Rhs(j, k);
      for (int l = 0; l < k; ++l) s -= Y(j, l) * Dp(l, k);
      for (int l = j + 1; l < n; ++l) s += D(j, l) * Y(l, k);
      Y(j, k) = s * ginv;
    }
  return Y;
}

KMatrix functional_step(const AndersonModule& M, const std::vector<KMatrix>& Q, int i) {
  const KContext& ctx = M.d_theta.context();
  KMatrix rhs(ctx, M.n, M.n);
  for (int k = 1; k <= std::min(i, M.rho_t.degree()); ++k) rhs += M.rho_t.coeff(k) * Q[i - k].twisted(k);
  return solve_sylvester_upper(M.d_theta, M.d_theta.twisted(i), rhs);
}

KMatrix recurrence_W(const KContext& ctx, const AndersonModule& M, const ExpRecursionData& R, const KMatrix& Qprev,
                     int i) {
  KMatrix Qt = Qprev.twisted(1);
  return R.M_2 * Qt + wrap_pattern(ctx, M.n, 1) * Qt * M.d_theta.twisted(i);
}

}  // namespace

CoeffSeries exp_coeffs_recursive(const KContext& ctx, const AndersonModule& M, const TensorBasis& B, int m) {
  if (m < 0) throw DomainError("number of coefficients must be nonnegative");
  ExpRecursionData R = recursion_data(ctx, M, B);
  CoeffSeries Q;
  Q.mats.push_back(KMatrix::identity(ctx, M.n));
  for (int i = 1; i <= m; ++i) {
    if (md_singular(ctx, R, i)) {
      Q.mats.push_back(functional_step(M, Q.mats, i));
      Q.fallback_steps.push_back(i);
      if (!recurrence_residual(ctx, M, R, Q, i).is_zero()) throw InternalError("exponential recurrence not satisfied");
      continue;
    }
    BetaMap beta = beta_map(ctx, M, R, i);
    KMatrix term = beta.M_D_inv * recurrence_W(ctx, M, R, Q.mats.back(), i);
    KMatrix sum = term;
    for (int j = 1; j <= 2 * M.n - 1; ++j) {
      term = -beta(term);
      if (term.is_zero()) break;
      sum += term;
    }
    Q.mats.push_back(sum);
    if (!recurrence_residual(ctx, M, R, Q, i).is_zero()) throw InternalError("exponential recurrence not satisfied");
  }
  return Q;
}

CoeffSeries exp_coeffs_functional(const KContext& ctx, const AndersonModule& M, int m) {
  if (m < 0) throw DomainError("number of coefficients must be nonnegative");
  CoeffSeries Q;
  Q.mats.push_back(KMatrix::identity(ctx, M.n));
  for (int i = 1; i <= m; ++i) Q.mats.push_back(functional_step(M, Q.mats, i));
  return Q;
}

KMatrix recurrence_residual(const KContext& ctx, const AndersonModule& M, const ExpRecursionData& R,
                            const CoeffSeries& Q, int i) {
  const KMatrix& Qi = Q.mats.at(i);
  KMatrix lhs = recurrence_W(ctx, M, R, Q.mats.at(i - 1), i);
  KMatrix rhs = Qi * M.d_eta.twisted(i) - (diag_pattern(ctx, M.n, 1) + R.M_m) * Qi * M.d_theta.twisted(i) - R.M_1 * Qi;
  return lhs - rhs;
}

CoeffSeries exp_coeffs(const KContext& ctx, const AndersonModule& M, const ShtukaData& S, const TensorBasis& B,
                       int m) {
  if (M.n >= 2) return exp_coeffs_recursive(ctx, M, B, m);
  if (m < 0) throw DomainError("number of coefficients must be nonnegative");
  CoeffSeries Q;
  for (int i = 0; i <= m; ++i) Q.mats.push_back(KMatrix::scalar(drinfeld_exp_coeff(ctx, S, i), 1));
  return Q;
}

CoeffSeries log_coeffs(const CoeffSeries& Q) {
  CoeffSeries P;
  P.kind = SeriesKind::log;
  if (Q.mats.empty()) return P;
  const KContext& ctx = Q.mats[0].context();
  int n = Q.mats[0].rows();
  P.mats.push_back(KMatrix::identity(ctx, n));
  for (std::size_t i = 1; i < Q.mats.size(); ++i) {
    KMatrix s(ctx, n, n);
    for (std::size_t j = 0; j < i; ++j) s += P.mats[j] * Q.mats[i - j].twisted(static_cast<int>(j));
    P.mats.push_back(-s);
  }
  return P;
}

std::vector<KElem> exp_first_column(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int i) {
  Point Xi = point_frobenius(ctx, xi_point(ctx), i);
  std::vector<CurveFunc> den{B.g[0].twisted(i)};
  for (int k = 0; k < i; ++k) den.push_back(S.f.twisted(k).pow(B.n));
  KElem d = cf_eval_product(ctx, den, Xi);
  std::vector<KElem> col;
  for (int l = 0; l < B.n; ++l) col.push_back(cf_eval(ctx, B.g[l], Xi) / d);
  return col;
}

KMatrix log_residue_matrix(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int i) {
  const int n = B.n;
  Point Xi = xi_point(ctx);
  std::vector<CurveFunc> den;
  for (int k = 0; k <= i; ++k) den.push_back(S.f.twisted(k).pow(-n));
  KMatrix P(ctx, n, n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      std::vector<CurveFunc> fac = den;
      fac.push_back(B.g[j - 1]);
      fac.push_back(B.h[n - k].twisted(i));
      P(j - 1, k - 1) = cf_residue_product(ctx, fac, Xi);
    }
  return P;
}

std::vector<KElem> log_bottom_row(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int i) {
  const int n = B.n;
  Point Xi = xi_point(ctx);
  std::vector<CurveFunc> den{B.h[0].inverse()};
  for (int k = 1; k <= i; ++k) den.push_back(S.f.twisted(k).pow(-n));
  std::vector<KElem> row;
  for (int k = 1; k <= n; ++k) {
    std::vector<CurveFunc> fac = den;
    fac.push_back(B.h[n - k].twisted(i));
    row.push_back(cf_eval_product(ctx, fac, Xi));
  }
  return row;
}

KElem drinfeld_exp_coeff(const KContext& ctx, const ShtukaData& S, int i) {
  Point Xi = point_frobenius(ctx, xi_point(ctx), i);
  std::vector<CurveFunc> den;
  for (int k = 0; k < i; ++k) den.push_back(S.f.twisted(k));
  if (den.empty()) return KElem::one(ctx);
  return cf_eval_product(ctx, den, Xi).inverse();
}

KElem drinfeld_log_coeff(const KContext& ctx, const ShtukaData& S, int i) {
  std::vector<CurveFunc> fac{S.delta.twisted(i + 1), S.delta.twisted(1).inverse()};
  for (int k = 1; k <= i; ++k) fac.push_back(S.f.twisted(k).inverse());
  return cf_eval_product(ctx, fac, xi_point(ctx));
}

FunctionalCheck functional_equation_check(const AndersonModule& M, const CoeffSeries& Q, const KElem& a, int depth) {
  TauPoly rho = rho_of(M, a);
  KMatrix da = d_of(M, a);
  FunctionalCheck c;
  if (depth >= static_cast<int>(Q.mats.size())) throw DomainError("not enough exponential coefficients");
  for (int k = 0; k <= depth; ++k) {
    KMatrix lhs = Q.mats[k] * da.twisted(k);
    KMatrix rhs(a.context(), M.n, M.n);
    for (int j = 0; j <= std::min(k, rho.degree()); ++j) rhs += rho.coeff(j) * Q.mats[k - j].twisted(j);
    if (!(lhs == rhs)) {
      c.ok = false;
      c.first_bad = k;
      return c;
    }
  }
  return c;
}

}  // namespace drinfeld
