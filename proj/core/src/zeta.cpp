#include "drinfeld/zeta.hpp"

#include "drinfeld/anderson.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/local.hpp"

namespace drinfeld {

namespace {

// theta^k for even degree 2k, theta^k eta for odd degree 2k + 3.
KElem monomial_of_degree(const KContext& ctx, int d) {
  const FiniteField& F = ctx.field();
  if (d % 2 == 0) return KElem::from_poly(ctx, FqPoly::monomial(F, 1, d / 2));
  return KElem::from_poly(ctx, FqPoly(F), FqPoly::monomial(F, 1, (d - 3) / 2));
}

CurveFunc negated_argument(const KContext& ctx, const CurveFunc& F) {
  const auto& a = ctx.coeffs();
  KPoly corr(ctx, {KElem::constant(ctx, a.a3), KElem::constant(ctx, a.a1)});
  return CurveFunc(F.numU() - F.numV() * corr, -F.numV(), F.den());
}

}  // namespace

std::vector<KElem> monic_enumerate(const KContext& ctx, int d) {
  if (d < 0) throw DomainError("degree must be nonnegative");
  if (d == 1) return {};
  std::vector<KElem> lower;
  for (int k = 0; k < d; ++k)
    if (k != 1) lower.push_back(monomial_of_degree(ctx, k));
  const int q = ctx.q();
  std::vector<KElem> out{monomial_of_degree(ctx, d)};
  for (const KElem& m : lower) {
    std::vector<KElem> next;
    next.reserve(out.size() * q);
    for (const KElem& x : out)
      for (int c = 0; c < q; ++c) next.push_back(c == 0 ? x : x + m.scaled(static_cast<FqCode>(c)));
    out = std::move(next);
  }
  return out;
}

KElem power_sum_bruteforce(const KContext& ctx, int i, int s) {
  if (s < 1) throw DomainError("power sums need s >= 1");
  KElem sum = KElem::zero(ctx);
  for (const KElem& a : monic_enumerate(ctx, i)) sum += a.pow(s).inverse();
  return sum;
}

CurveFunc w_line(const KContext& ctx, const ShtukaData& S, int i) {
  if (i < 2) throw RangeUnsupported("w_i is defined for i >= 2");
  Point Vi = point_frobenius(ctx, S.V, i - 1);
  Point A = point_sub(ctx, Vi, S.V);
  Point Bm = point_negate(ctx, Vi);
  if (A.is_infinity()) throw InternalError("V^(i-1) = V");
  CurveFunc w = line_through(ctx, A, S.V);
  if (w.numV().is_zero()) throw InternalError("w_i is a vertical line");
  if (!cf_eval(ctx, w, Bm).is_zero()) throw InternalError("w_i does not vanish at -V^(i-1)");
  return w;
}

KElem power_sum_closed(const KContext& ctx, const ShtukaData& S, int i, int s) {
  if (s < 1 || s > ctx.q() - 1) throw RangeUnsupported("closed power sums need 1 <= s <= q-1");
  std::vector<CurveFunc> fac{S.nu.twisted(i), w_line(ctx, S, i).twisted(1).inverse()};
  for (int k = 1; k <= i; ++k) fac.push_back(S.f.twisted(k).inverse());
  return cf_eval_product(ctx, fac, xi_point(ctx)).pow(s);
}

CurveFunc script_G(const KContext& ctx, const ShtukaData& S) {
  const KElem& alpha = S.V.x();
  const KElem& beta = S.V.y();
  if (!alpha.in_A() || !beta.in_A()) throw DomainError("V must have coordinates in A");
  const auto& co = ctx.coeffs();
  CurveFunc ab = CurveFunc::chi(alpha), bb = CurveFunc::chi(beta);
  CurveFunc c1 = CurveFunc::constant(KElem::constant(ctx, co.a1));
  CurveFunc c3 = CurveFunc::constant(KElem::constant(ctx, co.a3));
  CurveFunc tail = bb + c1 * ab + c3;
  CurveFunc first = (CurveFunc::constant(beta) + tail) / (CurveFunc::constant(alpha) - ab);
  CurveFunc second = (bb.pow(ctx.q()) + tail) / (ab.pow(ctx.q()) - ab);
  return first - second;
}

void require_class_number_one(const KContext& ctx) {
  long long h = class_number(ctx);
  if (h != 1) throw ClassNumberUnsupported(h);
}

KElem zeta_constant(const KContext& ctx, const ShtukaData& S, const TensorBasis& B) {
  (void)S;
  const int n = B.n;
  KElem h1 = cf_eval(ctx, B.h[0], point_negate(ctx, xi_point(ctx)));
  KElem c = h1 / (KElem::theta(ctx) - B.P[n].x());
  return n % 2 == 0 ? -c : c;
}

CurveFunc sigma_basis_twisted(const ShtukaData& S, const TensorBasis& B, int j, int k, int J) {
  return f_product_power(S, J - j + 1, J, B.n) * B.h[B.n - k].twisted(J - j);
}

namespace {

CurveFunc expansion_target(const KContext& ctx, const ShtukaData& S, int n, const KElem& b) {
  CurveFunc F = (S.f * script_G(ctx, S)).pow(n) * CurveFunc::chi(b);
  return n % 2 == 0 ? F : -F;
}

// Lazily built sigma_basis_twisted(S, B, j, k, J) for fixed J.
class TwistedBasis {
 public:
  TwistedBasis(const ShtukaData& S, const TensorBasis& B, int J)
      : S_(S), B_(B), J_(J), fprod_{CurveFunc::one(S.f.context())}, cache_(J + 1, std::vector<CurveFunc>(B.n)) {}

  const CurveFunc& operator()(int j, int k) {
    CurveFunc& slot = cache_[j][k - 1];
    if (slot.is_zero()) {
      while (static_cast<int>(fprod_.size()) <= j) fprod_.push_back(fprod_.back() * S_.f.twisted(J_ - fprod_.size() + 1));
      slot = fprod_[j].pow(B_.n) * B_.h[B_.n - k].twisted(J_ - j);
    }
    return slot;
  }

 private:
  const ShtukaData& S_;
  const TensorBasis& B_;
  int J_;
  std::vector<CurveFunc> fprod_;
  std::vector<std::vector<CurveFunc>> cache_;
};

CurveFunc reduce(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, SigmaExpansion& E) {
  const int n = B.n;
  CurveFunc F = expansion_target(ctx, S, n, E.b);
  if (!F.is_polynomial()) throw InternalError("(-1)^n f^n b G^n is not a polynomial");
  TwistedBasis basis(S, B, E.J);
  E.dJ.assign(E.J + 1, std::vector<KElem>(n, KElem::zero(ctx)));
  CurveFunc R = F.twisted(E.J);
  while (!R.is_zero()) {
    auto [deg, sgn] = R.deg_sgn();
    if (deg < n + 1) throw InternalError("nonzero remainder below the sigma basis degrees");
    int j = (deg - 1) / n - 1;
    int m = deg - n * (j + 1);
    int k = n - m + 1;
    if (j > E.J) throw InternalError("sigma expansion needs more than q + e twists");
    E.dJ[j][k - 1] = sgn;
    R -= basis(j, k).scaled(sgn);
  }
  // Independent reconstruction from the recorded coefficients.
  CurveFunc rebuilt = CurveFunc::zero(ctx);
  for (int j = 0; j <= E.J; ++j)
    for (int k = 1; k <= n; ++k)
      if (!E.dJ[j][k - 1].is_zero()) rebuilt += basis(j, k).scaled(E.dJ[j][k - 1]);
  return F.twisted(E.J) - rebuilt;
}

}  // namespace

SigmaExpansion sigma_expand(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b) {
  require_class_number_one(ctx);
  const int n = B.n;
  if (n > ctx.q() - 1) throw RangeUnsupported("zeta values need n <= q-1");
  if (b.is_zero() || !b.in_A()) throw DomainError("b must be a nonzero element of A");
  SigmaExpansion E;
  E.n = n;
  E.b = b;
  int db = b.degree();
  E.e = db / n;
  E.b_prime = db % n;
  E.J = ctx.q() + E.e;
  E.residual = reduce(ctx, S, B, E);

  E.d_total.assign(n, KElem::zero(ctx));
  for (int j = 0; j <= E.J; ++j) {
    std::vector<KElem> row;
    for (int k = 0; k < n; ++k) {
      KRoot r = KRoot::root_of(E.dJ[j][k], E.J - j);
      if (r.depth != 0) throw InternalError("sigma expansion coefficient is not in K");
      E.d_total[k] += r.power;
      row.push_back(r.power);
    }
    E.d_twisted.push_back(std::move(row));
  }
  E.C = zeta_constant(ctx, S, B);
  return E;
}

KElem zeta_term(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b, const KElem& C,
                int i) {
  const int n = B.n;
  CurveFunc fg = -(S.f * script_G(ctx, S));
  std::vector<CurveFunc> fac{CurveFunc::chi(b), fg.pow(n).twisted(i), B.h[0].inverse()};
  for (int k = 1; k <= i; ++k) fac.push_back(S.f.twisted(k).pow(-n));
  return cf_eval_product(ctx, fac, xi_point(ctx)) / C;
}

KElem regrouped_term(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const SigmaExpansion& E,
                     int i) {
  KElem sum = KElem::zero(ctx);
  for (int j = 0; j <= std::min(i, E.J); ++j) {
    bool any = false;
    for (const KElem& d : E.d_twisted[j]) any = any || !d.is_zero();
    if (!any) continue;
    auto row = log_bottom_row(ctx, S, B, i - j);
    for (int k = 0; k < E.n; ++k) sum += row[k] * E.d_twisted[j][k].frobenius(i - j);
  }
  return sum;
}

bool delta_twist_identity(const KContext& ctx, const ShtukaData& S, const TensorBasis& B) {
  const int n = B.n;
  CurveFunc lhs = S.delta.twisted(1).pow(n) * (CurveFunc::t(ctx) - CurveFunc::constant(B.P[n].x()));
  CurveFunc rhs = B.h[0] * negated_argument(ctx, B.h[0]);
  if (n % 2 == 0) rhs = -rhs;
  return lhs == rhs;
}

bool ZetaReport::ok() const {
  if (!reconstruction || !top_vanishing || !delta_identity) return false;
  for (const auto& t : terms)
    if (!t.ok) return false;
  return true;
}

ZetaVector zeta_vector(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b, int terms) {
  ZetaVector out;
  out.expansion = sigma_expand(ctx, S, B, b);
  const SigmaExpansion& E = out.expansion;
  out.report.reconstruction = E.residual.is_zero();
  bool top = true;
  for (int k = 0; k < E.n - E.b_prime; ++k) top = top && E.dJ[E.J][k].is_zero();
  out.report.top_vanishing = top;
  out.report.delta_identity = delta_twist_identity(ctx, S, B);
  for (int i = 0; i <= terms; ++i) {
    ZetaTermCheck c;
    c.i = i;
    c.term = zeta_term(ctx, S, B, b, E.C, i);
    c.expected = b * power_sum_bruteforce(ctx, i, E.n);
    c.regrouped = regrouped_term(ctx, S, B, E, i);
    c.ok = c.term == c.expected && c.regrouped == E.C * c.expected;
    out.report.terms.push_back(std::move(c));
  }
  return out;
}

}  // namespace drinfeld
