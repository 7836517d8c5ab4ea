#pragma once

#include <string>
#include <vector>

#include "drinfeld/matrix.hpp"
#include "drinfeld/shtuka.hpp"

namespace drinfeld {

// N_i(entries): entries along the i-th superdiagonal (i > 0) or subdiagonal (i < 0); all ones if empty.
KMatrix diag_pattern(const KContext& ctx, int n, int i, const std::vector<KElem>& entries = {});
// E_i = N_{i-n}.
KMatrix wrap_pattern(const KContext& ctx, int n, int i, const std::vector<KElem>& entries = {});

// sum_k c_k tau^k over Mat_n(K), with tau M = M^(1) tau.
class TauPoly {
 public:
  TauPoly() = default;
  TauPoly(const KContext& ctx, int n) : ctx_(&ctx), n_(n) {}
  explicit TauPoly(KMatrix c0);
  static TauPoly scalar(const KElem& c, int n);

  int dim() const noexcept { return n_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const KContext& context() const noexcept { return *ctx_; }
  KMatrix coeff(int k) const;
  void set_coeff(int k, KMatrix m);
  void add_to(int k, int i, int j, const KElem& x);
  bool is_zero() const noexcept { return c_.empty(); }

  TauPoly& operator+=(const TauPoly& o);
  TauPoly& operator-=(const TauPoly& o);
  friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
  friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
  friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
  bool operator==(const TauPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

 private:
  void trim();

  const KContext* ctx_ = nullptr;
  int n_ = 0;
  std::vector<KMatrix> c_;
};

struct AndersonModule {
  int n = 0;
  KMatrix d_theta, d_eta, E_theta, E_eta;
  TauPoly rho_t, rho_y;
};

// Assembles rho_t, rho_y row by row from t g_i and y g_i written in the extended g basis.
AndersonModule build_module(const KContext& ctx, const TensorBasis& B);

struct ModuleCheck {
  bool commute = false;
  bool weierstrass = false;
};
ModuleCheck check_module(const KContext& ctx, const AndersonModule& M);

// d[a] for a = U(theta) + V(theta) eta in A.
KMatrix d_of(const AndersonModule& M, const KElem& a);
// rho_a for a in A.
TauPoly rho_of(const AndersonModule& M, const KElem& a);

struct ExpRecursionData {
  KMatrix M_m, M_1, M_2;
  // Same matrices from the formal evaluation of p_i, r_i at t = y = 0.
  KMatrix M_1_formal, M_2_formal;
};
ExpRecursionData recursion_data(const KContext& ctx, const AndersonModule& M, const TensorBasis& B);

// The linear map Y -> M_D^{-1}(Y N_eta^(i) - theta^{q^i} N_1 Y - M_m Y N_theta^(i) - N_1 Y N_theta^(i) - M_n Y).
struct BetaMap {
  KMatrix M_D_inv, N_eta_i, N_theta_i, N_1, M_m, M_n;
  KElem theta_qi;
  KMatrix operator()(const KMatrix& Y) const;
};
BetaMap beta_map(const KContext& ctx, const AndersonModule& M, const ExpRecursionData& R, int i);
// Whether the diagonal matrix eta^{q^i} I - theta^{q^i} M_m - diag(M_1) has a zero entry.
bool md_singular(const KContext& ctx, const ExpRecursionData& R, int i);

enum class SeriesKind { exp, log };

struct CoeffSeries {
  SeriesKind kind = SeriesKind::exp;
  std::vector<KMatrix> mats;
  // Steps i at which M_D was singular and Q_i came from the rho_t functional equation.
  std::vector<int> fallback_steps;
};

CoeffSeries exp_coeffs(const KContext& ctx, const AndersonModule& M, const ShtukaData& S, const TensorBasis& B,
                       int m);
// Same coefficients from the recursion, including n = 1.
CoeffSeries exp_coeffs_recursive(const KContext& ctx, const AndersonModule& M, const TensorBasis& B, int m);
// Same coefficients from Q_i d[theta]^(i) - d[theta] Q_i = sum_{k>=1} (rho_t)_k Q_{i-k}^(k).
CoeffSeries exp_coeffs_functional(const KContext& ctx, const AndersonModule& M, int m);
// Left side minus right side of the exponential recurrence at step i.
KMatrix recurrence_residual(const KContext& ctx, const AndersonModule& M, const ExpRecursionData& R,
                            const CoeffSeries& Q, int i);

CoeffSeries log_coeffs(const CoeffSeries& Q);

// Oracles in terms of g, h, f.
std::vector<KElem> exp_first_column(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int i);
KMatrix log_residue_matrix(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int i);
std::vector<KElem> log_bottom_row(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, int i);
KElem drinfeld_exp_coeff(const KContext& ctx, const ShtukaData& S, int i);
KElem drinfeld_log_coeff(const KContext& ctx, const ShtukaData& S, int i);

struct FunctionalCheck {
  bool ok = true;
  // First tau-degree with a nonzero residual, or -1.
  int first_bad = -1;
};
// Compares the coefficients of rho_a(Exp(z)) and Exp(d[a] z) up to tau-degree depth.
FunctionalCheck functional_equation_check(const AndersonModule& M, const CoeffSeries& Q, const KElem& a, int depth);

}  // namespace drinfeld
