#pragma once

#include <vector>

#include "drinfeld/shtuka.hpp"

namespace drinfeld {

// Monic elements of A of degree d (deg theta = 2, deg eta = 3); empty for d = 1.
std::vector<KElem> monic_enumerate(const KContext& ctx, int d);

// Sum of a^(-s) over the monic a of degree i.
KElem power_sum_bruteforce(const KContext& ctx, int i, int s);
// The same sum from (nu^(i)/(w_i^(1) f^(1) ... f^(i)))^s at Xi; needs i >= 2 and 1 <= s <= q-1.
KElem power_sum_closed(const KContext& ctx, const ShtukaData& S, int i, int s);
// Line through V^(i-1) - V, -V^(i-1) and V, normalized to sgn 1.
CurveFunc w_line(const KContext& ctx, const ShtukaData& S, int i);

// The function G with G^(i)(Xi) = f(V^(i)); needs V integral.
CurveFunc script_G(const KContext& ctx, const ShtukaData& S);

// Throws ClassNumberUnsupported unless h = 1.
void require_class_number_one(const KContext& ctx);

struct SigmaExpansion {
  int n = 0;
  KElem b;
  // deg b = e n + b_prime, 0 <= b_prime < n.
  int e = 0, b_prime = 0;
  // Uniform twist J = q + e.
  int J = 0;
  // dJ[j][k-1] = d_{k,j}^(J) for j = 0..J.
  std::vector<std::vector<KElem>> dJ;
  // d_twisted[j][k-1] = d_{k,j}^(j).
  std::vector<std::vector<KElem>> d_twisted;
  std::vector<KElem> d_total;
  KElem C;
  // F^(J) minus the sum of d_{k,j}^(J) times the twisted basis, rebuilt from dJ.
  CurveFunc residual;
};

// C = (-1)^(n+1) h_1(-Xi)/(theta - t([n]V^(1))).
KElem zeta_constant(const KContext& ctx, const ShtukaData& S, const TensorBasis& B);

// Expands (-1)^n f^n b G^n in the sigma basis by greedy leading-term reduction after the twist J.
SigmaExpansion sigma_expand(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b);

// sigma^j(h_{n-k+1}) twisted J times: (f^(J) ... f^(J-j+1))^n h_{n-k+1}^(J-j).
CurveFunc sigma_basis_twisted(const ShtukaData& S, const TensorBasis& B, int j, int k, int J);

// b (( -f G)^(i))^n / (C h_1 (f^(1) ... f^(i))^n) at Xi.
KElem zeta_term(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b, const KElem& C,
                int i);

// sum_{j <= min(i, J)} (bottom row of P_{i-j}) . (d_j^(j))^(i-j), which equals C b S_i(n).
KElem regrouped_term(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const SigmaExpansion& E,
                     int i);

// (delta^(1))^n (t - t([n]V^(1))) == (-1)^(n+1) h_1 (h_1 o [-1]).
bool delta_twist_identity(const KContext& ctx, const ShtukaData& S, const TensorBasis& B);

struct ZetaTermCheck {
  int i = 0;
  KElem term;
  KElem expected;
  KElem regrouped;
  bool ok = false;
};

struct ZetaReport {
  std::vector<ZetaTermCheck> terms;
  bool reconstruction = false;
  // d_{k,J} = 0 for k <= n - b_prime.
  bool top_vanishing = false;
  bool delta_identity = false;
  bool ok() const;
};

struct ZetaVector {
  SigmaExpansion expansion;
  ZetaReport report;
};

// Expansion plus exact per-term checks for 0 <= i <= terms.
ZetaVector zeta_vector(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b, int terms);

}  // namespace drinfeld
