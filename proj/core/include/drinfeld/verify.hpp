#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/anderson.hpp"
#include "drinfeld/shtuka.hpp"

namespace drinfeld {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Randomized exact property checks over K and K(t, y), `cases` samples each.
CheckResult check_field_axioms(const KContext& ctx, std::uint64_t seed, int cases);
CheckResult check_twisting_homomorphism(const KContext& ctx, std::uint64_t seed, int cases);
CheckResult check_degree_sign(const KContext& ctx, std::uint64_t seed, int cases);
// Number of affine zeros (degree of the norm to K[t]) equals the pole order at infinity.
CheckResult check_principal_divisor_degree(const KContext& ctx, std::uint64_t seed, int cases);
// Res_Xi(F lambda) is unchanged by adding a function regular at Xi.
CheckResult check_residue_invariance(const KContext& ctx, std::uint64_t seed, int cases);
CheckResult check_group_law(const KContext& ctx, std::uint64_t seed, int cases);
std::vector<CheckResult> property_suite(const KContext& ctx, std::uint64_t seed, int cases);

// Divisors of f, g_i, h_i.
CheckResult check_divisors(const KContext& ctx, const ShtukaData& S, const TensorBasis& B);
// g_1^(1) h_1 = (t - t([n]V))^(1) and g_{j+1} h_{n-j+1} = f^n (t - t([j]V^(1) + [n-j]V)).
CheckResult check_basis_products(const KContext& ctx, const ShtukaData& S, const TensorBasis& B);
// t g_i and y g_i in terms of the extended g basis with the structure constants.
CheckResult check_basis_relations(const KContext& ctx, const ShtukaData& S, const TensorBasis& B);
CheckResult check_module_identities(const KContext& ctx, const AndersonModule& M);

// Q_0 = I, recurrence residual 0 for i <= depth, first columns against the g oracle for i <= oracle_depth,
// and the closed form when n = 1.
CheckResult check_exp(const KContext& ctx, const AndersonModule& M, const ShtukaData& S, const TensorBasis& B,
                      const CoeffSeries& Q, int depth, int oracle_depth);
// P_0 = I, inversion for m <= depth, residue matrices and bottom rows for i <= oracle_depth, n = 1 closed form.
CheckResult check_log(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const CoeffSeries& Q,
                      const CoeffSeries& P, int depth, int oracle_depth);
// rho_a Exp = Exp d[a] up to tau-degree depth for a in {theta, eta}.
CheckResult check_functional_equation(const AndersonModule& M, const CoeffSeries& Q, int depth);

// Closed form against brute force for 2 <= i <= max_i, 1 <= s <= q-1.
CheckResult check_power_sums(const KContext& ctx, const ShtukaData& S, int max_i);
// Per-term zeta identity and the regrouped identity for 0 <= i <= terms.
CheckResult check_zeta_terms(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b,
                             int terms);
CheckResult check_tail(const KContext& ctx, const ShtukaData& S, const TensorBasis& B, const KElem& b, int T,
                       int precision);

struct VerifyOptions {
  int n = 1;
  int depth = 3;
  std::uint64_t seed = 1;
  int cases = 200;
  int precision = 64;
  int tail_terms = 4;
};

// Everything above that applies to (ctx, n); zeta checks only when h = 1 and n <= q-1.
std::vector<CheckResult> verify_suite(const KContext& ctx, const VerifyOptions& opt);

}  // namespace drinfeld
