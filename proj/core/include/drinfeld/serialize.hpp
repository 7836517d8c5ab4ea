#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "drinfeld/anderson.hpp"
#include "drinfeld/curve.hpp"
#include "drinfeld/curve_function.hpp"
#include "drinfeld/infinite.hpp"
#include "drinfeld/kfield.hpp"

namespace drinfeld {

using Json = nlohmann::json;

struct CurveSpec {
  int p = 0;
  int r = 1;
  // Monic irreducible modulus, little-endian; empty for the default.
  std::vector<int> modulus;
  // a1, a2, a3, a4, a6 as digit vectors over F_p.
  std::array<std::vector<int>, 5> a;
};

CurveSpec curve_spec_from_json(const Json& j);
Json to_json(const CurveSpec& spec);
CurveSpec load_curve_spec(const std::string& path);
std::shared_ptr<const KContext> make_context(const CurveSpec& spec);

Json fq_to_json(const FiniteField& F, FqCode c);
FqCode fq_from_json(const FiniteField& F, const Json& j);
Json to_json(const FqPoly& p);
FqPoly fqpoly_from_json(const FiniteField& F, const Json& j);

Json to_json(const KElem& x);
KElem kelem_from_json(const KContext& ctx, const Json& j);
Json to_json(const KRoot& x);
KRoot kroot_from_json(const KContext& ctx, const Json& j);
Json to_json(const Point& P);
Point point_from_json(const KContext& ctx, const Json& j);
Json to_json(const CurveFunc& F);
CurveFunc curvefunc_from_json(const KContext& ctx, const Json& j);
Json to_json(const KMatrix& M);
KMatrix kmatrix_from_json(const KContext& ctx, const Json& j);
Json to_json(const TauPoly& T);
Json to_json(const LaurentK& x);
LaurentK laurent_from_json(const FiniteField& F, const Json& j);

// Readable forms with theta, eta, t, y; F_q elements of a proper extension use the generator c.
std::string pretty(const FiniteField& F, FqCode c);
std::string pretty(const KElem& x);
std::string pretty(const KRoot& x);
std::string pretty(const Point& P);
std::string pretty(const CurveFunc& F);
std::string pretty(const KMatrix& M);

// Sums of c, c*T^i, c*T^i*Y with c an integer or a bracketed digit list; T, Y stand for theta, eta.
KElem parse_a_expr(const KContext& ctx, const std::string& s);
// Inverse of parse_a_expr on A.
std::string format_a_expr(const KElem& a);

}  // namespace drinfeld
