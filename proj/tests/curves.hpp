#pragma once

#include <memory>
#include <random>

#include "drinfeld/kfield.hpp"

namespace testing_curves {

using namespace drinfeld;

// y^2 = t^3 - t - 1 over F_3
inline std::shared_ptr<const KContext> ex82() {
  static auto ctx = KContext::make(FiniteField(3, 1), Weierstrass{0, 0, 0, 2, 2});
  return ctx;
}

// y^2 + y = t^3 + c over F_4 = F_2[c]/(c^2 + c + 1)
inline std::shared_ptr<const KContext> ex83() {
  static auto ctx = KContext::make(FiniteField(2, 2, {1, 1, 1}), Weierstrass{0, 0, 1, 0, 2});
  return ctx;
}

inline FqPoly random_poly(const FiniteField& F, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<int> coef(0, F.q() - 1);
  int d = deg(rng);
  std::vector<FqCode> c(d + 1);
  for (auto& x : c) x = static_cast<FqCode>(coef(rng));
  return FqPoly(F, std::move(c));
}

inline KElem random_kelem(const KContext& ctx, std::mt19937_64& rng, int max_deg = 3) {
  const auto& F = ctx.field();
  FqPoly D;
  do {
    D = random_poly(F, rng, max_deg);
  } while (D.is_zero());
  return KElem(ctx, random_poly(F, rng, max_deg), random_poly(F, rng, max_deg), D);
}

inline KElem random_nonzero(const KContext& ctx, std::mt19937_64& rng, int max_deg = 3) {
  KElem x;
  do {
    x = random_kelem(ctx, rng, max_deg);
  } while (x.is_zero());
  return x;
}

}  // namespace testing_curves

namespace testing_curves {

inline KElem kpoly_elem(const KContext& ctx, std::vector<FqCode> u, std::vector<FqCode> v = {}) {
  return KElem::from_poly(ctx, FqPoly(ctx.field(), std::move(u)), FqPoly(ctx.field(), std::move(v)));
}

inline KElem kc(const KContext& ctx, int c) { return KElem::constant(ctx, ctx.field().from_int(c)); }

// y^2 + y = t^3 over F_2, class number 3
inline std::shared_ptr<const KContext> supersingular_f2() {
  static auto ctx = KContext::make(FiniteField(2, 1), Weierstrass{0, 0, 1, 0, 0});
  return ctx;
}

}  // namespace testing_curves
