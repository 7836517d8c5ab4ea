#include <random>

#include "curves.hpp"
#include "doctest.h"
#include "drinfeld/curve.hpp"
#include "drinfeld/errors.hpp"

using namespace drinfeld;
using namespace testing_curves;

TEST_CASE("negation and identity") {
  auto c2 = ex82();
  Point xi = xi_point(*c2);
  CHECK(point_negate(*c2, xi) == Point(KElem::theta(*c2), -KElem::eta(*c2)));
  CHECK(point_negate(*c2, Point::infinity()).is_infinity());
  CHECK(point_add(*c2, xi, Point::infinity()) == xi);
  CHECK(point_add(*c2, xi, point_negate(*c2, xi)).is_infinity());
  CHECK(point_mul(*c2, 0, xi).is_infinity());
  CHECK(point_mul(*c2, 1, xi) == xi);

  auto c3 = ex83();
  Point xi3 = xi_point(*c3);
  CHECK(point_negate(*c3, xi3) == Point(KElem::theta(*c3), KElem::eta(*c3) + KElem::one(*c3)));
}

TEST_CASE("off-curve input is rejected") {
  auto c = ex82();
  Point bad(KElem::theta(*c), KElem::theta(*c));
  CHECK_THROWS_AS(point_add(*c, bad, xi_point(*c)), NotOnCurve);
}

TEST_CASE("the defining relation of V") {
  auto c2 = ex82();
  Point V(KElem::theta(*c2) + KElem::one(*c2), KElem::eta(*c2));
  CHECK(on_curve(*c2, V));
  CHECK(point_sub(*c2, V, point_frobenius(*c2, V, 1)) == xi_point(*c2));
  Point V2 = point_mul(*c2, 2, V);
  CHECK(on_curve(*c2, V2));
  CHECK(point_add(*c2, V, V) == V2);

  auto c3 = ex83();
  Point W(KElem::theta(*c3), KElem::eta(*c3) + KElem::one(*c3));
  CHECK(point_sub(*c3, W, point_frobenius(*c3, W, 1)) == xi_point(*c3));
  Point W1 = point_frobenius(*c3, W, 1);
  CHECK(W1 == Point(KElem::theta(*c3).pow(4), (KElem::eta(*c3) + KElem::one(*c3)).pow(4)));
  CHECK(point_frobenius(*c3, Point::infinity(), 1).is_infinity());
}

TEST_CASE("class numbers") {
  auto c2 = ex82(), c3 = ex83(), s = supersingular_f2();
  CHECK(class_number(*c2) == 1);
  CHECK(class_number(*c3) == 1);
  CHECK(class_number(*s) == 3);
  for (auto ctx : {c2, c3, s}) {
    long long h = class_number(*ctx);
    int q = ctx->q();
    CHECK((h - q - 1) * (h - q - 1) <= 4 * q);
  }
}

TEST_CASE("group axioms and frobenius homomorphism on random points") {
  for (auto ctx : {ex82(), ex83()}) {
    Point xi = xi_point(*ctx);
    Point base[] = {xi, point_frobenius(*ctx, xi, 1), point_negate(*ctx, xi)};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> k(-3, 3);
    auto random_point = [&] {
      Point P = Point::infinity();
      for (const auto& B : base) P = point_add(*ctx, P, point_mul(*ctx, k(rng), B));
      return P;
    };
    for (int i = 0; i < 12; ++i) {
      Point P = random_point(), Q = random_point(), R = random_point();
      CHECK(on_curve(*ctx, P));
      CHECK(point_add(*ctx, point_add(*ctx, P, Q), R) == point_add(*ctx, P, point_add(*ctx, Q, R)));
      CHECK(point_add(*ctx, P, Q) == point_add(*ctx, Q, P));
      CHECK(point_frobenius(*ctx, point_add(*ctx, P, Q), 1) ==
            point_add(*ctx, point_frobenius(*ctx, P, 1), point_frobenius(*ctx, Q, 1)));
    }
  }
}
