#pragma once

#include <utility>

#include "drinfeld/errors.hpp"

namespace drinfeld::detail {

// (u + v*w)/d over a polynomial ring, where w^2 = F - H*w.
// Canonical: d monic, gcd(u, v, d) = 1, zero stored as 0/1.
template <class Poly>
struct QuadFrac {
  Poly u, v, d;
};

template <class Poly>
struct CurveRelation {
  Poly F;
  Poly H;
};

template <class Poly>
void canonicalize(QuadFrac<Poly>& x) {
  if (x.d.is_zero()) throw DivisionByZero();
  if (x.u.is_zero() && x.v.is_zero()) {
    x.d = x.d.one_like();
    return;
  }
  if (x.d.degree() > 0) {
    Poly g = gcd(x.d, x.u);
    if (g.degree() > 0 && !x.v.is_zero()) g = gcd(g, x.v);
    if (g.degree() > 0) {
      x.u = x.u / g;
      x.v = x.v / g;
      x.d = x.d / g;
    }
  }
  if (!x.d.is_monic()) {
    auto li = x.d.lead_inverse();
    x.u.scale(li);
    x.v.scale(li);
    x.d.scale(li);
  }
}

template <class Poly>
QuadFrac<Poly> add(const QuadFrac<Poly>& a, const QuadFrac<Poly>& b) {
  if (a.d == b.d) {
    QuadFrac<Poly> r{a.u + b.u, a.v + b.v, a.d};
    canonicalize(r);
    return r;
  }
  Poly g = gcd(a.d, b.d);
  Poly ad = a.d / g;
  Poly bd = b.d / g;
  QuadFrac<Poly> r{a.u * bd + b.u * ad, a.v * bd + b.v * ad, ad * b.d};
  if (r.u.is_zero() && r.v.is_zero()) {
    r.d = r.d.one_like();
    return r;
  }
  if (g.degree() > 0) {
    Poly h = gcd(g, r.u);
    if (h.degree() > 0 && !r.v.is_zero()) h = gcd(h, r.v);
    if (h.degree() > 0) {
      r.u = r.u / h;
      r.v = r.v / h;
      r.d = r.d / h;
    }
  }
  return r;
}

template <class Poly>
QuadFrac<Poly> negate(const QuadFrac<Poly>& a) {
  return {-a.u, -a.v, a.d};
}

template <class Poly>
QuadFrac<Poly> mul(const QuadFrac<Poly>& a, const QuadFrac<Poly>& b, const CurveRelation<Poly>& rel) {
  QuadFrac<Poly> r;
  if (a.v.is_zero()) {
    r = {a.u * b.u, a.u * b.v, a.d * b.d};
  } else if (b.v.is_zero()) {
    r = {a.u * b.u, a.v * b.u, a.d * b.d};
  } else {
    Poly vv = a.v * b.v;
    r.u = a.u * b.u + vv * rel.F;
    r.v = a.u * b.v + a.v * b.u - vv * rel.H;
    r.d = a.d * b.d;
  }
  canonicalize(r);
  return r;
}

// Norm of u + v*w down to the polynomial ring.
template <class Poly>
Poly norm(const Poly& u, const Poly& v, const CurveRelation<Poly>& rel) {
  if (v.is_zero()) return u * u;
  return u * u - rel.H * u * v - rel.F * v * v;
}

template <class Poly>
QuadFrac<Poly> inverse(const QuadFrac<Poly>& a, const CurveRelation<Poly>& rel) {
  if (a.u.is_zero() && a.v.is_zero()) throw DivisionByZero();
  QuadFrac<Poly> r;
  if (a.v.is_zero()) {
    r = {a.d, a.v, a.u};
  } else {
    r = {a.d * (a.u - rel.H * a.v), -(a.d * a.v), norm(a.u, a.v, rel)};
  }
  canonicalize(r);
  return r;
}

template <class Poly>
bool equal(const QuadFrac<Poly>& a, const QuadFrac<Poly>& b) {
  return a.u == b.u && a.v == b.v && a.d == b.d;
}

// Degree with |x| = 2, |w| = 3 and the leading coefficient of the dominant part.
template <class Poly>
std::pair<int, typename Poly::Coeff> deg_sgn(const QuadFrac<Poly>& a) {
  if (a.u.is_zero() && a.v.is_zero()) throw DomainError("degree of zero is undefined");
  int du = a.u.is_zero() ? -1000000 : 2 * a.u.degree();
  int dv = a.v.is_zero() ? -1000000 : 3 + 2 * a.v.degree();
  int dd = 2 * a.d.degree();
  if (du > dv) return {du - dd, a.u.lead()};
  return {dv - dd, a.v.lead()};
}

}  // namespace drinfeld::detail
