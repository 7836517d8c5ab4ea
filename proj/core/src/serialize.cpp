#include "drinfeld/serialize.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

CurveSpec curve_spec_from_json(const Json& j) {
  CurveSpec s;
  try {
    s.p = j.at("p").get<int>();
    s.r = j.value("r", 1);
    if (j.contains("modulus") && !j.at("modulus").is_null()) s.modulus = j.at("modulus").get<std::vector<int>>();
    const Json& a = j.at("a");
    if (!a.is_array() || a.size() != 5) throw DomainError("curve spec needs five coefficients a1, a2, a3, a4, a6");
    for (int i = 0; i < 5; ++i) s.a[i] = a[i].get<std::vector<int>>();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed curve spec: ") + e.what());
  }
  return s;
}

Json to_json(const CurveSpec& spec) {
  Json j;
  j["p"] = spec.p;
  j["r"] = spec.r;
  j["modulus"] = spec.modulus.empty() ? Json(nullptr) : Json(spec.modulus);
  j["a"] = Json::array();
  for (const auto& c : spec.a) j["a"].push_back(c);
  return j;
}

CurveSpec load_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open curve spec " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw DomainError("cannot parse curve spec " + path + ": " + e.what());
  }
  return curve_spec_from_json(j);
}

namespace {

Weierstrass weierstrass_of(const FiniteField& F, const CurveSpec& spec) {
  FqCode c[5];
  for (int i = 0; i < 5; ++i) {
    std::vector<int> d = spec.a[i];
    for (int x : d)
      if (x < 0 || x >= spec.p) throw DomainError("coefficient digit out of range");
    if (static_cast<int>(d.size()) > spec.r) throw DomainError("coefficient has too many digits");
    c[i] = F.from_digits(d);
  }
  return Weierstrass{c[0], c[1], c[2], c[3], c[4]};
}

}  // namespace

std::shared_ptr<const KContext> make_context(const CurveSpec& spec) {
  FiniteField F(spec.p, spec.r, spec.modulus);
  Weierstrass a = weierstrass_of(F, spec);
  return KContext::make(std::move(F), a);
}

Json fq_to_json(const FiniteField& F, FqCode c) { return F.digits(c); }

FqCode fq_from_json(const FiniteField& F, const Json& j) {
  if (j.is_number_integer()) return F.from_int(j.get<long long>());
  std::vector<int> d = j.get<std::vector<int>>();
  for (int x : d)
    if (x < 0 || x >= F.p()) throw DomainError("digit out of range");
  if (static_cast<int>(d.size()) > F.r()) throw DomainError("too many digits");
  return F.from_digits(d);
}

Json to_json(const FqPoly& p) {
  Json j = Json::array();
  for (FqCode c : p.coeffs()) j.push_back(fq_to_json(p.field(), c));
  return j;
}

FqPoly fqpoly_from_json(const FiniteField& F, const Json& j) {
  std::vector<FqCode> c;
  for (const auto& x : j) c.push_back(fq_from_json(F, x));
  return FqPoly(F, std::move(c));
}

Json to_json(const KElem& x) { return Json{{"U", to_json(x.U())}, {"V", to_json(x.V())}, {"D", to_json(x.D())}}; }

KElem kelem_from_json(const KContext& ctx, const Json& j) {
  const FiniteField& F = ctx.field();
  FqPoly D = fqpoly_from_json(F, j.at("D"));
  if (D.is_zero()) throw DivisionByZero("zero denominator in serialized element");
  return KElem(ctx, fqpoly_from_json(F, j.at("U")), fqpoly_from_json(F, j.at("V")), D);
}

Json to_json(const KRoot& x) { return Json{{"power", to_json(x.power)}, {"depth", x.depth}}; }

KRoot kroot_from_json(const KContext& ctx, const Json& j) {
  return KRoot{kelem_from_json(ctx, j.at("power")), j.at("depth").get<int>()};
}

Json to_json(const Point& P) {
  if (P.is_infinity()) return Json{{"inf", true}};
  return Json{{"x", to_json(P.x())}, {"y", to_json(P.y())}};
}

Point point_from_json(const KContext& ctx, const Json& j) {
  if (j.contains("inf") && j.at("inf").get<bool>()) return Point::infinity();
  Point P(kelem_from_json(ctx, j.at("x")), kelem_from_json(ctx, j.at("y")));
  if (!on_curve(ctx, P)) throw NotOnCurve();
  return P;
}

namespace {

Json kpoly_json(const KPoly& p) {
  Json j = Json::array();
  for (const KElem& c : p.coeffs()) j.push_back(to_json(c));
  return j;
}

KPoly kpoly_from_json(const KContext& ctx, const Json& j) {
  std::vector<KElem> c;
  for (const auto& x : j) c.push_back(kelem_from_json(ctx, x));
  return KPoly(ctx, std::move(c));
}

}  // namespace

Json to_json(const CurveFunc& F) {
  return Json{{"numU", kpoly_json(F.numU())}, {"numV", kpoly_json(F.numV())}, {"den", kpoly_json(F.den())}};
}

CurveFunc curvefunc_from_json(const KContext& ctx, const Json& j) {
  KPoly den = kpoly_from_json(ctx, j.at("den"));
  if (den.is_zero()) throw DivisionByZero("zero denominator in serialized function");
  return CurveFunc(kpoly_from_json(ctx, j.at("numU")), kpoly_from_json(ctx, j.at("numV")), den);
}

Json to_json(const KMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < M.cols(); ++k) row.push_back(to_json(M(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

KMatrix kmatrix_from_json(const KContext& ctx, const Json& j) {
  int r = static_cast<int>(j.size());
  int c = r == 0 ? 0 : static_cast<int>(j[0].size());
  KMatrix M(ctx, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(j[i].size()) != c) throw DomainError("ragged matrix");
    for (int k = 0; k < c; ++k) M(i, k) = kelem_from_json(ctx, j[i][k]);
  }
  return M;
}

Json to_json(const TauPoly& T) {
  Json j = Json::array();
  for (int k = 0; k <= T.degree(); ++k) j.push_back(to_json(T.coeff(k)));
  return j;
}

Json to_json(const LaurentK& x) {
  Json c = Json::array();
  for (FqCode v : x.coeffs()) c.push_back(fq_to_json(x.field(), v));
  return Json{{"val", x.valuation()}, {"coeffs", c}, {"prec", x.precision()}};
}

LaurentK laurent_from_json(const FiniteField& F, const Json& j) {
  std::vector<FqCode> c;
  for (const auto& v : j.at("coeffs")) c.push_back(fq_from_json(F, v));
  return LaurentK(F, j.at("val").get<int>(), std::move(c), j.at("prec").get<int>());
}

std::string pretty(const FiniteField& F, FqCode c) {
  if (F.r() == 1) return std::to_string(static_cast<int>(c));
  auto d = F.digits(c);
  std::string out;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "c" : "c^" + std::to_string(i));
    if (mono.empty()) out += std::to_string(d[i]);
    else out += (d[i] == 1 ? "" : std::to_string(d[i])) + mono;
  }
  return out.empty() ? "0" : out;
}

namespace {

bool is_compound(const FiniteField& F, FqCode c) {
  if (F.r() == 1) return false;
  int nonzero = 0;
  for (int d : F.digits(c)) nonzero += d != 0;
  return nonzero > 1;
}

// c * var^k summed, highest power first.
std::string poly_string(const FiniteField& F, const FqPoly& p, const std::string& var) {
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    FqCode c = p.coeff(k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string coef = pretty(F, c);
    if (is_compound(F, c)) coef = "(" + coef + ")";
    if (mono.empty()) out += coef;
    else out += (c == 1 ? "" : coef) + mono;
  }
  return out.empty() ? "0" : out;
}

bool single_term(const FqPoly& p) {
  int n = 0;
  for (FqCode c : p.coeffs()) n += c != 0;
  return n <= 1;
}

std::string paren(const std::string& s, bool needed) { return needed ? "(" + s + ")" : s; }

}  // namespace

std::string pretty(const KElem& x) {
  const FiniteField& F = x.context().field();
  if (x.is_zero()) return "0";
  std::string num;
  if (!x.U().is_zero()) num = poly_string(F, x.U(), "θ");
  if (!x.V().is_zero()) {
    std::string v = x.V().is_one() ? "η" : paren(poly_string(F, x.V(), "θ"), !single_term(x.V())) + "η";
    num = num.empty() ? v : num + " + " + v;
  }
  if (x.D().is_one()) return num;
  bool num_single = x.U().is_zero() != x.V().is_zero() && single_term(x.U()) && single_term(x.V());
  return paren(num, !num_single) + "/" + paren(poly_string(F, x.D(), "θ"), !single_term(x.D()));
}

std::string pretty(const KRoot& x) {
  if (x.depth == 0) return pretty(x.power);
  return "(" + pretty(x.power) + ")^(1/q^" + std::to_string(x.depth) + ")";
}

std::string pretty(const Point& P) {
  if (P.is_infinity()) return "∞";
  return "(" + pretty(P.x()) + ", " + pretty(P.y()) + ")";
}

namespace {

std::string kpoly_string(const KPoly& p) {
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const KElem& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (mono.empty()) out += pretty(c);
    else out += (c.is_one() ? "" : "(" + pretty(c) + ")") + mono;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string pretty(const CurveFunc& F) {
  if (F.is_zero()) return "0";
  std::string num;
  if (!F.numU().is_zero()) num = kpoly_string(F.numU());
  if (!F.numV().is_zero()) {
    std::string v = F.numV().is_one() ? "y" : "(" + kpoly_string(F.numV()) + ")y";
    num = num.empty() ? v : num + " + " + v;
  }
  if (F.den().is_one()) return num;
  return "(" + num + ")/(" + kpoly_string(F.den()) + ")";
}

std::string pretty(const KMatrix& M) {
  std::string out;
  for (int i = 0; i < M.rows(); ++i) {
    out += "[";
    for (int k = 0; k < M.cols(); ++k) out += (k ? ", " : "") + pretty(M(i, k));
    out += "]\n";
  }
  return out;
}

namespace {

class AExprParser {
 public:
  AExprParser(const KContext& ctx, const std::string& s) : ctx_(ctx), s_(s) {}

  KElem parse() {
    KElem sum = KElem::zero(ctx_);
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      KElem t = term();
      sum += negate ? -t : t;
      skip();
      if (pos_ == s_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      negate = c == '-';
      ++pos_;
    }
    return sum;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected an integer", start);
    if (pos_ - start > 9) throw ParseError("integer too large", start);
    return std::stoll(s_.substr(start, pos_ - start));
  }
  FqCode coefficient() {
    const FiniteField& F = ctx_.field();
    if (accept('[')) {
      std::size_t start = pos_;
      std::vector<int> digits;
      if (!accept(']')) {
        do {
          long long d = integer();
          if (d >= F.p()) throw ParseError("digit out of range", pos_);
          digits.push_back(static_cast<int>(d));
        } while (accept(','));
        if (!accept(']')) throw ParseError("expected ']'", pos_);
      }
      if (static_cast<int>(digits.size()) > F.r()) throw ParseError("too many digits", start);
      return F.from_digits(digits);
    }
    return F.from_int(integer());
  }
  int exponent() {
    if (!accept('^')) return 1;
    return static_cast<int>(integer());
  }
  KElem term() {
    const FiniteField& F = ctx_.field();
    FqCode c = 1;
    int tpow = 0, ypow = 0;
    bool any = false;
    char p = peek();
    if (p == '[' || std::isdigit(static_cast<unsigned char>(p))) {
      c = coefficient();
      any = true;
      if (!accept('*')) return KElem::constant(ctx_, c);
    }
    while (true) {
      std::size_t at = pos_;
      char v = peek();
      if (v == 'T' || v == 't') {
        ++pos_;
        tpow += exponent();
      } else if (v == 'Y' || v == 'y') {
        ++pos_;
        ypow += exponent();
        if (ypow > 1) throw ParseError("Y^" + std::to_string(ypow) + " is not reduced; rewrite Y^2 with the curve equation", at);
      } else {
        throw ParseError(any ? "expected T or Y" : "expected a term", at);
      }
      any = true;
      if (!accept('*')) break;
    }
    FqPoly mono = FqPoly::monomial(F, c, tpow);
    return ypow == 0 ? KElem::from_poly(ctx_, mono) : KElem::from_poly(ctx_, FqPoly(F), mono);
  }

  const KContext& ctx_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

std::string coef_literal(const FiniteField& F, FqCode c) {
  if (F.r() == 1) return std::to_string(static_cast<int>(c));
  std::string s = "[";
  auto d = F.digits(c);
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

}  // namespace

KElem parse_a_expr(const KContext& ctx, const std::string& s) { return AExprParser(ctx, s).parse(); }

std::string format_a_expr(const KElem& a) {
  if (!a.in_A()) throw DomainError("element is not in A");
  const FiniteField& F = a.context().field();
  if (a.is_zero()) return "0";
  std::string out;
  auto emit = [&](const FqPoly& p, bool y) {
    for (int k = p.degree(); k >= 0; --k) {
      FqCode c = p.coeff(k);
      if (c == 0) continue;
      std::string term = coef_literal(F, c);
      if (k > 0) term += "*T^" + std::to_string(k);
      if (y) term += "*Y";
      out += (out.empty() ? "" : " + ") + term;
    }
  };
  emit(a.V(), true);
  emit(a.U(), false);
  return out;
}

}  // namespace drinfeld
