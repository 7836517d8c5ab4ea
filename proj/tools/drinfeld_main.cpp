#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "drinfeld/anderson.hpp"
#include "drinfeld/curve.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/infinite.hpp"
#include "drinfeld/serialize.hpp"
#include "drinfeld/shtuka.hpp"
#include "drinfeld/verify.hpp"
#include "drinfeld/zeta.hpp"

using namespace drinfeld;

namespace {

struct RunConfig {
  std::string spec_path;
  int n = 1;
  int terms = 4;
  int precision = 64;
  std::string b = "1";
  int s = 1;
  std::string mode = "closed";
  int depth = 3;
  std::uint64_t seed = 1;
  int cases = 200;
  bool pretty = false;
};

// Raised for argument values the subcommand cannot accept.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  Json json;
  std::ostringstream text;
  bool ok = true;
};

std::shared_ptr<const KContext> load_context(const RunConfig& cfg) { return make_context(load_curve_spec(cfg.spec_path)); }

void require_zeta_range(const KContext& ctx, int n) {
  if (n > ctx.q() - 1) throw UsageError("zeta subcommands need n <= q-1 = " + std::to_string(ctx.q() - 1));
}

Json vec_json(const std::vector<KElem>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

std::string vec_pretty(const std::vector<KElem>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + pretty(v[i]);
  return s + ")";
}

std::string tau_pretty(const TauPoly& T) {
  std::ostringstream o;
  for (int k = 0; k <= T.degree(); ++k) {
    o << "  tau^" << k << ":\n";
    std::istringstream rows(pretty(T.coeff(k)));
    for (std::string line; std::getline(rows, line);) o << "    " << line << "\n";
  }
  return o.str();
}

void cmd_curve_info(const RunConfig& cfg, Output& out) {
  CurveSpec spec = load_curve_spec(cfg.spec_path);
  FiniteField F(spec.p, spec.r, spec.modulus);
  std::shared_ptr<const KContext> ctx;
  bool nonsingular = true;
  try {
    ctx = make_context(spec);
  } catch (const DomainError&) {
    nonsingular = false;
  }
  out.json["q"] = F.q();
  out.json["nonsingular"] = nonsingular;
  out.json["h"] = nonsingular ? Json(class_number(*ctx)) : Json(nullptr);
  out.text << "q: " << F.q() << "\nnonsingular: " << (nonsingular ? "true" : "false") << "\nh: "
           << (nonsingular ? std::to_string(class_number(*ctx)) : "undefined") << "\n";
}

void cmd_shtuka(const RunConfig& cfg, Output& out) {
  auto ctx = load_context(cfg);
  ShtukaData S = shtuka(*ctx);
  out.json["V"] = to_json(S.V);
  out.json["f"] = to_json(S.f);
  out.text << "V: " << pretty(S.V) << "\nf: " << pretty(S.f) << "\n";
}

void cmd_basis(const RunConfig& cfg, Output& out) {
  auto ctx = load_context(cfg);
  ShtukaData S = shtuka(*ctx);
  TensorBasis B = tensor_basis(*ctx, S, cfg.n);
  out.json["V"] = to_json(S.V);
  out.json["f"] = to_json(S.f);
  out.json["g"] = Json::array();
  out.json["h"] = Json::array();
  out.json["b"] = Json::array();
  for (const auto& g : B.g) out.json["g"].push_back(to_json(g));
  for (const auto& h : B.h) out.json["h"].push_back(to_json(h));
  for (const auto& b : B.b) out.json["b"].push_back(to_json(b));
  out.json["a"] = vec_json(B.a);
  out.json["y"] = vec_json(B.yc);
  out.json["z"] = vec_json(B.zc);
  out.text << "V: " << pretty(S.V) << "\nf: " << pretty(S.f) << "\n";
  for (std::size_t i = 0; i < B.g.size(); ++i) out.text << "g_" << i + 1 << ": " << pretty(B.g[i]) << "\n";
  for (std::size_t i = 0; i < B.h.size(); ++i) out.text << "h_" << i + 1 << ": " << pretty(B.h[i]) << "\n";
  for (std::size_t i = 0; i < B.a.size(); ++i) out.text << "a_" << i + 1 << ": " << pretty(B.a[i]) << "\n";
  for (std::size_t i = 0; i < B.b.size(); ++i) out.text << "b_" << i + 1 << ": " << pretty(B.b[i]) << "\n";
  for (std::size_t i = 0; i < B.yc.size(); ++i) out.text << "y_" << i + 1 << ": " << pretty(B.yc[i]) << "\n";
  for (std::size_t i = 0; i < B.zc.size(); ++i) out.text << "z_" << i + 1 << ": " << pretty(B.zc[i]) << "\n";
}

void cmd_module(const RunConfig& cfg, Output& out) {
  auto ctx = load_context(cfg);
  ShtukaData S = shtuka(*ctx);
  TensorBasis B = tensor_basis(*ctx, S, cfg.n);
  AndersonModule M = build_module(*ctx, B);
  ModuleCheck c = check_module(*ctx, M);
  out.json["n"] = M.n;
  out.json["d_theta"] = to_json(M.d_theta);
  out.json["d_eta"] = to_json(M.d_eta);
  out.json["rho_t"] = to_json(M.rho_t);
  out.json["rho_y"] = to_json(M.rho_y);
  out.json["checks"] = Json{{"commute", c.commute}, {"weierstrass", c.weierstrass}};
  out.ok = c.commute && c.weierstrass;
  out.text << "d[theta]:\n" << pretty(M.d_theta) << "d[eta]:\n" << pretty(M.d_eta);
  out.text << "rho_t:\n" << tau_pretty(M.rho_t) << "rho_y:\n" << tau_pretty(M.rho_y);
  out.text << "commute: " << (c.commute ? "PASS" : "FAIL") << "\nweierstrass: " << (c.weierstrass ? "PASS" : "FAIL")
           << "\n";
}

void cmd_series(const RunConfig& cfg, Output& out, bool log) {
  auto ctx = load_context(cfg);
  ShtukaData S = shtuka(*ctx);
  TensorBasis B = tensor_basis(*ctx, S, cfg.n);
  AndersonModule M = build_module(*ctx, B);
  CoeffSeries Q = exp_coeffs(*ctx, M, S, B, cfg.terms);
  CoeffSeries R = log ? log_coeffs(Q) : Q;
  out.json = Json::array();
  for (std::size_t i = 0; i < R.mats.size(); ++i) {
    out.json.push_back(Json{{"kind", log ? "log" : "exp"}, {"n", cfg.n}, {"i", i}, {"matrix", to_json(R.mats[i])}});
    out.text << (log ? "P_" : "Q_") << i << ":\n" << pretty(R.mats[i]);
  }
}

KElem load_b(const KContext& ctx, const std::string& expr) {
  KElem b = parse_a_expr(ctx, expr);
  if (b.is_zero()) throw UsageError("b must be nonzero");
  return b;
}

void cmd_zeta(const RunConfig& cfg, Output& out) {
  auto ctx = load_context(cfg);
  const KContext& K = *ctx;
  KElem b = load_b(K, cfg.b);
  if (cfg.mode != "brute" && cfg.mode != "closed") throw UsageError("mode must be brute or closed");
  bool closed = cfg.mode == "closed";
  if (closed && (cfg.s < 1 || cfg.s > K.q() - 1))
    throw UsageError("closed mode needs 1 <= s <= q-1 = " + std::to_string(K.q() - 1));
  if (cfg.s < 1) throw UsageError("s must be positive");
  std::optional<ShtukaData> S;
  if (closed) S = shtuka(K);
  KElem sum = KElem::zero(K);
  out.json["b"] = to_json(b);
  out.json["s"] = cfg.s;
  out.json["mode"] = cfg.mode;
  out.json["terms"] = Json::array();
  out.text << "b: " << pretty(b) << "\ns: " << cfg.s << "\nmode: " << cfg.mode << "\n";
  for (int i = 0; i <= cfg.terms; ++i) {
    KElem Si = closed && i >= 2 ? power_sum_closed(K, *S, i, cfg.s) : power_sum_bruteforce(K, i, cfg.s);
    KElem term = b * Si;
    sum += term;
    out.json["terms"].push_back(Json{{"i", i}, {"S", to_json(Si)}, {"term", to_json(term)}});
    out.text << "S_" << i << ": " << pretty(Si) << "\n";
  }
  out.json["partial_sum"] = to_json(sum);
  out.text << "b * sum S_i: " << pretty(sum) << "\n";
}

void cmd_zeta_vector(const RunConfig& cfg, Output& out) {
  auto ctx = load_context(cfg);
  const KContext& K = *ctx;
  require_class_number_one(K);
  require_zeta_range(K, cfg.n);
  KElem b = load_b(K, cfg.b);
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, cfg.n);
  ZetaVector Z = zeta_vector(K, S, B, b, cfg.terms);
  const SigmaExpansion& E = Z.expansion;
  out.json["b"] = to_json(b);
  out.json["n"] = cfg.n;
  out.json["e"] = E.e;
  out.json["b_prime"] = E.b_prime;
  out.json["J"] = E.J;
  out.json["C"] = to_json(E.C);
  out.json["d"] = vec_json(E.d_total);
  out.json["summands"] = Json::array();
  for (const auto& d : E.d_twisted) out.json["summands"].push_back(vec_json(d));
  out.json["terms"] = Json::array();
  bool terms_ok = true;
  for (const auto& t : Z.report.terms) {
    out.json["terms"].push_back(Json{{"i", t.i},
                                     {"term", to_json(t.term)},
                                     {"expected", to_json(t.expected)},
                                     {"regrouped", to_json(t.regrouped)},
                                     {"ok", t.ok}});
    terms_ok = terms_ok && t.ok;
  }
  CheckResult tail = check_tail(K, S, B, b, 4, cfg.precision);
  out.json["checks"] = Json{{"reconstruction", Z.report.reconstruction},
                            {"top_vanishing", Z.report.top_vanishing},
                            {"delta_identity", Z.report.delta_identity},
                            {"terms", terms_ok},
                            {"tail", Json{{"ok", tail.ok}, {"detail", tail.detail}}}};
  out.ok = Z.report.ok() && tail.ok;

  out.text << "b: " << pretty(b) << "\nC: " << pretty(E.C) << "\n";
  for (std::size_t j = 0; j < E.d_twisted.size(); ++j) out.text << "d_" << j << "^(" << j << "): " << vec_pretty(E.d_twisted[j]) << "\n";
  out.text << "d: " << vec_pretty(E.d_total) << "\n";
  for (const auto& t : Z.report.terms) out.text << "term " << t.i << ": " << (t.ok ? "PASS" : "FAIL") << "\n";
  out.text << "reconstruction: " << (Z.report.reconstruction ? "PASS" : "FAIL") << "\n";
  out.text << "top vanishing: " << (Z.report.top_vanishing ? "PASS" : "FAIL") << "\n";
  out.text << "delta identity: " << (Z.report.delta_identity ? "PASS" : "FAIL") << "\n";
  out.text << "tail: " << (tail.ok ? "PASS" : "FAIL") << " (" << tail.detail << ")\n";
}

void cmd_verify(const RunConfig& cfg, Output& out) {
  auto ctx = load_context(cfg);
  VerifyOptions opt;
  opt.n = cfg.n;
  opt.depth = cfg.depth;
  opt.seed = cfg.seed;
  opt.cases = cfg.cases;
  opt.precision = cfg.precision;
  auto results = verify_suite(*ctx, opt);
  out.json["checks"] = Json::array();
  for (const auto& r : results) {
    out.json["checks"].push_back(Json{{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    out.ok = out.ok && r.ok;
    out.text << (r.ok ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
  }
  out.json["ok"] = out.ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modules, tensor powers and zeta values over elliptic curves"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("spec", cfg.spec_path, "curve spec JSON")->required();
    auto* json = sub->add_flag("--json", "JSON output (default)");
    sub->add_flag("--pretty", cfg.pretty, "readable output")->excludes(json);
    return sub;
  };
  auto with_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "tensor power")->check(CLI::PositiveNumber);
    return sub;
  };
  auto with_terms = [&](CLI::App* sub) {
    sub->add_option("--terms", cfg.terms, "number of terms")->check(CLI::NonNegativeNumber);
    return sub;
  };
  auto with_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "series precision at infinity")->check(CLI::Range(8, 4096));
    return sub;
  };

  auto* curve_info = common(app.add_subcommand("curve-info", "field size, class number, nonsingularity"));
  auto* shtuka_cmd = common(app.add_subcommand("shtuka", "Drinfeld divisor V and shtuka function f"));
  auto* basis = with_n(common(app.add_subcommand("basis", "g and h bases with structure constants")));
  auto* module = with_n(common(app.add_subcommand("module", "tensor power module d[theta], d[eta], rho_t, rho_y")));
  auto* exp_cmd = with_terms(with_n(common(app.add_subcommand("exp", "exponential coefficients Q_i"))));
  auto* log_cmd = with_terms(with_n(common(app.add_subcommand("log", "logarithm coefficients P_i"))));
  auto* zeta = with_terms(common(app.add_subcommand("zeta", "power sums S_i(s) and b times their partial sum")));
  zeta->add_option("--b", cfg.b, "element of A, e.g. \"T*Y + 1\"");
  zeta->add_option("--s", cfg.s, "exponent s");
  zeta->add_option("--mode", cfg.mode, "brute or closed")->check(CLI::IsMember({"brute", "closed"}));
  auto* zeta_vec = with_precision(with_terms(with_n(common(app.add_subcommand("zeta-vector", "special vector d and C")))));
  zeta_vec->add_option("--b", cfg.b, "element of A, e.g. \"T*Y + 1\"");
  auto* verify = with_precision(with_n(common(app.add_subcommand("verify", "run the invariant suite"))));
  verify->add_option("--depth", cfg.depth, "coefficient depth")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed, "seed for randomized checks");
  verify->add_option("--cases", cfg.cases, "randomized cases per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    std::cerr << app.help();
    return 2;
  }

  Output out;
  try {
    if (*curve_info) cmd_curve_info(cfg, out);
    else if (*shtuka_cmd) cmd_shtuka(cfg, out);
    else if (*basis) cmd_basis(cfg, out);
    else if (*module) cmd_module(cfg, out);
    else if (*exp_cmd) cmd_series(cfg, out, false);
    else if (*log_cmd) cmd_series(cfg, out, true);
    else if (*zeta) cmd_zeta(cfg, out);
    else if (*zeta_vec) cmd_zeta_vector(cfg, out);
    else if (*verify) cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const drinfeld::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RangeUnsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ClassNumberUnsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const drinfeld::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (cfg.pretty) std::cout << out.text.str();
  else std::cout << out.json.dump() << "\n";
  return out.ok ? 0 : 1;
}
