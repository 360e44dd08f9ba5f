#ifndef UPEXT_COMMANDS_HPP
#define UPEXT_COMMANDS_HPP

#include "upext/anti_associated.hpp"
#include "upext/config.hpp"
#include "upext/measure.hpp"
#include "upext/ode4.hpp"
#include "upext/recurrence.hpp"
#include "upext/spectral.hpp"
#include "upext/zero_comparison.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace upext {

using nlohmann::json;

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitVerifyFailed = 2, kExitConfig = 3 };

namespace detail {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

/// Grid of `n` points on [-1, 1] (inclusive) or, with interior = true, strictly inside.
inline std::vector<double> uniform_grid(std::size_t n, bool interior) {
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k)
    g[k] = interior ? -1.0 + 2.0 * static_cast<double>(k + 1) / static_cast<double>(n + 1)
                    : -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(n - 1);
  return g;
}

inline json rational_array(const RationalPolynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------- coeffs

/// Rows (n, b_n, a_n^2) of the base, extended and re-shifted sequences.
inline int run_coeffs(const JobConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
  const CoefficientSequence base = cfg.base_sequence();
  std::vector<std::pair<std::string, CoefficientSequence>> seqs = {{"base", base}};
  bool round_trip = true;
  if (cfg.has_extension()) {
    const ExtensionParams params = cfg.extension();
    const CoefficientSequence ext = extend(base, params);
    const CoefficientSequence back = shift(ext, params.order());
    seqs.emplace_back("extended", ext);
    seqs.emplace_back("shifted_back", back);
    for (std::size_t n = 0; n <= cfg.degree; ++n)
      round_trip = round_trip && back.b_exact(n) == base.b_exact(n) && back.a2_exact(n) == base.a2_exact(n);
  }
  std::ostringstream csv;
  csv << "sequence,n,b,a2\n";
  for (const auto& [name, seq] : seqs)
    for (std::size_t n = 0; n <= cfg.degree; ++n)
      csv << name << ',' << n << ',' << to_string(seq.b_exact(n)) << ','
          << (n == 0 ? std::string("-") : to_string(seq.a2_exact(n))) << '\n';
  detail::write_file(out_dir / "coeffs.csv", csv.str());
  log << csv.str();
  if (cfg.has_extension()) log << "round trip shift(extend(base), r) == base: " << (round_trip ? "yes" : "NO") << '\n';
  return round_trip ? kExitPass : kExitVerifyFailed;
}

// ---------------------------------------------------------------- eval

struct EvalRow {
  double x = 0.0;
  double monic_closed = 0.0, monic_direct = 0.0;
  double orthonormal_closed = 0.0, orthonormal_direct = 0.0;
  double mismatch = 0.0;  // |orthonormal_closed - orthonormal_direct| / max(1, |orthonormal_direct|)
};

/// P^(-r)_m at each point by the closed form and by the extended recurrence.
inline std::vector<EvalRow> eval_table(const CoefficientSequence& base, const ExtensionParams& params, std::size_t m,
                                       const std::vector<double>& xs) {
  const QLadder ladder(params);
  const std::size_t r = params.order();
  const CoefficientSequence ext = extend(base, params);
  const std::size_t n_max = m >= r ? m - r : 0;
  std::vector<EvalRow> rows;
  for (double x : xs) {
    EvalRow row;
    row.x = x;
    row.monic_closed = eval_anti_closed_all(base, ladder, n_max, x)[m];
    row.monic_direct = eval_monic(ext, m, x).back();
    row.orthonormal_closed = eval_anti_orthonormal_all(base, ladder, n_max, x)[m];
    row.orthonormal_direct = eval_orthonormal(ext, m, x).back();
    row.mismatch = std::abs(row.orthonormal_closed - row.orthonormal_direct) /
                   std::max(1.0, std::abs(row.orthonormal_direct));
    rows.push_back(row);
  }
  return rows;
}

inline int run_eval(const JobConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
  std::vector<double> xs;
  for (const auto& p : cfg.points) xs.push_back(to_double(p));
  if (xs.empty()) xs = detail::uniform_grid(cfg.grid, false);
  const auto rows = eval_table(cfg.base_sequence(), cfg.extension(), cfg.degree, xs);
  const double tol = cfg.tol.value_or(1e-10);
  std::ostringstream csv;
  csv << "x,monic_closed,monic_direct,orthonormal_closed,orthonormal_direct,mismatch\n";
  double worst = 0.0;
  for (const auto& r : rows) {
    csv << detail::fmt17(r.x) << ',' << detail::fmt17(r.monic_closed) << ',' << detail::fmt17(r.monic_direct) << ','
        << detail::fmt17(r.orthonormal_closed) << ',' << detail::fmt17(r.orthonormal_direct) << ','
        << detail::fmt17(r.mismatch) << '\n';
    worst = std::max(worst, r.mismatch);
  }
  detail::write_file(out_dir / "eval.csv", csv.str());
  log << "degree " << cfg.degree << ", " << rows.size() << " points, max mismatch " << worst << " (tol " << tol
      << ")\n";
  return worst <= tol ? kExitPass : kExitVerifyFailed;
}

// ---------------------------------------------------------------- measure

inline json masses_to_json(const std::vector<MassPoint>& masses) {
  json a = json::array();
  for (const auto& m : masses) a.push_back({{"x", m.location}, {"m", m.mass}});
  return a;
}

inline std::vector<MassPoint> masses_from_json(const json& j) {
  std::vector<MassPoint> out;
  for (const auto& e : j.at("masses")) out.push_back({e.at("x").get<double>(), e.at("m").get<double>()});
  return out;
}

inline std::vector<MassPoint> read_masses_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return masses_from_json(json::parse(in));
}

/// (x, w) pairs from a density CSV written by run_measure.
inline std::vector<std::pair<double, double>> read_density_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  std::getline(in, line);
  std::vector<std::pair<double, double>> out;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) continue;
    out.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return out;
}

inline int run_measure(const JobConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
  const BaseFamily base = cfg.measure_base();
  const ExtensionParams params = cfg.extension();
  const MeasureModel model = build_measure(base, params);
  std::ostringstream csv;
  csv << "x,w\n";
  for (double x : detail::uniform_grid(cfg.grid, true))
    csv << detail::fmt17(x) << ',' << detail::fmt17(model.density(x)) << '\n';
  detail::write_file(out_dir / "density.csv", csv.str());

  const double continuous = model.continuous_mass();
  double total = continuous;
  for (const auto& m : model.masses()) total += m.mass;
  json j = {{"base", base.name()},
            {"provenance", to_string(model.provenance())},
            {"masses", masses_to_json(model.masses())},
            {"continuous_mass", continuous},
            {"total_mass", total}};
  detail::write_file(out_dir / "masses.json", j.dump(2) + "\n");
  log << "base " << base.name() << ", density (" << to_string(model.provenance()) << ") on " << cfg.grid
      << " points, " << model.masses().size() << " mass point(s)\n";
  for (const auto& m : model.masses()) log << "  x = " << detail::fmt17(m.location) << "  m = " << detail::fmt17(m.mass) << '\n';
  log << "total mass " << detail::fmt17(total) << '\n';
  return kExitPass;
}

// ---------------------------------------------------------------- verify

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

/**
 * Aggregated checks of an extension over a base with known measure. With
 * cfg.perturb_measure = eps the measure is reconstructed from a_0^2 (1 + eps)
 * while the polynomials keep the true a_0^2, so the Gram check must fail.
 */
inline VerifyReport verify(const JobConfig& cfg) {
  const BaseFamily base = cfg.measure_base();
  const ExtensionParams params = cfg.extension();
  const bool u_base = base.kind() == BaseKind::chebyshev_u;
  const std::size_t r = params.order();
  const CoefficientSequence ext = extend(base.sequence(), params);

  ExtensionParams measure_params = params;
  if (cfg.perturb_measure != 0.0) {
    auto a2 = params.a2_new();
    a2.back() *= Rational(1.0 + cfg.perturb_measure);
    measure_params = ExtensionParams(params.b_new(), a2);
  }
  const MeasureModel model = build_measure(base, measure_params);
  VerifyReport rep;

  {
    const std::size_t m_max = std::min<std::size_t>(cfg.degree, 12);
    const double tol = cfg.tol.value_or(u_base ? 1e-8 : 1e-6);
    const double dev = identity_deviation(gram_matrix(model, ext, m_max));
    rep.checks.push_back({"gram_identity", dev <= tol, dev, tol, "max |G - I|, m_max = " + std::to_string(m_max)});
  }
  {
    const double tol = u_base ? 1e-7 : 1e-6;
    const double total = model.total_mass();
    rep.checks.push_back({"total_mass", std::abs(total - 1.0) <= tol, total, tol,
                          std::to_string(model.masses().size()) + " mass point(s)"});
  }
  {
    const MassPointCrossCheck cc = cross_check_mass_points(base, params, 2000);
    rep.checks.push_back({"mass_points_vs_outliers", cc.consistent(), cc.max_deviation, 1e-6,
                          std::to_string(cc.roots.size()) + " root(s), " + std::to_string(cc.outliers.size()) +
                              " outlier(s)"});
    const auto t = truncate(ext, 400);
    const std::size_t below = sturm_count(t, -1.0 - 1e-9);
    const std::size_t above = t.size() - sturm_count(t, 1.0 + 1e-9);
    rep.checks.push_back({"outliers_at_most_r_per_side", below <= r && above <= r,
                          static_cast<double>(std::max(below, above)), static_cast<double>(r),
                          std::to_string(below) + " below, " + std::to_string(above) + " above"});
  }
  {
    const std::size_t N = cfg.truncation;
    double worst = 0.0;
    for (double x : {-0.5, 0.0, 0.5}) {
      const auto est = christoffel_limit_estimate(ext, x, {N / 2, N});
      const double target = std::numbers::pi * model.density(x) * std::sqrt(1.0 - x * x);
      worst = std::max(worst, std::abs(est.extrapolated / target - 1.0));
    }
    rep.checks.push_back({"christoffel_limit", worst <= 0.02, worst, 0.02,
                          "relative error of n lambda_n at x = -0.5, 0, 0.5, n = " + std::to_string(N)});
  }
  {
    const double s1 = trace_class_score(ext, cfg.truncation / 2), s2 = trace_class_score(ext, cfg.truncation);
    rep.checks.push_back({"trace_class", std::isfinite(s2), s2, std::numeric_limits<double>::infinity(),
                          "partial sums " + detail::fmt17(s1) + " -> " + detail::fmt17(s2)});
  }
  {
    const std::size_t n_max = std::min<std::size_t>(std::max<std::size_t>(cfg.degree, 2), 200);
    double gap = std::numeric_limits<double>::infinity();
    auto prev = zeros(ext, 1, 1e-13);
    for (std::size_t n = 2; n <= n_max; ++n) {
      auto cur = zeros(ext, n, 1e-13);
      gap = std::min(gap, interlacing_gap(prev, cur));
      prev = std::move(cur);
    }
    rep.checks.push_back({"zero_interlacing", gap > 1e-9, gap, 1e-9, "extended family, n <= " + std::to_string(n_max)});
    if (!u_base && base.alpha() != Rational(-1, 2)) {
      double mgap = std::numeric_limits<double>::infinity();
      for (std::size_t n = 1; n <= n_max; ++n)
        mgap = std::min(mgap, markov_comparison(GrosjeanKind::first, base.alpha(), n).min_gap);
      rep.checks.push_back({"markov_zero_comparison", mgap > 1e-9, mgap, 1e-9,
                            "base zeros vs Chebyshev T zeros, n <= " + std::to_string(n_max)});
    }
  }
  return rep;
}

inline json to_json(const VerifyReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", c.value},
                      {"tolerance", std::isfinite(c.tolerance) ? json(c.tolerance) : json(nullptr)},
                      {"detail", c.detail}});
  return {{"pass", rep.pass()}, {"checks", checks}};
}

inline std::string to_text(const VerifyReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks)
    os << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(30) << c.name << " value " << std::setw(24)
       << detail::fmt17(c.value) << ' ' << c.detail << '\n';
  os << (rep.pass() ? "verify: all checks passed\n" : "verify: FAILED\n");
  return os.str();
}

inline int run_verify(const JobConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
  const VerifyReport rep = verify(cfg);
  const std::string text = to_text(rep);
  detail::write_file(out_dir / "verify.txt", text);
  detail::write_file(out_dir / "verify.json", to_json(rep).dump(2) + "\n");
  log << text;
  return rep.pass() ? kExitPass : kExitVerifyFailed;
}

// ---------------------------------------------------------------- ode

inline json operator_to_json(const PolyOperator& op) {
  json c = json::array();
  for (const auto& p : op.coefficients()) c.push_back(detail::rational_array(p));
  return c;
}

inline PolyOperator operator_from_json(const json& j) {
  std::vector<RationalPolynomial> c;
  for (const auto& p : j) {
    std::vector<Rational> coeffs;
    for (const auto& s : p) coeffs.push_back(parse_rational(s.get<std::string>()));
    c.emplace_back(std::move(coeffs));
  }
  return PolyOperator(std::move(c));
}

inline PolyOperator read_ode_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return operator_from_json(json::parse(in).at("coefficients"));
}

struct OdeResult {
  PolyOperator op;
  std::size_t target_degree = 0;  // degree n + r of the annihilated polynomial
  std::vector<Rational> points;
  std::vector<Rational> residuals;       // on P^(-r)_{n+r}
  std::vector<Rational> next_residuals;  // on P^(-r)_{n+r+1}

  bool annihilates() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Rational& v) { return v == 0; });
  }
  bool distinguishes_next_degree() const {
    return std::any_of(next_residuals.begin(), next_residuals.end(), [](const Rational& v) { return v != 0; });
  }
};

/// Fourth-order equation over grosjean1, second-order one over T or U; n = cfg.degree.
inline OdeResult build_ode(const JobConfig& cfg) {
  const ExtensionParams params = cfg.extension();
  const unsigned n = static_cast<unsigned>(cfg.degree);
  OdeResult res;
  const bool fourth = cfg.family == "grosjean1" && *cfg.alpha != Rational(-1, 2);
  const bool t_base = cfg.family == "T" || (cfg.family == "grosjean1" && !fourth);
  if (!fourth && !t_base && cfg.family != "U")
    throw ConfigError("ode needs family grosjean1, T or U (got " + cfg.family + ")");
  if (fourth)
    res.op = fourth_order_ode(*cfg.alpha, params, n).op;
  else
    res.op = second_order_ode(t_base ? ChebyshevBase::T : ChebyshevBase::U, params, n);
  const CoefficientSequence base = fourth ? grosjean1_coeffs(*cfg.alpha)
                                   : t_base ? chebyshev_coeffs(ChebyshevKind::T)
                                            : chebyshev_coeffs(ChebyshevKind::U);
  const CoefficientSequence ext = extend(base, params);
  res.target_degree = n + params.order();
  const auto polys = expand_monic_all(ext, res.target_degree + 1);
  res.points = cfg.points.empty()
                   ? std::vector<Rational>{Rational(0), Rational(1, 3), Rational(-2, 5), Rational(1, 7), Rational(3, 4)}
                   : cfg.points;
  for (const auto& x : res.points) {
    res.residuals.push_back(res.op.apply_at(polys[res.target_degree], x));
    res.next_residuals.push_back(res.op.apply_at(polys[res.target_degree + 1], x));
  }
  return res;
}

inline json to_json(const OdeResult& res) {
  json pts = json::array();
  for (std::size_t i = 0; i < res.points.size(); ++i)
    pts.push_back({{"x", to_string(res.points[i])},
                   {"residual", to_string(res.residuals[i])},
                   {"next_degree_residual", to_string(res.next_residuals[i])}});
  return {{"order", res.op.order()},
          {"degree", res.target_degree},
          {"coefficients", operator_to_json(res.op)},
          {"residuals", pts},
          {"annihilates", res.annihilates()},
          {"distinguishes_next_degree", res.distinguishes_next_degree()}};
}

inline int run_ode(const JobConfig& cfg, const std::filesystem::path& out_dir, std::ostream& log) {
  const OdeResult res = build_ode(cfg);
  detail::write_file(out_dir / "ode.json", to_json(res).dump(2) + "\n");
  log << "order " << res.op.order() << " operator for degree " << res.target_degree << '\n';
  for (int k = res.op.order(); k >= 0; --k) log << "  c" << k << " = " << res.op.coeff(static_cast<std::size_t>(k)) << '\n';
  log << "annihilates P_" << res.target_degree << " at " << res.points.size()
      << " points: " << (res.annihilates() ? "yes" : "NO") << '\n';
  log << "nonzero on P_" << res.target_degree + 1 << ": " << (res.distinguishes_next_degree() ? "yes" : "NO") << '\n';
  return res.annihilates() && res.distinguishes_next_degree() ? kExitPass : kExitVerifyFailed;
}

}  // namespace upext

#endif  // UPEXT_COMMANDS_HPP
