#ifndef UPEXT_MEASURE_HPP
#define UPEXT_MEASURE_HPP

#include "upext/anti_associated.hpp"
#include "upext/families.hpp"
#include "upext/quadrature.hpp"
#include "upext/recurrence.hpp"
#include "upext/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace upext {

enum class BaseKind { chebyshev_u, grosjean1 };

/// Base family whose orthogonality measure (and its Stieltjes ratio limit) is known in closed form.
class BaseFamily {
 public:
  static BaseFamily chebyshev_u() { return BaseFamily(BaseKind::chebyshev_u, Rational(1, 2)); }
  static BaseFamily grosjean1(const Rational& alpha) { return BaseFamily(BaseKind::grosjean1, alpha); }

  BaseKind kind() const { return kind_; }
  /// Grosjean parameter (1/2 is reported for U, whose second-kind index it is).
  const Rational& alpha() const { return alpha_; }
  double alpha_real() const { return to_double(alpha_); }
  const CoefficientSequence& sequence() const { return seq_; }
  double a1() const { return seq_.a(1); }

  std::string name() const {
    return kind_ == BaseKind::chebyshev_u ? std::string("U") : "grosjean1(" + to_string(alpha_) + ")";
  }

  /**
   * lim p^(1)_{n-1}(x) / p_n(x) for |x| > 1, positive for x > 1 and negative
   * for x < -1.
   */
  double ratio_limit(double x) const;

 private:
  BaseFamily(BaseKind kind, Rational alpha)
      : kind_(kind),
        alpha_(std::move(alpha)),
        seq_(kind == BaseKind::chebyshev_u ? chebyshev_coeffs(ChebyshevKind::U) : grosjean1_coeffs(alpha_)) {}

  BaseKind kind_;
  Rational alpha_;
  CoefficientSequence seq_;
};

/// lim p^(1)_{n-1}(x) / (a_1 p_n(x)) = (x-1)^alpha / (x+1)^{alpha+1} for Grosjean bases, signed.
inline double stieltjes_ratio_limit(double alpha, double x) {
  if (!(std::abs(x) > 1.0)) throw std::domain_error("stieltjes_ratio_limit needs |x| > 1");
  const double v = std::pow(std::abs(x - 1.0), alpha) / std::pow(std::abs(x + 1.0), alpha + 1.0);
  return x > 0 ? v : -v;
}

inline double BaseFamily::ratio_limit(double x) const {
  if (!(std::abs(x) > 1.0)) throw std::domain_error("ratio_limit needs |x| > 1");
  if (kind_ == BaseKind::chebyshev_u) {
    const double s = std::sqrt((x - 1.0) * (x + 1.0));
    return 1.0 / (x > 0 ? x + s : x - s);
  }
  return a1() * stieltjes_ratio_limit(alpha_real(), x);
}

/**
 * Finite-n ratio p^(1)_{n-1}(x) / (a_1 p_n(x)). Both recurrences are
 * rescaled together, so large n outside [-1, 1] does not overflow.
 */
inline double stieltjes_ratio(const CoefficientSequence& seq, std::size_t n, double x) {
  if (n < 1) throw std::invalid_argument("stieltjes_ratio needs n >= 1");
  const CoefficientSequence assoc = shift(seq, 1);
  double p_prev = 0.0, p_cur = 1.0, a_cur = 0.0;  // p_k
  double s_prev = 0.0, s_cur = 1.0, s_a = 0.0;    // p^(1)_{k-1}
  for (std::size_t k = 0; k < n; ++k) {
    const double a_next = seq.a(k + 1);
    const double p_next = ((x - seq.b(k)) * p_cur - a_cur * p_prev) / a_next;
    p_prev = p_cur;
    p_cur = p_next;
    a_cur = a_next;
    if (k >= 1) {
      const std::size_t j = k - 1;  // advance p^(1)_j -> p^(1)_{j+1}
      const double sa_next = assoc.a(j + 1);
      const double s_next = ((x - assoc.b(j)) * s_cur - s_a * s_prev) / sa_next;
      s_prev = s_cur;
      s_cur = s_next;
      s_a = sa_next;
    }
    const double mag = std::max(std::abs(p_cur), std::abs(s_cur));
    if (mag > 1e100) {
      p_prev /= mag, p_cur /= mag, s_prev /= mag, s_cur /= mag;
    }
  }
  return s_cur / (seq.a(1) * p_cur);
}

namespace detail {

/// (1-x)^alpha / (1+x)^{alpha+1} at x = cos theta, via the half-angle forms of 1 -+ x.
inline double grosjean_ratio_angle(double alpha, double theta) {
  const double one_minus = 2.0 * std::pow(std::sin(0.5 * theta), 2);
  const double one_plus = 2.0 * std::pow(std::cos(0.5 * theta), 2);
  return std::pow(one_minus, alpha) / std::pow(one_plus, alpha + 1.0);
}

inline void require_interior(double x) {
  if (!(x > -1.0 && x < 1.0)) throw std::domain_error("density evaluated outside (-1, 1)");
}

inline std::pair<double, double> q_pair(const QLadder& ladder, double x) {
  const std::size_t r = ladder.order();
  const auto Q = ladder.monic_values(x);
  return {Q[r] / ladder.norm(r), Q[r - 1] / ladder.norm(r - 1)};
}

}  // namespace detail

/**
 * Absolutely continuous part of the anti-associated measure over a Grosjean
 * base, at x = cos theta:
 *
 *     w_r = sin(-pi alpha)/pi * g / |q_r - a_0 e^{i alpha pi} q_{r-1} g|^2,
 *     g   = (1-x)^alpha / (1+x)^{alpha+1}.
 *
 * The modulus is expanded in real arithmetic,
 *
 *     |q_r - a_0 e^{i alpha pi} q_{r-1} g|^2
 *         = q_r^2 - 2 a_0 cos(alpha pi) q_r q_{r-1} g + a_0^2 q_{r-1}^2 g^2
 *         = (q_r - a_0 cos(alpha pi) q_{r-1} g)^2 + (a_0 sin(alpha pi) q_{r-1} g)^2,
 *
 * and evaluated in the last form, which cannot cancel to a negative value.
 * It is positive on (-1, 1) because q_r and q_{r-1} have no common zero.
 */
inline double theorem1_density_angle(double alpha, const QLadder& ladder, double theta) {
  const double x = std::cos(theta);
  const auto [qr, qr1] = detail::q_pair(ladder, x);
  const double a0 = ladder.params().a0();
  const double g = detail::grosjean_ratio_angle(alpha, theta);
  const double re = qr - a0 * std::cos(alpha * std::numbers::pi) * qr1 * g;
  const double im = a0 * std::sin(alpha * std::numbers::pi) * qr1 * g;
  const double modulus2 = re * re + im * im;
  return std::sin(-std::numbers::pi * alpha) / std::numbers::pi * g / modulus2;
}

inline double theorem1_density(double alpha, const ExtensionParams& params, double x) {
  if (!(alpha > -1.0 && alpha < 0.0)) throw std::invalid_argument("theorem1_density needs -1 < alpha < 0");
  detail::require_interior(x);
  return theorem1_density_angle(alpha, QLadder(params), std::acos(x));
}

/**
 * Chebyshev-U base: w = (2/pi) sqrt(1-x^2) / (q_r^2 - 4 a_0 x q_r q_{r-1} + 4 a_0^2 q_{r-1}^2).
 * The denominator is |q_r - 2 a_0 e^{i theta} q_{r-1}|^2, summed as two squares.
 */
inline double bernstein_szego_U_density_angle(const QLadder& ladder, double theta) {
  const double x = std::cos(theta);
  const auto [qr, qr1] = detail::q_pair(ladder, x);
  const double a0 = ladder.params().a0();
  const double re = qr - 2.0 * a0 * x * qr1;
  const double im = 2.0 * a0 * std::sin(theta) * qr1;
  const double denom = re * re + im * im;
  return 2.0 / std::numbers::pi * std::sin(theta) / denom;
}

inline double bernstein_szego_U_density(const ExtensionParams& params, double x) {
  detail::require_interior(x);
  return bernstein_szego_U_density_angle(QLadder(params), std::acos(x));
}

/// Chebyshev-T base (Grosjean alpha = -1/2): w = (1/pi) sqrt(1-x^2) / ((1-x^2) q_r^2 + a_0^2 q_{r-1}^2).
inline double bernstein_szego_T_density_angle(const QLadder& ladder, double theta) {
  const double x = std::cos(theta);
  const auto [qr, qr1] = detail::q_pair(ladder, x);
  const double a0sq = ladder.params().a0_squared();
  const double s = std::sin(theta);
  return s / std::numbers::pi / (s * s * qr * qr + a0sq * qr1 * qr1);
}

inline double bernstein_szego_T_density(const ExtensionParams& params, double x) {
  detail::require_interior(x);
  return bernstein_szego_T_density_angle(QLadder(params), std::acos(x));
}

/**
 * Mass-point function outside [-1, 1]:
 *
 *     q_r(x) - (a_0 / a_1) q_{r-1}(x) lim p^(1)_{n-1}(x) / p_n(x).
 *
 * For a Grosjean base this is q_r - a_0 q_{r-1} sign(x) |x-1|^alpha / |x+1|^{alpha+1};
 * for the U base it is q_r - 2 a_0 q_{r-1} / (x + sqrt(x^2 - 1)) with the
 * root of the sign of x.
 */
inline double mass_point_equation(const BaseFamily& base, const QLadder& ladder, double x) {
  if (!(std::abs(x) > 1.0)) throw std::domain_error("mass_point_equation needs |x| > 1");
  const auto [qr, qr1] = detail::q_pair(ladder, x);
  return qr - ladder.params().a0() / base.a1() * qr1 * base.ratio_limit(x);
}

inline double mass_point_equation(const BaseFamily& base, const ExtensionParams& params, double x) {
  return mass_point_equation(base, QLadder(params), x);
}

/// Default search bound: Gershgorin radius of the extended matrix plus one.
inline double default_search_bound(const BaseFamily& base, const ExtensionParams& params) {
  const auto t = truncate(extend(base.sequence(), params), params.order() + 256);
  const auto [lo, hi] = gershgorin_bounds(t);
  return std::max(std::abs(lo), std::abs(hi)) + 1.0;
}

/// Sign-change roots of the mass-point function on both sides of [-1, 1], ascending.
inline std::vector<double> find_mass_points(const BaseFamily& base, const ExtensionParams& params,
                                            double search_bound = 0.0) {
  constexpr double standoff = 1e-8;
  constexpr std::size_t grid = 6000;
  const QLadder ladder(params);
  if (search_bound <= 0.0) search_bound = default_search_bound(base, params);
  if (!(search_bound > 1.0 + standoff)) throw std::invalid_argument("mass-point search bound must exceed 1");

  std::vector<double> roots;
  for (int side : {-1, 1}) {
    auto f = [&](double t) { return mass_point_equation(base, ladder, side * (1.0 + t)); };
    // distance t from the endpoint, log-spaced so roots hugging +-1 are resolved
    const double t_lo = standoff, t_hi = search_bound - 1.0;
    const double step = std::log(t_hi / t_lo) / static_cast<double>(grid);
    std::size_t found = 0;
    double t_prev = t_lo, f_prev = f(t_lo);
    for (std::size_t i = 1; i <= grid; ++i) {
      const double t = i == grid ? t_hi : t_lo * std::exp(step * static_cast<double>(i));
      const double fv = f(t);
      if (f_prev == 0.0 || (f_prev < 0.0) != (fv < 0.0)) {
        double a = t_prev, b = t, fa = f_prev;
        if (f_prev != 0.0) {
          for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
            const double m = 0.5 * (a + b);
            const double fm = f(m);
            if (fm == 0.0) {
              a = b = m;
              break;
            }
            if ((fm < 0.0) == (fa < 0.0)) {
              a = m;
              fa = fm;
            } else {
              b = m;
            }
          }
        }
        roots.push_back(side * (1.0 + 0.5 * (a + b)));
        ++found;
      }
      t_prev = t;
      f_prev = fv;
    }
    if (found > params.order())
      throw std::logic_error("integrity failure: " + std::to_string(found) + " mass points on one side for r = " +
                             std::to_string(params.order()));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Eigenvalues of the N x N extended truncation lying more than `margin` outside [-1, 1].
inline std::vector<double> outlier_eigenvalues(const BaseFamily& base, const ExtensionParams& params, std::size_t N,
                                               double margin = 1e-3, double tol = 1e-13) {
  const auto t = truncate(extend(base.sequence(), params), N);
  const auto [lo, hi] = gershgorin_bounds(t);
  auto left = eigenvalues_in(t, lo - 1.0, -1.0 - margin, tol);
  auto right = eigenvalues_in(t, 1.0 + margin, hi + 1.0, tol);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

/// Pairing of mass-point roots with truncated-matrix outliers.
struct MassPointCrossCheck {
  std::vector<double> roots;
  std::vector<double> outliers;
  std::vector<double> unmatched_roots;
  std::vector<double> unmatched_outliers;
  double max_deviation = 0.0;

  bool consistent() const { return unmatched_roots.empty() && unmatched_outliers.empty(); }
};

/**
 * Every root farther than `margin` from [-1, 1] must sit within `tol` of an
 * outlier eigenvalue of the N-truncation, and vice versa. Roots hugging the
 * endpoints are exempt: the truncation converges too slowly there.
 */
inline MassPointCrossCheck cross_check_mass_points(const BaseFamily& base, const ExtensionParams& params,
                                                   std::size_t N = 2000, double tol = 1e-6, double margin = 1e-3) {
  MassPointCrossCheck out;
  out.roots = find_mass_points(base, params);
  out.outliers = outlier_eigenvalues(base, params, N, margin);
  auto nearest = [](const std::vector<double>& pool, double v) {
    double best = std::numeric_limits<double>::infinity();
    for (double p : pool) best = std::min(best, std::abs(p - v));
    return best;
  };
  for (double r : out.roots) {
    if (std::abs(r) - 1.0 <= margin) continue;
    const double d = nearest(out.outliers, r);
    if (d > tol)
      out.unmatched_roots.push_back(r);
    else
      out.max_deviation = std::max(out.max_deviation, d);
  }
  for (double e : out.outliers)
    if (nearest(out.roots, e) > tol) out.unmatched_outliers.push_back(e);
  return out;
}

/**
 * Mass at a mass point, 1 / sum_k p^(-r)_k(x*)^2.
 *
 * At a mass point the orthonormal values form the decaying solution of the
 * recurrence, but the forward recurrence also carries a rounding-level
 * multiple of the growing one. The sum stops once the terms are negligible,
 * or, if contamination takes over first, at the smallest term seen after a
 * decay of many orders of magnitude. Terms that never decay mean x* is not a
 * mass point.
 */
inline double mass_at(const BaseFamily& base, const ExtensionParams& params, double location) {
  if (!(std::abs(location) > 1.0)) throw std::domain_error("mass points lie outside [-1, 1]");
  const CoefficientSequence ext = extend(base.sequence(), params);
  constexpr std::size_t max_terms = 50'000'000;
  double p_prev = 0.0, p_cur = 1.0, a_cur = 0.0;
  double sum = 1.0, min_term = 1.0, sum_at_min = 1.0;
  for (std::size_t k = 0; k < max_terms; ++k) {
    const double a_next = ext.a(k + 1);
    const double p_next = ((location - ext.b(k)) * p_cur - a_cur * p_prev) / a_next;
    p_prev = p_cur;
    p_cur = p_next;
    a_cur = a_next;
    const double term = p_cur * p_cur;
    if (!std::isfinite(term)) break;
    sum += term;
    if (term < 1e-17 * sum) return 1.0 / sum;
    if (term < min_term) {
      min_term = term;
      sum_at_min = sum;
    } else if (term > 1e4 * min_term) {
      if (min_term < 1e-12 * sum_at_min) return 1.0 / sum_at_min;
      if (k > params.order() + 64) break;
    }
  }
  throw std::domain_error("terms do not decay at x = " + std::to_string(location) + ": not a mass point");
}

enum class Provenance { theorem1, bernstein_szego_U, bernstein_szego_T };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::theorem1: return "theorem1";
    case Provenance::bernstein_szego_U: return "bernstein_szego_U";
    case Provenance::bernstein_szego_T: return "bernstein_szego_T";
  }
  return "unknown";
}

struct MassPoint {
  double location = 0.0;
  double mass = 0.0;

  friend bool operator==(const MassPoint&, const MassPoint&) = default;
};

/// Orthogonality measure of an anti-associated family: density on (-1, 1) plus mass points.
class MeasureModel {
 public:
  MeasureModel(std::function<double(double)> density_angle, std::vector<MassPoint> masses, Provenance provenance)
      : density_angle_(std::move(density_angle)), masses_(std::move(masses)), provenance_(provenance) {
    for (const auto& m : masses_)
      if (!(std::abs(m.location) > 1.0) || !(m.mass > 0.0))
        throw std::invalid_argument("mass points must lie outside [-1, 1] and carry positive mass");
  }

  double density(double x) const {
    detail::require_interior(x);
    return density_angle_(std::acos(x));
  }
  /// Density at x = cos(theta); keeps 1 -+ x accurate near the endpoints.
  double density_at_angle(double theta) const { return density_angle_(theta); }
  const std::vector<MassPoint>& masses() const { return masses_; }
  Provenance provenance() const { return provenance_; }

  /// int_{-1}^{1} density(x) dx.
  double continuous_mass(double tol = 1e-12) const {
    auto f = [this](double theta, double w, std::vector<double>& acc) {
      acc[0] += w * density_angle_(theta) * std::sin(theta);
    };
    return integrate_angle_converged(f, 1, tol).values[0];
  }

  double total_mass() const {
    double s = continuous_mass();
    for (const auto& m : masses_) s += m.mass;
    return s;
  }

 private:
  std::function<double(double)> density_angle_;
  std::vector<MassPoint> masses_;
  Provenance provenance_;
};

/// Density + mass points for the extension of `base` by `params`.
inline MeasureModel build_measure(const BaseFamily& base, const ExtensionParams& params) {
  const QLadder ladder(params);
  std::function<double(double)> density;
  Provenance prov;
  if (base.kind() == BaseKind::chebyshev_u) {
    density = [ladder](double theta) { return bernstein_szego_U_density_angle(ladder, theta); };
    prov = Provenance::bernstein_szego_U;
  } else if (base.alpha() == Rational(-1, 2)) {
    density = [ladder](double theta) { return bernstein_szego_T_density_angle(ladder, theta); };
    prov = Provenance::bernstein_szego_T;
  } else {
    const double alpha = base.alpha_real();
    density = [ladder, alpha](double theta) { return theorem1_density_angle(alpha, ladder, theta); };
    prov = Provenance::theorem1;
  }
  std::vector<MassPoint> masses;
  for (double x : find_mass_points(base, params)) masses.push_back({x, mass_at(base, params, x)});
  return MeasureModel(std::move(density), std::move(masses), prov);
}

/**
 * G[i][j] = int p_i p_j w dx + sum_masses m p_i(x*) p_j(x*) for the orthonormal
 * anti-associated polynomials of `seq` (the extended sequence). Equals the
 * identity when `model` is their orthogonality measure.
 */
inline std::vector<std::vector<double>> gram_matrix(const MeasureModel& model, const CoefficientSequence& seq,
                                                    std::size_t m_max, double tol = 1e-10) {
  if (m_max > 20) throw std::invalid_argument("gram_matrix supports m_max <= 20");
  const std::size_t dim = m_max + 1;
  auto f = [&](double theta, double w, std::vector<double>& acc) {
    const double x = std::cos(theta);
    const double scale = w * model.density_at_angle(theta) * std::sin(theta);
    const auto p = eval_orthonormal(seq, m_max, x);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j <= i; ++j) acc[i * dim + j] += scale * p[i] * p[j];
  };
  const auto integral = integrate_angle_converged(f, dim * dim, tol);
  std::vector<std::vector<double>> G(dim, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) G[i][j] = G[j][i] = integral.values[i * dim + j];
  for (const auto& m : model.masses()) {
    const auto p = eval_orthonormal(seq, m_max, m.location);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) G[i][j] += m.mass * p[i] * p[j];
  }
  return G;
}

inline std::vector<std::vector<double>> gram_matrix(const BaseFamily& base, const ExtensionParams& params,
                                                    std::size_t m_max) {
  return gram_matrix(build_measure(base, params), extend(base.sequence(), params), m_max);
}

/// max |G - I|.
inline double identity_deviation(const std::vector<std::vector<double>>& G) {
  double d = 0.0;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < G.size(); ++j) d = std::max(d, std::abs(G[i][j] - (i == j ? 1.0 : 0.0)));
  return d;
}

/// n lambda_n(x) along n_list and a two-point Richardson extrapolation assuming O(1/n) error.
struct ChristoffelLimit {
  std::vector<std::size_t> n;
  std::vector<double> scaled;  // n * lambda_n(x)
  double extrapolated = 0.0;
};

inline ChristoffelLimit christoffel_limit_estimate(const CoefficientSequence& seq, double x,
                                                   const std::vector<std::size_t>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("christoffel_limit_estimate needs at least one n");
  if (!std::is_sorted(n_list.begin(), n_list.end())) throw std::invalid_argument("n_list must be increasing");
  const auto p = eval_orthonormal(seq, n_list.back(), x);
  ChristoffelLimit out;
  double s = 0.0;
  std::size_t next = 0;
  for (std::size_t j = 0; j <= n_list.back() && next < n_list.size(); ++j) {
    s += p[j] * p[j];
    while (next < n_list.size() && n_list[next] == j) {
      out.n.push_back(j);
      out.scaled.push_back(static_cast<double>(j) / s);
      ++next;
    }
  }
  if (out.n.size() == 1) {
    out.extrapolated = out.scaled.back();
  } else {
    const double n1 = static_cast<double>(out.n[out.n.size() - 2]), n2 = static_cast<double>(out.n.back());
    const double f1 = out.scaled[out.scaled.size() - 2], f2 = out.scaled.back();
    out.extrapolated = (n2 * f2 - n1 * f1) / (n2 - n1);
  }
  return out;
}

/// Normalised sums over a Grosjean base and their predicted limits.
struct SumLimits {
  double squares = 0.0;             // (1/n) sum_{k=0}^{n} p_k^2
  double associated_squares = 0.0;  // (1/n) sum_{k=0}^{n-1} [p_k^(1)]^2
  double mixed = 0.0;               // (1/n) sum_{k=1}^{n} p_k p_{k-1}^(1)
  double squares_limit = 0.0;
  double associated_limit = 0.0;
  double mixed_limit = 0.0;
};

inline SumLimits sum_limit_checks(const Rational& alpha, double x, std::size_t n) {
  if (!(x > -1.0 && x < 1.0)) throw std::domain_error("sum_limit_checks needs an interior x");
  if (n < 1) throw std::invalid_argument("sum_limit_checks needs n >= 1");
  const CoefficientSequence seq = grosjean1_coeffs(alpha);
  const double a = to_double(alpha);
  const auto p = eval_orthonormal(seq, n, x);
  const auto p1 = eval_orthonormal(shift(seq, 1), n - 1, x);
  SumLimits out;
  for (std::size_t k = 0; k <= n; ++k) out.squares += p[k] * p[k];
  for (std::size_t k = 0; k < n; ++k) out.associated_squares += p1[k] * p1[k];
  for (std::size_t k = 1; k <= n; ++k) out.mixed += p[k] * p1[k - 1];
  const double nn = static_cast<double>(n);
  out.squares /= nn;
  out.associated_squares /= nn;
  out.mixed /= nn;

  const double s = std::sin(-std::numbers::pi * a);
  const double root = std::sqrt(1.0 - x * x);
  const double g = std::pow(1.0 - x, a) / std::pow(1.0 + x, a + 1.0);
  out.squares_limit = 1.0 / (root * s * g);
  out.associated_limit = -2.0 * a * (1.0 + a) / (root * s) * g;
  out.mixed_limit = std::sqrt(-2.0 * a * (1.0 + a)) * std::cos(std::numbers::pi * a) / (root * s);
  return out;
}

}  // namespace upext

#endif  // UPEXT_MEASURE_HPP
