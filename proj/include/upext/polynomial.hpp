#ifndef UPEXT_POLYNOMIAL_HPP
#define UPEXT_POLYNOMIAL_HPP

#include "upext/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace upext {

/**
 * Dense univariate polynomial with coefficients stored in ascending order.
 *
 * The representation is canonical: trailing zero coefficients are always
 * trimmed, so the zero polynomial has an empty coefficient list and degree -1.
 * With T = Rational every operation is exact, which is what the differential
 * equation machinery relies on.
 */
template <class T>
class DensePolynomial {
 public:
  DensePolynomial() = default;
  DensePolynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit DensePolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static DensePolynomial constant(const T& c) { return DensePolynomial(std::vector<T>{c}); }
  static DensePolynomial monomial(std::size_t k, const T& c = T(1)) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return DensePolynomial(std::move(v));
  }
  static DensePolynomial x() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coefficients() const { return coeffs_; }
  T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  const T& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  /// Horner evaluation in the coefficient type.
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in double precision.
  double evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  DensePolynomial derivative(unsigned order = 1) const {
    std::vector<T> v = coeffs_;
    for (unsigned d = 0; d < order; ++d) {
      if (v.empty()) break;
      std::vector<T> w(v.size() - 1, T(0));
      for (std::size_t k = 1; k < v.size(); ++k) w[k - 1] = v[k] * T(static_cast<long>(k));
      v = std::move(w);
    }
    return DensePolynomial(std::move(v));
  }

  DensePolynomial& operator+=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  DensePolynomial& operator-=(const DensePolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  DensePolynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
  friend DensePolynomial operator-(DensePolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend DensePolynomial operator*(DensePolynomial a, const T& s) { return a *= s; }
  friend DensePolynomial operator*(const T& s, DensePolynomial a) { return a *= s; }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePolynomial(std::move(v));
  }
  DensePolynomial& operator*=(const DensePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over a field: returns (quotient, remainder).
  friend std::pair<DensePolynomial, DensePolynomial> divmod(const DensePolynomial& a, const DensePolynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {DensePolynomial{}, a};
    std::vector<T> quot(static_cast<std::size_t>(a.degree() - db + 1), T(0));
    const T& lead = b.coeffs_.back();
    for (int k = a.degree() - db; k >= 0; --k) {
      T factor = rem[static_cast<std::size_t>(k + db)] / lead;
      quot[static_cast<std::size_t>(k)] = factor;
      if (factor == 0) continue;
      for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {DensePolynomial(std::move(quot)), DensePolynomial(std::move(rem))};
  }

  /// Exact division; throws when b does not divide a.
  friend DensePolynomial exact_div(const DensePolynomial& a, const DensePolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
  }

  /// Monic greatest common divisor (zero if both inputs are zero).
  friend DensePolynomial gcd(DensePolynomial a, DensePolynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (T(1) / a.leading());
  }

  friend std::ostream& operator<<(std::ostream& os, const DensePolynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t k = p.coeffs_.size(); k-- > 0;) {
      if (p.coeffs_[k] == 0) continue;
      if (!first) os << " + ";
      os << "(" << p.coeffs_[k] << ")";
      if (k > 0) os << "*x^" << k;
      first = false;
    }
    return os;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using RationalPolynomial = DensePolynomial<Rational>;

}  // namespace upext

#endif  // UPEXT_POLYNOMIAL_HPP
