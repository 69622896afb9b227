#pragma once

#include <vector>

#include "cfree/rational.hpp"

namespace cfree {

/// Formal power series over Rational, truncated at a fixed order N
/// (inclusive). Coefficients are stored for degrees 0..N; no operation
/// reads or writes past N. Binary operations on mismatched orders
/// truncate to the smaller order, which matches the formal-series
/// semantics of "known up to order N".
class TruncatedSeries {
 public:
  /// Zero series of the given order. order >= 0.
  explicit TruncatedSeries(int order);
  /// Series from low-order coefficients; missing entries are zero,
  /// entries past the order are dropped.
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  static TruncatedSeries constant(int order, const Rational& value);
  /// c * z^degree (degree may exceed order, giving the zero series).
  static TruncatedSeries monomial(int order, int degree, const Rational& coeff = Rational(1));
  static TruncatedSeries one(int order) { return constant(order, Rational(1)); }
  static TruncatedSeries identity(int order) { return monomial(order, 1); }

  int order() const { return order_; }
  const Rational& coeff(int degree) const;
  void set_coeff(int degree, Rational value);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Copy truncated (or zero-extended) to a new order.
  TruncatedSeries truncated(int order) const;

  bool operator==(const TruncatedSeries& other) const = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;  // size order_ + 1
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
/// Cauchy product truncated at the smaller order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& s, const Rational& factor);

/// Long division: returns q with q * den == num up to the common order.
/// Throws std::domain_error when den has zero constant term.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

/// outer(inner(z)) truncated at the smaller order. Requires inner to have
/// zero constant term; throws std::domain_error otherwise.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
inline TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) { return series_scale(s, c); }

/// Moment generating series M(z) = sum_i m_i z^i at order m.size()-1.
/// Requires m_0 == 1 (throws std::invalid_argument otherwise).
TruncatedSeries moments_to_series(const std::vector<Rational>& moments);

/// The Cauchy-transform view G(z) = (1/z) M(1/z) of a moment series is a
/// pure re-indexing: m_n is the coefficient of z^-(n+1). This accessor
/// names that correspondence; no analytic evaluation happens anywhere.
const Rational& cauchy_tail_coefficient(const TruncatedSeries& moment_series, int n);

}  // namespace cfree
