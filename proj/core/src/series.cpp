#include "cfree/series.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace cfree {

Rational make_rational(Integer numer, Integer denom) {
  if (denom == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational r(std::move(numer));
  return r / Rational(std::move(denom));
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view part) -> Integer {
    if (part.empty()) throw bad();
    const bool negative = part[0] == '-';
    if (part[0] == '+' || part[0] == '-') part.remove_prefix(1);
    if (part.empty()) throw bad();
    for (char c : part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    }
    Integer value{std::string(part)};
    return negative ? Integer(-value) : value;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  Integer numer = parse_int(text.substr(0, slash));
  Integer denom = parse_int(text.substr(slash + 1));
  if (denom == 0) throw bad();
  return make_rational(std::move(numer), std::move(denom));
}

std::string to_fraction_string(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_plain_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return to_fraction_string(value);
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : TruncatedSeries(order) {
  const std::size_t n = std::min(coeffs.size(), coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& value) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree, const Rational& coeff) {
  TruncatedSeries s(order);
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = coeff;
  return s;
}

const Rational& TruncatedSeries::coeff(int degree) const {
  if (degree < 0 || degree > order_) throw std::out_of_range("series coefficient out of range");
  return coeffs_[static_cast<std::size_t>(degree)];
}

void TruncatedSeries::set_coeff(int degree, Rational value) {
  if (degree < 0 || degree > order_) throw std::out_of_range("series coefficient out of range");
  coeffs_[static_cast<std::size_t>(degree)] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  TruncatedSeries s(order);
  const int n = std::min(order, order_);
  for (int i = 0; i <= n; ++i) s.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
  return s;
}

namespace {
int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}
}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) out.set_coeff(i, a.coeff(i) + b.coeff(i));
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) out.set_coeff(i, a.coeff(i) - b.coeff(i));
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = common_order(a, b);
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeff(j) == 0) continue;
      out.set_coeff(i + j, out.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& s, const Rational& factor) {
  TruncatedSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out.set_coeff(i, factor * s.coeff(i));
  return out;
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
  if (den.coeff(0) == 0) {
    throw std::domain_error("series division by zero constant term");
  }
  const int n = common_order(num, den);
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    Rational acc = num.coeff(i);
    for (int j = 0; j < i; ++j) {
      acc -= out.coeff(j) * den.coeff(i - j);
    }
    out.set_coeff(i, acc / den.coeff(0));
  }
  return out;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner.coeff(0) != 0) {
    throw std::domain_error("series composition needs zero constant term in the inner series");
  }
  const int n = common_order(outer, inner);
  // Horner: result = ((outer_n * inner + outer_{n-1}) * inner + ...) + outer_0.
  TruncatedSeries inner_n = inner.truncated(n);
  TruncatedSeries result = TruncatedSeries::constant(n, outer.coeff(n));
  for (int i = n - 1; i >= 0; --i) {
    result = series_mul(result, inner_n);
    result.set_coeff(0, result.coeff(0) + outer.coeff(i));
  }
  return result;
}

TruncatedSeries moments_to_series(const std::vector<Rational>& moments) {
  if (moments.empty() || moments[0] != 1) {
    throw std::invalid_argument("moment sequence must start with m_0 = 1");
  }
  return TruncatedSeries(static_cast<int>(moments.size()) - 1, moments);
}

const Rational& cauchy_tail_coefficient(const TruncatedSeries& moment_series, int n) {
  return moment_series.coeff(n);
}

}  // namespace cfree
