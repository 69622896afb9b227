#include "cfree/jacobi.hpp"

#include <stdexcept>

#include "cfree/series.hpp"

namespace cfree {

Rational JacobiParams::alpha_at(int i) const {
  if (i < 0) throw std::out_of_range("negative Jacobi level");
  if (i < levels()) return alpha[static_cast<std::size_t>(i)];
  if (terminated) return Rational(0);
  throw std::out_of_range("Jacobi level past the stored depth");
}

Rational JacobiParams::beta_at(int i) const {
  if (i < 0) throw std::out_of_range("negative Jacobi level");
  if (i < levels()) return beta[static_cast<std::size_t>(i)];
  if (terminated) return Rational(0);
  throw std::out_of_range("Jacobi level past the stored depth");
}

JacobiParams JacobiParams::make(std::vector<Rational> alpha, std::vector<Rational> beta,
                                std::optional<int> terminated) {
  if (alpha.size() != beta.size()) {
    throw std::invalid_argument("Jacobi alpha and beta sequences must have equal length");
  }
  if (terminated) {
    const int t = *terminated;
    if (t < 0 || t >= static_cast<int>(beta.size())) {
      throw std::invalid_argument("Jacobi termination index out of range");
    }
    // alpha_t still matters (the last diagonal entry); everything deeper
    // and every beta from the cut on is zero by convention.
    for (std::size_t i = static_cast<std::size_t>(t); i < beta.size(); ++i) {
      if (beta[i] != 0 || (i > static_cast<std::size_t>(t) && alpha[i] != 0)) {
        throw std::invalid_argument("terminated Jacobi data must be zero past the cut");
      }
    }
  }
  return JacobiParams{std::move(alpha), std::move(beta), terminated};
}

JacobiParams JacobiParams::point_mass(const Rational& c) {
  return JacobiParams{{c}, {Rational(0)}, 0};
}

JacobiParams JacobiParams::wigner(int levels) {
  if (levels < 1) throw std::invalid_argument("wigner needs at least one level");
  return JacobiParams{std::vector<Rational>(static_cast<std::size_t>(levels), Rational(0)),
                      std::vector<Rational>(static_cast<std::size_t>(levels), Rational(1)),
                      std::nullopt};
}

bool is_probability_jacobi(const JacobiParams& j) {
  const int cut = j.terminated ? *j.terminated : j.levels();
  for (int i = 0; i < cut; ++i) {
    if (j.beta[static_cast<std::size_t>(i)] <= 0) return false;
  }
  return true;
}

namespace {

// Effective entries for depth D: stored values, zeros past a termination
// point. Throws when the stored depth is insufficient for the requested
// order (the last level of the padded range never reaches order N, so it
// may be zero-filled freely).
struct EffectiveJacobi {
  std::vector<Rational> alpha, beta;

  EffectiveJacobi(const JacobiParams& j, int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    const int needed = (order + 1) / 2;  // ceil(N/2)
    if (!j.terminated && j.levels() < needed) {
      throw std::invalid_argument("insufficient Jacobi depth for the requested order");
    }
    const int depth = needed + 1;
    alpha.reserve(static_cast<std::size_t>(depth));
    beta.reserve(static_cast<std::size_t>(depth));
    for (int i = 0; i < depth; ++i) {
      const bool stored = i < j.levels();
      alpha.push_back(stored ? j.alpha[static_cast<std::size_t>(i)] : Rational(0));
      beta.push_back(stored ? j.beta[static_cast<std::size_t>(i)] : Rational(0));
    }
  }

  int depth() const { return static_cast<int>(alpha.size()); }
};

}  // namespace

std::vector<Rational> moments_from_jacobi_cf(const JacobiParams& j, int order) {
  EffectiveJacobi eff(j, order);
  // Bottom-up continued fraction in moment form:
  //   M_i(z) = 1 / (1 - alpha_i z - beta_i z^2 M_{i+1}(z)),
  // seeded with M_depth = 1; level k first touches order 2k, so the seed
  // never reaches order N.
  TruncatedSeries m = TruncatedSeries::one(order);
  const TruncatedSeries one = TruncatedSeries::one(order);
  for (int i = eff.depth(); i-- > 0;) {
    TruncatedSeries den = one;
    if (order >= 1) den.set_coeff(1, -eff.alpha[static_cast<std::size_t>(i)]);
    for (int d = 2; d <= order; ++d) {
      den.set_coeff(d, -(eff.beta[static_cast<std::size_t>(i)] * m.coeff(d - 2)));
    }
    m = series_div(one, den);
  }
  return m.coeffs();
}

std::vector<Rational> moments_from_jacobi_tridiagonal(const JacobiParams& j, int order) {
  EffectiveJacobi eff(j, order);
  const auto d = static_cast<std::size_t>(eff.depth());
  // v = T^n e_0 for the operator with diagonal alpha, superdiagonal beta
  // and subdiagonal 1; the moment is the first entry.
  std::vector<Rational> v(d, Rational(0)), next(d, Rational(0));
  v[0] = 1;
  std::vector<Rational> moments(static_cast<std::size_t>(order) + 1, Rational(0));
  moments[0] = 1;
  for (int n = 1; n <= order; ++n) {
    for (std::size_t i = 0; i < d; ++i) {
      Rational acc = eff.alpha[i] * v[i];
      if (i + 1 < d) acc += eff.beta[i] * v[i + 1];
      if (i > 0) acc += v[i - 1];
      next[i] = std::move(acc);
    }
    std::swap(v, next);
    moments[static_cast<std::size_t>(n)] = v[0];
  }
  return moments;
}

std::vector<Rational> moments_from_jacobi(const JacobiParams& j, int order) {
  std::vector<Rational> cf = moments_from_jacobi_cf(j, order);
  std::vector<Rational> tri = moments_from_jacobi_tridiagonal(j, order);
  if (cf != tri) {
    throw std::logic_error("continued-fraction and tridiagonal moment routes disagree");
  }
  return cf;
}

namespace {

Rational apply_functional(const std::vector<Rational>& moments, const std::vector<Rational>& poly) {
  Rational acc = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] != 0) acc += poly[i] * moments[i];
  }
  return acc;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> poly_shift_x(const std::vector<Rational>& p) {
  std::vector<Rational> out(p.size() + 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
  return out;
}

void poly_axpy(std::vector<Rational>& target, const Rational& c, const std::vector<Rational>& p) {
  if (target.size() < p.size()) target.resize(p.size(), Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i) target[i] += c * p[i];
}

}  // namespace

StieltjesResult jacobi_from_moments(const std::vector<Rational>& moments) {
  if (moments.empty() || moments[0] != 1) {
    throw std::invalid_argument("moment sequence must start with m_0 = 1");
  }
  const int order = static_cast<int>(moments.size()) - 1;
  const int levels = order / 2;
  StieltjesResult result;
  if (levels == 0) return result;

  std::vector<Rational> prev;            // P_{i-1}
  std::vector<Rational> curr{Rational(1)};  // P_0
  Rational norm_prev = 0, norm_curr = 1;    // L[P^2]
  for (int i = 0; i < levels; ++i) {
    // alpha_i = L[x P_i^2] / L[P_i^2]
    const Rational alpha_i = apply_functional(moments, poly_shift_x(poly_mul(curr, curr))) / norm_curr;
    // P_{i+1} = (x - alpha_i) P_i - beta_{i-1} P_{i-1}
    std::vector<Rational> next = poly_shift_x(curr);
    poly_axpy(next, -alpha_i, curr);
    if (i > 0) poly_axpy(next, -(norm_curr / norm_prev), prev);
    const Rational norm_next = apply_functional(moments, poly_mul(next, next));
    const Rational beta_i = norm_next / norm_curr;
    result.jacobi.alpha.push_back(alpha_i);
    result.jacobi.beta.push_back(beta_i);
    if (beta_i == 0) {
      result.jacobi.terminated = i;
      return result;
    }
    if (norm_next < 0) result.positiveDefinite = false;
    prev = std::move(curr);
    curr = std::move(next);
    norm_prev = norm_curr;
    norm_curr = norm_next;
  }
  return result;
}

JacobiParams scale_jacobi(const JacobiParams& j, const Rational& gamma) {
  JacobiParams out = j;
  const Rational gamma2 = gamma * gamma;
  for (auto& a : out.alpha) a *= gamma;
  for (auto& b : out.beta) b *= gamma2;
  if (gamma == 0 && !out.terminated && out.levels() > 0) out.terminated = 0;
  return out;
}

JacobiParams shift_jacobi(const JacobiParams& j) {
  if (j.levels() < 2) throw std::invalid_argument("shift_jacobi needs at least two levels");
  JacobiParams out;
  out.alpha.assign(j.alpha.begin() + 1, j.alpha.end());
  out.beta.assign(j.beta.begin() + 1, j.beta.end());
  if (j.terminated) out.terminated = std::max(0, *j.terminated - 1);
  return out;
}

std::vector<std::vector<Rational>> orthogonal_polys(const JacobiParams& j, int count) {
  if (count < 0) throw std::invalid_argument("orthogonal_polys needs count >= 0");
  int top = count;
  if (j.terminated) {
    top = std::min(top, *j.terminated + 1);
  } else if (count > j.levels()) {
    throw std::invalid_argument("insufficient Jacobi depth for the requested polynomials");
  }
  std::vector<std::vector<Rational>> polys;
  polys.push_back({Rational(1)});
  for (int n = 0; n < top; ++n) {
    std::vector<Rational> next = poly_shift_x(polys.back());
    poly_axpy(next, -j.alpha_at(n), polys.back());
    if (n > 0) poly_axpy(next, -j.beta_at(n - 1), polys[static_cast<std::size_t>(n - 1)]);
    polys.push_back(std::move(next));
  }
  return polys;
}

}  // namespace cfree
