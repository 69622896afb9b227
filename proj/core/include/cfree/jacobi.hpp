#pragma once

#include <optional>
#include <vector>

#include "cfree/rational.hpp"

namespace cfree {

/// Jacobi parameters (alpha_0..alpha_{L-1}; beta_0..beta_{L-1}) of a
/// measure, i.e. the coefficients of its tridiagonal / three-term
/// recurrence representation. When `terminated` is set to index i, the
/// continued fraction stops there (beta_i = 0) and every deeper entry is
/// fixed to zero by convention.
struct JacobiParams {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  std::optional<int> terminated;

  int levels() const { return static_cast<int>(alpha.size()); }
  /// Entry accessors honoring the termination convention (zero past the
  /// stored levels when terminated; out-of-range otherwise throws).
  Rational alpha_at(int i) const;
  Rational beta_at(int i) const;

  /// Validates equal lengths and the termination convention.
  static JacobiParams make(std::vector<Rational> alpha, std::vector<Rational> beta,
                           std::optional<int> terminated = std::nullopt);
  /// Point mass at c: (c; 0), terminated at level 0.
  static JacobiParams point_mass(const Rational& c);
  /// Standard semicircle data (0,...; 1,...) with the given level count.
  static JacobiParams wigner(int levels);

  bool operator==(const JacobiParams& other) const = default;
};

/// True when the stored data is a genuine probability measure at the
/// formal level: every beta before the termination point is positive.
bool is_probability_jacobi(const JacobiParams& j);

/// Moments m_0..m_N, computed two independent ways that must agree
/// exactly: the truncated continued fraction of G re-indexed through
/// M(z) = (1/z) G(1/z), and the (T^n)_{1,1} entries of the tridiagonal
/// operator. Throws std::logic_error if the two routes ever disagree and
/// std::invalid_argument when the stored depth cannot determine order N
/// (ceil(N/2) levels are needed unless the data terminates).
std::vector<Rational> moments_from_jacobi(const JacobiParams& j, int order);
std::vector<Rational> moments_from_jacobi_cf(const JacobiParams& j, int order);
std::vector<Rational> moments_from_jacobi_tridiagonal(const JacobiParams& j, int order);

struct StieltjesResult {
  JacobiParams jacobi;
  /// False when a Hankel pivot went negative along the way; the formal
  /// data is still returned, positivity is the caller's concern.
  bool positiveDefinite = true;
};

/// Stieltjes orthogonalization over exact rationals: the unique Jacobi
/// data reproducing the moments, floor(N/2) levels deep. Stops early and
/// marks termination when a pivot hits zero. Requires m_0 = 1.
StieltjesResult jacobi_from_moments(const std::vector<Rational>& moments);

/// Dilation x -> gamma x: (gamma alpha_n; gamma^2 beta_n).
JacobiParams scale_jacobi(const JacobiParams& j, const Rational& gamma);

/// Drops level 0: (alpha_1, alpha_2, ...; beta_1, beta_2, ...). Needs at
/// least two stored levels.
JacobiParams shift_jacobi(const JacobiParams& j);

/// Monic orthogonal polynomials P_0..P_count as coefficient vectors
/// (P[k][i] is the coefficient of x^i), via
/// x P_n = P_{n+1} + alpha_n P_n + beta_{n-1} P_{n-1}. For terminated data
/// the recursion stops after P_{terminated+1}.
std::vector<std::vector<Rational>> orthogonal_polys(const JacobiParams& j, int count);

}  // namespace cfree
