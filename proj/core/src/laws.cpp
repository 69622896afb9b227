#include "cfree/laws.hpp"

#include <stdexcept>
#include <utility>

namespace cfree {

namespace {

int even_order(int order) {
  if (order < 2) throw std::invalid_argument("law order must be >= 2");
  return order + (order % 2);
}

std::vector<Rational> pattern(std::initializer_list<Rational> head, const Rational& fill, int len) {
  std::vector<Rational> out(head);
  out.resize(static_cast<std::size_t>(len), fill);
  return out;
}

}  // namespace

std::vector<Rational> TwoStateLaw::mu_moments(int order) const {
  return moments_from_jacobi(muJacobi, order);
}

std::vector<Rational> TwoStateLaw::nu_moments(int order) const {
  return moments_from_jacobi(nuJacobi, order);
}

TwoStateLaw law_from_jacobi(JacobiParams mu, JacobiParams nu, int order, std::string name) {
  const int n = even_order(order);
  auto phiMoments = moments_from_jacobi(mu, n);
  auto psiMoments = moments_from_jacobi(nu, n);
  auto [R, r] = moments_to_twostate_cumulants(phiMoments, psiMoments);
  TwoStateLaw law;
  law.name = std::move(name);
  law.muJacobi = std::move(mu);
  law.nuJacobi = std::move(nu);
  law.cumulants = VariableSpec{law.name, std::move(r), std::move(R)};
  law.order = n;
  return law;
}

TwoStateLaw law_from_cumulants(VariableSpec cumulants, int order) {
  const int n = even_order(order);
  if (cumulants.order() < n) {
    throw std::invalid_argument("cumulant sequences shorter than the law order");
  }
  TwoStateLaw law;
  law.name = cumulants.name;
  law.muJacobi = jacobi_from_moments(phi_moment_sequence(cumulants, n)).jacobi;
  law.nuJacobi = jacobi_from_moments(psi_moment_sequence(cumulants, n)).jacobi;
  law.cumulants = std::move(cumulants);
  law.order = n;
  return law;
}

TwoStateLaw two_state_normal(const Rational& a, const Rational& b, int order) {
  if (b <= 0) throw std::domain_error("two_state_normal needs b > 0");
  const int n = even_order(order);
  const int levels = n / 2;
  TwoStateLaw law;
  law.name = "two-state-normal";
  law.muJacobi = JacobiParams{pattern({a}, Rational(0), levels), pattern({b}, Rational(1), levels), std::nullopt};
  law.nuJacobi = JacobiParams::wigner(levels);
  law.cumulants = VariableSpec{law.name,
                               pattern({Rational(0), Rational(1)}, Rational(0), n),
                               pattern({a, b}, Rational(0), n)};
  law.order = n;
  return law;
}

MeixnerClass classify_meixner(const Rational& a, const Rational& b) {
  if (b <= 0) throw std::domain_error("classify_meixner needs b > 0");
  if (b == 1) return a == 0 ? MeixnerClass::Wigner : MeixnerClass::FreePoisson;
  if (b > 1) return MeixnerClass::FreeBinomial;
  const Rational lhs = a * a;
  const Rational rhs = 4 * (1 - b);
  if (lhs > rhs) return MeixnerClass::FreePascal;
  if (lhs == rhs) return MeixnerClass::FreeGamma;
  return MeixnerClass::PureFreeMeixner;
}

std::string to_string(MeixnerClass c) {
  switch (c) {
    case MeixnerClass::Wigner: return "wigner";
    case MeixnerClass::FreePoisson: return "free-poisson";
    case MeixnerClass::FreePascal: return "free-pascal";
    case MeixnerClass::FreeGamma: return "free-gamma";
    case MeixnerClass::PureFreeMeixner: return "pure-free-meixner";
    case MeixnerClass::FreeBinomial: return "free-binomial";
  }
  throw std::logic_error("unreachable meixner class");
}

JacobiParams free_convolve(const JacobiParams& nu1, const JacobiParams& nu2, int order) {
  const int n = even_order(order);
  auto r1 = moments_to_free_cumulants(moments_from_jacobi(nu1, n));
  auto r2 = moments_to_free_cumulants(moments_from_jacobi(nu2, n));
  for (std::size_t i = 0; i < r1.size(); ++i) r1[i] += r2[i];
  VariableSpec sum{"sum", r1, r1};
  return jacobi_from_moments(psi_moment_sequence(sum, n)).jacobi;
}

TwoStateLaw cfree_convolve(const TwoStateLaw& l1, const TwoStateLaw& l2, int order) {
  const int n = even_order(order);
  if (l1.cumulants.order() < n || l2.cumulants.order() < n) {
    throw std::invalid_argument("law orders are shorter than the requested convolution order");
  }
  VariableSpec sum{l1.name + "+" + l2.name, {}, {}};
  sum.freeCumulants.resize(static_cast<std::size_t>(n));
  sum.twoStateCumulants.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    sum.freeCumulants[static_cast<std::size_t>(k - 1)] = l1.cumulants.r(k) + l2.cumulants.r(k);
    sum.twoStateCumulants[static_cast<std::size_t>(k - 1)] = l1.cumulants.R(k) + l2.cumulants.R(k);
  }
  return law_from_cumulants(std::move(sum), n);
}

TwoStateLaw cfree_power(const TwoStateLaw& l, const Rational& t, int order) {
  if (t < 0) throw std::domain_error("cfree_power needs t >= 0");
  const int n = even_order(order);
  if (l.cumulants.order() < n) {
    throw std::invalid_argument("law order is shorter than the requested power order");
  }
  // The power is taken in the scope in which it is used here: two-state
  // normal pairs, i.e. R = (a, b, 0, ...), r = (0, 1, 0, ...).
  if (l.cumulants.r(1) != 0 || l.cumulants.r(2) != 1 || l.cumulants.R(2) <= 0) {
    throw std::domain_error("cfree_power input is not a two-state normal pair");
  }
  for (int k = 3; k <= n; ++k) {
    if (l.cumulants.r(k) != 0 || l.cumulants.R(k) != 0) {
      throw std::domain_error("cfree_power input is not a two-state normal pair");
    }
  }
  VariableSpec scaled{l.name + "^t", {}, {}};
  scaled.freeCumulants.resize(static_cast<std::size_t>(n));
  scaled.twoStateCumulants.resize(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    scaled.freeCumulants[static_cast<std::size_t>(k - 1)] = t * l.cumulants.r(k);
    scaled.twoStateCumulants[static_cast<std::size_t>(k - 1)] = t * l.cumulants.R(k);
  }
  return law_from_cumulants(std::move(scaled), n);
}

}  // namespace cfree
