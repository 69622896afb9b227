#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cfree/laws.hpp"
#include "cfree/verify.hpp"

using cfree::JacobiParams;
using cfree::make_rational;
using cfree::MeixnerClass;
using cfree::Rational;
using cfree::RationalSampler;
using cfree::TwoStateLaw;

namespace {

void check_dual_consistency(const TwoStateLaw& law) {
  // Cumulant-derived moments equal Jacobi-derived moments, both states.
  CHECK(cfree::phi_moment_sequence(law.cumulants, law.order) == law.mu_moments(law.order));
  CHECK(cfree::psi_moment_sequence(law.cumulants, law.order) == law.nu_moments(law.order));
}

}  // namespace

TEST_CASE("two_state_normal representations") {
  const Rational a = make_rational(1, 2), b = make_rational(3, 4);
  const auto law = cfree::two_state_normal(a, b, 10);
  CHECK(law.cumulants.R(1) == a);
  CHECK(law.cumulants.R(2) == b);
  CHECK(law.cumulants.r(2) == 1);
  for (int k = 3; k <= law.order; ++k) {
    CHECK(law.cumulants.R(k) == 0);
    CHECK(law.cumulants.r(k) == 0);
  }
  CHECK(law.muJacobi.alpha_at(0) == a);
  CHECK(law.muJacobi.beta_at(0) == b);
  CHECK(law.muJacobi.beta_at(1) == 1);
  check_dual_consistency(law);

  // phi-variance is R_2
  const auto m = law.mu_moments(2);
  CHECK(m[2] - m[1] * m[1] == b);

  CHECK_THROWS_AS(cfree::two_state_normal(1, 0, 8), std::domain_error);
  CHECK_THROWS_AS(cfree::two_state_normal(1, -2, 8), std::domain_error);
}

TEST_CASE("a=0, b=1 gives the Wigner pair") {
  const auto law = cfree::two_state_normal(0, 1, 10);
  CHECK(law.mu_moments(10) == law.nu_moments(10));
  CHECK(law.nu_moments(6) ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(1), Rational(0), Rational(2),
                              Rational(0), Rational(5)});
}

TEST_CASE("meixner classification") {
  CHECK(cfree::classify_meixner(0, 1) == MeixnerClass::Wigner);
  CHECK(cfree::classify_meixner(1, 1) == MeixnerClass::FreePoisson);
  CHECK(cfree::classify_meixner(3, make_rational(1, 2)) == MeixnerClass::FreePascal);
  CHECK(cfree::classify_meixner(1, make_rational(3, 4)) == MeixnerClass::FreeGamma);  // a^2 = 4(1-b)
  CHECK(cfree::classify_meixner(make_rational(1, 2), make_rational(3, 4)) ==
        MeixnerClass::PureFreeMeixner);
  CHECK(cfree::classify_meixner(-5, 2) == MeixnerClass::FreeBinomial);
  CHECK_THROWS_AS(cfree::classify_meixner(2, 0), std::domain_error);
  CHECK_THROWS_AS(cfree::classify_meixner(2, -1), std::domain_error);

  // exactly one class per admissible pair
  RationalSampler sampler(51);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK_NOTHROW(cfree::classify_meixner(sampler.rational(), sampler.positive_rational()));
  }
  CHECK(cfree::to_string(MeixnerClass::FreePascal) == "free-pascal");
}

TEST_CASE("free convolution of two Wigners") {
  const auto sum = cfree::free_convolve(JacobiParams::wigner(6), JacobiParams::wigner(6), 10);
  for (int i = 0; i < sum.levels(); ++i) {
    CHECK(sum.alpha_at(i) == 0);
    CHECK(sum.beta_at(i) == 2);
  }
}

TEST_CASE("free convolution with a point mass shifts") {
  const Rational c = make_rational(5, 3);
  RationalSampler sampler(52);
  JacobiParams j;
  for (int i = 0; i < 6; ++i) {
    j.alpha.push_back(sampler.rational());
    j.beta.push_back(sampler.positive_rational());
  }
  const auto shifted = cfree::free_convolve(JacobiParams::point_mass(c), j, 10);
  const auto base = cfree::moments_from_jacobi(j, 10);
  const auto got = cfree::moments_from_jacobi(shifted, 10);
  // binomial re-expansion oracle: m_n(X + c) = sum_k C(n,k) c^k m_{n-k}(X)
  std::vector<std::vector<Rational>> binom(11, std::vector<Rational>(11, Rational(0)));
  for (int n = 0; n <= 10; ++n) {
    binom[static_cast<std::size_t>(n)][0] = 1;
    for (int k = 1; k <= n; ++k) {
      binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          binom[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }
  for (int n = 0; n <= 10; ++n) {
    Rational want = 0;
    Rational cpow = 1;
    for (int k = 0; k <= n; ++k) {
      want += binom[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * cpow *
              base[static_cast<std::size_t>(n - k)];
      cpow *= c;
    }
    CHECK(got[static_cast<std::size_t>(n)] == want);
  }

  // identity element
  const auto same = cfree::free_convolve(j, JacobiParams::point_mass(0), 10);
  CHECK(cfree::moments_from_jacobi(same, 10) == base);
}

TEST_CASE("cfree convolution adds cumulants and has the delta-pair identity") {
  RationalSampler sampler(53);
  auto random_law = [&](const std::string& name) {
    // build from random cumulants so the Jacobi data is consistent
    auto v = cfree::random_variable_spec(sampler, name, 10);
    return cfree::law_from_cumulants(std::move(v), 10);
  };
  const auto l1 = random_law("x");
  const auto l2 = random_law("y");
  const auto sum = cfree::cfree_convolve(l1, l2, 10);
  for (int k = 1; k <= 10; ++k) {
    CHECK(sum.cumulants.R(k) == l1.cumulants.R(k) + l2.cumulants.R(k));
    CHECK(sum.cumulants.r(k) == l1.cumulants.r(k) + l2.cumulants.r(k));
  }
  check_dual_consistency(sum);

  // commutative, and associative at the cumulant level
  const auto ba = cfree::cfree_convolve(l2, l1, 10);
  CHECK(ba.cumulants.freeCumulants == sum.cumulants.freeCumulants);
  CHECK(ba.cumulants.twoStateCumulants == sum.cumulants.twoStateCumulants);
  const auto l3 = random_law("z");
  const auto left = cfree::cfree_convolve(cfree::cfree_convolve(l1, l2, 10), l3, 10);
  const auto right = cfree::cfree_convolve(l1, cfree::cfree_convolve(l2, l3, 10), 10);
  CHECK(left.cumulants.freeCumulants == right.cumulants.freeCumulants);
  CHECK(left.cumulants.twoStateCumulants == right.cumulants.twoStateCumulants);

  // (delta_0, delta_0) is the unit
  const auto delta = cfree::law_from_jacobi(JacobiParams::point_mass(0),
                                            JacobiParams::point_mass(0), 10, "delta0");
  const auto same = cfree::cfree_convolve(l1, delta, 10);
  CHECK(same.cumulants.freeCumulants == l1.cumulants.freeCumulants);
  CHECK(same.cumulants.twoStateCumulants == l1.cumulants.twoStateCumulants);
}

TEST_CASE("cfree_power on the two-state normal") {
  const Rational a = make_rational(-2, 3), b = make_rational(5, 4);
  const auto law = cfree::two_state_normal(a, b, 10);

  const auto same = cfree::cfree_power(law, 1, 10);
  CHECK(same.mu_moments(10) == law.mu_moments(10));
  CHECK(same.nu_moments(10) == law.nu_moments(10));

  const auto doubled = cfree::cfree_power(law, 2, 10);
  CHECK(doubled.muJacobi.alpha_at(0) == 2 * a);
  CHECK(doubled.muJacobi.beta_at(0) == 2 * b);
  CHECK(doubled.muJacobi.beta_at(1) == 2);
  CHECK(doubled.muJacobi.alpha_at(1) == 0);

  // t = 1/2: moments match the stated Jacobi pattern, both states
  const Rational t = make_rational(1, 2);
  const auto half = cfree::cfree_power(law, t, 10);
  JacobiParams wantMu{std::vector<Rational>(6, Rational(0)), std::vector<Rational>(6, t),
                      std::nullopt};
  wantMu.alpha[0] = a * t;
  wantMu.beta[0] = b * t;
  JacobiParams wantNu{std::vector<Rational>(6, Rational(0)), std::vector<Rational>(6, t),
                      std::nullopt};
  CHECK(half.mu_moments(10) == cfree::moments_from_jacobi(wantMu, 10));
  CHECK(half.nu_moments(10) == cfree::moments_from_jacobi(wantNu, 10));
  check_dual_consistency(half);

  // semigroup: power(s+t) = power(s) boxplus_c power(t)
  const Rational s = make_rational(3, 7);
  const auto both = cfree::cfree_convolve(cfree::cfree_power(law, s, 10),
                                          cfree::cfree_power(law, t, 10), 10);
  const auto direct = cfree::cfree_power(law, s + t, 10);
  CHECK(both.cumulants.freeCumulants == direct.cumulants.freeCumulants);
  CHECK(both.cumulants.twoStateCumulants == direct.cumulants.twoStateCumulants);

  CHECK_THROWS_AS(cfree::cfree_power(law, -1, 10), std::domain_error);

  // scope guard: non-normal input rejected
  auto vr = law.cumulants;
  vr.twoStateCumulants[3] = 1;
  const auto notNormal = cfree::law_from_cumulants(vr, 10);
  CHECK_THROWS_AS(cfree::cfree_power(notNormal, 2, 10), std::domain_error);

  // t = 0 collapses to the delta pair
  const auto zero = cfree::cfree_power(law, 0, 10);
  const auto zm = zero.mu_moments(10);
  for (int n = 1; n <= 10; ++n) CHECK(zm[static_cast<std::size_t>(n)] == 0);
}

TEST_CASE("law_from_jacobi round-trips the Jacobi data") {
  RationalSampler sampler(54);
  for (int trial = 0; trial < 5; ++trial) {
    JacobiParams mu, nu;
    for (int i = 0; i < 5; ++i) {  // order 10 determines exactly five levels
      mu.alpha.push_back(sampler.rational());
      mu.beta.push_back(sampler.positive_rational());
      nu.alpha.push_back(sampler.rational());
      nu.beta.push_back(sampler.positive_rational());
    }
    const auto law = cfree::law_from_jacobi(mu, nu, 10, "g");
    check_dual_consistency(law);
    const auto rebuilt = cfree::law_from_cumulants(law.cumulants, 10);
    CHECK(rebuilt.muJacobi.alpha == mu.alpha);
    CHECK(rebuilt.muJacobi.beta == mu.beta);
    CHECK(rebuilt.nuJacobi.alpha == nu.alpha);
    CHECK(rebuilt.nuJacobi.beta == nu.beta);
  }
}
