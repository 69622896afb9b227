#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "cfree/cumulant.hpp"
#include "cfree/verify.hpp"

using cfree::CumulantTable;
using cfree::Letter;
using cfree::make_rational;
using cfree::Rational;
using cfree::RationalSampler;
using cfree::SingleVariableMoments;
using cfree::VariableSpec;
using cfree::Word;
using cfree::word_power;

namespace {

VariableSpec spec_of(std::string name, std::vector<Rational> r, std::vector<Rational> R) {
  return VariableSpec{std::move(name), std::move(r), std::move(R)};
}

// The two-state normal cumulants R = (a, b, 0...), r = (0, 1, 0...).
VariableSpec normal_spec(const Rational& a, const Rational& b, int order) {
  std::vector<Rational> r(static_cast<std::size_t>(order), Rational(0));
  std::vector<Rational> R(static_cast<std::size_t>(order), Rational(0));
  r[1] = 1;
  R[0] = a;
  R[1] = b;
  return spec_of("x", std::move(r), std::move(R));
}

CumulantTable single_table(const VariableSpec& v) {
  return CumulantTable({v});
}

}  // namespace

TEST_CASE("psi_moment basics") {
  const auto semicircle = spec_of("x", {Rational(0), Rational(1), Rational(0), Rational(0)},
                                  {Rational(0), Rational(0), Rational(0), Rational(0)});
  const auto t = single_table(semicircle);
  const Letter x = Letter::variable("x");
  CHECK(t.psi_moment(word_power(x, 4)) == 2);  // two non-crossing pairings
  CHECK(t.psi_moment(word_power(x, 3)) == 0);
  CHECK(t.psi_moment({}) == 1);

  const Rational c = make_rational(2, 3);
  const auto point = spec_of("x", {c, Rational(0), Rational(0), Rational(0), Rational(0)},
                             {c, Rational(0), Rational(0), Rational(0), Rational(0)});
  const auto tp = single_table(point);
  CHECK(tp.psi_moment(word_power(x, 5)) == c * c * c * c * c);
}

TEST_CASE("phi_moment on the two-state normal") {
  const Rational a = make_rational(1, 2), b = make_rational(3, 4);
  const auto t = single_table(normal_spec(a, b, 6));
  const Letter x = Letter::variable("x");
  CHECK(t.phi_moment(word_power(x, 2)) == b + a * a);
  CHECK(t.phi_moment(word_power(x, 3)) == a * a * a + 2 * a * b);

  const auto centered = single_table(normal_spec(0, b, 6));
  CHECK(centered.phi_moment(word_power(x, 4)) == b * b + b);
}

TEST_CASE("word length guard and degenerate letters") {
  const auto t = single_table(normal_spec(1, 1, 4));
  const Letter x = Letter::variable("x");
  CHECK_THROWS_AS(t.phi_moment(word_power(x, 5)), std::invalid_argument);
  CHECK_THROWS_AS(t.phi_k_partial(3, word_power(x, 2)), std::invalid_argument);
  CHECK_THROWS_AS(t.phi_parallel(word_power(x, 1)), std::invalid_argument);

  const Letter zero;  // explicit zero letter
  CHECK(zero.is_zero());
  CHECK(t.phi_moment({x, zero, x}) == 0);
  CHECK((x - x).is_zero());
}

TEST_CASE("phi_k examples from the partial-moment definition") {
  RationalSampler sampler(21);
  const Letter x = Letter::variable("x");
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 6);
    const auto t = single_table(v);
    const Word w5 = word_power(x, 5);
    // phi_3(X^5) = R_3 phi(X^2) + R_4 phi(X) + R_4 psi(X) + R_5
    CHECK(t.phi_k_partial(3, w5) ==
          v.R(3) * t.phi_moment(word_power(x, 2)) + v.R(4) * t.phi_moment(word_power(x, 1)) +
              v.R(4) * t.psi_moment(word_power(x, 1)) + v.R(5));
    // phi_n(X^n) = R_n, phi_1 = phi
    CHECK(t.phi_k_partial(5, w5) == v.R(5));
    CHECK(t.phi_k_partial(1, w5) == t.phi_moment(w5));
  }
}

TEST_CASE("phi_parallel examples") {
  RationalSampler sampler(22);
  const Letter x = Letter::variable("x");
  for (int trial = 0; trial < 50; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 6);
    const auto t = single_table(v);
    const Rational psi1 = t.psi_moment(word_power(x, 1));
    // phi_par(X^5) = R_2 psi(X^3) + 2 R_3 psi(X^2) + R_3 psi(X)^2 + 3 R_4 psi(X) + R_5
    CHECK(t.phi_parallel(word_power(x, 5)) ==
          v.R(2) * t.psi_moment(word_power(x, 3)) + 2 * v.R(3) * t.psi_moment(word_power(x, 2)) +
              v.R(3) * psi1 * psi1 + 3 * v.R(4) * psi1 + v.R(5));
    CHECK(t.phi_parallel(word_power(x, 2)) == v.R(2));
  }
  // two-state normal: phi_par(X^4) = b (Wigner second moment is 1)
  const Rational b = make_rational(5, 3);
  const auto t = single_table(normal_spec(make_rational(-1, 2), b, 6));
  CHECK(t.phi_parallel(word_power(x, 4)) == b);
}

TEST_CASE("word engine equals the partition-sum oracle") {
  RationalSampler sampler(23);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = sampler.integer(1, 7);
    const auto vx = cfree::random_variable_spec(sampler, "x", 8);
    const auto vy = cfree::random_variable_spec(sampler, "y", 8);
    CumulantTable t({vx, vy});
    Word w;
    for (int i = 0; i < n; ++i) {
      w.push_back(Letter({{"x", sampler.rational()}, {"y", sampler.rational()}}));
    }
    CHECK(t.psi_moment(w) == cfree::psi_moment_by_enumeration(w, t));
    CHECK(t.phi_moment(w) == cfree::phi_moment_by_enumeration(w, t));
    const int k = sampler.integer(1, n);
    CHECK(t.phi_k_partial(k, w) == cfree::phi_k_partial_by_enumeration(k, w, t));
    if (n >= 2) CHECK(t.phi_parallel(w) == cfree::phi_parallel_by_enumeration(w, t));
  }
}

TEST_CASE("single-variable tables equal the word engine") {
  RationalSampler sampler(24);
  const Letter x = Letter::variable("x");
  for (int trial = 0; trial < 6; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 9);
    const auto t = single_table(v);
    SingleVariableMoments sv(v, 9);
    for (int n = 0; n <= 9; ++n) {
      CHECK(sv.phi(n) == t.phi_moment(word_power(x, n)));
      CHECK(sv.psi(n) == t.psi_moment(word_power(x, n)));
      for (int k = 1; k <= n; ++k) CHECK(sv.phi_k(k, n) == t.phi_k_partial(k, word_power(x, n)));
      if (n >= 2) CHECK(sv.phi_parallel(n) == t.phi_parallel(word_power(x, n)));
    }
  }
}

TEST_CASE("multilinearity in a letter slot") {
  RationalSampler sampler(25);
  for (int trial = 0; trial < 10; ++trial) {
    const auto vx = cfree::random_variable_spec(sampler, "x", 6);
    const auto vy = cfree::random_variable_spec(sampler, "y", 6);
    CumulantTable t({vx, vy});
    const int n = sampler.integer(2, 5);
    Word w;
    for (int i = 0; i < n; ++i) {
      w.push_back(Letter({{"x", sampler.rational()}, {"y", sampler.rational()}}));
    }
    const int slot = sampler.integer(0, n - 1);
    const Letter u = Letter({{"x", sampler.rational()}, {"y", sampler.rational()}});
    const Letter v = Letter({{"x", sampler.rational()}, {"y", sampler.rational()}});
    const Rational c = sampler.rational();

    auto with = [&](const Letter& l) {
      Word copy = w;
      copy[static_cast<std::size_t>(slot)] = l;
      return copy;
    };
    CHECK(t.phi_moment(with(u + v.scaled(c))) ==
          t.phi_moment(with(u)) + c * t.phi_moment(with(v)));
    CHECK(t.psi_moment(with(u + v.scaled(c))) ==
          t.psi_moment(with(u)) + c * t.psi_moment(with(v)));
  }
}

TEST_CASE("psi equals phi with all blocks r-weighted") {
  // The free moment formula is the restriction of the two-state formula in
  // which R is replaced by r.
  RationalSampler sampler(26);
  const Letter x = Letter::variable("x");
  for (int trial = 0; trial < 10; ++trial) {
    auto v = cfree::random_variable_spec(sampler, "x", 7);
    auto allR = v;
    allR.twoStateCumulants = allR.freeCumulants;
    const auto t = single_table(v);
    const auto tr = single_table(allR);
    for (int n = 0; n <= 7; ++n) {
      CHECK(t.psi_moment(word_power(x, n)) == tr.phi_moment(word_power(x, n)));
    }
  }
}

TEST_CASE("ck_series and cparallel_series") {
  const Rational a = make_rational(-1, 3), b = make_rational(5, 2);
  const auto v = normal_spec(a, b, 12);
  const auto Mmu = cfree::phi_series(v, 12);

  // C^(1) = M_mu - 1
  const auto c1 = cfree::ck_series(1, v, 12);
  CHECK(c1 == Mmu - cfree::TruncatedSeries::one(12));

  // two-state normal: C^(2) = b z^2 M_mu
  const auto c2 = cfree::ck_series(2, v, 12);
  CHECK(c2 == cfree::TruncatedSeries::monomial(12, 2, b) * Mmu);

  // zero variable: C^(k) = 0 for k >= 2
  const auto zero = spec_of("x", std::vector<Rational>(12, Rational(0)),
                            std::vector<Rational>(12, Rational(0)));
  for (int k = 2; k <= 5; ++k) CHECK(cfree::ck_series(k, zero, 12).is_zero());
  CHECK(cfree::cparallel_series(zero, 12).is_zero());

  // two-state normal: C_par^2 - b C_par + b^2 z^2 = 0
  const auto cpar = cfree::cparallel_series(v, 12);
  CHECK((cpar * cpar - series_scale(cpar, b) + cfree::TruncatedSeries::monomial(12, 2, b * b))
            .is_zero());
}

TEST_CASE("corollary 3.9 on random specs") {
  RationalSampler sampler(27);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 10);
    const auto lhs = cfree::psi_series(v, 10) * cfree::ck_series(2, v, 10);
    const auto rhs = cfree::phi_series(v, 10) * cfree::cparallel_series(v, 10);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("moments_to_free_cumulants") {
  const std::vector<Rational> semicircle{Rational(1), Rational(0), Rational(1), Rational(0),
                                         Rational(2), Rational(0), Rational(5)};
  const auto r = cfree::moments_to_free_cumulants(semicircle);
  CHECK(r == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(0), Rational(0),
                                   Rational(0)});

  const Rational c = make_rational(-3, 2);
  std::vector<Rational> point{Rational(1)};
  for (int i = 1; i <= 6; ++i) point.push_back(point.back() * c);
  const auto rp = cfree::moments_to_free_cumulants(point);
  CHECK(rp[0] == c);
  for (std::size_t i = 1; i < rp.size(); ++i) CHECK(rp[i] == 0);

  CHECK_THROWS_AS(cfree::moments_to_free_cumulants({Rational(2)}), std::invalid_argument);
}

TEST_CASE("cumulant-moment roundtrips") {
  RationalSampler sampler(28);
  for (int trial = 0; trial < 8; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 8);
    const auto mPsi = cfree::psi_moment_sequence(v, 8);
    CHECK(cfree::moments_to_free_cumulants(mPsi) == v.freeCumulants);

    const auto mPhi = cfree::phi_moment_sequence(v, 8);
    const auto [R, r] = cfree::moments_to_twostate_cumulants(mPhi, mPsi);
    CHECK(R == v.twoStateCumulants);
    CHECK(r == v.freeCumulants);
  }
  // random psi moments -> cumulants -> moments
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Rational> m{Rational(1)};
    for (int i = 0; i < 8; ++i) m.push_back(sampler.rational());
    const auto r = cfree::moments_to_free_cumulants(m);
    const auto v = spec_of("x", r, r);
    CHECK(cfree::psi_moment_sequence(v, 8) == m);
  }
}

TEST_CASE("equal states force equal cumulants") {
  const std::vector<Rational> semicircle{Rational(1), Rational(0), Rational(1), Rational(0),
                                         Rational(2), Rational(0), Rational(5)};
  const auto [R, r] = cfree::moments_to_twostate_cumulants(semicircle, semicircle);
  CHECK(R == r);
  CHECK(R[1] == 1);

  const auto [R1, r1] = cfree::moments_to_twostate_cumulants(
      {Rational(1), make_rational(2, 7)}, {Rational(1), Rational(0)});
  CHECK(R1[0] == make_rational(2, 7));  // R_1 = phi(X)
}

TEST_CASE("lemma 3.11 word-level vanishing consequences") {
  // With c-free fragments carrying proportional cumulants,
  // phi(D^2 S^n) = alpha beta phi_2(S^{n+2}) and
  // phi(D S^n D) = alpha beta phi_par(S^{n+2}).
  RationalSampler sampler(29);
  for (int trial = 0; trial < 8; ++trial) {
    const Rational alpha = sampler.unit_interval_rational();
    const Rational beta = 1 - alpha;
    const auto s = cfree::random_variable_spec(sampler, "s", 8);
    auto scale = [](const std::vector<Rational>& src, const Rational& c) {
      std::vector<Rational> out(src.size());
      for (std::size_t i = 0; i < src.size(); ++i) out[i] = c * src[i];
      return out;
    };
    CumulantTable t({spec_of("x", scale(s.freeCumulants, alpha), scale(s.twoStateCumulants, alpha)),
                     spec_of("y", scale(s.freeCumulants, beta), scale(s.twoStateCumulants, beta))});
    const Letter S = Letter::variable("x") + Letter::variable("y");
    const Letter D = Letter({{"x", beta}, {"y", -alpha}});
    for (int n = 0; n <= 4; ++n) {
      const Word Sn = word_power(S, n);
      const Word DDSn = cfree::word_concat({Word{D, D}, Sn});
      const Word DSnD = cfree::word_concat({Word{D}, Sn, Word{D}});
      const Word Sn2 = word_power(S, n + 2);
      CHECK(t.phi_moment(DDSn) == alpha * beta * t.phi_k_partial(2, Sn2));
      CHECK(t.phi_moment(DSnD) == alpha * beta * t.phi_parallel(Sn2));
    }
  }
}

TEST_CASE("lemma 3.2 recursion against the partition filter") {
  RationalSampler sampler(30);
  for (int trial = 0; trial < 6; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 10);
    SingleVariableMoments sv(v, 10);
    for (int k = 1; k <= 9; ++k) {
      for (int n = 1; k + n <= 10; ++n) {
        Rational rhs = v.R(k) * sv.phi(n);
        for (int j = 1; j <= n; ++j) rhs += sv.psi(j - 1) * sv.phi_k(k + 1, n + k - j + 1);
        CHECK(sv.phi_k(k, n + k) == rhs);
      }
    }
  }
}

TEST_CASE("lemma 3.6 recursion against the partition filter") {
  RationalSampler sampler(31);
  for (int trial = 0; trial < 6; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 10);
    SingleVariableMoments sv(v, 10);
    for (int n = 1; n <= 10; ++n) {
      Rational rhs = v.R(1) * sv.phi(n - 1);
      for (int j = 2; j <= n; ++j) rhs += sv.phi_parallel(j) * sv.phi(n - j);
      CHECK(sv.phi(n) == rhs);
    }
  }
}

TEST_CASE("lemma 3.5 series identity at order 12") {
  RationalSampler sampler(32);
  for (int trial = 0; trial < 5; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 12);
    const auto Mnu = cfree::psi_series(v, 12);
    const auto Mmu = cfree::phi_series(v, 12);
    for (int k = 1; k <= 4; ++k) {
      const auto lhs = cfree::ck_series(k, v, 12);
      const auto rhs = Mnu * cfree::ck_series(k + 1, v, 12) +
                       series_scale(cfree::TruncatedSeries::monomial(12, k) * Mmu, v.R(k));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("lemma 3.8 series identity") {
  RationalSampler sampler(33);
  for (int trial = 0; trial < 5; ++trial) {
    const auto v = cfree::random_variable_spec(sampler, "x", 12);
    const auto Mmu = cfree::phi_series(v, 12);
    const auto lhs = Mmu - cfree::TruncatedSeries::one(12);
    const auto rhs = Mmu * cfree::cparallel_series(v, 12) +
                     series_scale(cfree::TruncatedSeries::monomial(12, 1) * Mmu, v.R(1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("memoized evaluation is stable across repeated calls") {
  const auto v = normal_spec(make_rational(1, 3), Rational(2), 8);
  const auto t = single_table(v);
  const Word w = word_power(Letter::variable("x"), 6);
  const Rational first = t.phi_moment(w);
  CHECK(t.phi_moment(w) == first);
  CHECK(t.phi_k_partial(2, w) == t.phi_k_partial(2, w));
}

TEST_CASE("shared memo cache behaves as if absent under concurrent use") {
  const auto v = normal_spec(make_rational(2, 3), make_rational(7, 5), 9);
  const auto t = single_table(v);
  const Word w = word_power(Letter::variable("x"), 9);
  const Rational expected = cfree::phi_moment_by_enumeration(w, t);
  std::vector<std::thread> workers;
  std::vector<Rational> results(8);
  for (std::size_t i = 0; i < results.size(); ++i) {
    workers.emplace_back([&, i] { results[i] = t.phi_moment(w); });
  }
  for (auto& th : workers) th.join();
  for (const auto& r : results) CHECK(r == expected);
}
