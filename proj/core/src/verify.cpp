#include "cfree/verify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cfree {

int RationalSampler::integer(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

Rational RationalSampler::rational(int max_abs_numer, int max_denom) {
  return make_rational(integer(-max_abs_numer, max_abs_numer), integer(1, max_denom));
}

Rational RationalSampler::nonzero_rational(int max_abs_numer, int max_denom) {
  for (;;) {
    Rational q = rational(max_abs_numer, max_denom);
    if (q != 0) return q;
  }
}

Rational RationalSampler::positive_rational(int max_abs_numer, int max_denom) {
  return make_rational(integer(1, max_abs_numer), integer(1, max_denom));
}

Rational RationalSampler::unit_interval_rational(int max_denom) {
  const int den = integer(2, max_denom);
  return make_rational(integer(1, den - 1), den);
}

VariableSpec random_variable_spec(RationalSampler& sampler, std::string name, int order) {
  VariableSpec v;
  v.name = std::move(name);
  v.freeCumulants.reserve(static_cast<std::size_t>(order));
  v.twoStateCumulants.reserve(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    v.freeCumulants.push_back(sampler.rational());
    v.twoStateCumulants.push_back(sampler.rational());
  }
  return v;
}

Perturbation Perturbation::parse(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("perturbation must look like r3=1/5, R4=-2, alpha1=0 or beta2=2");
  }
  const std::string head = text.substr(0, eq);
  Perturbation p;
  std::size_t digits = 0;
  if (head.rfind("alpha", 0) == 0) {
    p.target = Target::JacobiAlpha;
    digits = 5;
  } else if (head.rfind("beta", 0) == 0) {
    p.target = Target::JacobiBeta;
    digits = 4;
  } else if (head[0] == 'r') {
    p.target = Target::FreeCumulant;
    digits = 1;
  } else if (head[0] == 'R') {
    p.target = Target::TwoStateCumulant;
    digits = 1;
  } else {
    throw std::invalid_argument("unknown perturbation target in '" + text + "'");
  }
  const std::string index = head.substr(digits);
  if (index.empty() ||
      !std::all_of(index.begin(), index.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("malformed perturbation index in '" + text + "'");
  }
  p.index = std::stoi(index);
  p.value = parse_rational(text.substr(eq + 1));
  return p;
}

std::string Perturbation::to_string() const {
  std::string head;
  switch (target) {
    case Target::FreeCumulant: head = "r"; break;
    case Target::TwoStateCumulant: head = "R"; break;
    case Target::JacobiAlpha: head = "alpha"; break;
    case Target::JacobiBeta: head = "beta"; break;
  }
  return head + std::to_string(index) + "=" + to_fraction_string(value);
}

namespace {

Rational need_param(const TheoremCheckSpec& spec, const std::string& name) {
  auto it = spec.parameters.find(name);
  if (it == spec.parameters.end()) {
    throw std::invalid_argument(spec.theorem + " needs parameter '" + name + "'");
  }
  return it->second;
}

Rational param_or(const TheoremCheckSpec& spec, const std::string& name, const Rational& fallback) {
  auto it = spec.parameters.find(name);
  return it == spec.parameters.end() ? fallback : it->second;
}

int int_param_or(const TheoremCheckSpec& spec, const std::string& name, int fallback) {
  auto it = spec.parameters.find(name);
  if (it == spec.parameters.end()) return fallback;
  const Rational& q = it->second;
  if (denominator(q) != 1) throw std::invalid_argument("parameter '" + name + "' must be an integer");
  return static_cast<int>(numerator(q));
}

void require_series_order(const TheoremCheckSpec& spec, int lo) {
  if (spec.maxN < lo || spec.maxN > kMaxPartitionSize) {
    throw std::invalid_argument(spec.theorem + " needs " + std::to_string(lo) +
                                " <= order <= " + std::to_string(kMaxPartitionSize));
  }
}

// Fragment-word checks grow like order^4 per word; keep a sane ceiling.
constexpr int kMaxWordCheckOrder = 24;

void require_word_order(const TheoremCheckSpec& spec) {
  if (spec.maxN < 0 || spec.maxN > kMaxWordCheckOrder) {
    throw std::invalid_argument(spec.theorem + " needs 0 <= order <= " +
                                std::to_string(kMaxWordCheckOrder));
  }
}

void reject_perturbation(const TheoremCheckSpec& spec) {
  if (spec.perturbation) {
    throw std::invalid_argument(spec.theorem +
                                " is an identity for all formal inputs and has no perturbation control");
  }
}

class ReportBuilder {
 public:
  explicit ReportBuilder(const TheoremCheckSpec& spec) : spec_(spec) {
    report_.theorem = spec.theorem;
    report_.maxN = spec.maxN;
    for (const auto& [name, value] : spec.parameters) {
      report_.parameters.emplace_back(name, to_fraction_string(value));
    }
    if (spec.perturbation) report_.perturbation = spec.perturbation->to_string();
  }

  void param(const std::string& name, const Rational& value) {
    report_.parameters.emplace_back(name, to_fraction_string(value));
  }

  void row(const std::string& check, int index, Rational lhs, Rational rhs) {
    CheckRow r{check, index, std::move(lhs), std::move(rhs), false};
    r.pass = r.lhs == r.rhs;
    report_.rows.push_back(std::move(r));
  }

  /// Marks a condition covering every row whose check id starts with any
  /// of the given prefixes.
  void condition(const std::string& name, std::initializer_list<const char*> prefixes) {
    bool holds = true;
    for (const CheckRow& r : report_.rows) {
      for (const char* p : prefixes) {
        if (r.check.rfind(p, 0) == 0 && !r.pass) holds = false;
      }
    }
    report_.conditions.emplace_back(name, holds);
  }

  VerificationReport finish() {
    report_.allPass = std::all_of(report_.rows.begin(), report_.rows.end(),
                                  [](const CheckRow& r) { return r.pass; });
    for (const CheckRow& r : report_.rows) {
      if (!r.pass) {
        report_.firstFailure = std::make_pair(r.check, r.index);
        break;
      }
    }
    if (!report_.conditions.empty()) {
      bool consistent = true;
      for (const auto& [name, holds] : report_.conditions) {
        consistent = consistent && (holds == report_.conditions.front().second);
      }
      report_.equivalenceConsistent = consistent;
    }
    if (spec_.perturbation && spec_.control) {
      report_.controlOk = !report_.allPass;
      report_.verdict = *report_.controlOk ? "control-ok" : "control-missed";
    } else {
      report_.verdict = report_.allPass ? "pass" : "fail";
    }
    return std::move(report_);
  }

 private:
  const TheoremCheckSpec& spec_;
  VerificationReport report_;
};

std::vector<Rational> scaled(const std::vector<Rational>& src, const Rational& c) {
  std::vector<Rational> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) out[i] = c * src[i];
  return out;
}

void apply_cumulant_perturbation(VariableSpec& v, const Perturbation& p) {
  switch (p.target) {
    case Perturbation::Target::FreeCumulant:
      if (p.index < 1 || static_cast<std::size_t>(p.index) > v.freeCumulants.size()) {
        throw std::invalid_argument("perturbation index out of cumulant range");
      }
      v.freeCumulants[static_cast<std::size_t>(p.index - 1)] = p.value;
      break;
    case Perturbation::Target::TwoStateCumulant:
      if (p.index < 1 || static_cast<std::size_t>(p.index) > v.twoStateCumulants.size()) {
        throw std::invalid_argument("perturbation index out of cumulant range");
      }
      v.twoStateCumulants[static_cast<std::size_t>(p.index - 1)] = p.value;
      break;
    default:
      throw std::invalid_argument("this theorem takes cumulant perturbations (r<k>=.., R<k>=..)");
  }
}

// The word system of the regression checks: c-free fragments X, Y carrying
// the alpha/beta split of the S cumulants, with S = X + Y and
// D = beta X - alpha Y.
struct FragmentSystem {
  CumulantTable table;
  Letter S;
  Letter D;
  Rational alpha, beta, ab;

  Rational phiS(int m) const { return table.phi_moment(word_power(S, m)); }
  Rational psiS(int m) const { return table.psi_moment(word_power(S, m)); }
};

FragmentSystem make_fragments(const VariableSpec& s, const Rational& alpha,
                              const std::optional<Perturbation>& perturbX) {
  if (!(alpha > 0 && alpha < 1)) throw std::domain_error("alpha must lie strictly between 0 and 1");
  const Rational beta = 1 - alpha;
  VariableSpec x{"x", scaled(s.freeCumulants, alpha), scaled(s.twoStateCumulants, alpha)};
  VariableSpec y{"y", scaled(s.freeCumulants, beta), scaled(s.twoStateCumulants, beta)};
  if (perturbX) apply_cumulant_perturbation(x, *perturbX);
  std::vector<VariableSpec> vars;
  vars.push_back(std::move(x));
  vars.push_back(std::move(y));
  Letter S = Letter::variable("x") + Letter::variable("y");
  Letter D(std::map<std::string, Rational>{{"x", beta}, {"y", -alpha}});
  return FragmentSystem{CumulantTable(std::move(vars)), std::move(S), std::move(D), alpha, beta,
                        alpha * beta};
}

VariableSpec two_state_normal_spec(const Rational& a, const Rational& b, int length) {
  VariableSpec s{"s", std::vector<Rational>(static_cast<std::size_t>(length), Rational(0)),
                 std::vector<Rational>(static_cast<std::size_t>(length), Rational(0))};
  if (length >= 1) s.twoStateCumulants[0] = a;
  if (length >= 2) {
    s.twoStateCumulants[1] = b;
    s.freeCumulants[1] = 1;
  }
  return s;
}

TruncatedSeries shifted_once(const TruncatedSeries& s) {
  TruncatedSeries out(s.order());
  for (int d = 1; d <= s.order(); ++d) out.set_coeff(d, s.coeff(d - 1));
  return out;
}

}  // namespace

VerificationReport check_main_theorem(const TheoremCheckSpec& spec) {
  const Rational a = need_param(spec, "a");
  const Rational b = need_param(spec, "b");
  const Rational alpha = need_param(spec, "alpha");
  if (b <= 0) throw std::domain_error("main-2.10 needs b > 0 (non-degeneracy)");
  require_word_order(spec);
  ReportBuilder out(spec);

  const int length = spec.maxN + 3;
  FragmentSystem f = make_fragments(two_state_normal_spec(a, b, length), alpha, spec.perturbation);
  const Rational psiOfS = f.table.psi_moment(Word{f.S});

  for (int n = 0; n <= spec.maxN; ++n) {
    const Word Sn = word_power(f.S, n);
    const Word DDSn = word_concat({Word{f.D, f.D}, Sn});
    const Word DSnD = word_concat({Word{f.D}, Sn, Word{f.D}});
    const Word DSDSn = word_concat({Word{f.D, f.S, f.D}, Sn});

    out.row("eq-2.18", n, f.table.phi_moment(DDSn), f.ab * b * f.phiS(n));
    out.row("eq-2.19", n, f.table.phi_moment(DSnD),
            f.ab * ((1 - b) * f.phiS(n + 2) + (a * b - 2 * a) * f.phiS(n + 1) +
                    (a * a + b * b) * f.phiS(n)));
    out.row("eq-2.20", n, f.table.phi_moment(DSnD), f.ab * b * f.psiS(n));
    // Fourth regression condition. An inner singleton between the two D
    // slots carries psi(S), so the right side is psi(S)*phi(D^2 S^n),
    // zero under the centering hypothesis; given the others the
    // condition is equivalent to C^(3) = 0.
    out.row("eq-2.21", n, f.table.phi_moment(DSDSn), psiOfS * f.table.phi_moment(DDSn));
  }
  return out.finish();
}

VerificationReport check_prop_46(const TheoremCheckSpec& spec) {
  const Rational alpha = need_param(spec, "alpha");
  require_word_order(spec);
  const int length = spec.maxN + 3;

  VariableSpec s;
  Rational a, b;
  if (spec.variableInput) {
    s = *spec.variableInput;
    if (s.order() < length) throw std::invalid_argument("S cumulant sequences too short for the order");
    a = s.R(1);
    b = s.R(2);
  } else {
    a = need_param(spec, "a");
    b = need_param(spec, "b");
    s = two_state_normal_spec(a, b, length);
  }
  if (b <= 0) throw std::domain_error("prop-4.6 needs R_2(S) = b > 0");
  ReportBuilder out(spec);
  out.param("derived-a", a);
  out.param("derived-b", b);

  FragmentSystem f = make_fragments(s, alpha, spec.perturbation);
  const Rational psiOfS = f.table.psi_moment(Word{f.S});
  for (int n = 0; n <= spec.maxN; ++n) {
    const Word Sn = word_power(f.S, n);
    const Word DDSn = word_concat({Word{f.D, f.D}, Sn});
    const Word DSnD = word_concat({Word{f.D}, Sn, Word{f.D}});
    const Word DSDSn = word_concat({Word{f.D, f.S, f.D}, Sn});
    out.row("eq-2.18", n, f.table.phi_moment(DDSn), f.ab * b * f.phiS(n));
    out.row("eq-2.20", n, f.table.phi_moment(DSnD), f.ab * b * f.psiS(n));
    out.row("eq-2.21", n, f.table.phi_moment(DSDSn), psiOfS * f.table.phi_moment(DDSn));
  }
  out.condition("cond-1", {"eq-2.18"});
  out.condition("cond-2", {"eq-2.20"});
  out.condition("cond-3", {"eq-2.21"});
  return out.finish();
}

VerificationReport check_thm_45(const TheoremCheckSpec& spec) {
  const Rational a = need_param(spec, "a");
  const Rational b = need_param(spec, "b");
  const Rational at = need_param(spec, "atilde");
  const Rational bt = need_param(spec, "btilde");
  const Rational alpha = param_or(spec, "alpha", make_rational(1, 2));
  if (b <= 0) throw std::domain_error("thm-4.5 needs b > 0");
  if (bt <= -1) throw std::domain_error("thm-4.5 needs btilde > -1");
  require_series_order(spec, 2);
  const int N = spec.maxN;
  ReportBuilder out(spec);

  // nu-side input: supplied free cumulants of S or the standard Wigner.
  std::vector<Rational> rS(static_cast<std::size_t>(N), Rational(0));
  if (spec.variableInput) {
    if (spec.variableInput->order() < N) {
      throw std::invalid_argument("S free-cumulant sequence too short for the order");
    }
    for (int k = 1; k <= N; ++k) rS[static_cast<std::size_t>(k - 1)] = spec.variableInput->r(k);
  } else if (N >= 2) {
    rS[1] = 1;
  }

  // Construct the positive instance through the moment-series relation:
  // M_mu = [(bt + at z) M_nu - bt - 1] /
  //        [M_nu ((b - a at) z^2 + (at - a bt) z + bt) - (bt + 1)(1 - a z)].
  const VariableSpec nuOnly{"s", rS, rS};
  const TruncatedSeries Mnu = SingleVariableMoments(nuOnly, N).psi_series();
  const TruncatedSeries one = TruncatedSeries::one(N);
  auto quadratic = [&](const Rational& c2, const Rational& c1, const Rational& c0) {
    TruncatedSeries q(N);
    q.set_coeff(0, c0);
    if (N >= 1) q.set_coeff(1, c1);
    if (N >= 2) q.set_coeff(2, c2);
    return q;
  };
  const TruncatedSeries num = quadratic(0, at, bt) * Mnu - series_scale(one, bt + 1);
  const TruncatedSeries den =
      Mnu * quadratic(b - a * at, at - a * bt, bt) - quadratic(0, -a * (bt + 1), bt + 1);
  const TruncatedSeries Mmu = series_div(num, den);

  auto [RS, rRecovered] = moments_to_twostate_cumulants(Mmu.coeffs(), Mnu.coeffs());
  if (rRecovered != rS || RS[0] != a || (N >= 2 && RS[1] != b)) {
    throw std::logic_error("thm-4.5 positive-instance construction is inconsistent");
  }
  VariableSpec s{"s", rS, RS};
  if (spec.perturbation) apply_cumulant_perturbation(s, *spec.perturbation);

  FragmentSystem f = make_fragments(s, alpha, std::nullopt);

  // Measured S-side series, from the word engine over the fragments.
  TruncatedSeries MmuHat(N), MnuHat(N), CparHat(N);
  for (int j = 0; j <= N; ++j) {
    MmuHat.set_coeff(j, f.phiS(j));
    MnuHat.set_coeff(j, f.psiS(j));
    if (j >= 2) CparHat.set_coeff(j, f.table.phi_parallel(word_power(f.S, j)));
  }

  // (1) Eq. 4.15 at the word-moment level.
  for (int n = 0; n + 2 <= N; ++n) {
    const Word DDSn = word_concat({Word{f.D, f.D}, word_power(f.S, n)});
    const Rational rhs = f.ab / (bt + 1) *
                         (bt * f.phiS(n + 2) + (at - a * bt) * f.phiS(n + 1) + (b - a * at) * f.phiS(n));
    out.row("eq-4.15", n, f.table.phi_moment(DDSn), rhs);
  }
  // (2) Eq. 4.16, cross-multiplied against the measured series.
  const TruncatedSeries numHat = quadratic(0, at, bt) * MnuHat - series_scale(one, bt + 1);
  const TruncatedSeries denHat =
      MnuHat * quadratic(b - a * at, at - a * bt, bt) - quadratic(0, -a * (bt + 1), bt + 1);
  const TruncatedSeries lhs16 = MmuHat * denHat;
  for (int j = 0; j <= N; ++j) out.row("eq-4.16", j, lhs16.coeff(j), numHat.coeff(j));
  // (3) Eq. 4.17, cross-multiplied.
  const TruncatedSeries lhs17 = CparHat * (series_scale(one, bt + 1) - quadratic(0, at, bt) * MnuHat);
  const TruncatedSeries rhs17 = series_scale(shifted_once(shifted_once(MnuHat)), b);
  for (int j = 0; j <= N; ++j) out.row("eq-4.17", j, lhs17.coeff(j), rhs17.coeff(j));

  out.condition("cond-1", {"eq-4.15"});
  out.condition("cond-2", {"eq-4.16"});
  out.condition("cond-3", {"eq-4.17"});
  return out.finish();
}

VerificationReport check_prop_44(const TheoremCheckSpec& spec) {
  const Rational a = need_param(spec, "a");
  const Rational b = need_param(spec, "b");
  if (b <= 0) throw std::domain_error("prop-4.4 needs b > 0");
  require_series_order(spec, 4);
  const int N = spec.maxN;
  ReportBuilder out(spec);

  // The free Meixner Jacobi pattern, optionally corrupted at level >= 1
  // (level 0 is pinned by the moment hypotheses).
  const int levels = N / 2 + 1;
  JacobiParams mu{std::vector<Rational>(static_cast<std::size_t>(levels), Rational(0)),
                  std::vector<Rational>(static_cast<std::size_t>(levels), Rational(1)), std::nullopt};
  mu.alpha[0] = a;
  mu.beta[0] = b;
  if (spec.perturbation) {
    const Perturbation& p = *spec.perturbation;
    if (p.target == Perturbation::Target::JacobiAlpha || p.target == Perturbation::Target::JacobiBeta) {
      if (p.index < 1 || p.index >= levels) {
        throw std::invalid_argument("prop-4.4 perturbs Jacobi levels 1.." + std::to_string(levels - 1));
      }
      (p.target == Perturbation::Target::JacobiAlpha ? mu.alpha : mu.beta)[static_cast<std::size_t>(p.index)] =
          p.value;
    } else {
      throw std::invalid_argument("prop-4.4 takes Jacobi perturbations (alpha<i>=.., beta<i>=..)");
    }
  }

  const std::vector<Rational> mPhi = moments_from_jacobi(mu, N);
  const JacobiParams wigner = JacobiParams::wigner(levels);
  const std::vector<Rational> mW = moments_from_jacobi(wigner, N);
  auto [R, r] = moments_to_twostate_cumulants(mPhi, mW);
  const VariableSpec x{"x", std::move(r), std::move(R)};
  SingleVariableMoments sv(x, N);

  // (1) the recovered Jacobi data matches the pattern.
  const JacobiParams recovered = jacobi_from_moments(mPhi).jacobi;
  for (int i = 0; i < recovered.levels(); ++i) {
    out.row("eq-4.10-alpha", i, recovered.alpha_at(i), i == 0 ? a : Rational(0));
    out.row("eq-4.10-beta", i, recovered.beta_at(i), i == 0 ? b : Rational(1));
  }
  // (2) phi_par(X^{n+2}) = b * wigner moment n.
  for (int n = 0; n + 2 <= N; ++n) {
    out.row("eq-4.11", n, sv.phi_parallel(n + 2), b * mW[static_cast<std::size_t>(n)]);
  }
  // (3) C_par^2 - b C_par + b^2 z^2 = 0.
  const TruncatedSeries Cpar = sv.cparallel_series();
  const TruncatedSeries q3 =
      Cpar * Cpar - series_scale(Cpar, b) + TruncatedSeries::monomial(N, 2, b * b);
  for (int j = 0; j <= N; ++j) out.row("eq-4.12", j, q3.coeff(j), Rational(0));
  // (4) M_mu (b^2 z^2 - b(1 - a z) + (1 - a z)^2) - 1 + a z + b = C_par.
  const TruncatedSeries Mmu(N, mPhi);
  TruncatedSeries factor(N);
  factor.set_coeff(0, 1 - b);
  if (N >= 1) factor.set_coeff(1, a * b - 2 * a);
  if (N >= 2) factor.set_coeff(2, b * b + a * a);
  TruncatedSeries lhs4 = Mmu * factor;
  lhs4.set_coeff(0, lhs4.coeff(0) - 1 + b);
  if (N >= 1) lhs4.set_coeff(1, lhs4.coeff(1) + a);
  for (int j = 0; j <= N; ++j) out.row("eq-4.13", j, lhs4.coeff(j), Cpar.coeff(j));

  out.condition("cond-1", {"eq-4.10"});
  out.condition("cond-2", {"eq-4.11"});
  out.condition("cond-3", {"eq-4.12"});
  out.condition("cond-4", {"eq-4.13"});
  return out.finish();
}

VerificationReport check_prop_41(const TheoremCheckSpec& spec) {
  reject_perturbation(spec);
  require_series_order(spec, 1);
  const int N = spec.maxN;
  VariableSpec v;
  if (spec.variableInput) {
    v = *spec.variableInput;
    if (v.order() < N) throw std::invalid_argument("cumulant sequences too short for the order");
  } else {
    RationalSampler sampler(spec.seed);
    v = random_variable_spec(sampler, "x", N);
  }
  const int maxK = std::clamp(int_param_or(spec, "k", 5), 1, N);
  ReportBuilder out(spec);

  SingleVariableMoments sv(v, N);
  const TruncatedSeries Mmu = sv.phi_series();
  const TruncatedSeries Mnu = sv.psi_series();
  const TruncatedSeries zMnu = shifted_once(Mnu);
  for (int k = 1; k <= maxK; ++k) {
    const TruncatedSeries lhs = sv.ck_series(k);
    const TruncatedSeries rhs =
        series_compose(tail_r_transform(v, k, N), zMnu) * TruncatedSeries::monomial(N, k) * Mmu;
    const std::string id = "bls-k" + std::to_string(k);
    for (int j = 0; j <= N; ++j) out.row(id, j, lhs.coeff(j), rhs.coeff(j));
  }
  // k = 1 in the closed form: M_mu (1 - z R(z M_nu)) = 1.
  const TruncatedSeries composed = series_compose(tail_r_transform(v, 1, N), zMnu);
  const TruncatedSeries closed = Mmu * (TruncatedSeries::one(N) - shifted_once(composed));
  for (int j = 0; j <= N; ++j) out.row("eq-4.1", j, closed.coeff(j), Rational(j == 0 ? 1 : 0));
  return out.finish();
}

namespace {

JacobiParams complete_by_termination(const JacobiParams& j, int levels) {
  if (j.terminated || j.levels() >= levels) return j;
  JacobiParams out = j;
  out.terminated = j.levels();
  out.alpha.resize(static_cast<std::size_t>(levels), Rational(0));
  out.beta.resize(static_cast<std::size_t>(levels), Rational(0));
  return out;
}

}  // namespace

VerificationReport check_thm_42(const TheoremCheckSpec& spec) {
  reject_perturbation(spec);
  require_series_order(spec, 2);
  const int N = spec.maxN;
  JacobiParams in = spec.jacobiInput.value_or(
      JacobiParams::make({make_rational(1, 2), make_rational(-1, 3), make_rational(1, 4)},
                         {Rational(2), make_rational(1, 2), Rational(3)}));
  if (in.levels() < 3) throw std::invalid_argument("thm-4.2 needs at least three Jacobi levels");
  if (in.beta_at(0) <= 0) throw std::domain_error("thm-4.2 needs beta_0 > 0");
  const JacobiParams mu = complete_by_termination(in, N / 2 + 2);
  ReportBuilder out(spec);

  const std::vector<Rational> mPhi = moments_from_jacobi(mu, N);
  const std::vector<Rational> mPsi = moments_from_jacobi(JacobiParams::wigner(N / 2 + 1), N);
  auto [R, r] = moments_to_twostate_cumulants(mPhi, mPsi);
  SingleVariableMoments sv(VariableSpec{"x", std::move(r), std::move(R)}, N);

  const JacobiParams rho = shift_jacobi(mu);
  const std::vector<Rational> mRho = moments_from_jacobi(rho, N - 2);
  const Rational beta0 = mu.beta_at(0);
  for (int n = 0; n + 2 <= N; ++n) {
    out.row("eq-4.8", n, sv.phi_parallel(n + 2), beta0 * mRho[static_cast<std::size_t>(n)]);
  }
  return out.finish();
}

VerificationReport check_thm_312(const TheoremCheckSpec& spec) {
  reject_perturbation(spec);
  const Rational a = need_param(spec, "a");
  const Rational b = need_param(spec, "b");
  const Rational t = need_param(spec, "t");
  const Rational alpha = param_or(spec, "alpha", make_rational(1, 3));
  if (b <= 0) throw std::domain_error("thm-3.12 needs b > 0");
  if (t < 0) throw std::domain_error("thm-3.12 needs t >= 0");
  require_series_order(spec, 2);
  const int N = spec.maxN;
  const Rational beta = 1 - alpha;
  if (!(alpha > 0 && alpha < 1)) throw std::domain_error("thm-3.12 needs 0 < alpha < 1");
  ReportBuilder out(spec);

  const int levels = N / 2 + 1;
  auto meixner_pattern = [&](const Rational& mean, const Rational& var, const Rational& tailBeta) {
    JacobiParams j{std::vector<Rational>(static_cast<std::size_t>(levels), Rational(0)),
                   std::vector<Rational>(static_cast<std::size_t>(levels), tailBeta), std::nullopt};
    j.alpha[0] = mean;
    j.beta[0] = var;
    return j;
  };
  auto wigner_pattern = [&](const Rational& var) {
    return JacobiParams{std::vector<Rational>(static_cast<std::size_t>(levels), Rational(0)),
                        std::vector<Rational>(static_cast<std::size_t>(levels), var), std::nullopt};
  };

  // Conditionally free power against the stated Jacobi data.
  const TwoStateLaw law = two_state_normal(a, b, N);
  const TwoStateLaw powered = cfree_power(law, t, N);
  const std::vector<Rational> gotMu = powered.mu_moments(N);
  const std::vector<Rational> gotNu = powered.nu_moments(N);
  const std::vector<Rational> wantMu = moments_from_jacobi(meixner_pattern(a * t, b * t, t), N);
  const std::vector<Rational> wantNu = moments_from_jacobi(wigner_pattern(t), N);
  for (int n = 0; n <= N; ++n) {
    out.row("eq-3.18", n, gotMu[static_cast<std::size_t>(n)], wantMu[static_cast<std::size_t>(n)]);
    out.row("eq-3.19", n, gotNu[static_cast<std::size_t>(n)], wantNu[static_cast<std::size_t>(n)]);
  }

  // Two scaled fragments convolve back to the (a; b, 1, 1, ...) law.
  const TwoStateLaw l1 =
      law_from_jacobi(meixner_pattern(a * alpha, b * alpha, alpha), wigner_pattern(alpha), N, "x");
  const TwoStateLaw l2 =
      law_from_jacobi(meixner_pattern(a * beta, b * beta, beta), wigner_pattern(beta), N, "y");
  const TwoStateLaw sum = cfree_convolve(l1, l2, N);
  const std::vector<Rational> sumMu = sum.mu_moments(N);
  const std::vector<Rational> sumNu = sum.nu_moments(N);
  const std::vector<Rational> normMu = moments_from_jacobi(meixner_pattern(a, b, Rational(1)), N);
  const std::vector<Rational> normNu = moments_from_jacobi(wigner_pattern(Rational(1)), N);
  for (int n = 0; n <= N; ++n) {
    out.row("lemma-3.13-mu", n, sumMu[static_cast<std::size_t>(n)], normMu[static_cast<std::size_t>(n)]);
    out.row("lemma-3.13-nu", n, sumNu[static_cast<std::size_t>(n)], normNu[static_cast<std::size_t>(n)]);
  }
  return out.finish();
}

namespace {

VariableSpec check_input_variable(const TheoremCheckSpec& spec, int minOrder) {
  if (spec.variableInput) {
    if (spec.variableInput->order() < minOrder) {
      throw std::invalid_argument("cumulant sequences too short for the order");
    }
    return *spec.variableInput;
  }
  RationalSampler sampler(spec.seed);
  return random_variable_spec(sampler, "x", minOrder);
}

}  // namespace

VerificationReport check_lemma_32(const TheoremCheckSpec& spec) {
  reject_perturbation(spec);
  require_series_order(spec, 2);
  const int N = spec.maxN;
  const VariableSpec v = check_input_variable(spec, N);
  SingleVariableMoments sv(v, N);
  ReportBuilder out(spec);
  for (int k = 1; k <= N - 1; ++k) {
    for (int n = 1; k + n <= N; ++n) {
      Rational rhs = v.R(k) * sv.phi(n);
      for (int j = 1; j <= n; ++j) rhs += sv.psi(j - 1) * sv.phi_k(k + 1, n + k - j + 1);
      out.row("k" + std::to_string(k), n, sv.phi_k(k, n + k), rhs);
    }
  }
  return out.finish();
}

VerificationReport check_lemma_36(const TheoremCheckSpec& spec) {
  reject_perturbation(spec);
  require_series_order(spec, 2);
  const int N = spec.maxN;
  const VariableSpec v = check_input_variable(spec, N);
  SingleVariableMoments sv(v, N);
  ReportBuilder out(spec);
  for (int n = 1; n <= N; ++n) {
    Rational rhs = v.R(1) * sv.phi(n - 1);
    for (int j = 2; j <= n; ++j) rhs += sv.phi_parallel(j) * sv.phi(n - j);
    out.row("recursion", n, sv.phi(n), rhs);
  }
  return out.finish();
}

VerificationReport check_lemma_35(const TheoremCheckSpec& spec) {
  reject_perturbation(spec);
  require_series_order(spec, 2);
  const int N = spec.maxN;
  const VariableSpec v = check_input_variable(spec, N);
  ReportBuilder out(spec);
  SingleVariableMoments sv(v, N);
  const TruncatedSeries Mmu = sv.phi_series();
  const TruncatedSeries Mnu = sv.psi_series();
  const int maxK = std::clamp(int_param_or(spec, "k", 5), 1, N - 1);
  for (int k = 1; k <= maxK; ++k) {
    const TruncatedSeries lhs = sv.ck_series(k);
    const TruncatedSeries rhs =
        Mnu * sv.ck_series(k + 1) + series_scale(TruncatedSeries::monomial(N, k) * Mmu, v.R(k));
    const std::string id = "k" + std::to_string(k);
    for (int j = 0; j <= N; ++j) out.row(id, j, lhs.coeff(j), rhs.coeff(j));
  }
  return out.finish();
}

VerificationReport check_lemma_38(const TheoremCheckSpec& spec) {
  reject_perturbation(spec);
  require_series_order(spec, 2);
  const int N = spec.maxN;
  const VariableSpec v = check_input_variable(spec, N);
  ReportBuilder out(spec);
  SingleVariableMoments sv(v, N);
  const TruncatedSeries Mmu = sv.phi_series();
  const TruncatedSeries Mnu = sv.psi_series();
  const TruncatedSeries Cpar = sv.cparallel_series();
  const TruncatedSeries lhs = Mmu - TruncatedSeries::one(N);
  const TruncatedSeries rhs = Mmu * Cpar + series_scale(shifted_once(Mmu), v.R(1));
  for (int j = 0; j <= N; ++j) out.row("lemma-3.8", j, lhs.coeff(j), rhs.coeff(j));
  // Corollary 3.9: M_nu C^(2) = M_mu C_par.
  const TruncatedSeries corLhs = Mnu * sv.ck_series(2);
  const TruncatedSeries corRhs = Mmu * Cpar;
  for (int j = 0; j <= N; ++j) out.row("cor-3.9", j, corLhs.coeff(j), corRhs.coeff(j));
  return out.finish();
}

const std::vector<std::string>& known_theorems() {
  static const std::vector<std::string> kTheorems = {
      "main-2.10", "prop-4.6", "thm-4.5",   "prop-4.4",  "thm-4.2",  "prop-4.1",
      "lemma-3.5", "lemma-3.8", "lemma-3.2", "lemma-3.6", "thm-3.12"};
  return kTheorems;
}

VerificationReport run_check(const TheoremCheckSpec& spec) {
  if (spec.theorem == "main-2.10") return check_main_theorem(spec);
  if (spec.theorem == "prop-4.6") return check_prop_46(spec);
  if (spec.theorem == "thm-4.5") return check_thm_45(spec);
  if (spec.theorem == "prop-4.4") return check_prop_44(spec);
  if (spec.theorem == "prop-4.1") return check_prop_41(spec);
  if (spec.theorem == "thm-4.2") return check_thm_42(spec);
  if (spec.theorem == "thm-3.12") return check_thm_312(spec);
  if (spec.theorem == "lemma-3.2") return check_lemma_32(spec);
  if (spec.theorem == "lemma-3.5") return check_lemma_35(spec);
  if (spec.theorem == "lemma-3.6") return check_lemma_36(spec);
  if (spec.theorem == "lemma-3.8") return check_lemma_38(spec);
  throw std::invalid_argument("unknown theorem id '" + spec.theorem + "'");
}

int report_exit_code(const VerificationReport& report) {
  if (report.controlOk.has_value()) return *report.controlOk ? 0 : 1;
  return report.verdict == "pass" ? 0 : 1;
}

}  // namespace cfree
