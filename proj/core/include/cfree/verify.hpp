#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cfree/cumulant.hpp"
#include "cfree/jacobi.hpp"
#include "cfree/laws.hpp"

namespace cfree {

/// Deterministic small-rational generator for seeded check inputs and
/// property tests (plain modulo draws from mt19937_64, so sequences are
/// reproducible everywhere).
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);  // inclusive
  Rational rational(int max_abs_numer = 6, int max_denom = 4);
  Rational nonzero_rational(int max_abs_numer = 6, int max_denom = 4);
  Rational positive_rational(int max_abs_numer = 6, int max_denom = 4);
  /// Strictly between 0 and 1.
  Rational unit_interval_rational(int max_denom = 8);

 private:
  std::mt19937_64 rng_;
};

VariableSpec random_variable_spec(RationalSampler& sampler, std::string name, int order);

/// Which entry to corrupt and the value to put there. Cumulant targets hit
/// the sequences of the checked family; Jacobi targets hit the mu data of
/// Jacobi-level checks.
struct Perturbation {
  enum class Target { FreeCumulant, TwoStateCumulant, JacobiAlpha, JacobiBeta };
  Target target = Target::FreeCumulant;
  int index = 0;  // cumulant order k (1-based) or Jacobi level (0-based)
  Rational value;

  /// "r3=1/5", "R4=-2/7", "alpha1=1/3", "beta2=2".
  static Perturbation parse(const std::string& text);
  std::string to_string() const;
};

struct TheoremCheckSpec {
  std::string theorem;
  int maxN = 12;
  std::map<std::string, Rational> parameters;
  std::optional<Perturbation> perturbation;
  /// With a perturbation: grade the run as a negative control (expect a
  /// detected failure). Off, the run is graded as a plain verification.
  bool control = true;
  std::uint64_t seed = 1;
  std::optional<JacobiParams> jacobiInput;    // thm-4.2
  std::optional<VariableSpec> variableInput;  // prop-4.1, lemma checks, prop-4.6 S overrides
};

struct CheckRow {
  std::string check;
  int index = 0;  // moment index n or coefficient degree
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

/// Every pass is exact Rational equality; there are no tolerances.
struct VerificationReport {
  std::string theorem;
  int maxN = 0;
  std::vector<std::pair<std::string, std::string>> parameters;  // name, "p/q"
  std::optional<std::string> perturbation;
  std::vector<CheckRow> rows;
  bool allPass = false;
  std::optional<std::pair<std::string, int>> firstFailure;  // (check, index)
  /// Per-condition statuses for equivalence-style theorems, plus whether
  /// the statuses came out mutually consistent.
  std::vector<std::pair<std::string, bool>> conditions;
  std::optional<bool> equivalenceConsistent;
  std::optional<bool> controlOk;
  std::string verdict;  // pass | fail | control-ok | control-missed
};

VerificationReport check_main_theorem(const TheoremCheckSpec& spec);
VerificationReport check_prop_46(const TheoremCheckSpec& spec);
VerificationReport check_thm_45(const TheoremCheckSpec& spec);
VerificationReport check_prop_44(const TheoremCheckSpec& spec);
VerificationReport check_prop_41(const TheoremCheckSpec& spec);
VerificationReport check_thm_42(const TheoremCheckSpec& spec);
VerificationReport check_thm_312(const TheoremCheckSpec& spec);
VerificationReport check_lemma_32(const TheoremCheckSpec& spec);
VerificationReport check_lemma_35(const TheoremCheckSpec& spec);
VerificationReport check_lemma_36(const TheoremCheckSpec& spec);
VerificationReport check_lemma_38(const TheoremCheckSpec& spec);

const std::vector<std::string>& known_theorems();
/// Dispatch on spec.theorem; throws std::invalid_argument for unknown ids.
VerificationReport run_check(const TheoremCheckSpec& spec);

/// 0 when the report passed (or a control detected its failure), 1 otherwise.
int report_exit_code(const VerificationReport& report);

}  // namespace cfree
