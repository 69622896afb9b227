#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cfree/ncpart.hpp"
#include "cfree/rational.hpp"
#include "cfree/series.hpp"

namespace cfree {

/// One c-free variable, described by its free cumulants r_1..r_N (the psi
/// state) and its two-state cumulants R_1..R_N (the phi state).
struct VariableSpec {
  std::string name;
  std::vector<Rational> freeCumulants;      // r_k at index k-1
  std::vector<Rational> twoStateCumulants;  // R_k at index k-1

  int order() const;
  const Rational& r(int k) const;  // 1-based, throws past the stored order
  const Rational& R(int k) const;
};

/// A word letter: a formal rational linear combination of base variables.
/// Zero coefficients are dropped at construction; an empty combination is
/// the explicit zero letter.
class Letter {
 public:
  Letter() = default;
  explicit Letter(std::map<std::string, Rational> coefficients);
  static Letter variable(const std::string& name);

  const std::map<std::string, Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(const std::string& name) const;
  bool is_zero() const { return coefficients_.empty(); }

  Letter scaled(const Rational& factor) const;
  friend Letter operator+(const Letter& a, const Letter& b);
  friend Letter operator-(const Letter& a, const Letter& b);
  bool operator==(const Letter& other) const = default;

 private:
  std::map<std::string, Rational> coefficients_;  // ordered: canonical form
};

using Word = std::vector<Letter>;

/// w^n as a word of n equal letters.
Word word_power(const Letter& letter, int n);
/// Concatenation helper.
Word word_concat(std::initializer_list<Word> parts);

/// Cumulant data for a family of c-free variables. Mixed cumulants across
/// distinct base variables vanish (both the r and the R kind), so every
/// block weight expands multilinearly into per-variable terms.
///
/// Word moments are evaluated by the first-block recursion over subword
/// intervals (outer block carries R, the gaps under it carry psi weights,
/// the tail is again a phi sum). The enumeration twins below compute the
/// same functionals directly from the non-crossing partition sums; tests
/// cross-assert the two paths.
class CumulantTable {
 public:
  explicit CumulantTable(std::vector<VariableSpec> variables);
  CumulantTable(CumulantTable&&) noexcept;
  CumulantTable& operator=(CumulantTable&&) noexcept;
  ~CumulantTable();

  const std::vector<VariableSpec>& variables() const { return variables_; }
  const VariableSpec& variable(const std::string& name) const;
  /// Largest word length the stored cumulant sequences can serve.
  int order() const { return order_; }

  /// psi(w): all blocks weighted by free cumulants. Empty word gives 1.
  Rational psi_moment(const Word& w) const;
  /// phi(w): outer blocks weighted R, inner blocks weighted r.
  Rational phi_moment(const Word& w) const;
  /// Restriction of phi(w) to partitions whose block of position 1
  /// contains positions 1..k. Requires 1 <= k <= |w|.
  Rational phi_k_partial(int k, const Word& w) const;
  /// Restriction of phi(w) to partitions whose block of position 1 also
  /// contains the last position. Requires |w| >= 2.
  Rational phi_parallel(const Word& w) const;

  struct WordMoments;

 private:
  const WordMoments& evaluate(const Word& w) const;

  std::vector<VariableSpec> variables_;
  std::unordered_map<std::string, std::size_t> index_;
  int order_ = 0;

  // pointer-held so the table stays movable; the cache behaves as if
  // absent (idempotent fill)
  mutable std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
  mutable std::unordered_map<std::string, std::unique_ptr<WordMoments>> cache_;
};

/// Definitional evaluation by explicit enumeration of NC(|w|); these are
/// the oracle twins of the CumulantTable methods (|w| bounded by the
/// partition enumeration guard).
Rational psi_moment_by_enumeration(const Word& w, const CumulantTable& t);
Rational phi_moment_by_enumeration(const Word& w, const CumulantTable& t);
Rational phi_k_partial_by_enumeration(int k, const Word& w, const CumulantTable& t);
Rational phi_parallel_by_enumeration(const Word& w, const CumulantTable& t);

/// Single-variable moment and partial-moment values of X, X^2, ..., X^N,
/// evaluated from aggregated non-crossing partition tables (exact integer
/// counts per block-size signature, built once per process). Requires
/// N <= kMaxPartitionSize.
class SingleVariableMoments {
 public:
  SingleVariableMoments(const VariableSpec& variable, int order);

  int order() const { return order_; }
  const Rational& phi(int n) const;           // phi(X^n), 0 <= n <= N
  const Rational& psi(int n) const;           // psi(X^n)
  const Rational& phi_k(int k, int n) const;  // 1 <= k <= n <= N
  const Rational& phi_parallel(int n) const;  // 2 <= n <= N

  // Series views over the stored values, all at order N.
  TruncatedSeries phi_series() const;
  TruncatedSeries psi_series() const;
  TruncatedSeries ck_series(int k) const;
  TruncatedSeries cparallel_series() const;

 private:
  int order_;
  std::vector<Rational> phi_, psi_;
  std::vector<std::vector<Rational>> phi_k_;  // [n][k-1]
  std::vector<Rational> phi_parallel_;
};

std::vector<Rational> phi_moment_sequence(const VariableSpec& v, int order);
std::vector<Rational> psi_moment_sequence(const VariableSpec& v, int order);
/// M_mu(z) = sum phi(X^n) z^n and M_nu(z) = sum psi(X^n) z^n.
TruncatedSeries phi_series(const VariableSpec& v, int order);
TruncatedSeries psi_series(const VariableSpec& v, int order);

/// C^(k)(z): coefficient of z^j is phi_k(X^j) for j >= k, zero below.
TruncatedSeries ck_series(int k, const VariableSpec& v, int order);
/// C_par(z): coefficient of z^j is phi_parallel(X^j) for j >= 2.
TruncatedSeries cparallel_series(const VariableSpec& v, int order);

/// Tail R-transform of order k: sum_{i>=k} R_i z^(i-k).
TruncatedSeries tail_r_transform(const VariableSpec& v, int k, int order);

/// Inverts the free moment-cumulant relation (triangular in r_n).
/// Requires m_0 = 1; returns r_1..r_N for N = m.size()-1.
std::vector<Rational> moments_to_free_cumulants(const std::vector<Rational>& moments);

/// Inverts both relations: r from the psi moments, then R from the phi
/// moments (triangular in R_n: the full-block partition contributes R_n
/// exactly once). Returns (R, r).
std::pair<std::vector<Rational>, std::vector<Rational>> moments_to_twostate_cumulants(
    const std::vector<Rational>& phiMoments, const std::vector<Rational>& psiMoments);

}  // namespace cfree
