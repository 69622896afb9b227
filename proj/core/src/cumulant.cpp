#include "cfree/cumulant.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace cfree {

int VariableSpec::order() const {
  return static_cast<int>(std::min(freeCumulants.size(), twoStateCumulants.size()));
}

const Rational& VariableSpec::r(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > freeCumulants.size()) {
    throw std::out_of_range("free cumulant index out of range for '" + name + "'");
  }
  return freeCumulants[static_cast<std::size_t>(k - 1)];
}

const Rational& VariableSpec::R(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > twoStateCumulants.size()) {
    throw std::out_of_range("two-state cumulant index out of range for '" + name + "'");
  }
  return twoStateCumulants[static_cast<std::size_t>(k - 1)];
}

Letter::Letter(std::map<std::string, Rational> coefficients) {
  for (auto& [name, value] : coefficients) {
    if (value != 0) coefficients_.emplace(name, value);
  }
}

Letter Letter::variable(const std::string& name) {
  return Letter({{name, Rational(1)}});
}

Rational Letter::coefficient(const std::string& name) const {
  auto it = coefficients_.find(name);
  return it == coefficients_.end() ? Rational(0) : it->second;
}

Letter Letter::scaled(const Rational& factor) const {
  std::map<std::string, Rational> out;
  if (factor != 0) {
    for (const auto& [name, value] : coefficients_) out.emplace(name, factor * value);
  }
  return Letter(std::move(out));
}

Letter operator+(const Letter& a, const Letter& b) {
  std::map<std::string, Rational> out = a.coefficients_;
  for (const auto& [name, value] : b.coefficients_) out[name] += value;
  return Letter(std::move(out));
}

Letter operator-(const Letter& a, const Letter& b) {
  return a + b.scaled(Rational(-1));
}

Word word_power(const Letter& letter, int n) {
  if (n < 0) throw std::invalid_argument("word power must be >= 0");
  return Word(static_cast<std::size_t>(n), letter);
}

Word word_concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

std::string canonical_word_key(const Word& w) {
  std::ostringstream os;
  for (const Letter& letter : w) {
    os << '(';
    for (const auto& [name, value] : letter.coefficients()) {
      os << name << '=' << to_fraction_string(value) << ';';
    }
    os << ')';
  }
  return os.str();
}

}  // namespace

struct CumulantTable::WordMoments {
  Rational phi;
  Rational psi;
  std::vector<Rational> phiK;  // index k-1, for 1 <= k <= n
  Rational phiParallel;        // valid when n >= 2
};

CumulantTable::CumulantTable(CumulantTable&&) noexcept = default;
CumulantTable& CumulantTable::operator=(CumulantTable&&) noexcept = default;
CumulantTable::~CumulantTable() = default;

CumulantTable::CumulantTable(std::vector<VariableSpec> variables)
    : variables_(std::move(variables)) {
  order_ = variables_.empty() ? 0 : variables_.front().order();
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (v.name.empty()) throw std::invalid_argument("variable needs a name");
    if (!index_.emplace(v.name, i).second) {
      throw std::invalid_argument("duplicate variable name '" + v.name + "'");
    }
    order_ = std::min(order_, v.order());
  }
}

const VariableSpec& CumulantTable::variable(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return variables_[it->second];
}

namespace {

// First-block interval recursion for word moments. The block of the first
// position is expanded as a chain of positions; gaps between consecutive
// chain positions are nested inside the block (psi weights), the part after
// the last chain position is a fresh top-level sum.
class DpEvaluator {
 public:
  DpEvaluator(const Word& w, const std::vector<const VariableSpec*>& vars,
              std::vector<std::vector<Rational>> coeff)
      : n_(static_cast<int>(w.size())), vars_(vars), coeff_(std::move(coeff)) {}

  void run(CumulantTable::WordMoments& out) {
    compute_psi();
    compute_phi();
    out.psi = n_ == 0 ? Rational(1) : psi_[0][static_cast<std::size_t>(n_)];
    out.phi = n_ == 0 ? Rational(1) : phi_[0];
    out.phiK.assign(static_cast<std::size_t>(n_), Rational(0));
    for (int k = 1; k <= n_; ++k) out.phiK[static_cast<std::size_t>(k - 1)] = phi_k(k);
    if (n_ >= 2) out.phiParallel = phi_parallel();
  }

 private:
  const Rational& rw(std::size_t v, int s) const { return vars_[v]->r(s); }
  const Rational& Rw(std::size_t v, int s) const { return vars_[v]->R(s); }

  // psi_[a][b] = psi sum over positions [a, b); psi_[a][a] = 1.
  void compute_psi() {
    const auto n = static_cast<std::size_t>(n_);
    const std::size_t nv = vars_.size();
    psi_.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t a = 0; a <= n; ++a) psi_[a][a] = 1;
    // chain[v][q][s]: block chain currently at position q with s elements,
    // confined to [.., b). Rebuilt for each right endpoint b.
    for (std::size_t b = 1; b <= n; ++b) {
      std::vector<std::vector<std::vector<Rational>>> chain(
          nv, std::vector<std::vector<Rational>>(b, std::vector<Rational>(b + 2, Rational(0))));
      for (std::size_t a = b; a-- > 0;) {
        Rational total = 0;
        for (std::size_t v = 0; v < nv; ++v) {
          for (std::size_t s = a + 1; s >= 1; --s) {
            if (coeff_[a][v] == 0) break;
            Rational acc = rw(v, static_cast<int>(s)) * psi_[a + 1][b];
            for (std::size_t q = a + 1; q < b; ++q) {
              const Rational& cont = chain[v][q][s + 1];
              if (cont != 0) acc += psi_[a + 1][q] * cont;
            }
            chain[v][a][s] = coeff_[a][v] * acc;
          }
          total += chain[v][a][1];
        }
        psi_[a][b] = std::move(total);
      }
    }
  }

  void compute_phi() {
    const auto n = static_cast<std::size_t>(n_);
    const std::size_t nv = vars_.size();
    phi_.assign(n + 1, Rational(0));
    phi_[n] = 1;
    phi_chain_.assign(nv, std::vector<std::vector<Rational>>(
                              n, std::vector<Rational>(n + 2, Rational(0))));
    for (std::size_t a = n; a-- > 0;) {
      Rational total = 0;
      for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t s = a + 1; s >= 1; --s) {
          if (coeff_[a][v] == 0) break;
          Rational acc = Rw(v, static_cast<int>(s)) * phi_[a + 1];
          for (std::size_t q = a + 1; q < n; ++q) {
            const Rational& cont = phi_chain_[v][q][s + 1];
            if (cont != 0) acc += psi_[a + 1][q] * cont;
          }
          phi_chain_[v][a][s] = coeff_[a][v] * acc;
        }
        total += phi_chain_[v][a][1];
      }
      phi_[a] = std::move(total);
    }
  }

  // Partitions whose first block starts with positions 1..k: force the
  // chain through the prefix, then continue it freely.
  Rational phi_k(int k) const {
    const auto kk = static_cast<std::size_t>(k);
    Rational total = 0;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      Rational prefix = 1;
      for (std::size_t p = 0; p + 1 < kk; ++p) prefix *= coeff_[p][v];
      if (prefix != 0) total += prefix * phi_chain_[v][kk - 1][kk];
    }
    return total;
  }

  // Partitions whose first block also holds the last position: the chain
  // must end exactly at n-1 and there is no tail.
  Rational phi_parallel() const {
    const auto n = static_cast<std::size_t>(n_);
    const std::size_t nv = vars_.size();
    std::vector<std::vector<std::vector<Rational>>> span(
        nv, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n + 2, Rational(0))));
    for (std::size_t q = n; q-- > 0;) {
      for (std::size_t v = 0; v < nv; ++v) {
        for (std::size_t s = q + 1; s >= 1; --s) {
          if (coeff_[q][v] == 0) break;
          Rational acc = 0;
          if (q == n - 1) {
            acc = Rw(v, static_cast<int>(s));
          } else {
            for (std::size_t p = q + 1; p < n; ++p) {
              const Rational& cont = span[v][p][s + 1];
              if (cont != 0) acc += psi_[q + 1][p] * cont;
            }
          }
          span[v][q][s] = coeff_[q][v] * acc;
        }
      }
    }
    Rational total = 0;
    for (std::size_t v = 0; v < nv; ++v) total += span[v][0][1];
    return total;
  }

  int n_;
  const std::vector<const VariableSpec*>& vars_;
  std::vector<std::vector<Rational>> coeff_;  // [pos][var]
  std::vector<std::vector<Rational>> psi_;
  std::vector<Rational> phi_;
  std::vector<std::vector<std::vector<Rational>>> phi_chain_;
};

}  // namespace

const CumulantTable::WordMoments& CumulantTable::evaluate(const Word& w) const {
  const int n = static_cast<int>(w.size());
  if (n > order_) {
    throw std::invalid_argument("word longer than the cumulant table order");
  }
  const std::string key = canonical_word_key(w);
  {
    std::lock_guard<std::mutex> lock(*cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }

  // Resolve the letters against the variables that actually occur.
  std::vector<const VariableSpec*> active;
  std::vector<std::size_t> active_index(variables_.size(), SIZE_MAX);
  std::vector<std::vector<Rational>> coeff(static_cast<std::size_t>(n));
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& [name, value] : w[pos].coefficients()) {
      auto it = index_.find(name);
      if (it == index_.end()) throw std::invalid_argument("unknown variable '" + name + "'");
      if (active_index[it->second] == SIZE_MAX) {
        active_index[it->second] = active.size();
        active.push_back(&variables_[it->second]);
      }
    }
  }
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    coeff[pos].assign(active.size(), Rational(0));
    for (const auto& [name, value] : w[pos].coefficients()) {
      coeff[pos][active_index[index_.at(name)]] = value;
    }
  }

  auto moments = std::make_unique<WordMoments>();
  DpEvaluator(w, active, std::move(coeff)).run(*moments);

  std::lock_guard<std::mutex> lock(*cache_mutex_);
  auto [it, inserted] = cache_.emplace(key, std::move(moments));
  return *it->second;
}

Rational CumulantTable::psi_moment(const Word& w) const { return evaluate(w).psi; }

Rational CumulantTable::phi_moment(const Word& w) const { return evaluate(w).phi; }

Rational CumulantTable::phi_k_partial(int k, const Word& w) const {
  if (k < 1 || static_cast<std::size_t>(k) > w.size()) {
    throw std::invalid_argument("phi_k needs 1 <= k <= |w|");
  }
  return evaluate(w).phiK[static_cast<std::size_t>(k - 1)];
}

Rational CumulantTable::phi_parallel(const Word& w) const {
  if (w.size() < 2) throw std::invalid_argument("phi_parallel needs |w| >= 2");
  return evaluate(w).phiParallel;
}

namespace {

// Multilinear block weight: mixed cumulants across base variables vanish,
// so a block contributes sum_v cum_v(|B|) * prod_{p in B} coeff_p(v).
struct EnumWeights {
  const CumulantTable& table;
  std::vector<const VariableSpec*> vars;
  std::vector<std::vector<Rational>> coeff;  // [pos][var]

  EnumWeights(const Word& w, const CumulantTable& t) : table(t) {
    for (const auto& v : t.variables()) vars.push_back(&v);
    coeff.resize(w.size());
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      coeff[pos].assign(vars.size(), Rational(0));
      for (std::size_t v = 0; v < vars.size(); ++v) {
        coeff[pos][v] = w[pos].coefficient(vars[v]->name);
      }
    }
  }

  Rational block_weight(const std::vector<int>& block, bool useR) const {
    Rational acc = 0;
    const int size = static_cast<int>(block.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
      Rational prod = useR ? vars[v]->R(size) : vars[v]->r(size);
      for (int p : block) {
        if (prod == 0) break;
        prod *= coeff[static_cast<std::size_t>(p - 1)][v];
      }
      acc += prod;
    }
    return acc;
  }
};

enum class EnumFunctional { Psi, Phi };

Rational enumerate_word_sum(const Word& w, const CumulantTable& t, EnumFunctional f,
                            int prefix_k, bool require_span) {
  const int n = static_cast<int>(w.size());
  if (n > t.order()) throw std::invalid_argument("word longer than the cumulant table order");
  if (n == 0) return Rational(1);
  EnumWeights weights(w, t);
  Rational total = 0;
  for_each_noncrossing(n, [&](const std::vector<std::vector<int>>& blocks,
                              const std::vector<BlockLabel>& labels) {
    const auto& first = blocks.front();
    if (prefix_k > 1) {
      if (static_cast<int>(first.size()) < prefix_k || first[static_cast<std::size_t>(prefix_k - 1)] != prefix_k) return;
    }
    if (require_span && first.back() != n) return;
    Rational prod = 1;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const bool useR = f == EnumFunctional::Phi && labels[b] == BlockLabel::Outer;
      prod *= weights.block_weight(blocks[b], useR);
      if (prod == 0) break;
    }
    total += prod;
  });
  return total;
}

}  // namespace

Rational psi_moment_by_enumeration(const Word& w, const CumulantTable& t) {
  return enumerate_word_sum(w, t, EnumFunctional::Psi, 1, false);
}

Rational phi_moment_by_enumeration(const Word& w, const CumulantTable& t) {
  return enumerate_word_sum(w, t, EnumFunctional::Phi, 1, false);
}

Rational phi_k_partial_by_enumeration(int k, const Word& w, const CumulantTable& t) {
  if (k < 1 || static_cast<std::size_t>(k) > w.size()) {
    throw std::invalid_argument("phi_k needs 1 <= k <= |w|");
  }
  return enumerate_word_sum(w, t, EnumFunctional::Phi, k, false);
}

Rational phi_parallel_by_enumeration(const Word& w, const CumulantTable& t) {
  if (w.size() < 2) throw std::invalid_argument("phi_parallel needs |w| >= 2");
  return enumerate_word_sum(w, t, EnumFunctional::Phi, 1, true);
}

namespace {

// Aggregated NC(n) statistics for single-variable words: the weight of a
// partition depends only on the multiset of (block size, label), so exact
// integer counts per signature make repeated evaluation cheap. Signature
// key bytes: outer sizes ascending, 0, inner sizes ascending.
struct SigTablesForN {
  std::unordered_map<std::string, std::int64_t> all;
  std::unordered_map<std::string, std::int64_t> spanning;
  std::vector<std::unordered_map<std::string, std::int64_t>> byPrefix;  // index = longest 1..k prefix in block(1)
};

const SigTablesForN& signature_tables(int n) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<SigTablesForN>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (static_cast<std::size_t>(n) >= cache.size()) cache.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = cache[static_cast<std::size_t>(n)];
  if (!slot) {
    auto tables = std::make_unique<SigTablesForN>();
    tables->byPrefix.resize(static_cast<std::size_t>(n) + 1);
    std::string key;
    std::vector<char> outer, inner;
    for_each_noncrossing(n, [&](const std::vector<std::vector<int>>& blocks,
                                const std::vector<BlockLabel>& labels) {
      outer.clear();
      inner.clear();
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        (labels[b] == BlockLabel::Outer ? outer : inner).push_back(static_cast<char>(blocks[b].size()));
      }
      std::sort(outer.begin(), outer.end());
      std::sort(inner.begin(), inner.end());
      key.assign(outer.begin(), outer.end());
      key.push_back('\0');
      key.append(inner.begin(), inner.end());
      const auto& first = blocks.front();
      std::size_t prefix = 0;
      while (prefix < first.size() && first[prefix] == static_cast<int>(prefix) + 1) ++prefix;
      ++tables->all[key];
      ++tables->byPrefix[prefix][key];
      if (first.back() == n) ++tables->spanning[key];
    });
    slot = std::move(tables);
  }
  return *slot;
}

// Per-spec signature weights, memoized across the n loop (keys are
// distinct across n because block sizes sum to n).
struct SignatureEvaluator {
  const VariableSpec& v;
  std::unordered_map<std::string, std::pair<Rational, Rational>> memo;  // (phi weight, psi weight)

  const std::pair<Rational, Rational>& weights(const std::string& key) {
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rational phiW = 1, psiW = 1;
    const std::size_t sep = key.find('\0');
    for (std::size_t i = 0; i < sep; ++i) {
      const int size = key[i];
      phiW *= v.R(size);
      psiW *= v.r(size);
    }
    for (std::size_t i = sep + 1; i < key.size(); ++i) {
      const int size = key[i];
      phiW *= v.r(size);
      psiW *= v.r(size);
    }
    return memo.emplace(key, std::make_pair(std::move(phiW), std::move(psiW))).first->second;
  }
};

void require_order(const VariableSpec& v, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  if (order > kMaxPartitionSize) {
    throw std::invalid_argument("order exceeds the partition enumeration guard");
  }
  if (v.order() < order) {
    throw std::invalid_argument("cumulant sequences of '" + v.name + "' are shorter than the order");
  }
}

}  // namespace

SingleVariableMoments::SingleVariableMoments(const VariableSpec& variable, int order)
    : order_(order) {
  require_order(variable, order);
  const auto size = static_cast<std::size_t>(order) + 1;
  phi_.assign(size, Rational(0));
  psi_.assign(size, Rational(0));
  phi_k_.assign(size, {});
  phi_parallel_.assign(size, Rational(0));
  phi_[0] = psi_[0] = 1;
  SignatureEvaluator eval{variable, {}};
  for (int n = 1; n <= order; ++n) {
    const auto& tables = signature_tables(n);
    const auto un = static_cast<std::size_t>(n);
    for (const auto& [key, count] : tables.all) {
      const auto& [phiW, psiW] = eval.weights(key);
      if (phiW != 0) phi_[un] += Rational(count) * phiW;
      if (psiW != 0) psi_[un] += Rational(count) * psiW;
    }
    for (const auto& [key, count] : tables.spanning) {
      const auto& w = eval.weights(key).first;
      if (w != 0) phi_parallel_[un] += Rational(count) * w;
    }
    // phi_k(X^n) sums every partition whose prefix run is at least k.
    std::vector<Rational> by_prefix(un + 1, Rational(0));
    for (std::size_t p = 1; p <= un; ++p) {
      for (const auto& [key, count] : tables.byPrefix[p]) {
        const auto& w = eval.weights(key).first;
        if (w != 0) by_prefix[p] += Rational(count) * w;
      }
    }
    auto& row = phi_k_[un];
    row.assign(un, Rational(0));
    Rational suffix = 0;
    for (std::size_t k = un; k >= 1; --k) {
      suffix += by_prefix[k];
      row[k - 1] = suffix;
    }
  }
}

const Rational& SingleVariableMoments::phi(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("phi moment index out of range");
  return phi_[static_cast<std::size_t>(n)];
}

const Rational& SingleVariableMoments::psi(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("psi moment index out of range");
  return psi_[static_cast<std::size_t>(n)];
}

const Rational& SingleVariableMoments::phi_k(int k, int n) const {
  if (n < 1 || n > order_ || k < 1 || k > n) throw std::out_of_range("phi_k index out of range");
  return phi_k_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)];
}

const Rational& SingleVariableMoments::phi_parallel(int n) const {
  if (n < 2 || n > order_) throw std::out_of_range("phi_parallel index out of range");
  return phi_parallel_[static_cast<std::size_t>(n)];
}

TruncatedSeries SingleVariableMoments::phi_series() const {
  return TruncatedSeries(order_, phi_);
}

TruncatedSeries SingleVariableMoments::psi_series() const {
  return TruncatedSeries(order_, psi_);
}

TruncatedSeries SingleVariableMoments::ck_series(int k) const {
  if (k < 1 || k > order_) throw std::invalid_argument("ck_series needs 1 <= k <= order");
  TruncatedSeries out(order_);
  for (int j = k; j <= order_; ++j) out.set_coeff(j, phi_k(k, j));
  return out;
}

TruncatedSeries SingleVariableMoments::cparallel_series() const {
  if (order_ < 2) throw std::invalid_argument("cparallel_series needs order >= 2");
  TruncatedSeries out(order_);
  for (int j = 2; j <= order_; ++j) out.set_coeff(j, phi_parallel(j));
  return out;
}

std::vector<Rational> phi_moment_sequence(const VariableSpec& v, int order) {
  return SingleVariableMoments(v, order).phi_series().coeffs();
}

std::vector<Rational> psi_moment_sequence(const VariableSpec& v, int order) {
  return SingleVariableMoments(v, order).psi_series().coeffs();
}

TruncatedSeries phi_series(const VariableSpec& v, int order) {
  return SingleVariableMoments(v, order).phi_series();
}

TruncatedSeries psi_series(const VariableSpec& v, int order) {
  return SingleVariableMoments(v, order).psi_series();
}

TruncatedSeries ck_series(int k, const VariableSpec& v, int order) {
  return SingleVariableMoments(v, order).ck_series(k);
}

TruncatedSeries cparallel_series(const VariableSpec& v, int order) {
  return SingleVariableMoments(v, order).cparallel_series();
}

TruncatedSeries tail_r_transform(const VariableSpec& v, int k, int order) {
  if (k < 1) throw std::invalid_argument("tail_r_transform needs k >= 1");
  TruncatedSeries out(order);
  for (int d = 0; d <= order; ++d) {
    const int i = k + d;
    if (i <= static_cast<int>(v.twoStateCumulants.size())) out.set_coeff(d, v.R(i));
  }
  return out;
}

namespace {

// psi(X^n) / phi(X^n) for a plain cumulant vector, used by the triangular
// inversions (the signature tables make this cheap).
Rational eval_single_moment(const std::vector<Rational>& r, const std::vector<Rational>& R,
                            int n, bool phi) {
  VariableSpec v{"x", r, R};
  SignatureEvaluator eval{v, {}};
  const auto& tables = signature_tables(n);
  Rational acc = 0;
  for (const auto& [key, count] : tables.all) {
    const auto& w = phi ? eval.weights(key).first : eval.weights(key).second;
    if (w != 0) acc += Rational(count) * w;
  }
  return acc;
}

void require_unit_mass(const std::vector<Rational>& m, const char* what) {
  if (m.empty() || m[0] != 1) {
    throw std::invalid_argument(std::string(what) + " must start with m_0 = 1");
  }
}

}  // namespace

std::vector<Rational> moments_to_free_cumulants(const std::vector<Rational>& moments) {
  require_unit_mass(moments, "psi moment sequence");
  const int order = static_cast<int>(moments.size()) - 1;
  if (order > kMaxPartitionSize) throw std::invalid_argument("moment order exceeds the enumeration guard");
  std::vector<Rational> r(static_cast<std::size_t>(order), Rational(0));
  for (int n = 1; n <= order; ++n) {
    // With r_n still zero the full block contributes nothing, so the
    // difference from the target moment is exactly r_n.
    const Rational partial = eval_single_moment(r, r, n, false);
    r[static_cast<std::size_t>(n - 1)] = moments[static_cast<std::size_t>(n)] - partial;
  }
  return r;
}

std::pair<std::vector<Rational>, std::vector<Rational>> moments_to_twostate_cumulants(
    const std::vector<Rational>& phiMoments, const std::vector<Rational>& psiMoments) {
  require_unit_mass(phiMoments, "phi moment sequence");
  require_unit_mass(psiMoments, "psi moment sequence");
  if (phiMoments.size() != psiMoments.size()) {
    throw std::invalid_argument("phi and psi moment sequences must have equal length");
  }
  std::vector<Rational> r = moments_to_free_cumulants(psiMoments);
  const int order = static_cast<int>(phiMoments.size()) - 1;
  std::vector<Rational> R(static_cast<std::size_t>(order), Rational(0));
  for (int n = 1; n <= order; ++n) {
    const Rational partial = eval_single_moment(r, R, n, true);
    R[static_cast<std::size_t>(n - 1)] = phiMoments[static_cast<std::size_t>(n)] - partial;
  }
  return {std::move(R), std::move(r)};
}

}  // namespace cfree
