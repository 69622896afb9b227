// Command-line front end: non-crossing partitions, moment/cumulant/Jacobi
// conversions, convolutions, and the theorem-verification harness.
//
// Exit codes: 0 all checks passed (or a control detected its failure),
// 1 an identity failed, 2 usage or domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cfree/json_io.hpp"

namespace {

using cfree::Json;
using cfree::Rational;

constexpr int kUsageError = 2;

int default_order() {
  if (const char* env = std::getenv("CFREE_ORDER")) {
    try {
      const int n = std::stoi(env);
      if (n >= 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring malformed CFREE_ORDER='" << env << "'\n";
  }
  return 12;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(cfree::parse_rational(item));
  return out;
}

// Law catalog: wigner | free-poisson | normal:<a>:<b> | delta:<c> | a JSON
// law file {"mu": .., "nu": ..}.
cfree::TwoStateLaw resolve_law(const std::string& text, int order) {
  if (text == "wigner") return cfree::two_state_normal(0, 1, order);
  if (text == "free-poisson") return cfree::two_state_normal(1, 1, order);
  if (text.rfind("normal:", 0) == 0) {
    const std::string rest = text.substr(7);
    const std::size_t colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("normal law needs normal:<a>:<b>");
    return cfree::two_state_normal(cfree::parse_rational(rest.substr(0, colon)),
                                   cfree::parse_rational(rest.substr(colon + 1)), order);
  }
  if (text.rfind("delta:", 0) == 0) {
    const auto point = cfree::JacobiParams::point_mass(cfree::parse_rational(text.substr(6)));
    return cfree::law_from_jacobi(point, point, order, text);
  }
  std::string name;
  auto [mu, nu] = cfree::law_file_from_json(read_json_file(text), &name);
  return cfree::law_from_jacobi(std::move(mu), std::move(nu), order, name);
}

// Single-measure catalog for the free convolution: wigner | point:<c> | a
// JSON JacobiParams file.
cfree::JacobiParams resolve_measure(const std::string& text, int order) {
  if (text == "wigner") return cfree::JacobiParams::wigner(order / 2 + 1);
  if (text.rfind("point:", 0) == 0) {
    return cfree::JacobiParams::point_mass(cfree::parse_rational(text.substr(6)));
  }
  return cfree::jacobi_from_json(read_json_file(text));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_nc(int n, int maxSize, bool countOnly, bool json) {
  if (countOnly) {
    // no need to materialize (or sort) the full list for a count
    std::size_t count = 0;
    cfree::for_each_noncrossing(n, [&](const auto&, const auto&) { ++count; }, maxSize);
    if (json) {
      emit(Json{{"n", n}, {"count", count}});
    } else {
      std::cout << count << "\n";
    }
    return 0;
  }
  const auto partitions = cfree::enumerate_nc(n, maxSize);
  if (json) {
    Json out{{"n", n}, {"count", partitions.size()}};
    Json list = Json::array();
    for (const auto& p : partitions) list.push_back(cfree::nc_partition_to_json(p));
    out["partitions"] = std::move(list);
    emit(out);
    return 0;
  }
  for (const auto& p : partitions) {
    std::ostringstream line;
    for (std::size_t b = 0; b < p.partition.blocks.size(); ++b) {
      line << '{';
      for (std::size_t i = 0; i < p.partition.blocks[b].size(); ++i) {
        if (i) line << ',';
        line << p.partition.blocks[b][i];
      }
      line << '}';
    }
    line << "  ";
    for (std::size_t b = 0; b < p.labels.size(); ++b) {
      if (b) line << ',';
      line << (p.labels[b] == cfree::BlockLabel::Outer ? "outer" : "inner");
    }
    std::cout << line.str() << "\n";
  }
  return 0;
}

int run_moments(const std::string& lawText, int order, bool json) {
  const auto law = resolve_law(lawText, order);
  const auto mu = law.mu_moments(order);
  const auto nu = law.nu_moments(order);
  if (json) {
    Json out{{"law", law.name}, {"order", order}};
    Json muJson = Json::array(), nuJson = Json::array();
    for (const auto& m : mu) muJson.push_back(cfree::rational_to_json(m));
    for (const auto& m : nu) nuJson.push_back(cfree::rational_to_json(m));
    out["mu"] = std::move(muJson);
    out["nu"] = std::move(nuJson);
    emit(out);
    return 0;
  }
  std::cout << "n\tphi(X^n)\tpsi(X^n)\n";
  for (int n = 0; n <= order; ++n) {
    std::cout << n << '\t' << cfree::to_plain_string(mu[static_cast<std::size_t>(n)]) << '\t'
              << cfree::to_plain_string(nu[static_cast<std::size_t>(n)]) << "\n";
  }
  return 0;
}

int run_cumulants(const std::string& lawText, const std::string& mphi, const std::string& mpsi,
                  int order, bool json) {
  std::vector<Rational> R, r;
  if (!lawText.empty()) {
    const auto law = resolve_law(lawText, order);
    std::tie(R, r) = cfree::moments_to_twostate_cumulants(law.mu_moments(order), law.nu_moments(order));
  } else {
    if (mphi.empty() || mpsi.empty()) {
      throw std::invalid_argument("cumulants needs either --law or both --mphi and --mpsi");
    }
    std::tie(R, r) = cfree::moments_to_twostate_cumulants(parse_rational_list(mphi),
                                                          parse_rational_list(mpsi));
  }
  if (json) {
    Json out = cfree::variable_spec_to_json(cfree::VariableSpec{"X", r, R});
    emit(out);
    return 0;
  }
  std::cout << "k\tr_k\tR_k\n";
  for (std::size_t k = 0; k < r.size(); ++k) {
    std::cout << k + 1 << '\t' << cfree::to_plain_string(r[k]) << '\t' << cfree::to_plain_string(R[k])
              << "\n";
  }
  return 0;
}

int run_jacobi(const std::string& moments, const std::string& alpha, const std::string& beta,
               int terminated, int order, bool json) {
  if (!moments.empty()) {
    const auto result = cfree::jacobi_from_moments(parse_rational_list(moments));
    if (json) {
      Json out = cfree::jacobi_to_json(result.jacobi);
      out["positiveDefinite"] = result.positiveDefinite;
      emit(out);
    } else {
      std::cout << "alpha:";
      for (const auto& a : result.jacobi.alpha) std::cout << ' ' << cfree::to_plain_string(a);
      std::cout << "\nbeta:";
      for (const auto& b : result.jacobi.beta) std::cout << ' ' << cfree::to_plain_string(b);
      std::cout << "\nterminated: "
                << (result.jacobi.terminated ? std::to_string(*result.jacobi.terminated) : "no");
      std::cout << "\npositive-definite: " << (result.positiveDefinite ? "yes" : "no") << "\n";
    }
    return 0;
  }
  if (alpha.empty() || beta.empty()) {
    throw std::invalid_argument("jacobi needs either --moments or both --alpha and --beta");
  }
  const auto params = cfree::JacobiParams::make(
      parse_rational_list(alpha), parse_rational_list(beta),
      terminated >= 0 ? std::optional<int>(terminated) : std::nullopt);
  const auto m = cfree::moments_from_jacobi(params, order);
  if (json) {
    Json out = Json::array();
    for (const auto& v : m) out.push_back(cfree::rational_to_json(v));
    emit(Json{{"order", order}, {"moments", std::move(out)}});
  } else {
    std::cout << "n\tm_n\n";
    for (int n = 0; n <= order; ++n) {
      std::cout << n << '\t' << cfree::to_plain_string(m[static_cast<std::size_t>(n)]) << "\n";
    }
  }
  return 0;
}

int run_convolve(const std::string& op, const std::string& law1, const std::string& law2,
                 const std::string& measure1, const std::string& measure2, const std::string& t,
                 int order) {
  if (op == "free") {
    if (measure1.empty() || measure2.empty()) {
      throw std::invalid_argument("convolve --op free needs --measure1 and --measure2");
    }
    const auto result = cfree::free_convolve(resolve_measure(measure1, order),
                                             resolve_measure(measure2, order), order);
    emit(cfree::jacobi_to_json(result));
    return 0;
  }
  if (op == "cfree") {
    if (law1.empty() || law2.empty()) {
      throw std::invalid_argument("convolve --op cfree needs --law1 and --law2");
    }
    const auto result =
        cfree::cfree_convolve(resolve_law(law1, order), resolve_law(law2, order), order);
    emit(cfree::law_to_json(result));
    return 0;
  }
  if (op == "power") {
    if (law1.empty() || t.empty()) {
      throw std::invalid_argument("convolve --op power needs --law1 and --t");
    }
    const auto result = cfree::cfree_power(resolve_law(law1, order), cfree::parse_rational(t), order);
    emit(cfree::law_to_json(result));
    return 0;
  }
  throw std::invalid_argument("unknown convolution op '" + op + "' (free|cfree|power)");
}

struct VerifyOptions {
  std::string theorem;
  std::string paramsFile;
  std::string perturb;
  bool noControl = false;
  int order = -1;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> flags;  // a, b, alpha, atilde, btilde, t, k
  bool json = false;
  bool csv = false;
};

int run_verify(const VerifyOptions& opt) {
  cfree::TheoremCheckSpec spec;
  spec.theorem = opt.theorem;
  spec.maxN = opt.order;
  spec.seed = opt.seed;
  if (!opt.paramsFile.empty()) {
    const Json file = read_json_file(opt.paramsFile);
    if (file.contains("params")) {
      for (auto it = file.at("params").begin(); it != file.at("params").end(); ++it) {
        spec.parameters[it.key()] = cfree::rational_from_json(it.value());
      }
    }
    if (file.contains("jacobi")) spec.jacobiInput = cfree::jacobi_from_json(file.at("jacobi"));
    if (file.contains("variable")) {
      spec.variableInput = cfree::variable_spec_from_json(file.at("variable"));
    }
    if (file.contains("order") && opt.order < 0) spec.maxN = file.at("order").get<int>();
  }
  for (const auto& [name, value] : opt.flags) {
    if (!value.empty()) spec.parameters[name] = cfree::parse_rational(value);
  }
  if (spec.maxN < 0) spec.maxN = default_order();
  if (!opt.perturb.empty()) {
    spec.perturbation = cfree::Perturbation::parse(opt.perturb);
    spec.control = !opt.noControl;
  }

  const cfree::VerificationReport report = cfree::run_check(spec);
  if (opt.csv) {
    std::cout << cfree::report_to_csv(report);
  } else if (opt.json) {
    emit(cfree::report_to_json(report));
  } else {
    std::cout << "theorem: " << report.theorem << "\norder: " << report.maxN << "\n";
    for (const auto& [name, holds] : report.conditions) {
      std::cout << name << ": " << (holds ? "holds" : "fails") << "\n";
    }
    std::cout << "checks: " << report.rows.size() << "\n";
    if (report.firstFailure) {
      std::cout << "first failure: " << report.firstFailure->first << " at n="
                << report.firstFailure->second << "\n";
    }
    std::cout << "verdict: " << report.verdict << "\n";
  }
  return cfree::report_exit_code(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact two-state free probability toolkit"};
  app.require_subcommand(1);

  // nc
  auto* nc = app.add_subcommand("nc", "enumerate non-crossing partitions");
  int ncN = 0, ncMax = cfree::kMaxPartitionSize;
  bool ncCount = false, ncJson = false;
  nc->add_option("--n", ncN, "ground-set size")->required();
  nc->add_option("--max", ncMax, "enumeration size guard");
  nc->add_flag("--count-only", ncCount, "print only the partition count");
  nc->add_flag("--json", ncJson, "JSON output");

  // moments
  auto* moments = app.add_subcommand("moments", "moment table of a two-state law");
  std::string momentsLaw;
  int momentsOrder = -1;
  bool momentsJson = false;
  moments->add_option("--law", momentsLaw, "catalog name or law file")->required();
  moments->add_option("--order", momentsOrder, "truncation order");
  moments->add_flag("--json", momentsJson, "JSON output");

  // cumulants
  auto* cumulants = app.add_subcommand("cumulants", "moments -> (r, R) cumulants");
  std::string cumLaw, cumPhi, cumPsi;
  int cumOrder = -1;
  bool cumJson = false;
  cumulants->add_option("--law", cumLaw, "catalog name or law file");
  cumulants->add_option("--mphi", cumPhi, "comma-separated phi moments (1,a,...)");
  cumulants->add_option("--mpsi", cumPsi, "comma-separated psi moments");
  cumulants->add_option("--order", cumOrder, "truncation order");
  cumulants->add_flag("--json", cumJson, "JSON output");

  // jacobi
  auto* jacobi = app.add_subcommand("jacobi", "moments <-> Jacobi parameters");
  std::string jacMoments, jacAlpha, jacBeta;
  int jacTerminated = -1, jacOrder = -1;
  bool jacJson = false;
  jacobi->add_option("--moments", jacMoments, "comma-separated moments -> Jacobi data");
  jacobi->add_option("--alpha", jacAlpha, "comma-separated alpha entries -> moments");
  jacobi->add_option("--beta", jacBeta, "comma-separated beta entries");
  jacobi->add_option("--terminated", jacTerminated, "termination index");
  jacobi->add_option("--order", jacOrder, "moment order");
  jacobi->add_flag("--json", jacJson, "JSON output");

  // convolve
  auto* convolve = app.add_subcommand("convolve", "free/c-free convolutions and powers");
  std::string convOp, convLaw1, convLaw2, convM1, convM2, convT;
  int convOrder = -1;
  convolve->add_option("--op", convOp, "free | cfree | power")->required();
  convolve->add_option("--law1", convLaw1, "first law (cfree/power)");
  convolve->add_option("--law2", convLaw2, "second law (cfree)");
  convolve->add_option("--measure1", convM1, "first measure (free)");
  convolve->add_option("--measure2", convM2, "second measure (free)");
  convolve->add_option("--t", convT, "power exponent (rational)");
  convolve->add_option("--order", convOrder, "truncation order (output is always JSON)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a named identity at truncation order");
  VerifyOptions vo;
  std::string vA, vB, vAlpha, vAtilde, vBtilde, vT, vK;
  verify->add_option("--theorem", vo.theorem, "theorem id")->required();
  verify->add_option("--a", vA, "parameter a");
  verify->add_option("--b", vB, "parameter b");
  verify->add_option("--alpha", vAlpha, "parameter alpha in (0,1)");
  verify->add_option("--atilde", vAtilde, "parameter atilde");
  verify->add_option("--btilde", vBtilde, "parameter btilde > -1");
  verify->add_option("--t", vT, "parameter t >= 0");
  verify->add_option("--k", vK, "max k for the k-indexed checks");
  verify->add_option("--params", vo.paramsFile, "JSON file with params/jacobi/variable inputs");
  verify->add_option("--perturb", vo.perturb, "negative control, e.g. r3=1/5");
  verify->add_flag("--no-control", vo.noControl, "grade a perturbed run as a plain verification");
  verify->add_option("--order", vo.order, "check depth (default: CFREE_ORDER or 12)");
  verify->add_option("--seed", vo.seed, "seed for randomized inputs");
  verify->add_flag("--json", vo.json, "JSON report");
  verify->add_flag("--csv", vo.csv, "CSV rows: theorem,n,lhs,rhs,pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  try {
    const int fallback = default_order();
    if (nc->parsed()) return run_nc(ncN, ncMax, ncCount, ncJson);
    if (moments->parsed()) {
      return run_moments(momentsLaw, momentsOrder < 0 ? fallback : momentsOrder, momentsJson);
    }
    if (cumulants->parsed()) {
      return run_cumulants(cumLaw, cumPhi, cumPsi, cumOrder < 0 ? fallback : cumOrder, cumJson);
    }
    if (jacobi->parsed()) {
      return run_jacobi(jacMoments, jacAlpha, jacBeta, jacTerminated,
                        jacOrder < 0 ? fallback : jacOrder, jacJson);
    }
    if (convolve->parsed()) {
      return run_convolve(convOp, convLaw1, convLaw2, convM1, convM2, convT,
                          convOrder < 0 ? fallback : convOrder);
    }
    if (verify->parsed()) {
      vo.flags = {{"a", vA},         {"b", vB},           {"alpha", vAlpha}, {"atilde", vAtilde},
                  {"btilde", vBtilde}, {"t", vT},         {"k", vK}};
      return run_verify(vo);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
