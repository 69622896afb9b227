#include "cfree/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace cfree {

Json rational_to_json(const Rational& value) { return to_fraction_string(value); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw std::invalid_argument("rational JSON must be a \"p/q\" string");
  return parse_rational(j.get<std::string>());
}

namespace {

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const Json& item : j) out.push_back(rational_from_json(item));
  return out;
}

}  // namespace

Json series_to_json(const TruncatedSeries& s) {
  return Json{{"order", s.order()}, {"coeffs", rationals_to_json(s.coeffs())}};
}

TruncatedSeries series_from_json(const Json& j) {
  return TruncatedSeries(j.at("order").get<int>(), rationals_from_json(j.at("coeffs")));
}

Json variable_spec_to_json(const VariableSpec& v) {
  return Json{{"name", v.name},
              {"r", rationals_to_json(v.freeCumulants)},
              {"R", rationals_to_json(v.twoStateCumulants)}};
}

VariableSpec variable_spec_from_json(const Json& j) {
  return VariableSpec{j.at("name").get<std::string>(), rationals_from_json(j.at("r")),
                      rationals_from_json(j.at("R"))};
}

Json word_to_json(const Word& w) {
  Json out = Json::array();
  for (const Letter& letter : w) {
    Json entry = Json::object();
    for (const auto& [name, value] : letter.coefficients()) entry[name] = rational_to_json(value);
    out.push_back(std::move(entry));
  }
  return out;
}

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("a word is an array of coefficient maps");
  Word out;
  for (const Json& entry : j) {
    std::map<std::string, Rational> coeffs;
    for (auto it = entry.begin(); it != entry.end(); ++it) {
      coeffs.emplace(it.key(), rational_from_json(it.value()));
    }
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

Json jacobi_to_json(const JacobiParams& p) {
  Json out{{"alpha", rationals_to_json(p.alpha)}, {"beta", rationals_to_json(p.beta)}};
  out["terminated"] = p.terminated ? Json(*p.terminated) : Json(nullptr);
  return out;
}

JacobiParams jacobi_from_json(const Json& j) {
  std::optional<int> terminated;
  if (j.contains("terminated") && !j.at("terminated").is_null()) {
    terminated = j.at("terminated").get<int>();
  }
  return JacobiParams::make(rationals_from_json(j.at("alpha")), rationals_from_json(j.at("beta")),
                            terminated);
}

Json nc_partition_to_json(const NCPartition& p) {
  Json blocks = Json::array();
  for (const auto& block : p.partition.blocks) blocks.push_back(block);
  Json labels = Json::array();
  for (BlockLabel label : p.labels) labels.push_back(label == BlockLabel::Outer ? "outer" : "inner");
  return Json{{"blocks", std::move(blocks)}, {"labels", std::move(labels)}};
}

Json law_to_json(const TwoStateLaw& law) {
  return Json{{"name", law.name}, {"mu", jacobi_to_json(law.muJacobi)}, {"nu", jacobi_to_json(law.nuJacobi)}};
}

std::pair<JacobiParams, JacobiParams> law_file_from_json(const Json& j, std::string* name) {
  if (name) *name = j.contains("name") ? j.at("name").get<std::string>() : std::string("law");
  return {jacobi_from_json(j.at("mu")), jacobi_from_json(j.at("nu"))};
}

Json report_to_json(const VerificationReport& report) {
  Json params = Json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  Json rows = Json::array();
  for (const CheckRow& row : report.rows) {
    rows.push_back(Json{{"check", row.check},
                        {"n", row.index},
                        {"lhs", rational_to_json(row.lhs)},
                        {"rhs", rational_to_json(row.rhs)},
                        {"pass", row.pass}});
  }
  Json out{{"theorem", report.theorem}, {"order", report.maxN}, {"params", std::move(params)}};
  out["perturbation"] = report.perturbation ? Json(*report.perturbation) : Json(nullptr);
  out["checks"] = std::move(rows);
  if (!report.conditions.empty()) {
    Json conditions = Json::array();
    for (const auto& [name, holds] : report.conditions) {
      conditions.push_back(Json{{"id", name}, {"holds", holds}});
    }
    out["conditions"] = std::move(conditions);
    out["equivalenceConsistent"] = *report.equivalenceConsistent;
  }
  out["allPass"] = report.allPass;
  out["firstFailure"] = report.firstFailure
                            ? Json{{"check", report.firstFailure->first}, {"n", report.firstFailure->second}}
                            : Json(nullptr);
  out["control"] = report.controlOk.has_value()
                       ? Json(*report.controlOk ? "control-ok" : "control-missed")
                       : Json(nullptr);
  out["verdict"] = report.verdict;
  return out;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "theorem,n,lhs,rhs,pass\n";
  for (const CheckRow& row : report.rows) {
    os << report.theorem << ':' << row.check << ',' << row.index << ',' << to_fraction_string(row.lhs)
       << ',' << to_fraction_string(row.rhs) << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace cfree
