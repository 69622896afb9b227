#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

#include "cfree/cumulant.hpp"
#include "cfree/jacobi.hpp"
#include "cfree/laws.hpp"
#include "cfree/ncpart.hpp"
#include "cfree/series.hpp"
#include "cfree/verify.hpp"

namespace cfree {

/// Key order is preserved so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings ("-3/4", "0/1"); round-trips are
// bit-exact.
Json rational_to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json series_to_json(const TruncatedSeries& s);  // {"order": N, "coeffs": ["p/q", ...]}
TruncatedSeries series_from_json(const Json& j);

Json variable_spec_to_json(const VariableSpec& v);  // {"name": .., "r": [..], "R": [..]}
VariableSpec variable_spec_from_json(const Json& j);

Json word_to_json(const Word& w);  // array of {"<var>": "p/q", ...} maps
Word word_from_json(const Json& j);

Json jacobi_to_json(const JacobiParams& p);  // {"alpha": [..], "beta": [..], "terminated": null|i}
JacobiParams jacobi_from_json(const Json& j);

Json nc_partition_to_json(const NCPartition& p);  // {"blocks": [[..],..], "labels": ["outer",..]}

Json law_to_json(const TwoStateLaw& law);  // {"name": .., "mu": {..}, "nu": {..}}
/// Law files carry {"mu": <jacobi>, "nu": <jacobi>} and an optional name.
std::pair<JacobiParams, JacobiParams> law_file_from_json(const Json& j, std::string* name = nullptr);

Json report_to_json(const VerificationReport& report);
/// Per-row CSV: theorem,n,lhs,rhs,pass (the theorem column carries the
/// check id as a suffix).
std::string report_to_csv(const VerificationReport& report);

}  // namespace cfree
