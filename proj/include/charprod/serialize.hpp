#pragma once

#include <vector>

#include "charprod/constructions.hpp"
#include "charprod/report.hpp"

namespace charprod {

/// Integer when the denominator is 1, otherwise the string "num/den".
json rational_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"conductor": n, "coeffs": [[num, den], ...]}
json cyc_json(const CycNumber& z);
CycNumber cyc_from_json(const json& j);

/// {"group": descriptor, "conductor": n, "sampled": bool,
///  "values": [{"element": code, "value": cyc}, ...]}
/// Tabulated functions list every class representative; rule-form functions
/// list the given sample elements.
json class_function_json(const ClassFunction& chi, const std::vector<Element>& sample = {});

/// Values of a serialized class function, keyed by element.
std::vector<std::pair<Element, CycNumber>> class_function_values(const json& j);

/// Construction certificates: parameters, group orders, expected
/// multiplicities and the characters that the verification reads, either on
/// every class (tabulated) or on a fixed deterministic sample.
json example1_certificate(const Example1Output& ex, const Limits& limits = {});
json theorem_a_certificate(const Example1Output& ex, const TheoremBOutput& tb, const std::string& tier,
                           const Limits& limits = {});

/// Checks a freshly computed certificate against a stored one: parameters,
/// orders, multiplicities and every stored character value.
VerificationReport diff_certificate(const json& computed, const json& golden);

}  // namespace charprod
