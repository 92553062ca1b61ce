// Parameter record serialization for the CLI: every numeric field is a decimal
// string so arbitrary-precision values survive any JSON reader.
#pragma once

#include <srg/params.hpp>

#include <json.hpp>

#include <string>

namespace srg {

// Schema: {a, c, e, k, l, n, s, lambda2, m1, m2, K1, K2, status}.
nlohmann::ordered_json param_record_json(const ParamTriple& t, const DerivedParams& d,
                                         const FeasibilityVerdict& verdict);

std::string param_record_csv_header();
std::string param_record_csv_row(const ParamTriple& t, const DerivedParams& d,
                                 const FeasibilityVerdict& verdict);

}  // namespace srg
