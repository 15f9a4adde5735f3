#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dortho/afamily.hpp"
#include "dortho/bfamily.hpp"
#include "dortho/limits.hpp"
#include "dortho/matrix.hpp"
#include "dortho/upoly.hpp"

namespace dortho {

using json = nlohmann::ordered_json;

// Family dumps. Coefficients are ascending-degree "p/q" strings; rationals
// never cross the boundary as floats.
json family_a_json(const FamilyParamsA& params, const std::vector<UPoly>& polys);
std::pair<FamilyParamsA, std::vector<UPoly>> family_a_from_json(const json& j);
json family_b_json(const FamilyParamsB& params, const std::vector<UPoly>& polys);
std::pair<FamilyParamsB, std::vector<UPoly>> family_b_from_json(const json& j);

std::string family_a_csv(const FamilyParamsA& params, const std::vector<UPoly>& polys);
std::string family_b_csv(const FamilyParamsB& params, const std::vector<UPoly>& polys);

json report_json(const ContractionReport& r);
ContractionReport report_from_json(const json& j);
std::string report_csv(const ContractionReport& r);

// Row-major matrix of "p/q" strings.
json matrix_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

bool report_equal(const ContractionReport& x, const ContractionReport& y);

} // namespace dortho
