#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "su3braid/matgroup.hpp"

namespace su3braid {

using nlohmann::json;

// {order, coeffs: ["num/den", ...], approx: [re, im]}
json cyclo_to_json(const Cyclo& x);
Cyclo cyclo_from_json(const json& j);

// {dim, rows: [[cyclo]], float_rows: [[[re, im]]]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// [{index, key, word, matrix}] in element order; words use `names`.
json elements_to_json(const FiniteMatrixGroup& group, const std::vector<std::string>& names);
// Row i, column j holds the index of element(i) * element(j).
std::string cayley_csv(const FiniteMatrixGroup& group);

void write_elements(const FiniteMatrixGroup& group, const std::vector<std::string>& names,
                    const std::string& path);
void write_cayley(const FiniteMatrixGroup& group, const std::string& path);

// Text form "a + b*z^k + ..." with z = zeta_order, plus the float value.
std::string describe(const Cyclo& x);

}  // namespace su3braid
