#pragma once
/// \file json_io.hpp
/// JSON encodings of polynomials. Polynomials are lists of
/// {exponents, coeff} in descending graded-lex order; Laurent polynomials are
/// lists of {qexp, coeff} in ascending exponent order.

#include "json.hpp"

#include "foamlab/algebra.hpp"

namespace foamlab {

nlohmann::json poly_to_json(const SymPoly& p);
SymPoly poly_from_json(const nlohmann::json& j, int nvars, Coeffs k = Coeffs::Integer);
nlohmann::json laurent_to_json(const LaurentQ& p);
LaurentQ laurent_from_json(const nlohmann::json& j);

}  // namespace foamlab
