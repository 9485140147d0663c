#pragma once
#include <json.hpp>
#include <string>

#include "mlv/conj.hpp"
#include "mlv/galrep.hpp"
#include "mlv/hodge.hpp"
#include "mlv/zeta.hpp"

namespace mlv {

using json = nlohmann::json;

inline constexpr const char* kDatumSchema = "mlv-datum/1";

// Reads a JSON file; InvalidInput when unreadable, ParseError when malformed.
json load_json_file(const std::string& path);

// Optional "symbols": [{"name": ..., "conj": "fixed" | "negated"}] block.
void declare_symbols_from_json(const json& j);

// Period values are strings in the period expression grammar or integers.
PeriodValue value_from_json(const json& j);
json value_to_json(const PeriodValue& v);
mpq_class rational_from_json(const json& j);

// Matrices are arrays of rows. An empty array is a 0 x 0 matrix.
PMatrix pmatrix_from_json(const json& j);
QMatrix qmatrix_from_json(const json& j);
json matrix_to_json(const PMatrix& m);
json matrix_to_json(const QMatrix& m);

// {"kind": "affine" | "projective", "ambientDim": n, "equations": [...]}
VarietySpec variety_from_json(const json& j);
json variety_to_json(const VarietySpec& v);

// {"p": 2, "f": 1, "matrix": [[...]]}; "phi" is accepted for "matrix".
FrobModule frob_from_json(const json& j);
json frob_to_json(const FrobModule& v);

// {"p": 2, "f": 1, "poly": [c0, c1, ...], "exponent": 1}
EulerFactor factor_from_json(const json& j);
json factor_to_json(const EulerFactor& e);

// {"zetaword": {"shifts": [{"a", "e"}], "extraFactors": [...]}} or {"euler": [...]}
ZetaWord lobject_from_json(const json& j);
json lobject_to_json(const ZetaWord& w);

// {"rank", "weight" | "weights": [[w, dim]], "finf", "filtrationDims": [[p, dim]], "comparison"}
HodgeDatum hodge_from_json(const json& j);
json hodge_to_json(const HodgeDatum& h);

// [{"degree", "dim", "qgen", "basisLabel"}] (basisLabel is informational),
// {"degrees": [...], "scale": ...} for complexes with a nontrivial scale, or
// a plain {"<degree>": dim} object with rational bases.
QComplex qcomplex_from_json(const json& j);
json qcomplex_to_json(const QComplex& c);

MotivicDatum datum_from_json(const json& j);
json datum_to_json(const MotivicDatum& d);

}  // namespace mlv
