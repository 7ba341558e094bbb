#pragma once

#include <json.hpp>

#include "mmu/algebra.hpp"
#include "mmu/kovacs.hpp"
#include "mmu/lemmalab.hpp"
#include "mmu/qcomb.hpp"
#include "mmu/repmod.hpp"
#include "mmu/subgrpd.hpp"

namespace mmu::cli {

using nlohmann::json;

/// Rows of field indices.
json to_json(const Mat& m);
Mat mat_from_json(const Field& f, const json& j);

/// {"n", "q", "terms": [{"matrix", "coeff"}]} in matrix-key order.
json to_json(const AlgElem& a);
/// Inverse of to_json(AlgElem); coefficients are "a/b" strings or integers.
/// Throws InvalidArgument on malformed input.
AlgElem alg_from_json(const json& j);

/// {"n", "q", "r", "terms": [{"src", "dst", "iso", "coeff"}]}.
json to_json(const GroupoidElem& x);

json to_json(const Partition& p);
json to_json(const LemmaCheck& c);
json to_json(const ClassCoeffs& coeffs);
json to_json(const ClassLaurents& coeffs);
/// {matrix-key: "trace"}.
json to_json(const CharTable& chi);

}  // namespace mmu::cli
