#pragma once

#include <json.hpp>

#include "superjac/formulas.hpp"
#include "superjac/oracle.hpp"

namespace superjac::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers are written as decimal strings. Elements are coefficient lists
// of the representative, constant term first; polynomials over a prime
// field list bare coefficients. Parsers also accept JSON numbers.
json to_json(const FieldElement& z);
json to_json(const FieldCtx& F);
json to_json(const UniPoly& a);
json to_json(const SuperellipticCurve& c);
json to_json(const AffinePoint& P);
json to_json(const ReducedDivisor& D);
json to_json(const MumfordDivisor& A);
json to_json(const InterpolationCurve& ic);
json to_json(const StepCertificate& cert);
json to_json(const AddCertificate& cert);
json to_json(const LPolynomial& L);

// Parsers throw ParseError on malformed input; curve validation errors pass
// through unchanged.
FieldCtx field_from_json(const json& j);
FieldElement element_from_json(const json& j, const FieldCtx& F);
UniPoly poly_from_json(const json& j, const FieldCtx& F);
SuperellipticCurve curve_from_json(const json& j);
// Uses j["curve"] when present, otherwise `fallback`.
ReducedDivisor divisor_from_json(const json& j, const SuperellipticCurve* fallback = nullptr);

// A JSON document from inline text (starting with '{') or a file path.
json load_json(const std::string& text_or_path);

}  // namespace superjac::io
