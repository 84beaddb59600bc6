#pragma once

// JSON forms of polynomials, polygons and certificates.
//
// Integers are JSON numbers while |n| <= 2^53 - 1 and decimal strings
// beyond that; rationals are always lowest-terms strings.

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "padic/irred.hpp"
#include "padic/poly.hpp"
#include "padic/polygon.hpp"

namespace padic {

nlohmann::json json_integer(std::int64_t n);
nlohmann::json json_integer(const BigInt& n);

/// Dense coefficient array `["c0", "c1", ...]`.
nlohmann::json to_json(const Polynomial& f);
/// Inverse of to_json(Polynomial). Throws ParseError.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// `{"prime", "x_offset", "vertices", "segments"}`.
nlohmann::json to_json(const NewtonPolygon& np);
/// Reads the vertices and prime back; segments are recomputed.
/// Throws ParseError or Error(InvalidArgument, NotPrime).
NewtonPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LowerBoundRegion& region);
nlohmann::json to_json(const PurityReport& report);
nlohmann::json to_json(const std::vector<RootValuation>& roots);
nlohmann::json to_json(const CompositionReport& report);
nlohmann::json to_json(const IrreducibilityCertificate& certificate);
nlohmann::json to_json(const DynamicalReport& report);
nlohmann::json to_json(const ExpCompositionReport& report);

}  // namespace padic
