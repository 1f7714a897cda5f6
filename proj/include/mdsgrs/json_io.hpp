#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mdsgrs/construct.hpp"
#include "mdsgrs/grs.hpp"
#include "mdsgrs/linalg.hpp"
#include "mdsgrs/verify.hpp"

namespace mdsgrs {

using Json = nlohmann::ordered_json;

// Schemas:
//   field:   {"p": int, "e": int, "modulus": [int, ...]}     constant term first
//   element: [int, ...]                                       e coefficients
//   matrix:  {"rows": int, "cols": int, "entries": [[element, ...], ...]}
//   code:    {"field", "n", "k", "extended", "alpha", "v", "generator"}
//   result:  code + {"family", "certificate": {"u", "lambda", "w", "beta", "gamma", "alpha_set"}}
//   report:  {"overall": bool, "checks": [{"name", "status", "mode", "detail", "seed"?}]}
// Readers throw Error(Parse) with a JSON-pointer location.

Json to_json(const FieldCtx& field);
Field field_from_json(const Json& j, const std::string& where = "");

Json to_json(const FieldCtx& field, Felt x);
Json to_json(const FieldCtx& field, const Vec& xs);
Felt element_from_json(const FieldCtx& field, const Json& j, const std::string& where);
Vec elements_from_json(const FieldCtx& field, const Json& j, const std::string& where);

Json to_json(const MatrixGF& m);
MatrixGF matrix_from_json(const Field& field, const Json& j, const std::string& where);

Json to_json(const GrsCode& code);

struct ParsedCode {
  GrsCode code;
  std::optional<MatrixGF> generator;  // as stored in the file, if present
};
ParsedCode code_from_json(const Json& j);

Json to_json(const ConstructionResult& result);
Json to_json(const CheckResult& check);
Json to_json(const VerificationReport& report);

/// Parses text, mapping syntax errors to Error(Parse) with the byte offset.
Json parse_json(const std::string& text);

}  // namespace mdsgrs
