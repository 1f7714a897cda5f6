#include "mdsgrs/json_io.hpp"

#include "mdsgrs/error.hpp"

namespace mdsgrs {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::Parse, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t unsigned_member(const Json& j, const char* key, const std::string& where) {
  const Json& v = member(j, key, where);
  if (!v.is_number_unsigned()) fail(where + "/" + key, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

Json to_json(const FieldCtx& field) {
  return Json{{"p", field.p()}, {"e", field.e()}, {"modulus", field.modulus()}};
}

Field field_from_json(const Json& j, const std::string& where) {
  const auto p = unsigned_member(j, "p", where);
  const auto e = unsigned_member(j, "e", where);
  if (p > UINT32_MAX || e > 64) fail(where, "field parameters out of range");
  Field field;
  try {
    field = make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
  } catch (const Error& err) {
    fail(where, err.what());
  }
  if (j.contains("modulus")) {
    const Json& m = j.at("modulus");
    if (!m.is_array()) fail(where + "/modulus", "expected an array");
    std::vector<std::uint32_t> modulus;
    for (const Json& c : m) {
      if (!c.is_number_unsigned()) fail(where + "/modulus", "expected nonnegative integers");
      modulus.push_back(c.get<std::uint32_t>());
    }
    if (modulus != field->modulus())
      fail(where + "/modulus", "only the canonical (lexicographically smallest) modulus is supported");
  }
  return field;
}

Json to_json(const FieldCtx& field, Felt x) { return Json(field.coeffs(x)); }

Json to_json(const FieldCtx& field, const Vec& xs) {
  Json out = Json::array();
  for (Felt x : xs) out.push_back(to_json(field, x));
  return out;
}

Felt element_from_json(const FieldCtx& field, const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an element (array of coefficients)");
  if (j.size() != field.e()) fail(where, "expected " + std::to_string(field.e()) + " coefficients");
  std::vector<std::uint32_t> coeffs;
  for (const Json& c : j) {
    if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= field.p())
      fail(where, "coefficients must be integers in [0, p)");
    coeffs.push_back(c.get<std::uint32_t>());
  }
  return field.from_coeffs(coeffs);
}

Vec elements_from_json(const FieldCtx& field, const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of elements");
  Vec out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(element_from_json(field, j[i], where + "/" + std::to_string(i)));
  return out;
}

Json to_json(const MatrixGF& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Felt x : m.row(i)) row.push_back(to_json(m.ctx(), x));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

MatrixGF matrix_from_json(const Field& field, const Json& j, const std::string& where) {
  const auto rows = unsigned_member(j, "rows", where);
  const auto cols = unsigned_member(j, "cols", where);
  const Json& entries = member(j, "entries", where);
  if (!entries.is_array() || entries.size() != rows)
    fail(where + "/entries", "expected " + std::to_string(rows) + " rows");
  std::vector<Felt> flat;
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_where = where + "/entries/" + std::to_string(i);
    const Vec row = elements_from_json(*field, entries[i], row_where);
    if (row.size() != cols) fail(row_where, "expected " + std::to_string(cols) + " entries");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return MatrixGF(field, rows, cols, std::move(flat));
}

Json to_json(const GrsCode& code) {
  const FieldCtx& f = code.ctx();
  return Json{{"field", to_json(f)},
              {"n", code.n()},
              {"k", code.k()},
              {"extended", code.extended()},
              {"alpha", to_json(f, code.alpha())},
              {"v", to_json(f, code.v())},
              {"generator", to_json(generator_matrix(code))}};
}

ParsedCode code_from_json(const Json& j) {
  if (!j.is_object()) fail("", "expected a code object");
  const Field field = field_from_json(member(j, "field", ""), "/field");
  const auto n = unsigned_member(j, "n", "");
  const auto k = unsigned_member(j, "k", "");
  const Json& ext = member(j, "extended", "");
  if (!ext.is_boolean()) fail("/extended", "expected a boolean");
  Vec alpha = elements_from_json(*field, member(j, "alpha", ""), "/alpha");
  Vec v = elements_from_json(*field, member(j, "v", ""), "/v");
  if (alpha.size() != n) fail("/alpha", "expected n = " + std::to_string(n) + " points");
  if (v.size() != n) fail("/v", "expected n = " + std::to_string(n) + " multipliers");

  std::optional<GrsCode> code;
  try {
    code.emplace(field, std::move(alpha), std::move(v), k, ext.get<bool>());
  } catch (const Error& err) {
    fail("", std::string("invalid code: ") + err.what());
  }
  std::optional<MatrixGF> generator;
  if (j.contains("generator")) generator = matrix_from_json(field, j.at("generator"), "/generator");
  return {std::move(*code), std::move(generator)};
}

Json to_json(const ConstructionResult& result) {
  const FieldCtx& f = result.code.ctx();
  Json out = to_json(result.code);
  out["family"] = std::string(to_string(result.family));
  const Certificate& c = result.certificate;
  out["certificate"] = Json{
      {"u", to_json(f, c.u)},
      {"lambda", to_json(f, c.lambda)},
      {"w", c.w ? to_json(f, *c.w) : Json(nullptr)},
      {"beta", c.beta ? to_json(f, *c.beta) : Json(nullptr)},
      {"gamma", c.gamma ? to_json(f, *c.gamma) : Json(nullptr)},
      {"alpha_set", to_json(f, c.alpha_set)},
  };
  return out;
}

Json to_json(const CheckResult& check) {
  Json out{{"name", check.name},
           {"status", std::string(to_string(check.status))},
           {"mode", std::string(to_string(check.mode))},
           {"detail", check.detail}};
  if (check.seed) out["seed"] = *check.seed;
  return out;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return Json{{"overall", report.overall()}, {"checks", std::move(checks)}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw Error(ErrorKind::Parse, "byte " + std::to_string(err.byte) + ": " + err.what());
  }
}

}  // namespace mdsgrs
