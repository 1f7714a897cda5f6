#include <doctest.h>

#include "mdsgrs/json_io.hpp"
#include "support.hpp"

using namespace mdsgrs;
using support::expect_error;
using support::ints;

TEST_CASE("field and element encoding") {
  const Field f9 = make_field(3, 2);
  CHECK(to_json(*f9).dump() == R"({"p":3,"e":2,"modulus":[1,0,1]})");
  const Felt x = f9->from_coeffs(std::vector<std::uint32_t>{0, 1});
  CHECK(to_json(*f9, x).dump() == "[0,1]");
  CHECK(element_from_json(*f9, Json::parse("[2,1]"), "") == f9->add(Felt{2}, x));

  CHECK(*field_from_json(Json::parse(R"({"p":3,"e":2})")) == *f9);
  expect_error(ErrorKind::Parse, [] { field_from_json(Json::parse(R"({"p":3,"e":2,"modulus":[2,0,1]})")); });
  expect_error(ErrorKind::Parse, [] { field_from_json(Json::parse(R"({"p":4,"e":1})")); });
  expect_error(ErrorKind::Parse, [] { field_from_json(Json::parse(R"({"e":1})")); });
  expect_error(ErrorKind::Parse, [&] { element_from_json(*f9, Json::parse("[3,0]"), ""); });
  expect_error(ErrorKind::Parse, [&] { element_from_json(*f9, Json::parse("[1]"), ""); });
  expect_error(ErrorKind::Parse, [&] { element_from_json(*f9, Json::parse("1"), ""); });
}

TEST_CASE("matrix round trip") {
  const Field f5 = make_field(5, 1);
  const MatrixGF m = MatrixGF::from_rows(f5, {ints({1, 2, 3}), ints({4, 0, 1})});
  const Json j = to_json(m);
  CHECK(j.dump() == R"({"rows":2,"cols":3,"entries":[[[1],[2],[3]],[[4],[0],[1]]]})");
  CHECK(matrix_from_json(f5, j, "") == m);
  Json ragged = j;
  ragged["entries"][1].erase(0);
  expect_error(ErrorKind::Parse, [&] { matrix_from_json(f5, ragged, ""); });
}

TEST_CASE("code round trip") {
  const Field f9 = make_field(3, 2);
  const GrsCode code(f9, ints({0, 1, 2, 4}), ints({1, 2, 5, 7}), 2);
  const Json j = to_json(code);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"field", "n", "k", "extended", "alpha", "v", "generator"});

  const ParsedCode back = code_from_json(j);
  CHECK(back.code.alpha() == code.alpha());
  CHECK(back.code.v() == code.v());
  CHECK(back.code.k() == 2);
  CHECK_FALSE(back.code.extended());
  REQUIRE(back.generator);
  CHECK(*back.generator == generator_matrix(code));
  CHECK(to_json(back.code) == j);

  Json no_gen = j;
  no_gen.erase("generator");
  CHECK_FALSE(code_from_json(no_gen).generator);

  Json dup = j;
  dup["alpha"][1] = dup["alpha"][0];
  expect_error(ErrorKind::Parse, [&] { code_from_json(dup); });
  Json bad_k = j;
  bad_k["k"] = 9;
  expect_error(ErrorKind::Parse, [&] { code_from_json(bad_k); });
  Json bad_n = j;
  bad_n["n"] = 3;
  expect_error(ErrorKind::Parse, [&] { code_from_json(bad_n); });
}

TEST_CASE("parse errors carry locations") {
  try {
    parse_json("{\"a\": [1, 2,, 3]}");
    FAIL("expected a parse error");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Parse);
    CHECK(std::string(err.what()).find("byte") != std::string::npos);
  }
  const Field f5 = make_field(5, 1);
  Json j = to_json(GrsCode(f5, ints({0, 1}), ints({2, 1}), 1));
  j["v"][1] = Json::array({7});
  try {
    code_from_json(j);
    FAIL("expected a parse error");
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("/v/1") != std::string::npos);
  }
}

TEST_CASE("construction result and report encoding") {
  const ConstructionResult res = construct_coset_union(3, 1);
  const Json j = to_json(res);
  CHECK(j["family"] == "theorem-3-5");
  CHECK(j["certificate"]["beta"].dump() == "[0,2]");
  CHECK(j["certificate"]["gamma"].dump() == "[1,1]");
  CHECK(j["certificate"]["w"].is_null());
  CHECK(j["certificate"]["lambda"].dump() == "[1,0]");
  CHECK(j["certificate"]["alpha_set"].size() == 6);
  CHECK(code_from_json(j).code.alpha() == res.code.alpha());

  VerificationReport report;
  report.add({.name = "self_dual", .status = CheckStatus::Pass, .mode = CheckMode::Exact, .detail = "ok"});
  report.add({.name = "mds", .status = CheckStatus::Fail, .mode = CheckMode::Randomized, .detail = "x", .seed = 3});
  CHECK(to_json(report).dump() ==
        R"({"overall":false,"checks":[{"name":"self_dual","status":"pass","mode":"exact","detail":"ok"},)"
        R"({"name":"mds","status":"fail","mode":"randomized","detail":"x","seed":3}]})");
}
