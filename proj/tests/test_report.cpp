// Tests for the JSON and human renderings of analysis and family reports:
// structural assertions, determinism (including across the family verifier's
// worker threads), and validation of live documents against the shipped
// schema file via a small self-contained validator.

#include "doctest.h"

#include "qindex/quartic_index.hpp"
#include "report.hpp"

#include "json.hpp"

#include <fstream>
#include <regex>
#include <string>
#include <vector>

using namespace qindex;
using nlohmann::json;

namespace {

// A validator for the subset of JSON Schema the shipped schema file uses:
// type (string or list), enum, required, properties, additionalProperties,
// items. Records one error message per violation.
void validate(const json& schema, const json& doc, const std::string& path,
              std::vector<std::string>& errors) {
  if (schema.contains("enum")) {
    bool ok = false;
    for (const json& v : schema["enum"])
      if (v == doc) ok = true;
    if (!ok) errors.push_back(path + ": value not in enum");
    return;
  }

  if (schema.contains("type")) {
    auto matches = [&](const std::string& t) {
      if (t == "object") return doc.is_object();
      if (t == "array") return doc.is_array();
      if (t == "string") return doc.is_string();
      if (t == "integer") return doc.is_number_integer();
      if (t == "number") return doc.is_number();
      if (t == "boolean") return doc.is_boolean();
      if (t == "null") return doc.is_null();
      return false;
    };
    const json& ty = schema["type"];
    bool ok = false;
    if (ty.is_string()) {
      ok = matches(ty.get<std::string>());
    } else {
      for (const json& t : ty) ok = ok || matches(t.get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": wrong type (" + doc.type_name() + ")");
      return;
    }
  }
  // Nullable object/array schemas: nothing further to check against null.
  if (doc.is_null()) return;

  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const json& key : schema["required"]) {
        const std::string k = key.get<std::string>();
        if (!doc.contains(k)) errors.push_back(path + ": missing required key '" + k + "'");
      }
    const json props = schema.value("properties", json::object());
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (props.contains(it.key())) {
        validate(props[it.key()], it.value(), path + "." + it.key(), errors);
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_object()) {
        validate(schema["additionalProperties"], it.value(), path + "." + it.key(), errors);
      }
    }
  } else if (doc.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < doc.size(); ++i)
      validate(schema["items"], doc[i], path + "[" + std::to_string(i) + "]", errors);
  }
}

json load_schema() {
  std::ifstream in(QINDEX_SCHEMA_PATH);
  REQUIRE(in.good());
  json schema;
  in >> schema;
  return schema;
}

std::vector<std::string> validate_report(const json& doc) {
  static const json schema = load_schema();
  std::vector<std::string> errors;
  validate(schema, doc, "$", errors);
  return errors;
}

}  // namespace

TEST_CASE("report_to_json carries the full analysis of a shifted-generator input") {
  IndexReport rep = analyze(BigInt(25), BigInt(1125), BigInt(405));
  json j = report_to_json(rep);

  CHECK(j["schema_version"] == "1.0.0");
  CHECK(j["input"]["a"] == "25");
  CHECK(j["input"]["b"] == "1125");
  CHECK(j["input"]["c"] == "405");
  CHECK(j["input"]["polynomial"].get<std::string>().find("x^4") == 0);
  CHECK(j["irreducibility"]["status"] == "certified_eisenstein");
  CHECK(j["shapes"]["2"] == "[1^2, 2^1]");
  CHECK(j["shapes"]["3"] == "[1^1, 1^1, 1^1, 1^1]");
  CHECK(j["nu2"] == 0);
  CHECK(j["nu3"] == 1);
  CHECK(j["i_K"] == "3");
  CHECK(j["internal_inconsistency"] == false);
  CHECK(j["monogenicity"]["kind"] == "not_monogenic");

  // The dyadic analysis needed a shifted generator and says so.
  bool dyadic_seen = false;
  for (const json& pj : j["primes"]) {
    if (pj["p"] == 2) {
      dyadic_seen = true;
      CHECK(pj["used_shift"] == true);
      CHECK(!pj["shift_trace"].empty());
      CHECK(pj["nu_source"] == "engine");
    }
  }
  CHECK(dyadic_seen);

  // Every slope in the document is an exact rational string, and every
  // residual is a list of coefficient lists.
  const std::regex slope_re("-\\d+/\\d+");
  int sides_seen = 0;
  for (const json& pj : j["primes"])
    for (const json& fj : pj["factors"]) {
      if (fj["polygon"].is_null()) continue;
      for (const json& sj : fj["polygon"]["sides"]) {
        ++sides_seen;
        CHECK(std::regex_match(sj["slope"].get<std::string>(), slope_re));
        const json& coeffs = sj["residual"]["coefficients"];
        CHECK(coeffs.is_array());
        for (const json& e : coeffs) {
          CHECK(e.is_array());
          for (const json& n : e) CHECK(n.is_number_integer());
        }
      }
    }
  CHECK(sides_seen > 0);
}

TEST_CASE("analysis documents validate against the shipped schema") {
  auto check_doc = [&](const BigInt& a, const BigInt& b, const BigInt& c) {
    CAPTURE(a.str());
    CAPTURE(b.str());
    CAPTURE(c.str());
    json doc = report_to_json(analyze(a, b, c));
    auto errors = validate_report(doc);
    for (const auto& e : errors) {
      CAPTURE(e);
      CHECK(false);
    }
    CHECK(errors.empty());
  };
  check_doc(BigInt(25), BigInt(1125), BigInt(405));     // shifted generators
  check_doc(BigInt(4913), BigInt(867), BigInt(119));    // straight engine run
  check_doc(BigInt(1), BigInt(4), BigInt(112));         // internal inconsistency
  check_doc(BigInt(0), BigInt(0), BigInt(-4));          // reducible, empty primes
  check_doc(BigInt(0), BigInt(0), BigInt(8));           // replacement generator
  check_doc(BigInt(2000001), BigInt(1999998), BigInt(-4000004));  // uncertified
}

TEST_CASE("report_to_json is deterministic") {
  IndexReport r1 = analyze(BigInt(6), BigInt(42), BigInt(975));
  IndexReport r2 = analyze(BigInt(6), BigInt(42), BigInt(975));
  CHECK(report_to_json(r1).dump() == report_to_json(r2).dump());
}

TEST_CASE("family reports are deterministic across worker threads") {
  // Classes are verified concurrently; the report must not depend on
  // scheduling, only on the seed.
  FamilyReport r1 = verify_family(1, 5, 3, 99);
  FamilyReport r2 = verify_family(1, 5, 3, 99);
  CHECK(family_to_json(r1).dump() == family_to_json(r2).dump());

  FamilyReport d = verify_family(1, 5, 3, 100);
  // A different seed draws different instances; the verdict still holds.
  CHECK(d.passed());
}

TEST_CASE("family_to_json carries counts, probe results and notes") {
  FamilyReport rep = verify_family(1, 2, 3, 42);
  json j = family_to_json(rep);
  CHECK(j["schema_version"] == "1.0.0");
  CHECK(j["theorem"] == 1);
  CHECK(j["case"] == 2);
  CHECK(j["p"] == 2);
  CHECK(j["classes"] == 63);
  CHECK(j["instances"] == 63 * 3);
  CHECK(j["counterexamples"].is_array());
  CHECK(j["counterexamples"].empty());
  CHECK(j["probe"]["applicable"] == true);
  CHECK(j["probe"]["extras"].size() == 1);
  CHECK(j["probe"]["extras"][0] == json::array({19, 31, 29}));
  CHECK(j["passed"] == true);
}

TEST_CASE("render_report prints the decomposition and the index") {
  IndexReport rep = analyze(BigInt(25), BigInt(1125), BigInt(405));
  const std::string text = render_report(rep);
  CHECK(text.find("2O_K = [1^2, 2^1]") != std::string::npos);
  CHECK(text.find("3O_K = [1^1, 1^1, 1^1, 1^1]") != std::string::npos);
  CHECK(text.find("i(K) = 3") != std::string::npos);
  CHECK(text.find("theorem 2 case (1)") != std::string::npos);
  CHECK(text.find("side (") != std::string::npos);

  IndexReport red = analyze(BigInt(0), BigInt(0), BigInt(-4));
  const std::string rtext = render_report(red);
  CHECK(rtext.find("irreducibility:") != std::string::npos);
  CHECK(rtext.find("nu_2") == std::string::npos);  // analysis stops early
}

TEST_CASE("render_family prints a verdict line") {
  FamilyReport rep = verify_family(2, 1, 2, 5);
  const std::string text = render_family(rep);
  CHECK(text.rfind("PASS: ", 0) == 0);
  CHECK(text.find("theorem 2") != std::string::npos);
}
