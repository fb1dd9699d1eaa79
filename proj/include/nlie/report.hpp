#pragma once

#include <string>

#include <json.hpp>

#include "nlie/classifier.hpp"
#include "nlie/fixtures.hpp"
#include "nlie/qideal.hpp"
#include "nlie/sln.hpp"
#include "nlie/verma.hpp"

namespace nlie {

inline constexpr const char* kVersion = "0.1.0";

// nlohmann::json keeps object keys in a std::map, so dumps are sorted.
using Json = nlohmann::json;

Json to_json(const Monomial& m);
Json to_json(const GeneratorSpec& spec);
Json to_json(const UWord& w);
Json to_json(const VermaElement& v);
Json to_json(const Multiplicities& m);
Json to_json(const AdmissibilityReport& r);
Json to_json(const ClassificationSummary& s);
Json to_json(const FixtureResult& r);

/// {command, inputs, result, version}.
Json envelope(const std::string& command, const Json& inputs, const Json& result);

}  // namespace nlie
