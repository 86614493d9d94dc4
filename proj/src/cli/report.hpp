#pragma once

#include "nct/exact/integer.hpp"
#include "nct/exact/real.hpp"
#include "nct/lfunc.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nct::cli {

using Json = nlohmann::ordered_json;

/// A JSON value that is emitted verbatim as a number (big integers, reals).
Json raw_number(const std::string& digits);
Json number(const Integer& v);
Json number(const Real& v);
Json numbers(const std::vector<Integer>& v);
Json complex_json(const Complex& z);

/// Pretty JSON (two-space indent, trailing newline) with raw numbers unquoted.
std::string dump(const Json& j);

/// key: value lines; nested values are compact JSON.
std::string dump_text(const Json& j);

Json compare_rows_json(const CompareReport& report);
std::string compare_rows_csv(const CompareReport& report);

}  // namespace nct::cli
