// SPDX-License-Identifier: Apache-2.0
//
// Structured reports: JSON conversion of the domain types, the report
// envelope, and rendering as JSON, CSV (RFC 4180) or an aligned table.
// Integers with magnitude above 2^53 are rendered as decimal strings so
// that every JSON consumer reads them exactly.
#pragma once

#include "ulrich/acceptance.hpp"
#include "ulrich/moduli.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace ulrich {

using Json = nlohmann::json;

inline constexpr const char* kEngineVersion = "1.0.0";

enum class Format { json, csv, table };
Format parse_format(const std::string& name);

Json int_json(const Int& x);
Json rational_json(const Rational& q);
Json to_json(const ScrollParams& p);
Json to_json(const SurfaceDivisor& d);
Json to_json(const ScrollDivisor& x);
Json to_json(const CodimTwoClass& c);
Json to_json(const ChernData& c);
Json to_json(const CohInterval& c);
Json to_json(const UlrichVerdict& v);
Json to_json(const LineClassification& c, const ScrollParams& p);
Json to_json(const Ext1Table& t);
Json to_json(const RankTwoReport& r);
Json to_json(const FamilyDescriptor& f);
Json to_json(const ScanRow& r);
Json to_json(const AcceptanceReport& r);

// {command, params, payload, engine_version}; params is null when absent.
Json envelope(const std::string& command, const std::optional<ScrollParams>& p, Json payload);

// Flattened "path,value" rows of the payload for csv/table output.
std::vector<std::pair<std::string, std::string>> flatten(const Json& j, const std::string& prefix = "");
std::string csv_escape(const std::string& field);
std::string render(const Json& env, Format f);

}  // namespace ulrich
