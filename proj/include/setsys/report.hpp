#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "setsys/qspace.hpp"
#include "setsys/search.hpp"
#include "setsys/structural.hpp"
#include "setsys/theorems.hpp"

namespace setsys {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const Natural& v);
/// "p/q" unless the value is an integer.
Json to_json(const ExactRational& v);
Json to_json(const SetFamily& fam);
Json to_json(const SubspaceFamily& fam);
Json to_json(const TheoremReport& rep);
Json to_json(const SearchResult& res);
Json to_json(const QSearchResult& res);
Json to_json(const CellOutcome& cell);
Json to_json(const PartitionResult& part);

std::string rational_string(const ExactRational& v);

/// Top-level document: schema_version, invocation, results, anomalies.
struct ReportDocument {
  Json invocation = Json::object();
  Json results = Json::array();
  std::vector<std::string> anomalies;

  Json to_json() const;
  std::string dump() const;
};

}  // namespace setsys
