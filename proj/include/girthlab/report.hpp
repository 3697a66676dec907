#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "girthlab/audit.hpp"
#include "girthlab/classify.hpp"
#include "girthlab/girth.hpp"
#include "girthlab/search.hpp"

namespace girthlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

Json to_json(const ClassificationReport& r, const GirthProfile& profile);
Json to_json(const std::vector<BoundCheck>& checks);
Json to_json(const InequalityRecord& r);
/// details adds every case-A/case-B record and vertex set; otherwise only
/// the failing records of each pair are listed.
Json to_json(const AuditReport& r, bool details);
/// Wall time is left out unless with_time, so identical runs print identical bytes.
Json to_json(const SearchOutcome& o, bool with_time);
Json to_json(const NonexistenceVerdict& v);

/// Top-level report skeleton with tool version and the echoed command line.
Json report_header(const std::vector<std::string>& command, bool timestamps);

/// One CSV row per vertex: source,vertex,lambda,signature (signature entries
/// separated by spaces).
std::string profile_csv_header();
std::string profile_csv_rows(const std::string& source, const Graph& g, const GirthProfile& profile);

}  // namespace girthlab
