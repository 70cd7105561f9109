#pragma once

#include <string>

#include <json.hpp>

#include "theta/bijections.hpp"
#include "theta/checks.hpp"
#include "theta/constraint.hpp"
#include "theta/series.hpp"

namespace theta {

/// {"order": N, "coeffs": ["1","-1",...]} — decimal strings keep the format
/// free of integer-width assumptions.
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Partitions serialize as descending arrays of integers.
nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Constraint& c);
Constraint constraint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartitionPair& p);
nlohmann::json to_json(const MapTrace& t);

nlohmann::json to_json(const CheckReport& r);
std::string report_csv_header();
std::string report_csv_line(const CheckReport& r);

}  // namespace theta
