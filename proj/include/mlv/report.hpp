#pragma once
#include <json.hpp>
#include <string>
#include <vector>

#include "mlv/conj.hpp"
#include "mlv/period.hpp"

namespace mlv {

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);  // InvalidInput

inline constexpr const char* kReportSchema = "mlv-report/1";

// Flat record with ordered keys. Values are strings, integers or booleans.
struct Record {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();

  Record& add(const std::string& key, const nlohmann::ordered_json& value);
  // Adds the exact value and, when approx is set and the value is numeric,
  // a decimal hint under "<key>_approx".
  Record& add_value(const std::string& key, const PeriodValue& v, bool approx);
};

Record verdict_record(const Verdict& v);

// text: "key: value" lines, records separated by a blank line.
// json: {"schema": ..., "kind": kind, "records": [...]}.
// csv: header with the union of keys in first-seen order, one row per record.
std::string render(const std::vector<Record>& records, Format fmt, const std::string& kind);

}  // namespace mlv
