#include "mlv/report.hpp"

#include <algorithm>
#include <cstdio>

#include "mlv/error.hpp"

namespace mlv {

using ojson = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorCode::InvalidInput, "format must be text, json or csv");
}

Record& Record::add(const std::string& key, const ojson& value) {
  fields[key] = value;
  return *this;
}

Record& Record::add_value(const std::string& key, const PeriodValue& v, bool approx) {
  add(key, v.to_string());
  if (approx) {
    if (auto z = v.approx()) {
      char buf[96];
      if (z->imag() == 0.0) std::snprintf(buf, sizeof buf, "%.12g", z->real());
      else std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z->real(), z->imag());
      add(key + "_approx", std::string("~") + buf + " (non-normative)");
    }
  }
  return *this;
}

Record verdict_record(const Verdict& v) {
  Record r;
  r.add("check", v.check).add("label", v.label).add("status", verdict_name(v.status));
  for (auto& [k, x] : v.details) r.add(k, x);
  if (!v.witness.empty()) r.add("witness", v.witness);
  return r;
}

namespace {

std::string plain(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const std::vector<Record>& records, Format fmt, const std::string& kind) {
  std::string out;
  if (fmt == Format::Json) {
    ojson recs = ojson::array();
    for (auto& r : records) recs.push_back(r.fields);
    ojson doc{{"schema", kReportSchema}, {"kind", kind}, {"records", recs}};
    return doc.dump(2) + "\n";
  }
  if (fmt == Format::Csv) {
    std::vector<std::string> keys;
    for (auto& r : records)
      for (auto& [k, v] : r.fields.items())
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + csv_cell(keys[i]);
    out += "\n";
    for (auto& r : records) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) out += ",";
        if (r.fields.contains(keys[i])) out += csv_cell(plain(r.fields.at(keys[i])));
      }
      out += "\n";
    }
    return out;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out += "\n";
    for (auto& [k, v] : records[i].fields.items()) out += k + ": " + plain(v) + "\n";
  }
  return out;
}

}  // namespace mlv
