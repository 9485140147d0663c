#pragma once
#include <doctest.h>

#include <string>

#include "mlv/linalg.hpp"
#include "mlv/period.hpp"

namespace doctest {
template <>
struct StringMaker<mlv::PeriodValue> {
  static String convert(const mlv::PeriodValue& v) { return v.to_string().c_str(); }
};
}  // namespace doctest

namespace th {

inline mlv::PeriodValue V(const std::string& s) { return mlv::PeriodValue::parse(s); }
inline mpq_class Q(const std::string& s) { return mlv::parse_rational(s); }

inline mlv::PMatrix pm(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<mlv::PeriodValue>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (auto* x : row) r.back().push_back(V(x));
  }
  return mlv::PMatrix::from_rows(r);
}

inline mlv::QMatrix qm(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<mpq_class>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (auto* x : row) r.back().push_back(Q(x));
  }
  return mlv::QMatrix::from_rows(r);
}

inline std::string fixture(const std::string& name) { return std::string(MLV_FIXTURES) + "/" + name; }

}  // namespace th
