#include "mlv/datum_io.hpp"

#include <fstream>
#include <sstream>

#include "mlv/error.hpp"
#include "mlv/symbols.hpp"

namespace mlv {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

long int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

template <class F, class Conv>
Matrix<F> matrix_from(const json& j, Conv conv) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "matrix must be an array of rows");
  std::vector<std::vector<F>> rows;
  for (auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::InvalidInput, "matrix row must be an array");
    std::vector<F> row;
    for (auto& x : r) row.push_back(conv(x));
    rows.push_back(std::move(row));
  }
  return Matrix<F>::from_rows(rows);
}

template <class F, class Conv>
json matrix_to(const Matrix<F>& m, Conv conv) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols; ++k) r.push_back(conv(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return rational_to_string(q);
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

void declare_symbols_from_json(const json& j) {
  if (!j.is_object() || !j.contains("symbols")) return;
  for (auto& s : j.at("symbols")) {
    std::string name = field(s, "name").get<std::string>();
    std::string conj = s.value("conj", "fixed");
    if (conj != "fixed" && conj != "negated") throw Error(ErrorCode::InvalidInput, "symbol conj must be 'fixed' or 'negated'");
    declare_symbol(name, conj == "fixed" ? Conjugation::Fixed : Conjugation::Negated);
  }
}

PeriodValue value_from_json(const json& j) {
  if (j.is_number_integer()) return PeriodValue(j.get<long>());
  if (j.is_string()) return PeriodValue::parse(j.get<std::string>());
  throw Error(ErrorCode::InvalidInput, "period value must be a string or an integer, got " + j.dump());
}

json value_to_json(const PeriodValue& v) {
  if (v.is_rational()) return rational_to_json(v.rational_value());
  return v.to_string();
}

mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::InvalidInput, "rational must be a string or an integer, got " + j.dump());
}

PMatrix pmatrix_from_json(const json& j) { return matrix_from<PeriodValue>(j, value_from_json); }
QMatrix qmatrix_from_json(const json& j) { return matrix_from<mpq_class>(j, rational_from_json); }
json matrix_to_json(const PMatrix& m) { return matrix_to(m, value_to_json); }
json matrix_to_json(const QMatrix& m) { return matrix_to(m, rational_to_json); }

VarietySpec variety_from_json(const json& j) {
  VarietySpec v;
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "affine") v.kind = VarietySpec::Kind::Affine;
  else if (kind == "projective") v.kind = VarietySpec::Kind::Projective;
  else throw Error(ErrorCode::InvalidInput, "kind must be 'affine' or 'projective'");
  long n = int_field(j, "ambientDim");
  if (n < 0) throw Error(ErrorCode::InvalidInput, "ambientDim must be nonnegative");
  v.ambient_dim = static_cast<unsigned>(n);
  if (j.contains("equations"))
    for (auto& e : j.at("equations")) v.equations.push_back(e.get<std::string>());
  v.parsed();
  return v;
}

json variety_to_json(const VarietySpec& v) {
  return json{{"kind", v.kind == VarietySpec::Kind::Affine ? "affine" : "projective"},
              {"ambientDim", v.ambient_dim},
              {"equations", v.equations}};
}

FrobModule frob_from_json(const json& j) {
  const json& m = j.contains("matrix") ? j.at("matrix") : field(j, "phi");
  FrobModule v{int_field(j, "p"), j.contains("f") ? static_cast<int>(int_field(j, "f")) : 1, qmatrix_from_json(m)};
  v.validate();
  return v;
}

json frob_to_json(const FrobModule& v) { return json{{"p", v.p}, {"f", v.f}, {"matrix", matrix_to_json(v.phi)}}; }

EulerFactor factor_from_json(const json& j) {
  std::vector<mpq_class> c;
  for (auto& x : field(j, "poly")) c.push_back(rational_from_json(x));
  EulerFactor e{int_field(j, "p"), j.contains("f") ? static_cast<int>(int_field(j, "f")) : 1, UPoly(c),
                j.contains("exponent") ? static_cast<int>(int_field(j, "exponent")) : 1};
  e.validate();
  return e;
}

json factor_to_json(const EulerFactor& e) {
  json poly = json::array();
  for (auto& c : e.poly.coeffs()) poly.push_back(rational_to_json(c));
  return json{{"p", e.p}, {"f", e.f}, {"poly", poly}, {"exponent", e.exponent}};
}

ZetaWord lobject_from_json(const json& j) {
  ZetaWord w;
  if (j.contains("euler")) {
    for (auto& f : j.at("euler")) w.extra.push_back(factor_from_json(f));
    return w;
  }
  const json& z = j.contains("zetaword") ? j.at("zetaword") : j;
  if (z.contains("shifts"))
    for (auto& s : z.at("shifts")) {
      long e = int_field(s, "e");
      if (e == 0) throw Error(ErrorCode::InvalidInput, "zeta word exponents must be nonzero");
      w.add_shift(int_field(s, "a"), static_cast<int>(e));
    }
  if (z.contains("extraFactors"))
    for (auto& f : z.at("extraFactors")) w.extra.push_back(factor_from_json(f));
  return w;
}

json lobject_to_json(const ZetaWord& w) {
  json extra = json::array();
  for (auto& f : w.extra) extra.push_back(factor_to_json(f));
  if (w.shifts.empty()) return json{{"euler", extra}};
  json shifts = json::array();
  for (auto& [a, e] : w.shifts) shifts.push_back(json{{"a", a}, {"e", e}});
  return json{{"zetaword", json{{"shifts", shifts}, {"extraFactors", extra}}}};
}

HodgeDatum hodge_from_json(const json& j) {
  declare_symbols_from_json(j);
  HodgeDatum h;
  long rank = int_field(j, "rank");
  if (rank < 0) throw Error(ErrorCode::InvalidInput, "rank must be nonnegative");
  h.rank = static_cast<std::size_t>(rank);
  if (j.contains("weights")) {
    for (auto& w : j.at("weights")) h.weights.emplace_back(w.at(0).get<int>(), w.at(1).get<std::size_t>());
  } else {
    h.weights = {{static_cast<int>(int_field(j, "weight")), h.rank}};
  }
  h.finf = qmatrix_from_json(field(j, "finf"));
  for (auto& f : field(j, "filtrationDims")) h.filtration[f.at(0).get<int>()] = f.at(1).get<std::size_t>();
  h.comparison = pmatrix_from_json(field(j, "comparison"));
  if (h.rank == 0) {
    h.finf = QMatrix(0, 0);
    h.comparison = PMatrix(0, 0);
  }
  h.validate();
  return h;
}

json hodge_to_json(const HodgeDatum& h) {
  json filt = json::array();
  for (auto& [p, d] : h.filtration) filt.push_back(json::array({p, d}));
  json out{{"rank", h.rank}};
  if (h.is_pure()) out["weight"] = h.weights.front().first;
  else {
    json ws = json::array();
    for (auto& [w, d] : h.weights) ws.push_back(json::array({w, d}));
    out["weights"] = ws;
  }
  out["finf"] = matrix_to_json(h.finf);
  out["filtrationDims"] = filt;
  out["comparison"] = matrix_to_json(h.comparison);
  return out;
}

QComplex qcomplex_from_json(const json& j) {
  QComplex c;
  if (j.is_null()) return c;
  if (!j.is_object() && !j.is_array()) throw Error(ErrorCode::InvalidInput, "complex must be an array or an object");
  if (j.is_array() || j.contains("degrees")) {
    const json& entries = j.is_array() ? j : j.at("degrees");
    for (auto& d : entries) {
      long dim = int_field(d, "dim");
      if (dim < 0) throw Error(ErrorCode::InvalidInput, "negative dimension");
      int deg = static_cast<int>(int_field(d, "degree"));
      if (c.dim(deg) > 0) throw Error(ErrorCode::InvalidInput, "degree " + std::to_string(deg) + " listed twice");
      c.set(deg, static_cast<std::size_t>(dim), d.contains("qgen") ? value_from_json(d.at("qgen")) : PeriodValue(1));
    }
    if (j.is_object() && j.contains("scale")) c.scale = value_from_json(j.at("scale"));
  } else {
    for (auto& [k, v] : j.items()) {
      if (!v.is_number_integer() || v.get<long>() < 0) throw Error(ErrorCode::InvalidInput, "dimension must be a nonnegative integer");
      c.set(std::stoi(k), v.get<std::size_t>(), PeriodValue(1));
    }
  }
  c.validate();
  return c;
}

json qcomplex_to_json(const QComplex& c) {
  json degs = json::array();
  for (int d : c.support()) degs.push_back(json{{"degree", d}, {"dim", c.dim(d)}, {"qgen", value_to_json(c.qgen(d))}});
  if (c.scale.is_one()) return degs;
  return json{{"degrees", degs}, {"scale", value_to_json(c.scale)}};
}

MotivicDatum datum_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "datum must be a JSON object");
  if (j.value("schema", std::string()) != kDatumSchema)
    throw Error(ErrorCode::InvalidInput, std::string("datum schema must be '") + kDatumSchema + "'");
  declare_symbols_from_json(j);
  MotivicDatum d;
  d.label = field(j, "label").get<std::string>();
  d.hM = qcomplex_from_json(j.value("hM", json()));
  d.hDM = qcomplex_from_json(j.value("hDM", json()));
  if (j.contains("hodge"))
    for (auto& h : j.at("hodge")) d.hodge.emplace_back(static_cast<int>(int_field(h, "degree")), hodge_from_json(field(h, "datum")));
  auto graded_matrices = [&](const char* key, std::map<int, PMatrix>& out) {
    if (!j.contains(key)) return;
    for (auto& r : j.at(key)) {
      int deg = static_cast<int>(int_field(r, "degree"));
      if (out.count(deg)) throw Error(ErrorCode::InvalidInput, std::string(key) + ": degree " + std::to_string(deg) + " listed twice");
      out[deg] = pmatrix_from_json(field(r, "matrix"));
    }
  };
  graded_matrices("regulators", d.regulators);
  graded_matrices("pairings", d.pairings);
  d.lobject = lobject_from_json(field(j, "lobject"));
  if (j.contains("chowOrKRanks"))
    for (auto& [name, table] : j.at("chowOrKRanks").items())
      for (auto& [i, rk] : table.items()) d.ranks[name][std::stoi(i)] = rk.get<long>();
  if (j.contains("s0")) d.s0 = int_field(j, "s0");
  d.validate();
  return d;
}

json datum_to_json(const MotivicDatum& d) {
  json hodge = json::array();
  for (auto& [i, h] : d.hodge) hodge.push_back(json{{"degree", i}, {"datum", hodge_to_json(h)}});
  auto graded = [](const std::map<int, PMatrix>& m) {
    json out = json::array();
    for (auto& [i, x] : m) out.push_back(json{{"degree", i}, {"matrix", matrix_to_json(x)}});
    return out;
  };
  json ranks = json::object();
  for (auto& [name, table] : d.ranks)
    for (auto& [i, rk] : table) ranks[name][std::to_string(i)] = rk;
  return json{{"schema", kDatumSchema},
              {"label", d.label},
              {"s0", d.s0},
              {"hM", qcomplex_to_json(d.hM)},
              {"hDM", qcomplex_to_json(d.hDM)},
              {"hodge", hodge},
              {"regulators", graded(d.regulators)},
              {"pairings", graded(d.pairings)},
              {"lobject", lobject_to_json(d.lobject)},
              {"chowOrKRanks", ranks}};
}

}  // namespace mlv
