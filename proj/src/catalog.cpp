#include "mlv/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <regex>

#include "mlv/catalog_data.hpp"
#include "mlv/error.hpp"
#include "mlv/symbols.hpp"

namespace mlv {

const json& bundled_table(const std::string& stem) {
  static std::mutex mu;
  static std::map<std::string, json> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(stem);
  if (it != cache.end()) return it->second;
  for (auto& [name, body] : data::all)
    if (name == stem) return cache[stem] = json::parse(body);
  throw Error(ErrorCode::UnknownDatum, "no bundled table '" + stem + "'");
}

std::size_t tate_cohomology_rank(int i, int j) {
  const json& t = bundled_table("borel_ranks");
  int k = 2 * j - i;
  if (k < 0) return 0;
  if (k > t.at("maxIndex").get<int>()) throw Error(ErrorCode::MissingRanks, "K_" + std::to_string(k) + "(Z) is beyond the bundled table");
  for (auto& g : t.at("groups"))
    if (g.at("i").get<int>() == k && g.at("weight").get<int>() == j) return g.at("rank").get<std::size_t>();
  return 0;
}

std::size_t chow_rank(const std::string& variety, int k) {
  const json& v = bundled_table("chow_ranks").at("varieties");
  if (!v.contains(variety)) throw Error(ErrorCode::MissingRanks, "no Chow ranks for '" + variety + "'");
  const json& ranks = v.at(variety);
  if (k < 0 || static_cast<std::size_t>(k) >= ranks.size()) return 0;
  return ranks.at(static_cast<std::size_t>(k)).get<std::size_t>();
}

namespace {

QComplex tate_cohomology(int j, int shift_by) {
  // Motivic cohomology of 1(j)[shift_by] over Z: degree i holds H^{i+shift_by}(Z, Q(j)).
  QComplex c;
  for (int i = -2 * j - 30; i <= 2 * j + 30; ++i) {
    int deg = i + shift_by;
    int k = 2 * j - deg;
    if (k < 0 || k > bundled_table("borel_ranks").at("maxIndex").get<int>()) continue;
    std::size_t r = tate_cohomology_rank(deg, j);
    if (r) c.set(i, r, PeriodValue(1));
  }
  return c;
}

MotivicDatum tate_datum(int j) {
  MotivicDatum d;
  d.label = "tate_" + std::to_string(j);
  d.hM = tate_cohomology(j, 0);
  d.hDM = tate_cohomology(1 - j, 2);  // D(1(j)) = 1(1-j)[2]
  d.hodge = {{0, tate(j)}};
  d.lobject.add_shift(j, 1);
  WeakCohomology w = weak_cohomology(tate(j));
  if (j == 0) {
    // The unit 1 in K_0(Z) maps to the class with Betti and de Rham parts both 1,
    // written in the chosen Hw0 basis.
    PMatrix target = PMatrix::from_rows({{PeriodValue(1)}, {PeriodValue(1)}});
    auto e = row_reduce(w.hw0_basis.hcat(target));
    if (e.pivot_cols.size() != 1 || e.pivot_cols[0] != 0) throw std::logic_error("unit class is not in Hw0(1(0))");
    d.regulators[0] = PMatrix::from_rows({{e.rref(0, 1)}});
  } else if (j == 1) {
    // H_c^2 = Hw1(1(1)) paired with H^{-2}(D) = H^0(Z, Q(0)), whose regulator
    // image is the Hw0 generator of the dual twist 1(0).
    d.pairings[2] = weak_duality(tate(1)).hw1_pairing;
  } else {
    throw Error(ErrorCode::UnknownDatum, "tate_" + std::to_string(j) + " is not bundled");
  }
  return d;
}

FrobModule projective_space_module(long p, int n) {
  QMatrix phi(static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
  mpq_class x = 1;
  for (int i = 0; i <= n; ++i, x *= p) phi(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = x;
  return FrobModule{p, 1, phi};
}

void set_chow_data(MotivicDatum& d, long p, std::size_t chi) {
  if (chi) {
    d.hM.set(0, chi, PeriodValue(1));
    d.hDM.set(0, chi, PeriodValue(1));
    PMatrix pairing(chi, chi);
    for (std::size_t i = 0; i < chi; ++i) pairing(i, i) = PeriodValue::symbol(sym_log(p));
    d.pairings[0] = pairing;
  }
  d.ranks["kprime"][0] = static_cast<long>(chi);
}

MotivicDatum fp_pn_m(long p, int n, int m) {
  if (!is_prime(p)) throw Error(ErrorCode::UnknownDatum, "fp_pn_m needs a prime p");
  if (n < 0 || n > 6) throw Error(ErrorCode::UnknownDatum, "fp_pn_m is bundled for 0 <= n <= 6");
  MotivicDatum d;
  d.label = "fp_pn_m(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(m) + ")";
  d.lobject.extra.push_back(euler_poly(twist(projective_space_module(p, n), m)));
  set_chow_data(d, p, chow_rank("P" + std::to_string(n), m));
  return d;
}

MotivicDatum a1_fp(long p) {
  if (!is_prime(p)) throw Error(ErrorCode::UnknownDatum, "a1_fp needs a prime p");
  MotivicDatum d;
  d.label = "a1_fp(" + std::to_string(p) + ")";
  d.lobject.extra.push_back(euler_poly(FrobModule{p, 1, QMatrix::from_rows({{mpq_class(p)}})}));
  set_chow_data(d, p, chow_rank("A1", 0));
  return d;
}

MotivicDatum ell_fp(long p) {
  MotivicDatum d;
  d.label = "ell_fp(" + std::to_string(p) + ")";
  RationalZeta z = elliptic_zeta(p, 3);
  d.lobject.extra = zeta_factors(z, p);
  set_chow_data(d, p, chow_rank("E", 0));
  return d;
}

std::vector<long> parse_args(const std::string& s) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    out.push_back(std::stol(s.substr(pos, end - pos)));
    pos = end + 1;
  }
  return out;
}

}  // namespace

RationalZeta elliptic_zeta(long p, int m) {
  const json& curve = bundled_table("curves").at("curves").at("E");
  for (auto& bad : curve.at("badPrimes"))
    if (bad.get<long>() == p) throw Error(ErrorCode::UnknownDatum, "the bundled cubic has bad reduction at " + std::to_string(p));
  VarietySpec v = variety_from_json(curve.at("variety"));
  std::vector<mpz_class> counts = point_counts(v, p, m);
  UPoly den = UPoly::linear_factor(1) * UPoly::linear_factor(p);
  return RationalZeta{numerator_from_counts(counts, den, 2), den};
}

MotivicDatum builtin_datum(const std::string& name) {
  static const std::regex call(R"(^\s*([a-z0-9_]+)\s*\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\s*$)");
  std::smatch mt;
  if (name == "tate_0") return tate_datum(0);
  if (name == "tate_1") return tate_datum(1);
  if (name == "spec_z_soule") {
    // zeta(s) at s = 1, i.e. the L-function of 1(1) at 0, with K'_i(Z) in weight 1.
    MotivicDatum d = tate_datum(1);
    d.label = "spec_z_soule";
    for (int i = 0; i <= 21; ++i) {
      std::size_t r = tate_cohomology_rank(-i, 0);  // K_i(Z)^{(0)}
      if (r) d.ranks["kprime"][i] = static_cast<long>(r);
    }
    return d;
  }
  std::string compact = name;
  compact.erase(std::remove_if(compact.begin(), compact.end(), ::isspace), compact.end());
  if (std::regex_match(compact, mt, call)) {
    std::string fn = mt[1];
    std::vector<long> a = parse_args(mt[2]);
    if (fn == "fp_pn_m" && a.size() == 3) return fp_pn_m(a[0], static_cast<int>(a[1]), static_cast<int>(a[2]));
    if (fn == "a1_fp" && a.size() == 1) return a1_fp(a[0]);
    if (fn == "ell_fp" && a.size() == 1) return ell_fp(a[0]);
  }
  throw Error(ErrorCode::UnknownDatum, "no bundled datum named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names{"tate_0", "tate_1", "spec_z_soule", "ell_fp(3)", "ell_fp(5)"};
  for (long p : {2, 3, 5}) {
    names.push_back("a1_fp(" + std::to_string(p) + ")");
    for (int n = 0; n <= 3; ++n)
      for (int m = -2; m <= n + 2; ++m)
        names.push_back("fp_pn_m(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(m) + ")");
  }
  std::sort(names.begin(), names.end());
  return names;
}

MotivicDatum frob_datum(const std::string& label, const FrobModule& v) {
  MotivicDatum d;
  d.label = label;
  d.lobject.extra.push_back(euler_poly(v));
  int mult = -euler_leading(d.lobject.extra, 0).order;
  if (mult > 0) {
    auto n = static_cast<std::size_t>(mult);
    d.hM.set(0, n, PeriodValue(1));
    d.hDM.set(0, n, PeriodValue(1));
    PMatrix pairing(n, n);
    for (std::size_t i = 0; i < n; ++i) pairing(i, i) = PeriodValue(v.f) * PeriodValue::symbol(sym_log(v.p));
    d.pairings[0] = pairing;
  }
  return d;
}

}  // namespace mlv
