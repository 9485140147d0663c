#include "mlv/conj.hpp"

#include <algorithm>
#include <set>

#include "mlv/error.hpp"
#include "mlv/symbols.hpp"

namespace mlv {

const char* verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

void MotivicDatum::validate() const {
  hM.validate();
  hDM.validate();
  for (auto& [i, h] : hodge) h.validate();
  if (hodge.empty() && !regulators.empty())
    for (auto& [i, m] : regulators)
      if (m.rows > 0 || m.cols > 0) throw Error(ErrorCode::InvalidInput, "regulators given without a Hodge realization");
  std::set<int> seen;
  for (auto& [i, h] : hodge)
    if (!seen.insert(i).second) throw Error(ErrorCode::InvalidInput, "two Hodge data in degree " + std::to_string(i));
  if (!hodge.empty()) {
    QComplex hw = weak_total(*this);
    for (auto& [i, m] : regulators) {
      if (m.rows == 0 && m.cols == 0) continue;
      if (m.rows != hw.dim(i) || m.cols != hM.dim(i))
        throw Error(ErrorCode::ShapeMismatch, "regulator in degree " + std::to_string(i) + " must be " +
                                                  std::to_string(hw.dim(i)) + "x" + std::to_string(hM.dim(i)));
    }
  }
  for (auto& [i, m] : pairings)
    if (m.rows != m.cols || m.cols != hDM.dim(-i))
      throw Error(ErrorCode::ShapeMismatch, "pairing in degree " + std::to_string(i) + " must be square of size dim hDM^" +
                                                std::to_string(-i) + " = " + std::to_string(hDM.dim(-i)));
  for (auto& [a, e] : lobject.shifts)
    if (e == 0) throw Error(ErrorCode::InvalidInput, "zero exponent in zeta word");
  for (auto& f : lobject.extra) f.validate();
}

QComplex weak_total(const MotivicDatum& d) {
  std::vector<std::pair<int, HodgeDatum>> sorted = d.hodge;
  std::sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) { return x.first < y.first; });
  QComplex total;
  for (auto& [i, h] : sorted) total = direct_sum(total, shift(weak_cohomology(h).complex, -i));
  return total;
}

CompactSupport compact_support(const MotivicDatum& d) {
  CompactSupport out;
  out.hw = weak_total(d);
  GradedMap rho;
  rho.source = d.hM;
  rho.target = out.hw;
  for (auto& [i, m] : d.regulators) {
    if (m.rows == 0 || m.cols == 0) {
      // Empty matrices stand for zero maps of whatever shape the degree needs.
      if (out.hw.dim(i) > 0 && d.hM.dim(i) > 0)
        throw Error(ErrorCode::ShapeMismatch, "regulator in degree " + std::to_string(i) + " is empty but should be " +
                                                  std::to_string(out.hw.dim(i)) + "x" + std::to_string(d.hM.dim(i)));
      continue;
    }
    rho.maps[i] = m;
  }
  rho.validate();
  out.cone = cone_with_splitting(rho);
  out.hc = shift(out.cone.cone, -1);
  return out;
}

namespace {

Verdict make(const std::string& check, const MotivicDatum& d) {
  Verdict v;
  v.check = check;
  v.label = d.label;
  return v;
}

void fail(Verdict& v, const std::string& witness) {
  v.status = VerdictStatus::Fail;
  v.witness = witness;
}

std::set<long> primes_of(const ZetaWord& w) {
  std::set<long> ps;
  for (auto& f : w.extra) ps.insert(f.p);
  return ps;
}

}  // namespace

Verdict check_pole_order(const MotivicDatum& d) {
  Verdict v = make("pole_order", d);
  LaurentLeading l = zetaword_leading(d.lobject, d.s0);
  int chi = euler_characteristic(d.hDM);
  v.details = {{"s0", std::to_string(d.s0)}, {"order", std::to_string(l.order)}, {"chi_DM", std::to_string(chi)}};
  if (l.order != -chi)
    fail(v, "order " + std::to_string(l.order) + " != -chi(DM) = " + std::to_string(-chi));
  return v;
}

Verdict check_special_value(const MotivicDatum& d) {
  Verdict v = make("special_value", d);
  LaurentLeading l = zetaword_leading(d.lobject, d.s0);
  v.details.emplace_back("leading", l.leading.to_string());
  CompactSupport cs = compact_support(d);
  PeriodValue det;
  try {
    det = det_pairing(cs.hc, d.hDM, d.pairings);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PairingDegenerate) throw;
    fail(v, std::string("perfectness fails: ") + e.what());
    return v;
  }
  PeriodValue prod = l.leading * det;
  v.details.emplace_back("det_pairing", det.to_string());
  v.details.emplace_back("leading_times_det", prod.to_string());
  if (prod.involves_opaque_symbol()) {
    v.status = VerdictStatus::Indeterminate;
    v.witness = "comparison depends on constants of unknown rationality";
    return v;
  }
  auto r = pf_rational_ratio(prod, PeriodValue(1));
  if (!r || *r == 0) fail(v, "L* * det(pi) = " + prod.to_string() + " is not a nonzero rational");
  return v;
}

Verdict check_fp_value(const MotivicDatum& d) {
  Verdict v = make("fp_value", d);
  if (!d.hodge.empty()) throw Error(ErrorCode::InvalidInput, "F_p check needs a datum without Hodge realization");
  std::set<long> ps = primes_of(d.lobject);
  if (!d.lobject.shifts.empty() || ps.size() != 1)
    throw Error(ErrorCode::InvalidInput, "F_p check needs Euler factors at exactly one prime");
  long p = *ps.begin();
  LaurentLeading l = zetaword_leading(d.lobject, d.s0);
  int chi = euler_characteristic(d.hDM);
  PeriodValue expected = PeriodValue::symbol(sym_log(p)).pow(-chi);
  v.details = {{"p", std::to_string(p)},
               {"order", std::to_string(l.order)},
               {"chi_DM", std::to_string(chi)},
               {"leading", l.leading.to_string()},
               {"expected_mod_Qx", expected.to_string()}};
  auto r = pf_rational_ratio(l.leading, expected);
  if (l.order != -chi) fail(v, "order " + std::to_string(l.order) + " != -chi(DM) = " + std::to_string(-chi));
  else if (!r || *r == 0) fail(v, "L* = " + l.leading.to_string() + " is not a rational multiple of " + expected.to_string());
  else v.details.emplace_back("rational_factor", rational_to_string(*r));
  return v;
}

Verdict check_soule(const MotivicDatum& d) {
  Verdict v = make("soule", d);
  auto it = d.ranks.find("kprime");
  if (it == d.ranks.end()) throw Error(ErrorCode::MissingRanks, "datum '" + d.label + "' has no kprime rank table");
  long sum = 0;
  for (auto& [i, rk] : it->second) {
    if (i < 0) throw Error(ErrorCode::InvalidInput, "negative K-theory index");
    sum += (i % 2 == 0 ? -1 : 1) * rk;
  }
  LaurentLeading l = zetaword_leading(d.lobject, d.s0);
  v.details = {{"s0", std::to_string(d.s0)}, {"order", std::to_string(l.order)}, {"rank_sum", std::to_string(sum)}};
  if (l.order != sum) fail(v, "order " + std::to_string(l.order) + " != alternating rank sum " + std::to_string(sum));
  return v;
}

Verdict check_triangle(const MotivicDatum& d1, const MotivicDatum& d2, const MotivicDatum& d3) {
  Verdict v;
  v.check = "triangle";
  v.label = d1.label + " -> " + d2.label + " -> " + d3.label;
  if (d1.s0 != d2.s0 || d2.s0 != d3.s0) throw Error(ErrorCode::NotATriangle, "evaluation points differ");
  std::set<long> p1 = primes_of(d1.lobject), p2 = primes_of(d2.lobject), p3 = primes_of(d3.lobject);
  std::set<long> outer = p1;
  outer.insert(p3.begin(), p3.end());
  if (outer != p2) throw Error(ErrorCode::NotATriangle, "middle term is supported at different primes than the outer terms");
  bool words1 = !d1.lobject.shifts.empty() || !d3.lobject.shifts.empty();
  if (words1 != !d2.lobject.shifts.empty()) throw Error(ErrorCode::NotATriangle, "zeta factors appear on one side only");
  LaurentLeading l1 = zetaword_leading(d1.lobject, d1.s0);
  LaurentLeading l2 = zetaword_leading(d2.lobject, d2.s0);
  LaurentLeading l3 = zetaword_leading(d3.lobject, d3.s0);
  LaurentLeading outer_prod = l1 * l3;
  v.details = {{"order_outer", std::to_string(l1.order) + " + " + std::to_string(l3.order)},
               {"order_middle", std::to_string(l2.order)},
               {"leading_outer", outer_prod.leading.to_string()},
               {"leading_middle", l2.leading.to_string()}};
  if (outer_prod.order != l2.order)
    fail(v, "orders " + std::to_string(l1.order) + " + " + std::to_string(l3.order) + " != " + std::to_string(l2.order));
  else if (!(outer_prod.leading == l2.leading))
    fail(v, "leadings " + outer_prod.leading.to_string() + " != " + l2.leading.to_string());
  return v;
}

std::vector<Verdict> check_all(const MotivicDatum& d) {
  std::vector<Verdict> out{check_pole_order(d), check_special_value(d)};
  if (d.hodge.empty() && d.lobject.shifts.empty() && primes_of(d.lobject).size() == 1) out.push_back(check_fp_value(d));
  if (d.ranks.count("kprime")) out.push_back(check_soule(d));
  return out;
}

}  // namespace mlv
