#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mlv/hodge.hpp"
#include "mlv/qdet.hpp"
#include "mlv/zeta.hpp"

namespace mlv {

// Motivic cohomology data of a motive M over Z (or supported at a prime)
// together with its realizations and L-function.
//   hodge: realization H^i(M) per cohomological degree i.
//   regulators[i]: hM^i -> Hw^i(M), where the basis of Hw^i(M) is the
//     Hw1 basis of H^(i-1) followed by the Hw0 basis of H^i.
//   pairings[i]: matrix of the pairing H_c^i(M) x hDM^(-i), rows indexed by
//     the H_c^i basis.
//   ranks: named integer tables, e.g. "kprime" (i -> rank K'_i in the
//     relevant weight) for the Soule check.
struct MotivicDatum {
  std::string label;
  QComplex hM, hDM;
  std::vector<std::pair<int, HodgeDatum>> hodge;
  std::map<int, PMatrix> regulators;
  std::map<int, PMatrix> pairings;
  ZetaWord lobject;
  std::map<std::string, std::map<int, long>> ranks;
  long s0 = 0;

  // ShapeMismatch or InvalidInput on inconsistent data.
  void validate() const;
};

// Weak cohomology of the realization, sum over i of RGamma_w(H^i)[-i].
QComplex weak_total(const MotivicDatum& d);

struct CompactSupport {
  QComplex hc;
  ConeResult cone;  // cone of the regulator; hc is this cone shifted by -1
  QComplex hw;
};
CompactSupport compact_support(const MotivicDatum& d);

enum class VerdictStatus { Pass, Fail, Indeterminate };
const char* verdict_name(VerdictStatus s);

struct Verdict {
  std::string check;
  std::string label;
  VerdictStatus status = VerdictStatus::Pass;
  // Computed quantities (orders, leading terms, determinants) as exact strings.
  std::vector<std::pair<std::string, std::string>> details;
  std::string witness;  // set on failure

  bool passed() const { return status == VerdictStatus::Pass; }
};

Verdict check_pole_order(const MotivicDatum& d);
Verdict check_special_value(const MotivicDatum& d);
Verdict check_fp_value(const MotivicDatum& d);
Verdict check_soule(const MotivicDatum& d);
// d2 is the middle term: orders add and leadings multiply.
Verdict check_triangle(const MotivicDatum& d1, const MotivicDatum& d2, const MotivicDatum& d3);

// Checks applicable to a datum: pole order and special value always, the F_p
// value check for single-prime data without Hodge realization, Soule when a
// "kprime" table is present.
std::vector<Verdict> check_all(const MotivicDatum& d);

}  // namespace mlv
