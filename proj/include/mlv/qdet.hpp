#pragma once
#include <map>
#include <vector>

#include "mlv/linalg.hpp"
#include "mlv/period.hpp"

namespace mlv {

// Real space with a Q-structure: qgen is the coordinate of the rational
// generator of the top exterior power relative to the working basis.
struct QSpace {
  std::size_t dim = 0;
  PeriodValue qgen = PeriodValue(1);
};

// Complex in cohomology form. `scale` is the coordinate of the Q-structure on
// the part of the determinant line not carried by any nonzero cohomology
// group (an acyclic complex with Q-structure is a real number); it is 1 for
// complexes read from data.
struct QComplex {
  std::map<int, QSpace> graded;
  PeriodValue scale = PeriodValue(1);

  std::size_t dim(int degree) const;
  PeriodValue qgen(int degree) const;
  // Sorted degrees with nonzero dimension.
  std::vector<int> support() const;
  void set(int degree, std::size_t dim, const PeriodValue& qgen);
  // Throws InvalidInput when a qgen is zero or not real, or dim 0 carries qgen != 1.
  void validate() const;
};

// Degreewise matrices over the real subfield; maps[i] has shape
// target.dim(i) x source.dim(i). Missing degrees are zero maps.
struct GradedMap {
  QComplex source, target;
  std::map<int, PMatrix> maps;

  PMatrix at(int degree) const;
  void validate() const;  // ShapeMismatch
};

// Maps of a long exact sequence ... -> a^i -u-> b^i -v-> c^i -w-> a^{i+1} -> ...
struct TriangleWitness {
  std::map<int, PMatrix> u, v, w;
};

// Bases of the cone cohomology: per degree i, the cokernel part of f_i as
// vectors in target^i coordinates, followed by the kernel part of f_{i+1} as
// vectors in source^{i+1} coordinates.
struct ConeSplitting {
  std::map<int, PMatrix> coker_basis;  // columns, target^i coordinates
  std::map<int, PMatrix> ker_basis;    // columns, source^{i+1} coordinates
};

struct ConeResult {
  QComplex cone;
  ConeSplitting splitting;
  TriangleWitness witness;  // source -> target -> cone
};

PeriodValue det_total(const QComplex& c);
PeriodValue det_of_map(const PMatrix& m, const PeriodValue& qgen_source, const PeriodValue& qgen_target);
PeriodValue det_of_map(const GradedMap& f);
ConeResult cone_with_splitting(const GradedMap& f);
QComplex cone_qstructure(const GradedMap& f);
bool is_multiplicative(const QComplex& a, const QComplex& b, const QComplex& c, const TriangleWitness& witness);
// Witness for a degreewise extension 0 -> a^i -> b^i -> c^i -> 0.
TriangleWitness extension_witness(const std::map<int, PMatrix>& inclusions, const std::map<int, PMatrix>& projections);
PeriodValue det_pairing(const QComplex& a, const QComplex& b, const std::map<int, PMatrix>& pairings);

// Torsion of an exact sequence E^0 -> ... -> E^N in the standard bases,
// with factor exponents (-1)^(offset + j + 1). Throws ShapeMismatch when the
// sequence is not exact.
PeriodValue exact_sequence_torsion(const std::vector<std::size_t>& dims, const std::vector<PMatrix>& maps, int offset);

// c[k]^i = c^{i+k}.
QComplex shift(const QComplex& c, int k);
QComplex reflect_degrees(const QComplex& c);
QComplex direct_sum(const QComplex& a, const QComplex& b);
int euler_characteristic(const QComplex& c);

}  // namespace mlv
