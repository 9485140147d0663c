#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mlv/linalg.hpp"
#include "mlv/qdet.hpp"
#include "mlv/special.hpp"

namespace mlv {

// Hodge-type datum with rational Betti and de Rham bases.
//   finf: involution on the Betti space.
//   filtration: (p, dim F^p) pairs; dim F^p is the value at the smallest
//     listed key >= p, or 0 above every key. The de Rham basis is adapted:
//     F^p is spanned by the first dim F^p basis vectors.
//   comparison: column j is de Rham basis vector j in Betti coordinates.
//   weights: (weight, dim) per pure layer; one entry when pure.
struct HodgeDatum {
  std::size_t rank = 0;
  std::vector<std::pair<int, std::size_t>> weights;
  QMatrix finf;
  std::map<int, std::size_t> filtration;
  PMatrix comparison;

  bool is_pure() const { return weights.size() == 1; }
  int weight() const;  // InvalidInput unless pure
  std::size_t filtration_dim(int p) const;
  // InvalidInput unless finf^2 = 1, filtration valid, comparison invertible
  // and finf * conj(comparison) = comparison.
  void validate() const;
};

// 1(n): rank 1, weight -2n, F concentrated in degree -n, finf = (-1)^n,
// comparison (2 pi i)^n.
HodgeDatum tate(long n);
HodgeDatum hodge_direct_sum(const HodgeDatum& a, const HodgeDatum& b);
// V^dual(1): finf -> -finf^T, dim F^p -> d - dim F^(-p), comparison ->
// 2 pi i * comparison^(-T) with the de Rham basis reversed, weight -> -w - 2.
HodgeDatum dual_twist(const HodgeDatum& h);

struct WeakCohomology {
  QSpace hw0, hw1;
  std::size_t alpha_rank = 0;
  // Period map in coordinates: source = Betti invariants (rational basis
  // `invariants`, columns in Betti coordinates) followed by the first
  // dim F^0 de Rham basis vectors; target = de Rham coordinates.
  PMatrix alpha;
  QMatrix invariants;
  PMatrix hw0_basis;  // columns in source coordinates
  PMatrix hw1_basis;  // columns in target coordinates, spanning a complement of the image
  QComplex complex;   // degrees 0 and 1, including the acyclic scale
};

WeakCohomology weak_cohomology(const HodgeDatum& h);

// <Hw0(h), Hw1(partner)> with value u^T (P_partner c) / (2 pi i) for the
// Betti part u of a kernel vector and a cokernel vector c. Throws
// DualityDegenerate unless square and invertible.
PMatrix weak_pairing(const HodgeDatum& h, const HodgeDatum& partner);

struct WeakDuality {
  HodgeDatum dual;
  PMatrix hw0_pairing;  // Hw0(h) x Hw1(dual)
  PMatrix hw1_pairing;  // Hw1(h) x Hw0(dual)
};
WeakDuality weak_duality(const HodgeDatum& h);

// Hodge numbers of a pure layer: hodge[p] = h^{p, w-p}; plus/minus are the
// finf eigenspace dimensions on h^{w/2, w/2}.
struct HodgeLayer {
  int weight = 0;
  std::map<int, std::size_t> hodge;
  std::size_t plus = 0, minus = 0;
};
std::vector<HodgeLayer> hodge_layers(const HodgeDatum& h);

enum class GammaKind { R, C };
// prod Gamma_kind(s + shift)^exponent.
struct GammaProduct {
  std::map<std::pair<GammaKind, long>, int> factors;
  void add(GammaKind kind, long shift, int exponent);
  std::string to_string() const;
};

GammaProduct arch_factor(const std::vector<HodgeLayer>& layers);
LaurentLeading gamma_leading(const GammaProduct& g, long s0);

}  // namespace mlv
