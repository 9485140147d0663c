#pragma once
#include <string>
#include <vector>

#include "mlv/conj.hpp"
#include "mlv/datum_io.hpp"

namespace mlv {

// Bundled data tables by file stem (borel_ranks, chow_ranks, curves).
const json& bundled_table(const std::string& stem);

// rank of H^i(Spec Z, Q(j)) = rank K_{2j-i}(Z)^{(j)} from the bundled Borel table.
std::size_t tate_cohomology_rank(int i, int j);
// rank CH_k of a bundled variety ("P2", "A1", "E", ...); 0 outside the table.
std::size_t chow_rank(const std::string& variety, int k);

// Names: tate_0, tate_1, spec_z_soule, fp_pn_m(p,n,m), a1_fp(p), ell_fp(p).
// Throws UnknownDatum.
MotivicDatum builtin_datum(const std::string& name);
// Names run by the suite, sorted.
std::vector<std::string> catalog_names();

// Datum with L = det(1 - phi t)^(-1) at the module's place and no Hodge
// realization; hM = hDM = multiplicity of the pole at s0 = 0 in degree 0.
MotivicDatum frob_datum(const std::string& label, const FrobModule& v);

// Counts of the bundled cubic E over F_p for k = 1..m and its zeta function
// with denominator (1 - t)(1 - p t), validated against every count.
RationalZeta elliptic_zeta(long p, int m);

}  // namespace mlv
