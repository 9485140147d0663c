#pragma once
// Weak cohomology dimensions of 1(n) by bookkeeping: the source of the period
// map has the Betti invariants (n even) and F^0 (n <= 0); the target is a
// line that every nonzero source vector hits.
#include <cstddef>
#include <utility>

namespace oracle {

inline std::pair<std::size_t, std::size_t> tate_weak_dims(long n) {
  std::size_t source = (n % 2 == 0 ? 1 : 0) + (n <= 0 ? 1 : 0);
  std::size_t rank = source > 0 ? 1 : 0;
  return {source - rank, 1 - rank};
}

}  // namespace oracle
