#pragma once
#include <cstdint>
#include <vector>

namespace mlv {

// GF(p^k) with elements encoded as integers 0..q-1 (base-p digits are the
// coefficients in a polynomial basis). Multiplication goes through
// discrete log tables over a primitive element.
class FiniteField {
 public:
  FiniteField(long p, int k);

  long p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t size() const { return q_; }
  // Monic irreducible modulus, coefficients low to high (size k + 1).
  const std::vector<long>& modulus() const { return modulus_; }

  std::uint32_t from_integer(long n) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = log_[a] + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  std::uint32_t pow(std::uint32_t a, unsigned e) const;

 private:
  long p_;
  int k_;
  std::uint64_t q_;
  std::vector<long> modulus_;
  std::vector<std::uint32_t> exp_, log_;
};

// Lexicographically first monic irreducible polynomial of degree k over F_p.
std::vector<long> irreducible_polynomial(long p, int k);

}  // namespace mlv
