#include "mlv/finite_field.hpp"

#include <stdexcept>

#include "mlv/error.hpp"
#include "mlv/symbols.hpp"

namespace mlv {

namespace {

using Vec = std::vector<long>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec poly_mod(Vec a, const Vec& m, long p) {
  trim(a);
  long inv_lead = 1;
  for (long x = 1; x < p; ++x)
    if ((m.back() * x) % p == 1) inv_lead = x;
  while (a.size() >= m.size()) {
    long c = (a.back() * inv_lead) % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

// Enumerates monic polynomials of degree d over F_p in lexicographic order of
// their low coefficients.
template <class Fn>
bool for_each_monic(long p, int d, Fn fn) {
  Vec c(static_cast<std::size_t>(d) + 1, 0);
  c[static_cast<std::size_t>(d)] = 1;
  while (true) {
    if (fn(c)) return true;
    int i = 0;
    while (i < d) {
      if (++c[static_cast<std::size_t>(i)] < p) break;
      c[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == d) return false;
  }
}

bool is_irreducible(const Vec& f, long p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    bool divisible = for_each_monic(p, d, [&](const Vec& g) { return poly_mod(f, g, p).empty(); });
    if (divisible) return false;
  }
  return true;
}

}  // namespace

std::vector<long> irreducible_polynomial(long p, int k) {
  if (!is_prime(p) || k < 1) throw Error(ErrorCode::InvalidInput, "field needs a prime p and k >= 1");
  Vec found;
  for_each_monic(p, k, [&](const Vec& f) {
    if (is_irreducible(f, p)) {
      found = f;
      return true;
    }
    return false;
  });
  return found;
}

FiniteField::FiniteField(long p, int k) : p_(p), k_(k), q_(1), modulus_(irreducible_polynomial(p, k)) {
  for (int i = 0; i < k; ++i) {
    q_ *= static_cast<std::uint64_t>(p);
    if (q_ > (1ull << 31)) throw Error(ErrorCode::BudgetExceeded, "field too large for table arithmetic");
  }
  // Multiplication by x on the digit encoding, used to search for a primitive element.
  auto to_vec = [&](std::uint64_t a) {
    Vec v(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i, a /= static_cast<std::uint64_t>(p)) v[static_cast<std::size_t>(i)] = static_cast<long>(a % static_cast<std::uint64_t>(p));
    return v;
  };
  auto to_int = [&](const Vec& v) {
    std::uint64_t a = 0;
    for (int i = k - 1; i >= 0; --i) a = a * static_cast<std::uint64_t>(p) + static_cast<std::uint64_t>(i < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(i)] : 0);
    return static_cast<std::uint32_t>(a);
  };
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Vec x = to_vec(a), y = to_vec(b), r(2 * static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    return to_int(poly_mod(r, modulus_, p));
  };
  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 2; g < q_ || q_ == 2; ++g) {
    std::uint32_t gen = q_ == 2 ? 1 : g;
    std::uint32_t x = 1;
    std::uint64_t order = 0;
    do {
      exp_[order] = x;
      x = slow_mul(x, gen);
      ++order;
    } while (x != 1 && order < q_);
    if (order == q_ - 1) {
      for (std::uint64_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
      return;
    }
    if (q_ == 2) break;
  }
  throw std::logic_error("no primitive element found");
}

std::uint32_t FiniteField::from_integer(long n) const {
  long r = ((n % p_) + p_) % p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) {
    std::uint32_t s = a + b;
    return s >= q_ ? s - static_cast<std::uint32_t>(q_) : s;
  }
  std::uint32_t r = 0, place = 1;
  const auto up = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < k_; ++i) {
    std::uint32_t d = (a % up + b % up) % up;
    r += d * place;
    a /= up;
    b /= up;
    place *= up;
  }
  return r;
}

std::uint32_t FiniteField::pow(std::uint32_t a, unsigned e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t s = (static_cast<std::uint64_t>(log_[a]) * e) % (q_ - 1);
  return exp_[s];
}

}  // namespace mlv
