#include <doctest.h>

#include "helpers.hpp"
#include "mlv/catalog.hpp"
#include "mlv/error.hpp"
#include "mlv/finite_field.hpp"
#include "mlv/zeta.hpp"
#include "oracle/laurent.hpp"
#include "oracle/naive_count.hpp"

using mlv::EulerFactor;
using mlv::LaurentLeading;
using mlv::PeriodValue;
using mlv::UPoly;
using mlv::VarietySpec;
using th::V;

namespace {

VarietySpec projective(unsigned n, std::vector<std::string> eqs = {}) {
  return VarietySpec{VarietySpec::Kind::Projective, n, std::move(eqs)};
}
VarietySpec affine(unsigned n, std::vector<std::string> eqs = {}) {
  return VarietySpec{VarietySpec::Kind::Affine, n, std::move(eqs)};
}
std::vector<mpz_class> Z(std::initializer_list<long> xs) {
  std::vector<mpz_class> r;
  for (long x : xs) r.emplace_back(x);
  return r;
}
UPoly lin(long c) { return UPoly({1, -c}); }

const VarietySpec kCubic = projective(2, {"x1^2*x2 - x0^3 + x0*x2^2"});

}  // namespace

TEST_CASE("finite field arithmetic") {
  for (auto [p, k] : std::vector<std::pair<long, int>>{{2, 1}, {2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
    mlv::FiniteField F(p, k);
    CHECK(F.size() == static_cast<std::uint64_t>(std::pow(p, k)));
    // Every nonzero element satisfies x^(q-1) = 1 and has an inverse.
    for (std::uint32_t x = 1; x < F.size(); ++x) {
      CHECK(F.pow(x, static_cast<unsigned>(F.size() - 1)) == 1);
      bool has_inverse = false;
      for (std::uint32_t y = 1; y < F.size() && !has_inverse; ++y) has_inverse = F.mul(x, y) == 1;
      CHECK(has_inverse);
    }
    CHECK(F.from_integer(-1) == F.from_integer(p - 1));
  }
  CHECK(mlv::irreducible_polynomial(2, 2) == std::vector<long>{1, 1, 1});
  CHECK(mlv::irreducible_polynomial(3, 2) == std::vector<long>{1, 0, 1});
}

TEST_CASE("point_count examples") {
  CHECK(mlv::point_count(projective(2), 2, 1) == 7);
  CHECK(mlv::point_count(affine(1), 3, 2) == 9);
  CHECK(mlv::point_count(kCubic, 5, 1) == oracle::naive_count(kCubic, 5, 1));
  CHECK(mlv::point_count(kCubic, 5, 1) == 8);
}

TEST_CASE("point counts agree with the naive oracle") {
  std::vector<VarietySpec> vs = {
      kCubic,
      affine(2, {"x0^2 + x1^2 - 1"}),
      affine(3, {"x0*x1 - x2^2"}),
      affine(3, {"x0 - x1^2"}),
      projective(2, {"x0^2 + x1^2 + x2^2"}),
      projective(3, {"x0*x3 - x1*x2"}),
      projective(1),
      affine(2, {"x0^3 - x1", "x1 - x0"}),
  };
  for (auto& v : vs)
    for (long p : {2L, 3L, 5L})
      for (int k = 1; k <= 3; ++k) {
        std::uint64_t q = static_cast<std::uint64_t>(std::pow(p, k));
        std::uint64_t cost = 1;
        for (unsigned i = 0; i < v.num_vars(); ++i) cost *= q;
        if (cost > 300000) continue;
        CAPTURE(p);
        CAPTURE(k);
        CHECK(mlv::point_count(v, p, k) == oracle::naive_count(v, p, k));
      }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(mlv::point_count(kCubic, 5, 3, 100), mlv::Error);
  try {
    mlv::point_count(kCubic, 5, 3, 100);
  } catch (const mlv::Error& e) {
    CHECK(e.code() == mlv::ErrorCode::BudgetExceeded);
  }
  // Closed forms cost nothing.
  CHECK(mlv::point_count(projective(3), 5, 4, 1) == 1 + 625 + 625 * 625 + 625 * 625 * 625);
  // Free affine variables factor out.
  CHECK(mlv::point_count(affine(3, {"x0 - 1"}), 7, 2, 100) == 49 * 49);
}

TEST_CASE("polynomial parsing") {
  auto f = mlv::parse_int_poly("2*x0^2 - (x1 + 1)*(x1 - 1)", 2);
  mlv::IntPoly expected{{{2, 0}, 2}, {{0, 2}, -1}, {{0, 0}, 1}};
  CHECK(f == expected);
  CHECK_THROWS_AS(mlv::parse_int_poly("x2", 2), mlv::Error);
  CHECK_THROWS_AS(mlv::parse_int_poly("x0 +", 1), mlv::Error);
  CHECK_THROWS_AS(mlv::parse_int_poly("10000000000000000000*x0", 1), mlv::Error);
  CHECK_THROWS_AS(projective(2, {"x0^2 - x1"}).parsed(), mlv::Error);
}

TEST_CASE("zeta_from_counts examples") {
  auto p1 = mlv::zeta_from_counts(Z({3, 5, 9, 17}), 0, 2);
  CHECK(p1.num == UPoly::constant(1));
  CHECK(p1.den == lin(1) * lin(2));
  CHECK(p1.to_string() == "1/(1 - 3*t + 2*t^2)");
  auto pt = mlv::zeta_from_counts(Z({1, 1, 1}), 0, 1);
  CHECK(pt.den == lin(1));
  auto p2 = mlv::zeta_from_counts(mlv::point_counts(projective(2), 3, 5), 0, 3);
  CHECK(p2.den == lin(1) * lin(3) * lin(9));
}

TEST_CASE("zeta_from_counts reduces and validates") {
  // Over-large degrees still give the reduced fraction.
  auto p1 = mlv::zeta_from_counts(Z({3, 5, 9, 17, 33, 65, 129}), 2, 3);
  CHECK(p1.num == UPoly::constant(1));
  CHECK(p1.den == lin(1) * lin(2));
  try {
    mlv::zeta_from_counts(Z({1, 3}), 0, 1);
    FAIL("expected ValidationFailed");
  } catch (const mlv::Error& e) {
    CHECK(e.code() == mlv::ErrorCode::ValidationFailed);
  }
  try {
    mlv::zeta_from_counts(Z({0, 2, 0, 0}), 1, 1);
    FAIL("expected Inconsistent");
  } catch (const mlv::Error& e) {
    CHECK(e.code() == mlv::ErrorCode::Inconsistent);
  }
}

TEST_CASE("zeta series") {
  auto s = mlv::zeta_series(Z({3, 5, 9}));
  // 1/((1-t)(1-2t)) = 1 + 3t + 7t^2 + 15t^3
  CHECK(s == std::vector<mpq_class>{1, 3, 7, 15});
}

TEST_CASE("elliptic curve zeta over F_5") {
  auto z = mlv::elliptic_zeta(5, 3);
  CHECK(z.den == lin(1) * lin(5));
  CHECK(z.num.coeff(0) == 1);
  CHECK(z.num.coeff(2) == 5);
  mpq_class a = -z.num.coeff(1);
  CHECK(a == 6 - 8);  // N1 = 1 + q - a
  auto n = mlv::numerator_from_counts(mlv::point_counts(kCubic, 5, 3), lin(1) * lin(5), 2);
  CHECK(n == z.num);
}

TEST_CASE("numerator_from_counts validates extra counts") {
  CHECK(mlv::numerator_from_counts(Z({3, 5, 9}), lin(1) * lin(2), 0) == UPoly::constant(1));
  CHECK_THROWS_AS(mlv::numerator_from_counts(Z({3, 5, 10}), lin(1) * lin(2), 0), mlv::Error);
}

TEST_CASE("euler_leading examples") {
  EulerFactor a{2, 1, lin(1), 1}, b{2, 1, lin(2), 1};
  CHECK(mlv::euler_leading({a}, 0) == LaurentLeading{-1, V("1/log_2")});
  CHECK(mlv::euler_leading({b}, 0) == LaurentLeading{0, V("-1")});
  CHECK(mlv::euler_leading({EulerFactor{2, 1, lin(1) * lin(2), 1}}, 0) == LaurentLeading{-1, V("-1/log_2")});
  CHECK(mlv::euler_leading({a, b}, 0) == LaurentLeading{-1, V("-1/log_2")});
  // Residue degree f: 1 - 4^(-s) = s * 2 log_2 + ...
  CHECK(mlv::euler_leading({EulerFactor{2, 2, lin(1), 1}}, 0) == LaurentLeading{-1, V("1/(2*log_2)")});
  // Negative exponents are zeros.
  CHECK(mlv::euler_leading({EulerFactor{3, 1, lin(1), -2}}, 0) == LaurentLeading{2, V("log_3^2")});
}

TEST_CASE("euler_leading agrees with direct Taylor expansion") {
  std::vector<std::vector<EulerFactor>> cases = {
      {{2, 1, lin(1) * lin(2), 1}},
      {{3, 1, lin(1) * lin(3) * lin(9), 1}},
      {{5, 1, UPoly({1, 2, 5}), -1}, {5, 1, lin(1) * lin(5), 1}},
      {{2, 3, lin(8).pow(2), 1}, {2, 1, lin(1), -1}},
      {{7, 1, UPoly({1, mpq_class(-1, 7)}), 2}},
  };
  for (auto& fs : cases)
    for (long s0 = -2; s0 <= 3; ++s0) {
      CAPTURE(s0);
      CHECK(mlv::euler_leading(fs, s0) == oracle::taylor_leading(fs, s0));
    }
}

TEST_CASE("zetaword_leading examples") {
  auto word = [](long a) {
    mlv::ZetaWord w;
    w.add_shift(a, 1);
    return w;
  };
  CHECK(mlv::zetaword_leading(word(0), 0) == LaurentLeading{0, V("-1/2")});
  CHECK(mlv::zetaword_leading(word(1), 0) == LaurentLeading{-1, V("1")});
  CHECK(mlv::zetaword_leading(word(-1), 0) == LaurentLeading{0, V("-1/12")});
  CHECK(mlv::zetaword_leading(word(0), 2) == LaurentLeading{0, V("pi^2/6")});
  mlv::ZetaWord w = word(0);
  w.add_shift(0, -1);
  CHECK(w.shifts.empty());
  w.add_shift(2, 2);
  w.extra.push_back(EulerFactor{2, 1, lin(1), 1});
  CHECK(mlv::zetaword_leading(w, 0) == LaurentLeading{-1, V("pi^4/(36*log_2)")});
}

TEST_CASE("twist shift law for factors") {
  std::vector<EulerFactor> fs = {{2, 1, lin(1) * lin(2), 1}, {3, 2, UPoly({1, 3, 9}), -1}, {5, 1, lin(25), 2}};
  for (auto& f : fs)
    for (long n = -3; n <= 3; ++n)
      for (long s0 = -1; s0 <= 1; ++s0) CHECK(mlv::euler_leading({mlv::twist_factor(f, n)}, s0) == mlv::euler_leading({f}, s0 + n));
}

TEST_CASE("open-closed multiplicativity of the projective line") {
  for (long p : {2L, 3L, 5L}) {
    auto zp1 = mlv::zeta_from_counts(mlv::point_counts(projective(1), p, 4), 0, 2);
    auto za1 = mlv::zeta_from_counts(mlv::point_counts(affine(1), p, 3), 0, 1);
    auto zpt = mlv::zeta_from_counts(mlv::point_counts(affine(0), p, 3), 0, 1);
    CHECK(zp1.num == za1.num * zpt.num);
    CHECK(zp1.den == za1.den * zpt.den);
  }
}

TEST_CASE("zeta factors of a rational zeta function") {
  auto z = mlv::elliptic_zeta(3, 3);
  auto fs = mlv::zeta_factors(z, 3);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].exponent == -1);
  CHECK(fs[0].poly == z.num);
  CHECK(fs[1].exponent == 1);
  CHECK(fs[1].poly == z.den);
}
