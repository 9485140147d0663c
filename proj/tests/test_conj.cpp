#include <doctest.h>

#include "helpers.hpp"
#include "hodge_gen.hpp"
#include "mlv/catalog.hpp"
#include "mlv/conj.hpp"
#include "mlv/datum_io.hpp"
#include "mlv/error.hpp"
#include "oracle/random.hpp"

using mlv::FrobModule;
using mlv::MotivicDatum;
using mlv::UPoly;
using mlv::VerdictStatus;
using th::V;

namespace {

std::string detail(const mlv::Verdict& v, const std::string& key) {
  for (auto& [k, val] : v.details)
    if (k == key) return val;
  return "<missing>";
}

MotivicDatum fp_rank2() {
  MotivicDatum d;
  d.label = "rank2";
  d.hM.set(0, 2, V("1"));
  d.hDM.set(0, 2, V("1"));
  d.pairings[0] = th::pm({{"1", "0"}, {"0", "log_2"}});
  d.lobject.extra.push_back(mlv::EulerFactor{2, 1, UPoly({1, 1}), 1});
  return d;
}

MotivicDatum fp_file(const std::string& name) {
  return mlv::datum_from_json(mlv::load_json_file(th::fixture(name)));
}

}  // namespace

TEST_CASE("compact support examples") {
  MotivicDatum d;
  d.hM.set(0, 2, V("1"));
  auto cs = mlv::compact_support(d);
  CHECK(cs.hc.dim(0) == 2);
  CHECK(cs.hc.support() == std::vector<int>{0});

  auto t0 = mlv::compact_support(mlv::builtin_datum("tate_0"));
  CHECK(t0.hc.support().empty());

  auto t1 = mlv::compact_support(mlv::builtin_datum("tate_1"));
  CHECK(t1.hc.support() == std::vector<int>{2});
  CHECK(t1.hc.dim(2) == 1);
}

TEST_CASE("weak cohomology of a datum follows the two-step sequence") {
  for (auto name : {"tate_0", "tate_1", "spec_z_soule"}) {
    MotivicDatum d = mlv::builtin_datum(name);
    mlv::QComplex hw = mlv::weak_total(d);
    for (int i = -3; i <= 4; ++i) {
      std::size_t expected = 0;
      for (auto& [deg, h] : d.hodge) {
        auto w = mlv::weak_cohomology(h);
        if (deg == i - 1) expected += w.hw1.dim;
        if (deg == i) expected += w.hw0.dim;
      }
      CHECK(hw.dim(i) == expected);
    }
  }
  oracle::Gen g(3);
  for (int n = 0; n < 20; ++n) {
    MotivicDatum d;
    d.hodge = {{0, th::random_hodge(g)}, {1, th::random_hodge(g)}};
    mlv::QComplex hw = mlv::weak_total(d);
    auto w0 = mlv::weak_cohomology(d.hodge[0].second), w1 = mlv::weak_cohomology(d.hodge[1].second);
    CHECK(hw.dim(0) == w0.hw0.dim);
    CHECK(hw.dim(1) == w0.hw1.dim + w1.hw0.dim);
    CHECK(hw.dim(2) == w1.hw1.dim);
  }
}

TEST_CASE("pole order examples") {
  auto t1 = mlv::check_pole_order(mlv::builtin_datum("tate_1"));
  CHECK(t1.passed());
  CHECK(detail(t1, "order") == "-1");
  CHECK(detail(t1, "chi_DM") == "1");
  auto t0 = mlv::check_pole_order(mlv::builtin_datum("tate_0"));
  CHECK(t0.passed());
  CHECK(detail(t0, "order") == "0");
  CHECK(detail(t0, "chi_DM") == "0");
  auto p1 = mlv::check_pole_order(mlv::builtin_datum("fp_pn_m(2,1,0)"));
  CHECK(p1.passed());
  CHECK(detail(p1, "order") == "-1");
}

TEST_CASE("special value examples") {
  auto t0 = mlv::check_special_value(mlv::builtin_datum("tate_0"));
  CHECK(t0.passed());
  CHECK(detail(t0, "leading") == "-1/2");
  CHECK(V(detail(t0, "leading_times_det")).is_rational());
  auto t1 = mlv::check_special_value(mlv::builtin_datum("tate_1"));
  CHECK(t1.passed());
  CHECK(detail(t1, "leading") == "1");
  for (long p : {2L, 3L, 5L}) {
    auto pt = mlv::check_special_value(mlv::builtin_datum("fp_pn_m(" + std::to_string(p) + ",0,0)"));
    CHECK(pt.passed());
    CHECK(V(detail(pt, "leading")) == V("1/log_" + std::to_string(p)));
    CHECK(V(detail(pt, "det_pairing")) == V("log_" + std::to_string(p)));
  }
}

TEST_CASE("special value failures and indeterminacy") {
  MotivicDatum d = fp_rank2();
  // L = (1 + t)^(-1) at p = 2: L* = 1/2 but det pi = log_2.
  auto v = mlv::check_special_value(d);
  CHECK(v.status == VerdictStatus::Fail);
  CHECK_FALSE(v.witness.empty());

  d.pairings[0] = th::pm({{"1", "2"}, {"2", "4"}});
  auto degenerate = mlv::check_special_value(d);
  CHECK(degenerate.status == VerdictStatus::Fail);
  CHECK(degenerate.witness.find("perfect") != std::string::npos);

  MotivicDatum opaque;
  opaque.label = "zeta(s+3)";
  opaque.lobject.add_shift(3, 1);
  CHECK(mlv::check_pole_order(opaque).passed());
  CHECK(mlv::check_special_value(opaque).status == VerdictStatus::Indeterminate);
}

TEST_CASE("F_p value examples") {
  auto a = mlv::check_fp_value(mlv::builtin_datum("fp_pn_m(2,1,0)"));
  CHECK(a.passed());
  CHECK(V(detail(a, "leading")) == V("-1/log_2"));
  auto b = mlv::check_fp_value(mlv::builtin_datum("fp_pn_m(2,1,2)"));
  CHECK(b.passed());
  CHECK(V(detail(b, "leading")) == V("8/3"));
  CHECK(detail(b, "chi_DM") == "0");
  auto c = mlv::check_fp_value(mlv::builtin_datum("fp_pn_m(3,0,0)"));
  CHECK(c.passed());
  CHECK(V(detail(c, "leading")) == V("1/log_3"));
  auto bad = mlv::check_fp_value(fp_file("p1_fp2_corrupted.json"));
  CHECK_FALSE(bad.passed());
}

TEST_CASE("K-rank pole order examples") {
  auto z = mlv::check_soule(mlv::builtin_datum("spec_z_soule"));
  CHECK(z.passed());
  CHECK(detail(z, "order") == "-1");
  for (long p : {2L, 3L, 5L}) {
    std::string ps = std::to_string(p);
    CHECK(mlv::check_soule(mlv::builtin_datum("fp_pn_m(" + ps + ",0,0)")).passed());
    CHECK(mlv::check_soule(mlv::builtin_datum("fp_pn_m(" + ps + ",1,0)")).passed());
    CHECK(mlv::check_soule(mlv::builtin_datum("fp_pn_m(" + ps + ",1,1)")).passed());
  }
  try {
    mlv::check_soule(mlv::builtin_datum("tate_0"));
    FAIL("expected MissingRanks");
  } catch (const mlv::Error& e) {
    CHECK(e.code() == mlv::ErrorCode::MissingRanks);
  }
  MotivicDatum wrong = mlv::builtin_datum("spec_z_soule");
  wrong.ranks["kprime"][0] = 2;
  CHECK_FALSE(mlv::check_soule(wrong).passed());
}

TEST_CASE("triangle examples") {
  for (long p : {2L, 3L, 5L}) {
    std::string ps = std::to_string(p);
    CHECK(mlv::check_triangle(mlv::builtin_datum("a1_fp(" + ps + ")"), mlv::builtin_datum("fp_pn_m(" + ps + ",1,0)"),
                              mlv::builtin_datum("fp_pn_m(" + ps + ",0,0)"))
              .passed());
  }
  FrobModule v{3, 1, th::qm({{"2"}})}, w{3, 1, th::qm({{"1", "1"}, {"0", "1/3"}})};
  auto sum = mlv::frob_algebra(v, w, mlv::FrobOp::Sum);
  CHECK(mlv::check_triangle(mlv::frob_datum("v", v), mlv::frob_datum("v+w", sum), mlv::frob_datum("w", w)).passed());

  auto bad = mlv::check_triangle(mlv::builtin_datum("a1_fp(2)"), fp_file("p1_fp2_corrupted.json"), mlv::builtin_datum("fp_pn_m(2,0,0)"));
  CHECK(bad.status == VerdictStatus::Fail);
  CHECK_FALSE(bad.witness.empty());
  CHECK(mlv::check_triangle(mlv::builtin_datum("a1_fp(2)"), fp_file("p1_fp2.json"), mlv::builtin_datum("fp_pn_m(2,0,0)")).passed());

  try {
    mlv::check_triangle(mlv::builtin_datum("a1_fp(2)"), mlv::builtin_datum("fp_pn_m(3,1,0)"), mlv::builtin_datum("fp_pn_m(2,0,0)"));
    FAIL("expected NotATriangle");
  } catch (const mlv::Error& e) {
    CHECK(e.code() == mlv::ErrorCode::NotATriangle);
  }
}

TEST_CASE("catalog examples") {
  MotivicDatum t0 = mlv::builtin_datum("tate_0");
  CHECK(t0.lobject.shifts == std::map<long, int>{{0, 1}});
  CHECK(t0.lobject.extra.empty());
  MotivicDatum p1 = mlv::builtin_datum("fp_pn_m(2,1,0)");
  REQUIRE(p1.lobject.extra.size() == 1);
  CHECK(p1.lobject.extra[0].p == 2);
  CHECK(p1.lobject.extra[0].poly == UPoly({1, -1}) * UPoly({1, -2}));
  CHECK(p1.lobject.extra[0].exponent == 1);
  try {
    mlv::builtin_datum("unknown");
    FAIL("expected UnknownDatum");
  } catch (const mlv::Error& e) {
    CHECK(e.code() == mlv::ErrorCode::UnknownDatum);
  }
  CHECK_THROWS_AS(mlv::builtin_datum("fp_pn_m(4,1,0)"), mlv::Error);
  CHECK_THROWS_AS(mlv::builtin_datum("ell_fp(2)"), mlv::Error);
  CHECK(mlv::builtin_datum(" fp_pn_m( 2, 1, 0 ) ").label == "fp_pn_m(2,1,0)");
}

TEST_CASE("bundled tables") {
  CHECK(mlv::tate_cohomology_rank(0, 0) == 1);
  CHECK(mlv::tate_cohomology_rank(1, 1) == 0);
  CHECK(mlv::tate_cohomology_rank(1, 3) == 1);  // K_5 in weight 3
  CHECK(mlv::tate_cohomology_rank(0, 1) == 0);
  CHECK(mlv::chow_rank("P2", 1) == 1);
  CHECK(mlv::chow_rank("A1", 0) == 0);
  CHECK(mlv::chow_rank("A1", 1) == 1);
  CHECK(mlv::chow_rank("P2", 3) == 0);
  auto names = mlv::catalog_names();
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(std::count(names.begin(), names.end(), "tate_0") == 1);
  CHECK(std::count(names.begin(), names.end(), "spec_z_soule") == 1);
}

TEST_CASE("every bundled datum passes every applicable check") {
  for (auto& name : mlv::catalog_names()) {
    MotivicDatum d = mlv::builtin_datum(name);
    CHECK_NOTHROW(d.validate());
    for (auto& v : mlv::check_all(d)) {
      CAPTURE(name);
      CAPTURE(v.check);
      CHECK(v.passed());
    }
  }
}

TEST_CASE("Verdier shape on projective spaces") {
  // D(M(P^n)(m)) = M(P^n)(n - m) up to shift: the two pairings agree mod Q^x.
  for (long p : {2L, 3L, 5L})
    for (long n = 0; n <= 3; ++n)
      for (long m = -2; m <= n + 2; ++m) {
        auto name = [&](long mm) {
          return "fp_pn_m(" + std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(mm) + ")";
        };
        auto a = mlv::check_special_value(mlv::builtin_datum(name(m)));
        auto b = mlv::check_special_value(mlv::builtin_datum(name(n - m)));
        CHECK(mlv::pf_rational_ratio(V(detail(a, "det_pairing")), V(detail(b, "det_pairing"))).has_value());
      }
}

TEST_CASE("epsilon cross-check on F_p data") {
  // L(V, s) = a b^s L(V^dual, -s): the orders at 0 agree and
  // L*(V) = a (-1)^ord L*(V^dual).
  oracle::Gen g(17);
  for (int n = 0; n < 60; ++n) {
    long p = g.prime();
    std::size_t r = static_cast<std::size_t>(g.integer(1, 3));
    mlv::QMatrix phi(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      long e = g.integer(-2, 2);
      // Powers of p, including the eigenvalue 1 that gives both sides a pole at 0.
      mpq_class pe = 1;
      for (long k = 0; k < (e < 0 ? -e : e); ++k) pe *= p;
      phi(i, i) = e >= 0 ? pe : 1 / pe;
      if (g.coin()) phi(i, i) = g.nonzero_rational();
      for (std::size_t j = i + 1; j < r; ++j) phi(i, j) = g.rational();
    }
    FrobModule v{p, 1, phi};
    auto eps = mlv::epsilon_constants(v);
    auto lv = mlv::euler_leading({mlv::euler_poly(v)}, 0);
    auto ld = mlv::euler_leading({mlv::euler_poly(mlv::frob_dual(v))}, 0);
    CHECK(lv.order == ld.order);
    mlv::PeriodValue sign(lv.order % 2 == 0 ? 1 : -1);
    CHECK(lv.leading == mlv::PeriodValue(eps.a) * sign * ld.leading);
  }
}

TEST_CASE("datum validation") {
  MotivicDatum d = mlv::builtin_datum("tate_0");
  d.regulators[0] = th::pm({{"1", "2", "3"}});
  CHECK_THROWS_AS(d.validate(), mlv::Error);
  MotivicDatum e = fp_rank2();
  e.pairings[0] = th::pm({{"1"}});
  CHECK_THROWS_AS(e.validate(), mlv::Error);
}
