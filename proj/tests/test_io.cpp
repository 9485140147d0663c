#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "mlv/catalog.hpp"
#include "mlv/datum_io.hpp"
#include "mlv/error.hpp"
#include "mlv/report.hpp"

using mlv::json;
using th::V;

namespace {

mlv::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const mlv::Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return mlv::ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("values and matrices") {
  CHECK(mlv::value_from_json(json(3)) == V("3"));
  CHECK(mlv::value_from_json(json("pi^2/6")) == V("pi^2/6"));
  CHECK(mlv::value_from_json(mlv::value_to_json(V("(log_2 + i)/pi"))) == V("(log_2 + i)/pi"));
  CHECK(mlv::rational_from_json(json("-7/21")) == mpq_class(-1, 3));
  CHECK(mlv::rational_from_json(json(4)) == 4);
  CHECK_THROWS_AS(mlv::rational_from_json(json("pi")), mlv::Error);
  auto m = th::pm({{"1", "pi"}, {"i", "-1/2"}});
  CHECK(mlv::pmatrix_from_json(mlv::matrix_to_json(m)) == m);
  CHECK(mlv::pmatrix_from_json(json::array()).rows == 0);
  CHECK_THROWS_AS(mlv::qmatrix_from_json(json::parse(R"([["1", "2"], ["3"]])")), mlv::Error);
}

TEST_CASE("variety specs") {
  auto v = mlv::variety_from_json(mlv::load_json_file(th::fixture("elliptic_f5.json")));
  CHECK(v.kind == mlv::VarietySpec::Kind::Projective);
  CHECK(v.ambient_dim == 2);
  auto back = mlv::variety_from_json(mlv::variety_to_json(v));
  CHECK(back.equations == v.equations);
  CHECK(code_of([] { mlv::variety_from_json(json::parse(R"({"kind": "weird", "ambientDim": 1})")); }) == mlv::ErrorCode::InvalidInput);
}

TEST_CASE("Frobenius modules and factors") {
  auto v = mlv::frob_from_json(mlv::load_json_file(th::fixture("frob_rank2.json")));
  CHECK(v.p == 3);
  CHECK(v.phi == th::qm({{"1", "2"}, {"-1", "1/3"}}));
  auto w = mlv::frob_from_json(mlv::frob_to_json(v));
  CHECK(w.phi == v.phi);
  CHECK(mlv::frob_to_json(v).contains("matrix"));
  auto alias = mlv::frob_from_json(json::parse(R"({"p": 2, "f": 2, "phi": [["3"]]})"));
  CHECK(alias.f == 2);
  CHECK(code_of([] { mlv::frob_from_json(json::parse(R"({"p": 6, "f": 1, "matrix": [["1"]]})")); }) == mlv::ErrorCode::InvalidInput);
  mlv::EulerFactor e{5, 1, mlv::UPoly({1, -2, 5}), -1};
  auto e2 = mlv::factor_from_json(mlv::factor_to_json(e));
  CHECK(e2.poly == e.poly);
  CHECK(e2.exponent == -1);
}

TEST_CASE("L-objects") {
  auto w = mlv::lobject_from_json(mlv::load_json_file(th::fixture("zeta_shift_minus1.json")));
  CHECK(w.shifts == std::map<long, int>{{-1, 1}});
  auto e = mlv::lobject_from_json(json::parse(R"({"euler": [{"p": 2, "f": 1, "poly": [1, -1], "exponent": 1}]})"));
  REQUIRE(e.extra.size() == 1);
  auto back = mlv::lobject_from_json(mlv::lobject_to_json(w));
  CHECK(back.shifts == w.shifts);
}

TEST_CASE("complexes in all three forms") {
  auto a = mlv::qcomplex_from_json(json::parse(R"([{"degree": 0, "dim": 2, "qgen": "pi", "basisLabel": "e"}, {"degree": 2, "dim": 1}])"));
  CHECK(a.dim(0) == 2);
  CHECK(a.qgen(0) == V("pi"));
  CHECK(a.qgen(2) == V("1"));
  auto b = mlv::qcomplex_from_json(json::parse(R"({"0": 1, "-1": 3})"));
  CHECK(b.dim(-1) == 3);
  auto c = mlv::qcomplex_from_json(json::parse(R"({"degrees": [{"degree": 1, "dim": 1, "qgen": "log_2"}], "scale": "pi"})"));
  CHECK(c.scale == V("pi"));
  for (auto* q : {&a, &b, &c}) {
    auto r = mlv::qcomplex_from_json(mlv::qcomplex_to_json(*q));
    CHECK(r.graded.size() == q->graded.size());
    CHECK(mlv::det_total(r) == mlv::det_total(*q));
  }
  CHECK_THROWS_AS(mlv::qcomplex_from_json(json::parse(R"([{"degree": 0, "dim": 1, "qgen": "i"}])")), mlv::Error);
}

TEST_CASE("Hodge data") {
  auto h = mlv::hodge_from_json(mlv::load_json_file(th::fixture("elliptic_h1.json")));
  CHECK(h.rank == 2);
  CHECK(h.weight() == 1);
  auto back = mlv::hodge_from_json(mlv::hodge_to_json(h));
  CHECK(back.comparison == h.comparison);
  CHECK(back.filtration == h.filtration);
  CHECK(back.finf == h.finf);
  CHECK(back.weights == h.weights);
}

TEST_CASE("every bundled datum round-trips through JSON") {
  for (auto& name : mlv::catalog_names()) {
    auto d = mlv::builtin_datum(name);
    json j = mlv::datum_to_json(d);
    CHECK(j.at("schema") == mlv::kDatumSchema);
    auto r = mlv::datum_from_json(json::parse(j.dump()));
    CAPTURE(name);
    CHECK(mlv::datum_to_json(r) == j);
    CHECK(r.label == d.label);
    CHECK(r.s0 == d.s0);
    CHECK(r.ranks == d.ranks);
  }
}

TEST_CASE("datum errors") {
  CHECK(code_of([] { mlv::load_json_file("/nonexistent/file.json"); }) == mlv::ErrorCode::InvalidInput);
  CHECK(code_of([] { mlv::datum_from_json(json::parse(R"({"schema": "other/1"})")); }) == mlv::ErrorCode::InvalidInput);
  CHECK_THROWS_AS(mlv::datum_from_json(json::parse(R"({"schema": "mlv-datum/1"})")), mlv::Error);
  json j = mlv::datum_to_json(mlv::builtin_datum("fp_pn_m(2,1,0)"));
  j["pairings"] = json::parse(R"([{"degree": 0, "matrix": [["1", "2"]]}])");
  CHECK_THROWS_AS(mlv::datum_from_json(j), mlv::Error);
}

TEST_CASE("reports") {
  mlv::Verdict v{"pole_order", "x", mlv::VerdictStatus::Pass, {{"order", "-1"}}, ""};
  auto r = mlv::verdict_record(v);
  std::string text = mlv::render({r}, mlv::Format::Text, "check");
  CHECK(text == "check: pole_order\nlabel: x\nstatus: pass\norder: -1\n");
  std::string js = mlv::render({r, r}, mlv::Format::Json, "check");
  auto parsed = json::parse(js);
  CHECK(parsed.at("schema") == mlv::kReportSchema);
  CHECK(parsed.at("kind") == "check");
  CHECK(parsed.at("records").size() == 2);
  CHECK(parsed.at("records")[0].at("status") == "pass");

  mlv::Record a, b;
  a.add("x", "1,2");
  b.add("y", 3);
  CHECK(mlv::render({a, b}, mlv::Format::Csv, "k") == "x,y\n\"1,2\",\n,3\n");

  mlv::Record h;
  h.add_value("value", V("pi^2/6"), true);
  CHECK(h.fields.at("value") == "pi^2/6");
  CHECK(h.fields.at("value_approx").get<std::string>().find("1.644") != std::string::npos);
  CHECK(mlv::parse_format("csv") == mlv::Format::Csv);
  CHECK_THROWS_AS(mlv::parse_format("xml"), mlv::Error);
}
