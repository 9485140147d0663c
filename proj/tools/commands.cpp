#include "commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <optional>

#include "mlv/catalog.hpp"
#include "mlv/datum_io.hpp"
#include "mlv/error.hpp"
#include "mlv/report.hpp"
#include "mlv/symbols.hpp"

namespace mlv::cli {

namespace {

struct RunConfig {
  std::string format = "text";
  bool approx = false;
  std::optional<std::uint64_t> budget;
  std::vector<std::string> symbols;  // NAME or NAME:negated

  std::uint64_t enumeration_budget() const { return budget ? *budget : mlv::enumeration_budget(); }
};

struct Outcome {
  std::vector<Record> records;
  std::string kind;
  bool all_pass = true;
};

json read_input(const std::string& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorCode::InvalidInput, "no such file '" + path + "'");
  return load_json_file(path);
}

// A datum argument is a file path or builtin:NAME.
MotivicDatum load_datum(const std::string& arg) {
  const std::string prefix = "builtin:";
  if (arg.rfind(prefix, 0) == 0) return builtin_datum(arg.substr(prefix.size()));
  return datum_from_json(read_input(arg));
}

std::string counts_string(const std::vector<mpz_class>& counts) {
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) s += (i ? "," : "") + counts[i].get_str();
  return s;
}

Outcome verdicts(const std::vector<Verdict>& vs, const std::string& kind) {
  Outcome o;
  o.kind = kind;
  for (auto& v : vs) {
    o.records.push_back(verdict_record(v));
    if (!v.passed()) o.all_pass = false;
  }
  return o;
}

void add_leading(Record& r, const LaurentLeading& l, bool approx) {
  r.add("order", l.order);
  r.add_value("leading", l.leading, approx);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for special values of L-functions of motives"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--approx", cfg.approx, "Append non-normative decimal hints");
  app.add_option("--budget", cfg.budget, "Point enumeration budget (default: MLV_BUDGET or 10^7)")->check(CLI::PositiveNumber);
  app.add_option("--symbol", cfg.symbols, "Declare a real symbol NAME, or NAME:negated for a conjugation-negated one");

  std::function<Outcome()> action;

  // zeta
  auto* zeta = app.add_subcommand("zeta", "Point counting and zeta reconstruction")->require_subcommand(1);
  std::string spec_file;
  long p = 0;
  int k = 1, deg_num = 0, deg_den = 0, ncounts = 0;
  auto* zcount = zeta->add_subcommand("count", "Count points over F_{p^k}");
  zcount->add_option("--spec", spec_file, "Variety spec file")->required();
  zcount->add_option("--p", p, "Prime")->required();
  zcount->add_option("--k", k, "Extension degree")->required();
  zcount->callback([&] {
    action = [&] {
      VarietySpec v = variety_from_json(read_input(spec_file));
      Record r;
      r.add("p", p).add("k", k).add("count", point_count(v, p, k, cfg.enumeration_budget()).get_str());
      return Outcome{{r}, "zeta.count", true};
    };
  });
  auto* zrec = zeta->add_subcommand("reconstruct", "Reconstruct Z(t) from point counts");
  zrec->add_option("--spec", spec_file, "Variety spec file")->required();
  zrec->add_option("--p", p, "Prime")->required();
  zrec->add_option("--deg-num", deg_num, "Numerator degree bound")->required();
  zrec->add_option("--deg-den", deg_den, "Denominator degree bound")->required();
  zrec->add_option("--counts", ncounts, "Number of counts N_1..N_m (default deg-num + deg-den + 1)");
  zrec->callback([&] {
    action = [&] {
      VarietySpec v = variety_from_json(read_input(spec_file));
      int m = ncounts > 0 ? ncounts : deg_num + deg_den + 1;
      auto counts = point_counts(v, p, m, cfg.enumeration_budget());
      RationalZeta z = zeta_from_counts(counts, deg_num, deg_den);
      Record r;
      r.add("p", p).add("counts", counts_string(counts)).add("zeta", z.to_string());
      r.add("numerator", z.num.to_string()).add("denominator", z.den.to_string());
      return Outcome{{r}, "zeta.reconstruct", true};
    };
  });

  // lfun
  auto* lfun = app.add_subcommand("lfun", "Euler factors, leading terms and epsilon constants")->require_subcommand(1);
  std::string module_file, word_file;
  long twist_by = 0, s0 = 0;
  auto* lfactor = lfun->add_subcommand("factor", "Euler polynomial of a Frobenius module");
  lfactor->add_option("--module", module_file, "Frobenius module file")->required();
  lfactor->add_option("--twist", twist_by, "Tate twist");
  lfactor->callback([&] {
    action = [&] {
      FrobModule v = twist(frob_from_json(read_input(module_file)), twist_by);
      EulerFactor e = euler_poly(v);
      FrobModule down = pushdown(v);
      Record r;
      r.add("p", v.p).add("f", v.f).add("rank", static_cast<long>(v.rank())).add("euler_poly", e.poly.to_string());
      r.add("pushdown_poly", euler_poly(down).poly.to_string("t"));
      return Outcome{{r}, "lfun.factor", true};
    };
  });
  auto* lleading = lfun->add_subcommand("leading", "Leading Laurent term of a zeta word");
  lleading->add_option("--word", word_file, "Zeta word file")->required();
  lleading->add_option("--at", s0, "Evaluation point");
  lleading->callback([&] {
    action = [&] {
      json j = read_input(word_file);
      declare_symbols_from_json(j);
      ZetaWord w = lobject_from_json(j);
      Record r;
      r.add("s0", s0);
      add_leading(r, zetaword_leading(w, s0), cfg.approx);
      return Outcome{{r}, "lfun.leading", true};
    };
  });
  auto* leps = lfun->add_subcommand("epsilon", "Epsilon constants of a Frobenius module");
  leps->add_option("--module", module_file, "Frobenius module file")->required();
  leps->callback([&] {
    action = [&] {
      FrobModule v = frob_from_json(read_input(module_file));
      EpsilonConstants e = epsilon_constants(v);
      Record r;
      r.add("a", rational_to_string(e.a)).add("b", e.b.get_str());
      r.add("identity", epsilon_identity_holds(v, e) ? "holds" : "fails");
      return Outcome{{r}, "lfun.epsilon", true};
    };
  });

  // hodge
  auto* hodge = app.add_subcommand("hodge", "Weak Hodge cohomology and archimedean factors")->require_subcommand(1);
  std::string hodge_file;
  auto* hweak = hodge->add_subcommand("weak", "Weak Hodge cohomology and duality");
  hweak->add_option("--datum", hodge_file, "Hodge datum file")->required();
  hweak->callback([&] {
    action = [&] {
      HodgeDatum h = hodge_from_json(read_input(hodge_file));
      WeakCohomology w = weak_cohomology(h);
      WeakDuality d = weak_duality(h);
      Record r;
      r.add("rank", static_cast<long>(h.rank)).add("alpha_rank", static_cast<long>(w.alpha_rank));
      r.add("hw0_dim", static_cast<long>(w.hw0.dim)).add("hw1_dim", static_cast<long>(w.hw1.dim));
      r.add_value("hw0_qgen", w.hw0.qgen, cfg.approx).add_value("hw1_qgen", w.hw1.qgen, cfg.approx);
      r.add_value("det_total", det_total(w.complex), cfg.approx);
      r.add("hw0_pairing", matrix_to_json(d.hw0_pairing).dump());
      r.add("hw1_pairing", matrix_to_json(d.hw1_pairing).dump());
      r.add("duality", "perfect");
      return Outcome{{r}, "hodge.weak", true};
    };
  });
  auto* harch = hodge->add_subcommand("arch", "Archimedean Gamma factor and its leading term");
  harch->add_option("--datum", hodge_file, "Hodge datum file")->required();
  harch->add_option("--at", s0, "Evaluation point");
  harch->callback([&] {
    action = [&] {
      HodgeDatum h = hodge_from_json(read_input(hodge_file));
      GammaProduct g = arch_factor(hodge_layers(h));
      Record r;
      r.add("gamma", g.to_string()).add("s0", s0);
      add_leading(r, gamma_leading(g, s0), cfg.approx);
      return Outcome{{r}, "hodge.arch", true};
    };
  });

  // conj
  auto* conj = app.add_subcommand("conj", "Conjecture checks on motivic data")->require_subcommand(1);
  std::string datum_arg;
  std::optional<long> at;
  auto* ccheck = conj->add_subcommand("check", "All applicable checks on a datum");
  ccheck->add_option("datum", datum_arg, "Datum file or builtin:NAME")->required();
  ccheck->add_option("--at", at, "Evaluation point (default: the datum's s0)");
  ccheck->callback([&] {
    action = [&] {
      MotivicDatum d = load_datum(datum_arg);
      if (at) d.s0 = *at;
      return verdicts(check_all(d), "conj.check");
    };
  });
  bool use_catalog = false;
  std::vector<std::string> suite_files;
  auto* csuite = conj->add_subcommand("suite", "Run all checks on the bundled catalog and given data");
  csuite->add_flag("--catalog", use_catalog, "Include the bundled catalog (default when no files are given)");
  csuite->add_option("data", suite_files, "Datum files or builtin:NAME");
  csuite->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, MotivicDatum>> data;
      if (use_catalog || suite_files.empty())
        for (auto& n : catalog_names()) data.emplace_back(n, builtin_datum(n));
      for (auto& f : suite_files) {
        MotivicDatum d = load_datum(f);
        data.emplace_back(d.label, std::move(d));
      }
      std::stable_sort(data.begin(), data.end(), [](auto& a, auto& b) { return a.first < b.first; });
      std::vector<Verdict> all;
      for (auto& [n, d] : data)
        for (auto& v : check_all(d)) all.push_back(std::move(v));
      Outcome o = verdicts(all, "conj.suite");
      std::size_t passed = 0;
      for (auto& v : all) passed += v.passed();
      Record summary;
      summary.add("check", "summary").add("label", "suite").add("status", o.all_pass ? "pass" : "fail");
      summary.add("passed", static_cast<long>(passed)).add("total", static_cast<long>(all.size()));
      o.records.push_back(summary);
      return o;
    };
  });
  auto* cfp = conj->add_subcommand("fp", "Special value check for data supported at a prime");
  cfp->add_option("datum", datum_arg, "Datum file or builtin:NAME")->required();
  cfp->callback([&] { action = [&] { return verdicts({check_fp_value(load_datum(datum_arg))}, "conj.fp"); }; });
  auto* csoule = conj->add_subcommand("soule", "Pole order against K-theory ranks");
  csoule->add_option("datum", datum_arg, "Datum file or builtin:NAME")->required();
  csoule->callback([&] { action = [&] { return verdicts({check_soule(load_datum(datum_arg))}, "conj.soule"); }; });
  std::vector<std::string> tri;
  auto* ctri = conj->add_subcommand("triangle", "Multiplicativity along a triangle M1 -> M2 -> M3");
  ctri->add_option("data", tri, "Three datum files or builtin:NAME")->required()->expected(3);
  ctri->callback([&] {
    action = [&] {
      return verdicts({check_triangle(load_datum(tri[0]), load_datum(tri[1]), load_datum(tri[2]))}, "conj.triangle");
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    for (auto& s : cfg.symbols) {
      auto colon = s.find(':');
      std::string name = s.substr(0, colon);
      std::string kind = colon == std::string::npos ? "fixed" : s.substr(colon + 1);
      if (kind != "fixed" && kind != "negated") throw Error(ErrorCode::InvalidInput, "symbol kind must be fixed or negated");
      declare_symbol(name, kind == "fixed" ? Conjugation::Fixed : Conjugation::Negated);
    }
    Outcome o = action();
    out << render(o.records, parse_format(cfg.format), o.kind);
    return o.all_pass ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mlv::cli
