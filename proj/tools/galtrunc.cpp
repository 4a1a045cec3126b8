// galtrunc command-line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "galtrunc/cache.hpp"
#include "galtrunc/factor.hpp"
#include "galtrunc/galois.hpp"
#include "galtrunc/pade.hpp"
#include "galtrunc/padic.hpp"
#include "galtrunc/repro.hpp"
#include "galtrunc/schur.hpp"
#include "galtrunc/series.hpp"

using namespace galtrunc;
using nlohmann::json;

namespace {

struct Globals {
  bool json_out = false;
  bool csv_out = false;
  std::uint64_t prime_bound = 10000;
  bool no_cache = false;
  bool verify_cache = false;
  std::string cache_dir;
};

SeriesId series_arg(const std::string& name) {
  auto id = parse_series(name);
  if (!id) throw Error("unknown series '" + name + "'");
  return *id;
}

std::string series_names() {
  std::string out;
  for (auto id : all_series()) out += (out.empty() ? "" : ", ") + std::string(cli_name(id));
  return out;
}

json poly_json(const IntPoly& f) {
  return json{{"text", to_string(f)}, {"coefficients", coefficient_strings(f)}, {"degree", f.degree()}};
}

json factorization_json(const IntPoly& f) {
  auto fac = factor_over_integers(f);
  json factors = json::array();
  for (const auto& e : fac.factors) factors.push_back(json{{"factor", poly_json(e.factor)}, {"multiplicity", e.multiplicity}});
  return json{{"unit", to_string(fac.unit)}, {"factors", factors}};
}

std::string factorization_text(const json& j) {
  std::string out = j.at("unit").get<std::string>();
  for (const auto& e : j.at("factors")) {
    out += " * (" + e.at("factor").at("text").get<std::string>() + ")";
    if (int m = e.at("multiplicity").get<int>(); m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

void print(const Globals& g, const json& j, const std::string& text) {
  if (g.json_out) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::unique_ptr<ResultCache> make_cache(const Globals& g) {
  std::filesystem::path dir = g.cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(g.cache_dir);
  return std::make_unique<ResultCache>(dir, !g.no_cache);
}

void report_cache_warnings(const ResultCache& cache) {
  for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << "\n";
}

IntPoly input_polynomial(const std::string& text, const std::string& series, unsigned order, const std::string& part) {
  if (!text.empty()) {
    auto p = to_int_exact(parse_any_poly(text));
    if (p) return *p;
    return primitive_integer(parse_any_poly(text)).primitive;
  }
  if (series.empty()) throw Error("give a polynomial or --series with --order");
  SeriesId id = series_arg(series);
  if (part == "numerator") return cell_polynomial(id, CellSource::PadeNumerator, order);
  if (part == "denominator") return cell_polynomial(id, CellSource::PadeDenominator, order);
  if (part == "truncation") return cell_polynomial(id, CellSource::Truncation, order);
  if (part == "scaled") return cell_polynomial(id, CellSource::ScaledTruncation, order);
  throw Error("unknown --part '" + part + "'");
}

int run_series(const Globals& g, const std::string& name, unsigned order) {
  SeriesId id = series_arg(name);
  RatPoly t = taylor(id, order);
  json j{{"series", cli_name(id)}, {"order", order}, {"coefficients", coefficient_strings(t)}, {"text", to_string(t)}};
  print(g, j, to_string(t) + "\n");
  return 0;
}

int run_pade(const Globals& g, const std::string& name, unsigned order, bool factor) {
  SeriesId id = series_arg(name);
  PadePair p = pade_diagonal(id, order);
  json j{{"series", cli_name(id)},
         {"order", order},
         {"overall_sign", p.overall_sign},
         {"scale", to_string(p.scale)},
         {"numerator", poly_json(p.numerator)},
         {"denominator", poly_json(p.denominator)}};
  std::ostringstream text;
  text << "P_" << order << " = " << to_string(p.numerator) << "\n";
  text << "Q_" << order << " = " << to_string(p.denominator) << "\n";
  text << "approximant = " << (p.overall_sign < 0 ? "-" : "") << to_string(p.scale) << " * P/Q\n";
  if (factor) {
    j["numerator_factors"] = factorization_json(p.numerator);
    j["denominator_factors"] = factorization_json(p.denominator);
    text << "P_" << order << " = " << factorization_text(j["numerator_factors"]) << "\n";
    text << "Q_" << order << " = " << factorization_text(j["denominator_factors"]) << "\n";
  }
  print(g, j, text.str());
  return 0;
}

int run_scan(const Globals& g, const std::string& name, unsigned max_order, unsigned jobs) {
  SeriesId id = series_arg(name);
  auto entries = divisibility_scan(id, max_order, jobs);
  json arr = json::array();
  std::ostringstream text;
  std::size_t failures = 0;
  for (const auto& e : entries) {
    arr.push_back(json{{"n", e.n}, {"m", e.m}, {"numerator_divides", e.numerator_divides}, {"denominator_divides", e.denominator_divides}});
    if (!e.divides()) {
      ++failures;
      text << "P_" << e.n << " | P_" << e.m << ": " << (e.numerator_divides ? "yes" : "no") << ", Q_" << e.n << " | Q_" << e.m
           << ": " << (e.denominator_divides ? "yes" : "no") << "\n";
    }
  }
  text << entries.size() << " pairs, " << failures << " without divisibility\n";
  print(g, json{{"series", cli_name(id)}, {"max", max_order}, {"pairs", arr}, {"failures", failures}}, text.str());
  return 0;
}

int run_factor(const Globals& g, const std::string& text, std::uint64_t prime) {
  IntPoly f = input_polynomial(text, "", 0, "");
  if (prime) {
    auto m = factor_mod_p(f, prime);
    json factors = json::array();
    std::ostringstream out;
    out << m.leading;
    for (const auto& [h, e] : m.factors) {
      IntPoly lifted = fp::lift(h, prime);
      factors.push_back(json{{"coefficients", h}, {"multiplicity", e}});
      out << " * (" << to_string(lifted) << ")";
      if (e > 1) out << "^" << e;
    }
    out << "  (mod " << prime << ")\n";
    print(g, json{{"prime", prime}, {"leading", m.leading}, {"factors", factors}, {"degrees", m.degrees()}}, out.str());
    return 0;
  }
  json j = factorization_json(f);
  j["polynomial"] = poly_json(f);
  print(g, j, factorization_text(j) + "\n");
  return 0;
}

int run_newton(const Globals& g, const std::string& text, const std::string& series, unsigned order, std::uint64_t prime) {
  RatPoly f = text.empty() ? taylor(series_arg(series), order) : parse_any_poly(text);
  auto np = newton_polygon(f, prime);
  auto shape = qp_factor_shape(f, prime);
  json vertices = json::array(), segments = json::array();
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : np.vertices) {
    vertices.push_back({v.index, v.valuation});
    out << " (" << v.index << "," << v.valuation << ")";
  }
  out << "\nsegments:";
  for (const auto& s : shape) {
    segments.push_back(json{{"degree", s.degree}, {"slope", to_string(s.slope)}});
    out << " (" << s.degree << ", " << to_string(s.slope) << ")";
  }
  out << "\n";
  print(g, json{{"prime", prime}, {"vertices", vertices}, {"factor_shape", segments}}, out.str());
  return 0;
}

std::string identification_text(const GaloisIdentification& id) {
  std::ostringstream out;
  out << (id.group_name.empty() ? "unidentified" : id.group_name);
  if (id.t_notation) out << " (" << *id.t_notation << ")";
  out << "  " << to_string(id.certainty.tag);
  if (id.certainty.tag == CertaintyTag::Heuristic) {
    out << " (" << id.certainty.sample_count << " good primes below " << id.certainty.prime_bound << ")";
  }
  if (id.certainty.tag == CertaintyTag::EliminatedToSet) {
    out << " {";
    for (std::size_t i = 0; i < id.certainty.candidates.size(); ++i) out << (i ? ", " : "") << id.certainty.candidates[i];
    out << "}";
  }
  out << "  degree " << id.degree << "\n";
  for (const auto& e : id.evidence) {
    std::string data = e.data.dump();
    if (data.size() > 160) data = data.substr(0, 157) + "...";
    out << "  " << e.kind << ": " << data << "\n";
  }
  return out.str();
}

int run_galois(const Globals& g, const IntPoly& f, bool all_factors) {
  GaloisConfig cfg;
  cfg.prime_bound = g.prime_bound;
  if (all_factors) {
    auto ids = classify_all_factors(f, cfg);
    json arr = json::array();
    std::string text;
    for (const auto& id : ids) {
      arr.push_back(to_json(id));
      text += to_string(id.polynomial) + ":\n" + identification_text(id);
    }
    print(g, arr, text);
    return 0;
  }
  auto cache = make_cache(g);
  auto id = cached_classify(f, cfg, cache.get());
  report_cache_warnings(*cache);
  print(g, to_json(id), identification_text(id));
  return 0;
}

int run_schur(const Globals& g, unsigned n, bool all_checks) {
  auto r = schur_report(n, all_checks, g.prime_bound);
  std::ostringstream out;
  out << "N = " << n << "\n";
  for (const auto& c : r.certificates) {
    out << "certificate " << to_string(c.kind);
    if (c.prime) out << " at p = " << *c.prime;
    out << (c.validate().empty() ? " (valid)" : " (INVALID)") << "\n";
    for (const auto& d : c.details) out << "  " << d << "\n";
  }
  out << "|disc| = (N!)^N: " << (r.disc.magnitude_matches() ? "yes" : "no") << "\n";
  out << "sign from (-1)^(N(N-1)/2+N): " << r.disc.closed_form_sign << ", resultant sign: " << r.disc.oracle_sign
      << (r.disc.signs_agree() ? "" : "  (differ)") << (r.disc.degenerate ? "  (degree 1: empty product)" : "") << "\n";
  out << "Q_N' = Q_N - x^N: " << (r.derivative_identity ? "yes" : "no") << "\n";
  out << "expected group: " << r.expected_group << "\n";
  if (r.galois) {
    out << "observed group: " << r.galois->at("group_name").get<std::string>() << " ["
        << r.galois->at("certainty").at("tag").get<std::string>() << "]\n";
  }
  out << (r.matches ? "match\n" : "MISMATCH\n");
  print(g, to_json(r), out.str());
  return r.matches ? 0 : 1;
}

int run_reproduce(const Globals& g, const std::string& table, bool verify, unsigned jobs, const std::string& replay) {
  if (!replay.empty()) {
    std::ifstream in(replay);
    if (!in) throw Error("cannot read " + replay);
    json report = json::parse(in);
    auto failures = replay_report(report);
    for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
    std::cout << (failures.empty() ? "all proven cells re-validate\n" : "");
    return failures.empty() ? 0 : 1;
  }
  auto id = parse_table_id(table);
  if (!id) {
    std::string names;
    for (auto t : all_tables()) names += " " + std::string(cli_name(t));
    throw Error("unknown table '" + table + "'; expected one of" + names);
  }
  auto cache = make_cache(g);
  ReproOptions opt;
  opt.galois.prime_bound = g.prime_bound;
  opt.cache = cache.get();
  opt.jobs = jobs;
  opt.verify = verify;
  const auto before = factorization_count();
  TableReport report = reproduce(*id, opt);
  const auto used = factorization_count() - before;
  report_cache_warnings(*cache);
  std::cout << emit(report, g.json_out ? OutputFormat::Json : g.csv_out ? OutputFormat::Csv : OutputFormat::Text);
  std::cerr << "cache: " << cache->hits() << " hits, " << cache->misses() << " misses, " << used << " factorizations"
            << (cache->enabled() ? "" : " (disabled)") << "\n";
  if (g.verify_cache) {
    std::random_device rd;
    auto msg = verify_cache_entry(report, opt.galois, (std::uint64_t(rd()) << 32) ^ rd());
    if (!msg.empty()) {
      std::cerr << "verify-cache: " << msg << "\n";
      return 2;
    }
    std::cerr << "verify-cache: recomputed entry is identical\n";
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois groups of truncated series and their Pade approximants"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "JSON output");
  app.add_flag("--csv", g.csv_out, "CSV output (reproduce)");
  app.add_option("--prime-bound", g.prime_bound, "Largest prime used for Frobenius sampling")->check(CLI::Range(2ull, 100000000ull));
  app.add_flag("--no-cache", g.no_cache, "Bypass the result cache");
  app.add_flag("--verify-cache", g.verify_cache, "Recompute one cached entry and compare");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory")->envname("GALTRUNC_CACHE_DIR");

  std::string series = "exp", poly_text, part = "numerator", table, replay;
  unsigned order = 10, max_order = 40, jobs = 0, schur_n = 4;
  std::uint64_t prime = 0;
  bool factor = false, all_factors = false, all_checks = false, verify = false;

  auto* s_series = app.add_subcommand("series", "Truncated Taylor polynomial");
  s_series->add_option("--series", series, "One of: " + series_names());
  s_series->add_option("--order,-n", order, "Truncation order")->required();

  auto* s_pade = app.add_subcommand("pade", "Diagonal Pade approximant");
  s_pade->add_option("--series", series, "One of: " + series_names());
  s_pade->add_option("--order,-n", order, "Approximation order");
  s_pade->add_flag("--factor", factor, "Factor numerator and denominator over Z");
  auto* s_scan = s_pade->add_subcommand("scan-divisibility", "Check P_n | P_m and Q_n | Q_m for n | m");
  s_scan->add_option("--series", series, "Series name");
  s_scan->add_option("--max", max_order, "Largest order");
  s_scan->add_option("--jobs", jobs, "Worker threads");

  auto* s_factor = app.add_subcommand("factor", "Factor a polynomial over Z or modulo a prime");
  s_factor->add_option("polynomial", poly_text, "Polynomial, e.g. \"x^4-2\"")->required();
  s_factor->add_option("--mod", prime, "Factor modulo this prime");

  auto* s_newton = app.add_subcommand("newton", "Newton polygon at a prime");
  s_newton->add_option("polynomial", poly_text, "Polynomial; defaults to the truncation of --series");
  s_newton->add_option("--series", series, "Series name");
  s_newton->add_option("--order,-n", order, "Truncation order");
  s_newton->add_option("--prime,-p", prime, "Prime")->required();

  auto* s_galois = app.add_subcommand("galois", "Identify the Galois group");
  s_galois->add_option("polynomial", poly_text, "Polynomial; otherwise use --series/--order/--part");
  s_galois->add_option("--series", series, "Series name");
  s_galois->add_option("--order,-n", order, "Order");
  s_galois->add_option("--part", part, "numerator, denominator, truncation or scaled");
  s_galois->add_flag("--all-factors", all_factors, "Classify every irreducible factor");

  auto* s_schur = app.add_subcommand("schur", "Checks for N! times the truncated exponential");
  s_schur->add_option("--n,-n", schur_n, "N")->required()->check(CLI::Range(1u, 1000u));
  s_schur->add_flag("--all-checks", all_checks, "Also classify the Galois group");

  auto* s_repro = app.add_subcommand("reproduce", "Reproduce a table of Galois groups");
  s_repro->add_option("table", table, "Table id");
  s_repro->add_flag("--verify", verify, "Re-validate the evidence of every proven cell");
  s_repro->add_option("--jobs", jobs, "Worker threads (0: all cores)");
  s_repro->add_option("--replay", replay, "Re-validate the proven cells of a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*s_series) return run_series(g, series, order);
    if (*s_pade) {
      if (*s_scan) return run_scan(g, series, max_order, jobs);
      return run_pade(g, series, order, factor);
    }
    if (*s_factor) return run_factor(g, poly_text, prime);
    if (*s_newton) return run_newton(g, poly_text, series, order, prime);
    if (*s_galois) {
      const bool from_series = poly_text.empty();
      return run_galois(g, input_polynomial(poly_text, from_series ? series : "", order, part), all_factors);
    }
    if (*s_schur) return run_schur(g, schur_n, all_checks);
    if (*s_repro) {
      if (table.empty() && replay.empty()) throw Error("give a table id or --replay");
      return run_reproduce(g, table, verify, jobs, replay);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
