#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "galtrunc/cache.hpp"
#include "galtrunc/factor.hpp"
#include "galtrunc/pade.hpp"
#include "galtrunc/repro.hpp"

using namespace galtrunc;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
  std::random_device rd;
  fs::path dir = fs::temp_directory_path() / ("galtrunc-test-" + tag + "-" + std::to_string(rd()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("SHA-256 test vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache stores, reloads and survives corruption") {
  fs::path dir = scratch_dir("cache");
  ResultCache cache(dir);
  nlohmann::json input{{"polynomial", {"1", "0", "1"}}};
  int calls = 0;
  auto compute = [&] {
    ++calls;
    return nlohmann::json{{"answer", 42}};
  };
  CHECK(cache.get_or_compute("op", input, compute)["answer"] == 42);
  CHECK(cache.get_or_compute("op", input, compute)["answer"] == 42);
  CHECK(calls == 1);
  CHECK(cache.hits() == 1);
  CHECK(cache.misses() == 1);
  // A different operation name is a different key.
  CHECK(ResultCache::make_key("op", input) != ResultCache::make_key("op2", input));
  const std::string key = ResultCache::make_key("op", input);
  fs::path file = dir / key.substr(0, 2) / (key + ".json");
  REQUIRE(fs::exists(file));
  { std::ofstream(file, std::ios::trunc) << "{not json"; }
  ResultCache reopened(dir);
  CHECK(reopened.get_or_compute("op", input, compute)["answer"] == 42);
  CHECK(calls == 2);
  CHECK(reopened.warnings().size() == 1);
  ResultCache disabled(dir, false);
  CHECK_FALSE(disabled.get(key).has_value());
  fs::remove_all(dir);
}

TEST_CASE("embedded table data") {
  CHECK(all_tables().size() == 6);
  for (TableId id : all_tables()) {
    CHECK(parse_table_id(cli_name(id)) == id);
    TableSpec spec = table_spec(id);
    CHECK_FALSE(spec.rows.empty());
    for (const auto& row : spec.rows) CHECK(row.cells.size() == spec.columns.size());
  }
  TableSpec exp = table_spec(TableId::ExpPade);
  CHECK(exp.rows.size() == 10);
  CHECK(exp.rows[0].n == 10);
  CHECK(exp.rows[0].cells[0].group == "A4");
  CHECK(exp.rows[0].cells[1].group == "S5");
  CHECK(table_spec(TableId::SchurTrunc).rows.size() == 24);
  CHECK_FALSE(parse_table_id("nope").has_value());
}

TEST_CASE("cell polynomials") {
  CHECK(cell_polynomial(SeriesId::Exp, CellSource::PadeNumerator, 10) == pade_diagonal(SeriesId::Exp, 10).numerator);
  CHECK(cell_polynomial(SeriesId::Exp, CellSource::ScaledTruncation, 5) == scale_to_monic_integer(5));
  IntPoly t = cell_polynomial(SeriesId::SinPlusSinh, CellSource::Truncation, 5);
  CHECK(t.degree() == 5);
  CHECK(t.coeff(0) == 0);
}

TEST_CASE("block decomposition of cycle types") {
  CHECK(decomposes_into_d4_blocks({1, 1, 1, 1}));
  CHECK(decomposes_into_d4_blocks({4}));
  CHECK(decomposes_into_d4_blocks({2, 2}));
  CHECK(decomposes_into_d4_blocks({2, 1, 1}));
  CHECK(decomposes_into_d4_blocks({8, 2, 1, 1}));
  CHECK(decomposes_into_d4_blocks({6, 6}));
  CHECK_FALSE(decomposes_into_d4_blocks({3, 1}));
  CHECK(decomposes_into_d4_blocks({2, 2, 2, 1, 1}));
  CHECK_FALSE(decomposes_into_d4_blocks({5, 3}));
}

TEST_CASE("small table end to end") {
  fs::path dir = scratch_dir("repro");
  ResultCache cache(dir);
  ReproOptions opt;
  opt.cache = &cache;
  opt.jobs = 2;
  opt.verify = true;
  auto report = reproduce(TableId::InvSqrtTrunc, opt);
  CHECK(report.ok());
  CHECK(report.exit_code() == 0);
  CHECK(report.passed == 8);
  // Without evidence re-validation a warm cache needs no factorization.
  opt.verify = false;
  const std::uint64_t before = factorization_count();
  auto again = reproduce(TableId::InvSqrtTrunc, opt);
  CHECK(again.ok());
  CHECK(cache.hits() >= 8);
  CHECK(factorization_count() == before);
  CHECK(verify_cache_entry(again, opt.galois, 3).empty());
  auto j = to_json(report);
  CHECK(j["schema"] == "galtrunc.report/1");
  CHECK(replay_report(j).empty());
  // A forged group in the report must be caught on replay.
  auto forged = j;
  forged["rows"][0]["cells"][0]["identification"]["group_name"] = "A3";
  CHECK_FALSE(replay_report(forged).empty());
  std::string text = emit(report, OutputFormat::Text);
  CHECK(text.find("summary: 8 passed, 0 mismatched, 0 errors") != std::string::npos);
  std::string csv = emit(report, OutputFormat::Csv);
  CHECK(csv.rfind("n,", 0) == 0);
  CHECK(parse_output_format("csv") == OutputFormat::Csv);
  fs::remove_all(dir);
}
