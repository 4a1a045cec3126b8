#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "galtrunc/cache.hpp"
#include "galtrunc/galois.hpp"
#include "galtrunc/series.hpp"

namespace galtrunc {

enum class TableId { ExpPade, InvSqrtPade, InvSqrtTrunc, Atanh2Pade, SinSinh, SchurTrunc };

std::span<const TableId> all_tables();
std::string_view cli_name(TableId id);
std::optional<TableId> parse_table_id(std::string_view name);

enum class CellSource { PadeNumerator, PadeDenominator, Truncation, ScaledTruncation };

/// Minimum certainty a cell must reach. Consistent is the wreath-evidence
/// check used for sin+sinh beyond degree 4.
enum class Requirement { Proven, Heuristic, Consistent };

struct ExpectedCell {
  std::string group;
  Requirement require = Requirement::Proven;
  std::string locator;
  unsigned order = 0;  // polynomial order; defaults to the row's n
};

struct TableColumn {
  std::string label;
  CellSource source = CellSource::PadeNumerator;
};

struct TableRow {
  unsigned n = 0;
  std::vector<ExpectedCell> cells;
};

struct TableSpec {
  TableId id = TableId::ExpPade;
  std::string title;
  SeriesId series = SeriesId::Exp;
  std::string row_label = "n";
  std::vector<TableColumn> columns;
  std::vector<TableRow> rows;
};

/// Embedded JSON with the expected cells of every table.
std::string_view tables_text();

/// Expected cells from the embedded table data.
TableSpec table_spec(TableId id);

/// The polynomial a cell classifies, before factor selection.
IntPoly cell_polynomial(SeriesId series, CellSource source, unsigned order);

struct ConsistencyCheck {
  bool ok = false;
  std::string detail;
};

/// For f = g(x^4) with g of degree m: the observed element orders and every
/// Frobenius cycle type must fit inside C4 wr (S_m x C2) acting on m blocks of
/// four, with each block acted on through D4.
ConsistencyCheck sin_sinh_consistency(const GaloisIdentification& id);

/// True when `parts` splits into groups {l,l,l,l}, {4l}, {2l,2l} or {2l,l,l},
/// one per cycle of blocks of length l.
bool decomposes_into_d4_blocks(const std::vector<int>& parts);

enum class CellStatus { Proven, Consistent, Mismatch, Error };
std::string to_string(CellStatus s);

struct CellResult {
  ExpectedCell expected;
  unsigned order = 0;
  IntPoly polynomial;  // cell input before factor selection
  int degree = 0;      // degree of the classified factor
  std::optional<GaloisIdentification> identification;
  CellStatus status = CellStatus::Error;
  std::string message;
};

struct RowResult {
  unsigned n = 0;
  std::vector<CellResult> cells;
};

struct TableReport {
  TableSpec spec;
  std::vector<RowResult> rows;
  std::size_t passed = 0;
  std::size_t mismatched = 0;
  std::size_t errors = 0;

  bool ok() const { return mismatched == 0 && errors == 0; }
  int exit_code() const { return errors ? 2 : (mismatched ? 1 : 0); }
};

struct ReproOptions {
  GaloisConfig galois;
  ResultCache* cache = nullptr;  // nullptr: no caching
  unsigned jobs = 0;             // 0: hardware concurrency
  bool verify = false;           // re-validate the evidence of Proven cells
};

TableReport reproduce(TableId id, const ReproOptions& options = {});

/// Classification through the cache, keyed by the canonical coefficient list.
GaloisIdentification cached_classify(const IntPoly& f, const GaloisConfig& config, ResultCache* cache);

/// Recomputes one cached classification from the report and compares the JSON
/// dumps. Returns an empty string on equality or when nothing is cached.
std::string verify_cache_entry(const TableReport& report, const GaloisConfig& config, std::uint64_t pick);

/// Re-validates the evidence of every Proven cell of a JSON report. Returns
/// one message per failing cell.
std::vector<std::string> replay_report(const nlohmann::json& report);

enum class OutputFormat { Text, Json, Csv };
OutputFormat parse_output_format(std::string_view name);

nlohmann::json to_json(const TableReport& report);
std::string emit(const TableReport& report, OutputFormat format);

}  // namespace galtrunc
