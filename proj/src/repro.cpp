#include "galtrunc/repro.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "galtrunc/pade.hpp"

namespace galtrunc {

using nlohmann::json;

namespace {

constexpr TableId kTables[] = {TableId::ExpPade,    TableId::InvSqrtPade, TableId::InvSqrtTrunc,
                               TableId::Atanh2Pade, TableId::SinSinh,     TableId::SchurTrunc};

CellSource parse_source(const std::string& s) {
  if (s == "pade-numerator") return CellSource::PadeNumerator;
  if (s == "pade-denominator") return CellSource::PadeDenominator;
  if (s == "truncation") return CellSource::Truncation;
  if (s == "scaled-truncation") return CellSource::ScaledTruncation;
  throw Error("unknown cell source '" + s + "'");
}

Requirement parse_requirement(const std::string& s) {
  if (s == "Proven") return Requirement::Proven;
  if (s == "Heuristic") return Requirement::Heuristic;
  if (s == "Consistent") return Requirement::Consistent;
  throw Error("unknown requirement '" + s + "'");
}

std::string requirement_name(Requirement r) {
  switch (r) {
    case Requirement::Proven: return "Proven";
    case Requirement::Heuristic: return "Heuristic";
    case Requirement::Consistent: return "Consistent";
  }
  return "Proven";
}

const json& tables_json() {
  static const json j = json::parse(tables_text());
  return j;
}

std::string stage_name(CellSource s) {
  switch (s) {
    case CellSource::PadeNumerator:
    case CellSource::PadeDenominator: return "pade";
    case CellSource::Truncation:
    case CellSource::ScaledTruncation: return "truncation";
  }
  return "input";
}

}  // namespace

std::span<const TableId> all_tables() { return kTables; }

std::string_view cli_name(TableId id) {
  switch (id) {
    case TableId::ExpPade: return "exp-pade";
    case TableId::InvSqrtPade: return "invsqrt-pade";
    case TableId::InvSqrtTrunc: return "invsqrt-trunc";
    case TableId::Atanh2Pade: return "atanh2-pade";
    case TableId::SinSinh: return "sin-sinh";
    case TableId::SchurTrunc: return "schur-trunc";
  }
  return "?";
}

std::optional<TableId> parse_table_id(std::string_view name) {
  for (auto id : kTables) {
    if (cli_name(id) == name) return id;
  }
  return std::nullopt;
}

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Proven: return "proven";
    case CellStatus::Consistent: return "consistent";
    case CellStatus::Mismatch: return "mismatch";
    case CellStatus::Error: return "error";
  }
  return "error";
}

TableSpec table_spec(TableId id) {
  const json& t = tables_json().at("tables").at(std::string(cli_name(id)));
  TableSpec spec;
  spec.id = id;
  spec.title = t.at("title").get<std::string>();
  auto series = parse_series(t.at("series").get<std::string>());
  require(series.has_value(), "unknown series in table data");
  spec.series = *series;
  spec.row_label = t.value("row_label", "n");
  for (const auto& c : t.at("columns")) spec.columns.push_back({c.at("label").get<std::string>(), parse_source(c.at("source").get<std::string>())});
  for (const auto& r : t.at("rows")) {
    TableRow row;
    row.n = r.at("n").get<unsigned>();
    for (const auto& c : r.at("cells")) {
      ExpectedCell cell;
      cell.group = c.at("group").get<std::string>();
      cell.require = parse_requirement(c.at("require").get<std::string>());
      cell.locator = c.at("locator").get<std::string>();
      cell.order = c.value("order", row.n);
      row.cells.push_back(std::move(cell));
    }
    require(row.cells.size() == spec.columns.size(), "table row width differs from the column count");
    spec.rows.push_back(std::move(row));
  }
  return spec;
}

IntPoly cell_polynomial(SeriesId series, CellSource source, unsigned order) {
  switch (source) {
    case CellSource::PadeNumerator: return pade_diagonal(series, order).numerator;
    case CellSource::PadeDenominator: return pade_diagonal(series, order).denominator;
    case CellSource::Truncation: return primitive_integer(taylor(series, order)).primitive;
    case CellSource::ScaledTruncation:
      require(series == SeriesId::Exp, "scaled truncation is defined for exp only");
      return scale_to_monic_integer(order);
  }
  throw Error("unknown cell source");
}

bool decomposes_into_d4_blocks(const std::vector<int>& parts_in) {
  std::vector<int> parts = parts_in;
  std::sort(parts.rbegin(), parts.rend());
  if (parts.empty()) return true;
  const int a = parts.front();
  auto without = [&](std::vector<int> remove) -> std::optional<std::vector<int>> {
    std::vector<int> rest = parts;
    for (int r : remove) {
      auto it = std::find(rest.begin(), rest.end(), r);
      if (it == rest.end()) return std::nullopt;
      rest.erase(it);
    }
    return rest;
  };
  std::vector<std::vector<int>> options;
  if (a % 4 == 0) options.push_back({a});
  if (a % 2 == 0) {
    options.push_back({a, a});
    options.push_back({a, a / 2, a / 2});
  }
  options.push_back({a, a, a, a});
  for (const auto& opt : options) {
    if (auto rest = without(opt); rest && decomposes_into_d4_blocks(*rest)) return true;
  }
  return false;
}

ConsistencyCheck sin_sinh_consistency(const GaloisIdentification& id) {
  ConsistencyCheck out;
  const Evidence* w = id.find("wreath");
  const Evidence* s = id.find("samples");
  if (!w || !s) {
    out.detail = "no wreath evidence";
    return out;
  }
  const json& d = w->data;
  if (!d.value("detected", false) || d.value("block_size", 0) != 4 || d.value("shift", -1) != 0) {
    out.detail = "not a polynomial in x^4";
    return out;
  }
  if (id.degree % 4 != 0) {
    out.detail = "degree not divisible by 4";
    return out;
  }
  const unsigned long m = static_cast<unsigned long>(id.degree / 4);
  const BigInt bound = 2 * ipow(BigInt(4), m) * factorial(m);
  const std::uint64_t lower = d.value("order_lower_bound", std::uint64_t{1});
  if (lower == 0 || bound % BigInt(static_cast<unsigned long>(lower)) != 0) {
    out.detail = "element order lcm " + std::to_string(lower) + " does not divide " + to_string(bound);
    return out;
  }
  std::size_t types = 0;
  for (const auto& [text, count] : s->data.at("tally").items()) {
    (void)count;
    CycleType ct = CycleType::parse(text);
    if (!decomposes_into_d4_blocks(ct.parts())) {
      out.detail = "cycle type " + text + " does not split into blocks of four";
      return out;
    }
    ++types;
  }
  if (types == 0) {
    out.detail = "no Frobenius samples";
    return out;
  }
  out.ok = true;
  out.detail = std::to_string(types) + " cycle types fit " + std::to_string(m) + " blocks of four; element order lcm " +
               std::to_string(lower) + " divides " + to_string(bound);
  return out;
}

GaloisIdentification cached_classify(const IntPoly& f, const GaloisConfig& config, ResultCache* cache) {
  auto compute = [&] { return to_json(classify(f, config)); };
  if (!cache || !cache->enabled()) return galois_from_json(compute());
  json input{{"polynomial", coefficient_strings(f)},
             {"prime_bound", config.prime_bound},
             {"min_samples", config.min_heuristic_samples}};
  return galois_from_json(cache->get_or_compute("classify", input, compute));
}

namespace {

void evaluate(CellResult& cell, bool verify) {
  const auto& id = *cell.identification;
  const ExpectedCell& e = cell.expected;
  if (e.require == Requirement::Consistent) {
    auto c = sin_sinh_consistency(id);
    cell.status = c.ok ? CellStatus::Consistent : CellStatus::Mismatch;
    cell.message = c.detail;
    return;
  }
  if (canonical_group_name(id.group_name) != canonical_group_name(e.group)) {
    cell.status = CellStatus::Mismatch;
    cell.message = "observed " + (id.group_name.empty() ? std::string("nothing") : id.group_name) + ", expected " + e.group;
    return;
  }
  const int need = e.require == Requirement::Proven ? 3 : 1;
  if (id.certainty.rank() < need) {
    cell.status = CellStatus::Mismatch;
    cell.message = "certainty " + to_string(id.certainty.tag) + " below " + requirement_name(e.require);
    return;
  }
  cell.status = id.certainty.tag == CertaintyTag::Proven ? CellStatus::Proven : CellStatus::Consistent;
  if (cell.status == CellStatus::Consistent) {
    cell.message = std::to_string(id.certainty.sample_count) + " good primes below " + std::to_string(id.certainty.prime_bound);
  }
  if (cell.status == CellStatus::Proven && verify) {
    if (auto msg = verify_identification(id); !msg.empty()) {
      cell.status = CellStatus::Mismatch;
      cell.message = "evidence does not re-validate: " + msg;
    }
  }
}

}  // namespace

TableReport reproduce(TableId id, const ReproOptions& options) {
  TableReport report;
  report.spec = table_spec(id);
  const TableSpec& spec = report.spec;
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    RowResult row;
    row.n = spec.rows[r].n;
    for (std::size_t c = 0; c < spec.columns.size(); ++c) {
      CellResult cell;
      cell.expected = spec.rows[r].cells[c];
      cell.order = cell.expected.order;
      row.cells.push_back(std::move(cell));
      tasks.emplace_back(r, c);
    }
    report.rows.push_back(std::move(row));
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      auto [r, c] = tasks[t];
      CellResult& cell = report.rows[r].cells[c];
      const CellSource source = spec.columns[c].source;
      std::string stage = stage_name(source);
      try {
        cell.polynomial = cell_polynomial(spec.series, source, cell.order);
        require(cell.polynomial.degree() >= 1, "constant polynomial");
        stage = "galois";
        cell.identification = cached_classify(cell.polynomial, options.galois, options.cache);
        cell.degree = cell.identification->degree;
        stage = "verify";
        evaluate(cell, options.verify);
      } catch (const std::exception& ex) {
        cell.status = CellStatus::Error;
        cell.message = "order " + std::to_string(cell.order) + ", stage " + stage + ": " + ex.what();
      }
    }
  };
  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& row : report.rows) {
    for (const auto& cell : row.cells) {
      switch (cell.status) {
        case CellStatus::Proven:
        case CellStatus::Consistent: ++report.passed; break;
        case CellStatus::Mismatch: ++report.mismatched; break;
        case CellStatus::Error: ++report.errors; break;
      }
    }
  }
  return report;
}

std::string verify_cache_entry(const TableReport& report, const GaloisConfig& config, std::uint64_t pick) {
  std::vector<const CellResult*> cells;
  for (const auto& row : report.rows) {
    for (const auto& cell : row.cells) {
      if (cell.identification) cells.push_back(&cell);
    }
  }
  if (cells.empty()) return "";
  const CellResult& cell = *cells[pick % cells.size()];
  std::string fresh = to_json(classify(cell.polynomial, config)).dump();
  std::string stored = to_json(*cell.identification).dump();
  if (fresh != stored) return "cached classification of order " + std::to_string(cell.order) + " differs from recomputation";
  return "";
}

std::vector<std::string> replay_report(const json& report) {
  std::vector<std::string> failures;
  for (const auto& row : report.at("rows")) {
    for (const auto& cell : row.at("cells")) {
      if (cell.at("status").get<std::string>() != "proven") continue;
      const std::string where = "n=" + std::to_string(row.at("n").get<unsigned>()) + " " + cell.at("label").get<std::string>();
      try {
        auto id = galois_from_json(cell.at("identification"));
        if (canonical_group_name(id.group_name) != canonical_group_name(cell.at("expected").get<std::string>())) {
          failures.push_back(where + ": verdict differs from the expected group");
        } else if (auto msg = verify_identification(id); !msg.empty()) {
          failures.push_back(where + ": " + msg);
        }
      } catch (const std::exception& ex) {
        failures.push_back(where + ": " + ex.what());
      }
    }
  }
  return failures;
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw Error("unknown output format '" + std::string(name) + "'");
}

json to_json(const TableReport& report) {
  const TableSpec& spec = report.spec;
  json columns = json::array();
  for (const auto& c : spec.columns) columns.push_back(c.label);
  json rows = json::array();
  for (const auto& row : report.rows) {
    json cells = json::array();
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const CellResult& cell = row.cells[c];
      json j{{"label", spec.columns[c].label},
             {"order", cell.order},
             {"degree", cell.degree},
             {"expected", cell.expected.group},
             {"require", requirement_name(cell.expected.require)},
             {"locator", cell.expected.locator},
             {"status", to_string(cell.status)},
             {"message", cell.message}};
      if (cell.identification) {
        j["observed"] = cell.identification->group_name;
        j["t_notation"] = cell.identification->t_notation ? json(*cell.identification->t_notation) : json(nullptr);
        j["certainty"] = to_string(cell.identification->certainty.tag);
        j["identification"] = to_json(*cell.identification);
      } else {
        j["observed"] = nullptr;
        j["t_notation"] = nullptr;
        j["certainty"] = nullptr;
      }
      cells.push_back(std::move(j));
    }
    rows.push_back(json{{"n", row.n}, {"cells", cells}});
  }
  return json{{"schema", "galtrunc.report/1"},
              {"table", cli_name(spec.id)},
              {"title", spec.title},
              {"row_label", spec.row_label},
              {"columns", columns},
              {"rows", rows},
              {"summary",
               {{"cells", report.passed + report.mismatched + report.errors},
                {"passed", report.passed},
                {"mismatched", report.mismatched},
                {"errors", report.errors},
                {"ok", report.ok()}}}};
}

namespace {

std::string observed_name(const CellResult& cell) {
  if (!cell.identification) return "?";
  const auto& id = *cell.identification;
  return id.group_name.empty() ? "?" : id.group_name;
}

std::string emit_text(const TableReport& report) {
  const TableSpec& spec = report.spec;
  std::ostringstream out;
  out << cli_name(spec.id) << ": " << spec.title << "\n\n";
  // Grid with one column per order and one row per polynomial, as printed.
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{spec.row_label};
  for (const auto& row : report.rows) header.push_back(std::to_string(row.n));
  grid.push_back(header);
  for (std::size_t c = 0; c < spec.columns.size(); ++c) {
    std::vector<std::string> line{spec.columns[c].label};
    for (const auto& row : report.rows) line.push_back(observed_name(row.cells[c]));
    grid.push_back(line);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i + 1 == line.size()) {
        out << line[i];
      } else {
        out << std::left << std::setw(static_cast<int>(width[i])) << line[i] << "  ";
      }
    }
    out << "\n";
  }
  out << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const CellResult& cell = row.cells[c];
      out << spec.row_label << "=" << row.n << " " << spec.columns[c].label << ": " << to_string(cell.status) << "  observed "
          << observed_name(cell);
      if (cell.identification) {
        out << " [" << to_string(cell.identification->certainty.tag) << ", degree " << cell.degree << "]";
      }
      out << "  expected " << cell.expected.group << " [" << requirement_name(cell.expected.require) << "]";
      if (!cell.message.empty()) out << "  (" << cell.message << ")";
      out << "\n";
    }
  }
  out << "\nsummary: " << report.passed << " passed, " << report.mismatched << " mismatched, " << report.errors
      << " errors\n";
  return out.str();
}

std::string emit_csv(const TableReport& report) {
  const TableSpec& spec = report.spec;
  std::ostringstream out;
  out << spec.row_label;
  for (const auto& c : spec.columns) out << "," << c.label << ",certainty";
  out << "\n";
  for (const auto& row : report.rows) {
    out << row.n;
    for (const auto& cell : row.cells) {
      std::string tag = cell.identification ? to_string(cell.identification->certainty.tag) : "Error";
      out << "," << (cell.identification ? cell.identification->group_name : std::string()) << "," << tag;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string emit(const TableReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return emit_text(report);
    case OutputFormat::Json: return to_json(report).dump(2) + "\n";
    case OutputFormat::Csv: return emit_csv(report);
  }
  throw Error("unknown output format");
}

}  // namespace galtrunc
