#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgw/correspondence.hpp"
#include "hgw/galois_model.hpp"
#include "hgw/hgs.hpp"

namespace hgw {

enum class Format { markdown, csv, json };

[[nodiscard]] Format parse_format(const std::string& s);
[[nodiscard]] std::string extension(Format f);

/// A rendered table. `columns`/`cells` drive Markdown and CSV; `records` is
/// the machine form written for JSON. Markdown cells use conventional group
/// notation, CSV and JSON the canonical ASCII names.
struct TableDocument {
  std::string kind;  // count-matrix-42, per-G-table, fixture-report, model-report, hgs-records
  Format format = Format::markdown;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> cells;
  nlohmann::json records = nlohmann::json::array();
  nlohmann::json meta = nlohmann::json::object();
};

[[nodiscard]] std::string render(const TableDocument& doc);
/// RFC 4180 field quoting.
[[nodiscard]] std::string csv_field(const std::string& s);

/// Enumeration and census of one order-42 group.
struct GroupCensus {
  GroupPtr group;
  std::vector<HgsRecord> records;
  Census census;
};

/// All six groups of order 42 in catalog order.
[[nodiscard]] std::vector<GroupCensus> compute_degree42(std::size_t threads = 1);
[[nodiscard]] GroupCensus compute_census(GroupPtr g, std::size_t threads = 1);

/// Count matrix: rows G, columns [N], cells "count {onto}" or "0".
[[nodiscard]] TableDocument emit_count_matrix_42(const std::vector<GroupCensus>& data, Format format);
[[nodiscard]] TableDocument emit_per_g_table(const GroupCensus& data, Format format);
[[nodiscard]] TableDocument emit_hgs_records(const FiniteGroup& g, const std::vector<HgsRecord>& records,
                                             Format format);
[[nodiscard]] TableDocument emit_model_report(const ModelReport& report, Format format);

/// Rebuilds records from the JSON form of emit_hgs_records.
[[nodiscard]] std::vector<HgsRecord> parse_hgs_records(const std::string& json_text, GroupPtr g);
/// Rebuilds rows from the JSON form of emit_per_g_table.
[[nodiscard]] std::vector<CorrespondenceRow> parse_correspondence_rows(const std::string& json_text);

/// File stem used by `table42 --out`, e.g. "G_C7C3xC2".
[[nodiscard]] std::string file_stem(const std::string& class_name);

struct FixtureReport {
  TableDocument doc;
  std::size_t core_order = 0;
  std::size_t blocks = 0;
  double seconds = 0;
};

/// Root of the bundled fixtures, one subdirectory per fixture.
[[nodiscard]] std::filesystem::path default_fixture_dir();

/// Degree-24 fixture: G = S4 and N = A4 x C2 acting regularly, P = C2^3.
/// Throws FixtureFailure naming the first check that fails.
[[nodiscard]] FixtureReport run_fixture_paper24(Format format,
                                                const std::filesystem::path& dir = default_fixture_dir() / "paper24");

/// Reads one permutation per nonblank line, 1-based cycle notation.
[[nodiscard]] std::vector<Permutation> read_generators(const std::filesystem::path& file, std::size_t degree);
/// Reads one 1-based point set per nonblank line, converted to 0-based and sorted.
[[nodiscard]] std::vector<std::vector<Point>> read_point_sets(const std::filesystem::path& file);

}  // namespace hgw
