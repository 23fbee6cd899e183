#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hgw/catalog.hpp"
#include "hgw/cli.hpp"
#include "hgw/error.hpp"
#include "hgw/reporting.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace hgw;
namespace fs = std::filesystem;

namespace {

int run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "hgw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

fs::path scratch_dir(const std::string& name) {
  auto d = fs::temp_directory_path() / ("hgw_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

const std::vector<GroupCensus>& degree42() {
  static const auto data = compute_degree42(4);
  return data;
}

}  // namespace

TEST_CASE("formats and CSV quoting") {
  CHECK(parse_format("md") == Format::markdown);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  CHECK_THROWS_AS((void)parse_format("xml"), UsageError);
  CHECK(extension(Format::csv) == "csv");
  CHECK(csv_field("C42") == "C42");
  CHECK(csv_field("1 {1}") == "1 {1}");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("file stems") {
  CHECK(file_stem("C42") == "G_C42");
  CHECK(file_stem("C7:C3 x C2") == "G_C7C3xC2");
  CHECK(file_stem("(C7:C3):C2") == "G_C7C3_C2");
  CHECK(file_stem("C7 x D3") == "G_C7xD3");
}

TEST_CASE("count matrix cells") {
  const auto& data = degree42();
  auto csv = emit_count_matrix_42(data, Format::csv);
  REQUIRE(csv.cells.size() == 6);
  CHECK(csv.cells[0][0] == "C42");
  CHECK(csv.cells[0][1] == "1 {1}");
  CHECK(csv.cells[1][3] == "0");
  CHECK(csv.cells[1][1] == "3 {0}");
  auto md = emit_count_matrix_42(data, Format::markdown);
  CHECK(md.columns[3] == "C2 × (C7 ⋊ C3)");
  CHECK(render(md).find("| C42 | 1 {1} | 2 {1} | 4 {2} | 2 {1} | 4 {1} | 4 {2} |") != std::string::npos);

  auto m = oracle::read_matrix(fs::path(HGW_FIXTURE_DIR) / "census42" / "matrix.tsv");
  for (std::size_t r = 0; r < 6; ++r) {
    CHECK(csv.cells[r][0] == m.groups[r]);
    for (std::size_t c = 0; c < 6; ++c) {
      auto [count, onto] = m.cells[r][c];
      CHECK(csv.cells[r][c + 1] == (count == 0 ? "0" : std::to_string(count) + " {" + std::to_string(onto) + "}"));
    }
  }
}

TEST_CASE("tables render identically across runs and thread counts") {
  auto serial = compute_degree42(1);
  const auto& parallel = degree42();
  for (auto f : {Format::markdown, Format::csv, Format::json}) {
    CHECK(render(emit_count_matrix_42(serial, f)) == render(emit_count_matrix_42(parallel, f)));
    CHECK(render(emit_count_matrix_42(serial, f)) == render(emit_count_matrix_42(serial, f)));
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(render(emit_per_g_table(serial[i], f)) == render(emit_per_g_table(parallel[i], f)));
      CHECK(render(emit_hgs_records(*serial[i].group, serial[i].records, f)) ==
            render(emit_hgs_records(*parallel[i].group, parallel[i].records, f)));
    }
  }
}

TEST_CASE("per-G tables round trip through JSON") {
  for (const auto& d : degree42()) {
    auto text = render(emit_per_g_table(d, Format::json));
    CHECK(parse_correspondence_rows(text) == d.census.rows);
    auto json = nlohmann::json::parse(text);
    CHECK(json["kind"] == "per-G-table");
  }
  auto md = render(emit_per_g_table(degree42()[4], Format::markdown));
  CHECK(md.find("\\|I\\|=7") != std::string::npos);
  CHECK(md.find("J ⊴ G") != std::string::npos);
}

TEST_CASE("structure records round trip through JSON") {
  const auto& d = degree42()[4];
  auto text = render(emit_hgs_records(*d.group, d.records, Format::json));
  auto back = parse_hgs_records(text, d.group);
  REQUIRE(back.size() == d.records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].n == d.records[i].n);
    CHECK(back[i].n_class == d.records[i].n_class);
    CHECK(back[i].provenance.m_class == d.records[i].provenance.m_class);
    CHECK(back[i].provenance.embedding_id == d.records[i].provenance.embedding_id);
  }
  CHECK(nlohmann::json::parse(text)["meta"]["total"] == 45);
  CHECK_THROWS((void)parse_hgs_records("{\"rows\": 3}", d.group));
}

TEST_CASE("degree-24 fixture") {
  auto rep = run_fixture_paper24(Format::markdown);
  CHECK(rep.core_order == 4);
  CHECK(rep.blocks == 3);
  CHECK(rep.seconds < 10.0);
  auto text = render(rep.doc);
  CHECK(text.find("| fail |") == std::string::npos);
  auto json = nlohmann::json::parse(render(run_fixture_paper24(Format::json).doc));
  CHECK(json["meta"]["core_order"] == 4);
  CHECK(json["meta"]["J_class"] == "D4");

  auto pts = read_point_sets(default_fixture_dir() / "paper24" / "P_orbits.txt");
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == std::vector<Point>{0, 1, 3, 4, 6, 7, 11, 15});
}

TEST_CASE("a corrupted fixture fails loudly") {
  auto dir = scratch_dir("fixture");
  for (const auto& e : fs::directory_iterator(default_fixture_dir() / "paper24"))
    fs::copy_file(e.path(), dir / e.path().filename());
  {
    std::ofstream out(dir / "P_orbits.txt");
    out << "1 2 4 5 7 8 12 3\n16 10 11 13 19 20 21 24\n6 9 14 15 17 18 22 23\n";
  }
  CHECK_THROWS_AS((void)run_fixture_paper24(Format::markdown, dir), FixtureFailure);
  fs::remove(dir / "N.txt");
  CHECK_THROWS_AS((void)run_fixture_paper24(Format::markdown, dir), FixtureFailure);
  fs::remove_all(dir);
}

TEST_CASE("command line") {
  std::string out;
  CHECK(run({"verify", "--fixture", "paper24"}, &out) == 0);
  CHECK(out.find("pass") != std::string::npos);

  CHECK(run({"enum", "--group", "D21", "--json"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["meta"]["total"] == 45);
  CHECK(run({"enum", "--group", "D3", "--format", "csv"}, &out) == 0);
  CHECK(out.rfind("index,", 0) == 0);

  CHECK(run({"correspond", "--group", "C42", "--csv", "--threads", "2"}, &out) == 0);
  CHECK(run({"model", "--p", "11", "--n", "4", "--json"}, &out) == 0);
  CHECK(nlohmann::json::parse(out)["meta"]["passed"] == true);

  auto dir = scratch_dir("table42");
  CHECK(run({"table42", "--out", dir.string(), "--threads", "4"}, &out) == 0);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 7);
  CHECK(fs::exists(dir / "matrix.md"));
  CHECK(fs::exists(dir / "G_C7C3_C2.md"));
  fs::remove_all(dir);

  CHECK(run({"bogus"}) == 2);
  CHECK(run({}) == 2);
  CHECK(run({"enum", "--group", "D21", "--format", "xml"}) == 2);
  CHECK(run({"enum"}) == 2);
  CHECK(run({"enum", "--group", "C"}) == 2);
  CHECK(run({"model", "--checks", "nope"}) == 2);
  CHECK(run({"verify", "--fixture", "paper24", "--fixture-dir", "/nonexistent"}) == 1);
  CHECK(run({"enum", "--group", "C5 x C2"}) == 1);
}
