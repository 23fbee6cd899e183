#include "hgw/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hgw/error.hpp"
#include "hgw/group_dsl.hpp"
#include "hgw/reporting.hpp"

namespace hgw {

namespace {

struct FormatFlags {
  std::string format = "md";
  bool json = false;
  bool csv = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: md, csv or json");
    cmd->add_flag("--json", json, "Shorthand for --format json");
    cmd->add_flag("--csv", csv, "Shorthand for --format csv");
  }
  [[nodiscard]] Format resolve() const {
    if (json && csv) throw UsageError("--json and --csv are exclusive");
    if (json) return Format::json;
    if (csv) return Format::csv;
    return parse_format(format);
  }
};

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate Hopf-Galois structures and their subgroup correspondence", "hgw"};
  app.require_subcommand(1, 1);

  std::string group;
  std::size_t threads = 1;
  std::string out_dir;
  std::string fixture;
  std::string fixture_dir;
  unsigned p = 11;
  std::size_t n = 6;
  std::vector<std::string> checks{"all"};
  FormatFlags fmt;

  auto* enum_cmd = app.add_subcommand("enum", "List every regular N normalized by lambda(G)");
  auto* corr_cmd = app.add_subcommand("correspond", "Census of (N, P, Psi(P)) for P normal in N");
  auto* t42_cmd = app.add_subcommand("table42", "Count matrix and census tables for the groups of order 42");
  auto* verify_cmd = app.add_subcommand("verify", "Run a bundled fixture end to end");
  auto* model_cmd = app.add_subcommand("model", "Check the Hopf algebra statements over F_p^n / F_p");

  for (auto* cmd : {enum_cmd, corr_cmd}) {
    cmd->add_option("--group", group, "Group expression, e.g. D21 or 'C7:C3 x C2'")->required();
  }
  for (auto* cmd : {enum_cmd, corr_cmd, t42_cmd, verify_cmd, model_cmd}) {
    fmt.attach(cmd);
    cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  }
  t42_cmd->add_option("--out", out_dir, "Directory receiving the seven table files");
  verify_cmd->add_option("--fixture", fixture, "Fixture name")->required()->check(CLI::IsMember({"paper24"}));
  verify_cmd->add_option("--fixture-dir", fixture_dir, "Directory holding the fixture files (default: bundled)");
  model_cmd->add_option("--p", p, "Characteristic");
  model_cmd->add_option("--n", n, "Extension degree");
  model_cmd->add_option("--checks", checks, "all, fix, rank, exact, fixedsum")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    const Format format = fmt.resolve();
    if (*enum_cmd) {
      const GroupPtr g = make_group(group);
      out << render(emit_hgs_records(*g, enumerate_hgs(g, threads), format));
      return 0;
    }
    if (*corr_cmd) {
      out << render(emit_per_g_table(compute_census(make_group(group), threads), format));
      return 0;
    }
    if (*t42_cmd) {
      const auto data = compute_degree42(threads);
      std::vector<std::pair<std::string, TableDocument>> docs;
      docs.emplace_back("matrix", emit_count_matrix_42(data, format));
      for (const auto& gc : data) docs.emplace_back(file_stem(gc.group->spec()), emit_per_g_table(gc, format));
      if (out_dir.empty()) {
        for (const auto& [stem, doc] : docs) out << render(doc) << '\n';
        return 0;
      }
      std::filesystem::create_directories(out_dir);
      for (const auto& [stem, doc] : docs) {
        const auto path = std::filesystem::path(out_dir) / (stem + "." + extension(format));
        write_file(path, render(doc));
        out << path.string() << '\n';
      }
      return 0;
    }
    if (*verify_cmd) {
      const auto dir = fixture_dir.empty() ? default_fixture_dir() / fixture : std::filesystem::path(fixture_dir);
      out << render(run_fixture_paper24(format, dir).doc);
      return 0;
    }
    if (*model_cmd) {
      const ModelReport rep = run_model_checks(p, n, checks, threads);
      out << render(emit_model_report(rep, format));
      return rep.passed() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace hgw
