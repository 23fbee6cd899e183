#include "hgw/reporting.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hgw/catalog.hpp"
#include "hgw/error.hpp"

namespace hgw {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "md" || s == "markdown") return Format::markdown;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError("unknown format '" + s + "' (expected md, csv or json)");
}

std::string extension(Format f) {
  switch (f) {
    case Format::markdown: return "md";
    case Format::csv: return "csv";
    case Format::json: return "json";
  }
  return "txt";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

namespace {

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render(const TableDocument& doc) {
  std::ostringstream os;
  switch (doc.format) {
    case Format::markdown: {
      if (!doc.title.empty()) os << "### " << doc.title << "\n\n";
      os << '|';
      for (const auto& c : doc.columns) os << ' ' << md_cell(c) << " |";
      os << "\n|";
      for (std::size_t i = 0; i < doc.columns.size(); ++i) os << "---|";
      os << '\n';
      for (const auto& row : doc.cells) {
        os << '|';
        for (const auto& c : row) os << ' ' << md_cell(c) << " |";
        os << '\n';
      }
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << csv_field(doc.columns[i]);
      os << '\n';
      for (const auto& row : doc.cells) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
      }
      break;
    }
    case Format::json: {
      json j;
      j["kind"] = doc.kind;
      j["title"] = doc.title;
      j["meta"] = doc.meta;
      j["rows"] = doc.records;
      os << j.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

namespace {

std::string class_cell(const std::string& name, Format f) {
  return f == Format::markdown ? display_name(name) : name;
}

std::string normality_cell(const CorrespondenceRow& r) {
  return r.j_normal ? "J ⊴ G" : "|I|=" + std::to_string(r.core_order);
}

}  // namespace

GroupCensus compute_census(GroupPtr g, std::size_t threads) {
  GroupCensus c;
  c.group = g;
  c.records = enumerate_hgs(g, threads);
  c.census = census(c.records, threads);
  return c;
}

std::vector<GroupCensus> compute_degree42(std::size_t threads) {
  std::vector<GroupCensus> out;
  for (const GroupPtr& g : catalog_groups(42)) out.push_back(compute_census(g, threads));
  return out;
}

TableDocument emit_count_matrix_42(const std::vector<GroupCensus>& data, Format format) {
  const auto groups = catalog_groups(42);
  if (data.size() != groups.size()) throw Error("count matrix needs all six groups of order 42");
  TableDocument doc;
  doc.kind = "count-matrix-42";
  doc.format = format;
  doc.title = "Hopf-Galois structures of degree 42 by type of N, with onto counts in braces";
  doc.columns.push_back(format == Format::markdown ? "G \\ N" : "G");
  for (const auto& m : groups) doc.columns.push_back(class_cell(m->spec(), format));
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const GroupCensus& gc = data[i];
    if (gc.group->spec() != groups[i]->spec()) throw Error("count matrix rows out of catalog order");
    std::vector<std::string> row{class_cell(gc.group->spec(), format)};
    json rec;
    rec["G"] = gc.group->spec();
    json cols = json::object();
    for (const auto& oc : gc.census.onto) {
      row.push_back(oc.structures == 0 ? "0"
                                       : std::to_string(oc.structures) + " {" + std::to_string(oc.onto) + "}");
      cols[oc.n_class] = {{"count", oc.structures}, {"onto", oc.onto}};
    }
    rec["N"] = cols;
    doc.cells.push_back(std::move(row));
    doc.records.push_back(std::move(rec));
  }
  return doc;
}

TableDocument emit_per_g_table(const GroupCensus& data, Format format) {
  TableDocument doc;
  doc.kind = "per-G-table";
  doc.format = format;
  doc.title = "G = " + class_cell(data.group->spec(), format);
  doc.meta["G"] = data.group->spec();
  if (format == Format::markdown) {
    doc.columns = {"#N", "[N]", "[P]", "[J]", "J normal in G or not"};
  } else {
    doc.columns = {"count", "N_class", "P_class", "J_class", "J_normal", "core_order"};
  }
  for (const auto& r : data.census.rows) {
    if (format == Format::markdown) {
      doc.cells.push_back({std::to_string(r.count), class_cell(r.n_class.name, format),
                           class_cell(r.p_class.name, format), class_cell(r.j_class.name, format),
                           normality_cell(r)});
    } else {
      doc.cells.push_back({std::to_string(r.count), r.n_class.name, r.p_class.name, r.j_class.name,
                           r.j_normal ? "true" : "false", std::to_string(r.core_order)});
    }
    doc.records.push_back({{"count", r.count},
                           {"N_class", r.n_class.name},
                           {"P_class", r.p_class.name},
                           {"J_class", r.j_class.name},
                           {"J_normal", r.j_normal},
                           {"core_order", r.core_order}});
  }
  return doc;
}

TableDocument emit_hgs_records(const FiniteGroup& g, const std::vector<HgsRecord>& records, Format format) {
  TableDocument doc;
  doc.kind = "hgs-records";
  doc.format = format;
  doc.title = "Hopf-Galois structures for G = " + class_cell(g.spec(), format);
  doc.meta["G"] = g.spec();
  doc.meta["order"] = g.order();
  doc.meta["total"] = records.size();
  doc.columns = {"index", "N_class", "order", "provenance", "generator_cycles"};
  for (std::size_t i = 0; i < records.size(); ++i) {
    const HgsRecord& r = records[i];
    json gens = json::array();
    std::string joined;
    for (const auto& p : r.n.generators()) {
      gens.push_back(p.to_cycles(true));
      joined += (joined.empty() ? "" : " ") + p.to_cycles(true);
    }
    if (joined.empty()) joined = "()";
    const std::string prov = r.provenance.m_class + "#" + std::to_string(r.provenance.embedding_id);
    doc.cells.push_back({std::to_string(i), class_cell(r.n_class.name, format), std::to_string(r.n.order()), prov,
                         format == Format::markdown ? "`" + joined + "`" : joined});
    doc.records.push_back({{"index", i},
                           {"N_class", r.n_class.name},
                           {"order", r.n.order()},
                           {"provenance", {{"m_class", r.provenance.m_class}, {"embedding_id", r.provenance.embedding_id}}},
                           {"generator_cycles", gens}});
  }
  return doc;
}

TableDocument emit_model_report(const ModelReport& report, Format format) {
  TableDocument doc;
  doc.kind = "model-report";
  doc.format = format;
  doc.title = "F_" + std::to_string(report.p) + "^" + std::to_string(report.n) + " over F_" +
              std::to_string(report.p);
  doc.meta["p"] = report.p;
  doc.meta["n"] = report.n;
  doc.meta["modulus"] = report.modulus;
  doc.meta["structures"] = report.structures;
  doc.meta["passed"] = report.passed();
  doc.columns = {"check", "passed", "cases", "detail"};
  for (const auto& c : report.checks) {
    doc.cells.push_back({c.name, c.passed ? "pass" : "FAIL", std::to_string(c.cases), c.detail});
    doc.records.push_back({{"check", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
  }
  return doc;
}

std::vector<HgsRecord> parse_hgs_records(const std::string& json_text, GroupPtr g) {
  const json j = json::parse(json_text);
  std::vector<HgsRecord> out;
  for (const auto& row : j.at("rows")) {
    std::vector<Permutation> gens;
    for (const auto& c : row.at("generator_cycles")) {
      gens.push_back(Permutation::from_cycles(c.get<std::string>(), g->order(), true));
    }
    PermGroup n = PermGroup::closure(gens, g->order());
    Provenance prov{row.at("provenance").at("m_class").get<std::string>(),
                    row.at("provenance").at("embedding_id").get<std::size_t>()};
    HgsRecord r = make_record(g, std::move(n), std::move(prov));
    if (r.n_class.name != row.at("N_class").get<std::string>()) throw Error("class mismatch on import");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CorrespondenceRow> parse_correspondence_rows(const std::string& json_text) {
  const json j = json::parse(json_text);
  std::vector<CorrespondenceRow> out;
  auto label = [](const json& v) {
    GroupClassLabel l{v.get<std::string>(), 0};
    if (auto g = catalog_group(l.name)) l.order = g->order();
    return l;
  };
  for (const auto& row : j.at("rows")) {
    CorrespondenceRow r;
    r.count = row.at("count").get<std::size_t>();
    r.n_class = label(row.at("N_class"));
    r.p_class = label(row.at("P_class"));
    r.j_class = label(row.at("J_class"));
    r.j_normal = row.at("J_normal").get<bool>();
    r.core_order = row.at("core_order").get<std::size_t>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string file_stem(const std::string& class_name) {
  std::string s = "G_";
  for (char c : class_name) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      s += c;
    } else if (c == ')') {
      s += '_';
    }
  }
  return s;
}

std::filesystem::path default_fixture_dir() { return std::filesystem::path(HGW_FIXTURE_DIR); }

std::vector<Permutation> read_generators(const std::filesystem::path& file, std::size_t degree) {
  std::ifstream in(file);
  if (!in) throw FixtureFailure("cannot open " + file.string());
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    out.push_back(Permutation::from_cycles(line, degree, true));
  }
  return out;
}

std::vector<std::vector<Point>> read_point_sets(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw FixtureFailure("cannot open " + file.string());
  std::vector<std::vector<Point>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    std::istringstream is(line);
    std::vector<Point> set;
    long v;
    while (is >> v) {
      if (v < 1) throw FixtureFailure("point sets are 1-based");
      set.push_back(static_cast<Point>(v - 1));
    }
    std::sort(set.begin(), set.end());
    out.push_back(std::move(set));
  }
  return out;
}

namespace {

std::string one_based(const std::vector<Point>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::vector<std::vector<Point>> sorted_sets(std::vector<std::vector<Point>> v) {
  for (auto& s : v) std::sort(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

FixtureReport run_fixture_paper24(Format format, const std::filesystem::path& dir) {
  const auto start = std::chrono::steady_clock::now();
  constexpr std::size_t degree = 24;
  FixtureReport rep;
  TableDocument& doc = rep.doc;
  doc.kind = "fixture-report";
  doc.format = format;
  doc.title = "Degree-24 example: G = S4, N = A4 x C2, P = C2^3";
  doc.columns = {"check", "result", "detail"};
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    doc.cells.push_back({name, ok ? "pass" : "FAIL", detail});
    doc.records.push_back({{"check", name}, {"passed", ok}, {"detail", detail}});
    if (!ok) throw FixtureFailure(name + ": " + detail);
  };

  const PermGroup g_perm = PermGroup::closure(read_generators(dir / "G.txt", degree), degree);
  const PermGroup n_perm = PermGroup::closure(read_generators(dir / "N.txt", degree), degree);
  const PermGroup p_perm = PermGroup::closure(read_generators(dir / "P.txt", degree), degree);

  record("G regular", is_regular(g_perm), "|G| = " + std::to_string(g_perm.order()));
  const GroupClassLabel g_class = iso_class(g_perm);
  record("G = S4", g_class.name == "S4", g_class.name);
  // Point x stands for the element of G sending point 1 to x, so lambda(G)
  // is the printed G itself.
  const auto g = std::make_shared<const FiniteGroup>(regular_point_group(g_perm, "S4"));
  record("lambda(G) = G", left_regular(*g) == g_perm, "identity element at point 1");

  const GroupClassLabel n_class = iso_class(n_perm);
  record("N regular", is_regular(n_perm), "|N| = " + std::to_string(n_perm.order()));
  record("N = A4 x C2", n_class.name == "A4 x C2", n_class.name);
  record("G normalizes N", normalizes(g_perm, n_perm), "");

  const GroupClassLabel p_class = iso_class(p_perm);
  record("P = C2^3", p_class.name == "C2^3", p_class.name + ", |P| = " + std::to_string(p_perm.order()));
  record("P normal in N", normalizes(n_perm, p_perm) && std::all_of(p_perm.elements().begin(), p_perm.elements().end(),
                                                                     [&](const Permutation& x) { return n_perm.contains(x); }),
         "");
  record("G normalizes P", normalizes(g_perm, p_perm), "");

  const ViewPtr view = make_view(make_record(g, n_perm, {"fixture", 0}));
  std::vector<Index> p_points;
  for (const auto& x : p_perm.elements()) p_points.push_back(x(0));
  std::sort(p_points.begin(), p_points.end());
  const auto stable = stable_subgroups(view);
  auto it = std::find_if(stable.begin(), stable.end(), [&](const StableSubgroup& s) { return s.p.members == p_points; });
  record("P among stable subgroups of N", it != stable.end(), std::to_string(stable.size()) + " stable subgroups");
  const StableSubgroup& p = *it;
  record("P normal in N (abstract)", p.normal_in_n, "");

  const PsiResult j = psi(p);
  rep.core_order = j.core_order;
  record("|Psi(P)| = 8", j.j.order() == 8, "[J] = " + j.j_class.name);
  record("Psi(P) not normal", !j.normal_in_g, "|I| = " + std::to_string(j.core_order));
  std::size_t normal8 = 0;
  for (const auto& h : subgroups(*g)) normal8 += h.order() == 8 && is_normal(*g, h);
  record("G has no normal subgroup of order 8", normal8 == 0, "");

  const auto printed_p = sorted_sets(read_point_sets(dir / "P_orbits.txt"));
  const auto p_orbits = sorted_sets(p_perm.orbits());
  for (std::size_t k = 0; k < std::max(printed_p.size(), p_orbits.size()); ++k) {
    const bool same = k < printed_p.size() && k < p_orbits.size() && printed_p[k] == p_orbits[k];
    record("P-orbit " + std::to_string(k + 1), same,
           k < p_orbits.size() ? one_based(p_orbits[k]) : std::string("missing"));
  }
  record("P-orbits are left cosets of J", orbit_coset_check(p, j), "");

  // lambda(J) orbits are the right cosets Jx.
  std::vector<Permutation> lambda_j;
  for (Index t : j.j.members) lambda_j.push_back(left_translation(*g, t));
  const PermGroup lj = PermGroup::from_elements(lambda_j, lambda_j, degree);
  const auto j_orbits = sorted_sets(lj.orbits());
  const auto printed_j = sorted_sets(read_point_sets(dir / "J_orbits.txt"));
  record("lambda(J)-orbits match the printed J orbits", j_orbits == printed_j,
         j_orbits.size() > 1 ? one_based(j_orbits[1]) : std::string());
  std::size_t shared = 0;
  for (const auto& o : j_orbits) shared += std::count(p_orbits.begin(), p_orbits.end(), o);
  record("right and left cosets differ off the identity block", shared == 1,
         std::to_string(shared) + " orbit in common");

  const QuotientHGS q = quotient_structure(p, j);
  rep.blocks = q.space.size();
  const GroupClassLabel nbar_class = iso_class(q.nbar);
  record("quotient on 3 blocks", q.space.size() == 3, "blocks of size " + std::to_string(q.space.blocks[0].size()));
  record("N/P = C3 regular on blocks", nbar_class.name == "C3" && is_regular(q.nbar), nbar_class.name);
  record("G transitive, not regular, on blocks", is_transitive(q.gbar) && !is_regular(q.gbar),
         "|Gbar| = " + std::to_string(q.gbar.order()));

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  doc.meta["core_order"] = rep.core_order;
  doc.meta["blocks"] = rep.blocks;
  doc.meta["J_class"] = j.j_class.name;
  return rep;
}

}  // namespace hgw
