#include <algorithm>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "hgw/catalog.hpp"
#include "hgw/correspondence.hpp"
#include "hgw/error.hpp"
#include "hgw/group_dsl.hpp"
#include "hgw/isomorphism.hpp"
#include "oracles.hpp"

using namespace hgw;

namespace {

ViewPtr rho_view(const GroupPtr& g) {
  return make_view(make_record(g, right_regular(*g), {iso_class(*g).name, 0}));
}

}  // namespace

TEST_CASE("for rho(G) every subgroup is stable and Psi(rho(J)) = J") {
  for (const char* name : {"S4", "D21", "Q8", "A4"}) {
    auto g = catalog_group(name);
    auto view = rho_view(g);
    auto stable = stable_subgroups(view);
    auto subs = subgroups(*g);
    CHECK(stable.size() == subs.size());
    std::set<std::vector<Index>> images;
    for (const auto& p : stable) {
      auto j = psi(p);
      CHECK(j.j.order() == p.p.order());
      CHECK(orbit_coset_check(p, j));
      images.insert(j.j.members);
      // rho(J) sends the identity to J^-1 = J, so Psi(rho(J)) is J itself.
      std::set<Index> orbit;
      for (const auto& q : p.permutations()) orbit.insert(q(0));
      CHECK(std::vector<Index>(orbit.begin(), orbit.end()) == j.j.members);
    }
    CHECK(images.size() == subs.size());
    CHECK(psi_onto(view, subs));
  }
}

TEST_CASE("Psi of the trivial subgroup and of N") {
  auto g = catalog_group("D21");
  for (const auto& r : enumerate_hgs(g)) {
    auto stable = stable_subgroups(r);
    REQUIRE(stable.size() >= 2);
    auto first = psi(stable.front());
    auto last = psi(stable.back());
    CHECK(first.j.order() == 1);
    CHECK(last.j.order() == g->order());
    CHECK(last.normal_in_g);
  }
}

TEST_CASE("Psi is injective and onto only sometimes") {
  auto g = catalog_group("C7 x D3");
  std::size_t onto_c42 = 0, c42 = 0;
  for (const auto& r : enumerate_hgs(g)) {
    auto view = make_view(r);
    auto report = analyze_structure(view, subgroups(*g));
    CHECK(report.psi_injective);
    CHECK(report.orbit_cosets);
    if (r.n_class.name == "C42") {
      ++c42;
      onto_c42 += report.onto;
    }
  }
  CHECK(c42 == 3);
  CHECK(onto_c42 == 0);
}

TEST_CASE("coset spaces") {
  auto g = catalog_group("S4");
  auto whole = coset_space(*g, whole_group(*g));
  CHECK(whole.size() == 1);
  auto triv = coset_space(*g, trivial_subgroup(*g));
  CHECK(triv.size() == 24);
  for (const auto& j : subgroups(*g)) {
    auto s = coset_space(*g, j);
    CHECK(s.size() * j.order() == g->order());
    CHECK(s.blocks[0] == j.members);
    CHECK(s.representatives[0] == 0);
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(s.representatives[k] == s.blocks[k].front());
      for (auto x : s.blocks[k]) CHECK(s.block_of[x] == k);
      if (k > 0) CHECK(s.representatives[k - 1] < s.representatives[k]);
    }
    for (Index x = 0; x < g->order(); ++x) (void)induced_block_perm(left_translation(*g, x), s);
  }
}

TEST_CASE("a permutation that breaks the blocks is reported with its block") {
  auto g = catalog_group("S4");
  Subgroup j;
  for (const auto& h : subgroups(*g))
    if (h.order() == 8) {
      j = h;
      break;
    }
  auto s = coset_space(*g, j);
  REQUIRE(s.size() == 3);
  auto deg = g->order();
  auto swap = [&](Point a, Point b) {
    std::vector<Point> im(deg);
    for (std::size_t i = 0; i < deg; ++i) im[i] = static_cast<Point>(i);
    std::swap(im[a], im[b]);
    return Permutation::from_images(im);
  };
  // Swapping inside one block keeps every block in place.
  auto inside = swap(static_cast<Point>(s.blocks[1][0]), static_cast<Point>(s.blocks[1][1]));
  CHECK(induced_block_perm(inside, s).is_identity());
  auto across = swap(static_cast<Point>(s.blocks[1][0]), static_cast<Point>(s.blocks[2][0]));
  try {
    (void)induced_block_perm(across, s);
    FAIL("expected a block violation");
  } catch (const BlockViolation& e) {
    CHECK(e.block() == 1);
  }
}

TEST_CASE("D21 quotient with N = C42, P = C6") {
  auto g = catalog_group("D21");
  bool seen = false;
  for (const auto& r : enumerate_hgs(g)) {
    if (r.n_class.name != "C42") continue;
    for (const auto& p : stable_subgroups(r)) {
      if (!p.normal_in_n || p.p_class().name != "C6") continue;
      auto j = psi(p);
      CHECK(j.j_class.name == "D3");
      CHECK_FALSE(j.normal_in_g);
      CHECK(j.core_order == 3);
      auto q = quotient_structure(p, j);
      CHECK(q.space.size() == 7);
      CHECK(iso_class(q.nbar).name == "C7");
      CHECK(is_regular(q.nbar));
      CHECK(is_transitive(q.gbar));
      CHECK_FALSE(is_regular(q.gbar));
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("P = N gives a single block and a trivial quotient") {
  auto g = catalog_group("C7:C3 x C2");
  auto r = enumerate_hgs(g).back();
  auto stable = stable_subgroups(r);
  auto q = quotient_structure(stable.back(), psi(stable.back()));
  CHECK(q.space.size() == 1);
  CHECK(q.nbar.order() == 1);
  CHECK(q.gbar.order() == 1);
}

TEST_CASE("lambda(J) triviality on the quotient holds exactly when J is normal") {
  // For J not normal, lambda(t) for t in J moves the coset gJ whenever
  // g^-1 t g leaves J; the core I always acts trivially.
  std::size_t normal = 0, normal_ok = 0, other = 0, other_ok = 0, core_ok = 0, pairs = 0;
  for (const char* name : {"D21", "(C7:C3):C2", "S4"}) {
    auto g = catalog_group(name);
    for (const auto& r : enumerate_hgs(g)) {
      auto view = make_view(r);
      for (const auto& p : stable_subgroups(view)) {
        if (!p.normal_in_n) continue;
        auto j = psi(p);
        auto space = coset_space(*g, j.j);
        bool all_j = std::all_of(j.j.members.begin(), j.j.members.end(),
                                 [&](Index t) { return acts_trivially_on_quotient(p, space, t); });
        auto core = core_of(*g, j.j);
        bool all_i = std::all_of(core.members.begin(), core.members.end(),
                                 [&](Index t) { return acts_trivially_on_quotient(p, space, t); });
        ++pairs;
        core_ok += all_i;
        if (j.normal_in_g) {
          ++normal;
          normal_ok += all_j;
        } else {
          ++other;
          other_ok += all_j;
        }
      }
    }
  }
  CHECK(normal_ok == normal);
  CHECK(other > 0);
  CHECK(other_ok == 0);
  CHECK(core_ok == pairs);
}

TEST_CASE("order-24 census is internally consistent") {
  for (const char* name : {"S4", "SL(2,3)", "A4 x C2", "C24"}) {
    auto g = catalog_group(name);
    auto records = enumerate_hgs(g, 2);
    auto c = census(records, 2);
    std::size_t total = 0;
    for (const auto& o : c.onto) {
      CHECK(o.onto <= o.structures);
      total += o.structures;
    }
    CHECK(total == records.size());
    for (const auto& rep : c.reports) {
      CHECK(rep.psi_injective);
      CHECK(rep.orbit_cosets);
      CHECK(rep.quotients_checked == rep.normal_stable);
    }
    if (std::string(name) == "C24")
      for (const auto& row : c.rows) CHECK(row.j_normal);
  }
}

TEST_CASE("order-42 census rows match the stored tables") {
  auto dir = std::filesystem::path(HGW_FIXTURE_DIR) / "census42";
  for (const char* stem : {"C42", "C7xD3", "C7C3xC2", "C3xD7", "D21", "C7C3_C2"}) {
    auto [name, expected] = oracle::read_census(dir / (std::string(stem) + ".tsv"));
    CAPTURE(name);
    std::vector<oracle::CensusLine> got;
    for (const auto& r : correspondence_rows(catalog_group(name), 4))
      got.push_back({r.count, r.n_class.name, r.p_class.name, r.j_class.name,
                     r.j_normal ? "normal" : "I=" + std::to_string(r.core_order)});
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}

TEST_CASE("census rows keep the named examples") {
  auto rows = correspondence_rows(catalog_group("D21"));
  CHECK(std::count(rows.begin(), rows.end(),
                   CorrespondenceRow{21, {"C42", 42}, {"C14", 14}, {"D7", 14}, false, 7}) == 1);
  auto f42 = correspondence_rows(catalog_group("(C7:C3):C2"));
  CHECK(std::count(f42.begin(), f42.end(),
                   CorrespondenceRow{7, {"C42", 42}, {"C6", 6}, {"C6", 6}, false, 1}) == 1);
  // For G = C42 the subgroup of N = C3 x D7 is D7 and its image is C14, not
  // the other way round.
  auto c42 = correspondence_rows(catalog_group("C42"));
  CHECK(std::count(c42.begin(), c42.end(),
                   CorrespondenceRow{2, {"C3 x D7", 42}, {"D7", 14}, {"C14", 14}, true, 14}) == 1);
  CHECK(std::none_of(c42.begin(), c42.end(), [](const CorrespondenceRow& r) {
    return r.p_class.name == "C14" && r.j_class.name == "D7";
  }));
  CHECK(aggregate_rows({}).empty());
  CHECK(class_less({"C2", 2}, {"C3", 3}));
  CHECK(class_less({"C42", 42}, {"D21", 42}));
}
