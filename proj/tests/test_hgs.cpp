#include <algorithm>

#include "doctest.h"
#include "hgw/catalog.hpp"
#include "hgw/error.hpp"
#include "hgw/group_dsl.hpp"
#include "hgw/hgs.hpp"
#include "hgw/isomorphism.hpp"
#include "hgw/perm_group.hpp"

using namespace hgw;

namespace {

std::vector<std::vector<Permutation>> element_sets(const std::vector<HgsRecord>& records) {
  std::vector<std::vector<Permutation>> out;
  for (const auto& r : records) out.push_back(r.n.elements());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_of(const std::vector<std::pair<std::string, std::size_t>>& counts, const std::string& name) {
  for (const auto& [n, c] : counts)
    if (n == name) return c;
  return 0;
}

}  // namespace

TEST_CASE("holomorph enumeration equals the Perm(G) brute force up to order 8") {
  for (std::size_t k = 1; k <= 8; ++k) {
    for (const auto& g : catalog_groups(k)) {
      CAPTURE(g->spec());
      auto records = enumerate_hgs(g);
      std::vector<std::vector<Permutation>> oracle;
      for (const auto& n : direct_enumerate_oracle(*g)) oracle.push_back(n.elements());
      std::sort(oracle.begin(), oracle.end());
      CHECK(element_sets(records) == oracle);
    }
  }
}

TEST_CASE("known small counts") {
  auto s3 = enumerate_hgs(catalog_group("D3"));
  CHECK(s3.size() == 5);
  CHECK(count_of(type_counts(*catalog_group("D3"), s3), "C6") == 3);
  CHECK(count_of(type_counts(*catalog_group("D3"), s3), "D3") == 2);
  auto c6 = enumerate_hgs(catalog_group("C6"));
  CHECK(c6.size() == 3);
  CHECK(count_of(type_counts(*catalog_group("C6"), c6), "D3") == 2);
  CHECK(enumerate_hgs(catalog_group("C7")).size() == 1);
}

TEST_CASE("every record is regular, lambda(G)-normalized and correctly labelled") {
  for (const char* name : {"S4", "D21", "A4 x C2"}) {
    auto g = catalog_group(name);
    auto lam = left_regular(*g);
    auto records = enumerate_hgs(g, 2);
    for (const auto& r : records) {
      CHECK(is_regular(r.n));
      CHECK(normalizes(lam, r.n));
      CHECK(iso_class(r.n) == r.n_class);
      CHECK(r.n_class.name == r.provenance.m_class);
    }
    auto has = [&](const PermGroup& v) {
      return std::any_of(records.begin(), records.end(), [&](const HgsRecord& r) { return r.n == v; });
    };
    CHECK(has(lam));
    CHECK(has(right_regular(*g)));
  }
}

TEST_CASE("count identity holds at orders 8, 24 and 42") {
  for (std::size_t k : {8, 24, 42}) {
    for (const auto& g : catalog_groups(k)) {
      CAPTURE(g->spec());
      auto records = enumerate_hgs(g, 4);
      for (const auto& line : count_consistency(g, records, 4)) {
        CAPTURE(line.m_class);
        CHECK(line.holds());
      }
    }
  }
}

TEST_CASE("transporting lambda and rho returns lambda(G) and rho(G)") {
  auto g = catalog_group("C7:C3");
  RegularEmbedding lam{g, g, {}};
  RegularEmbedding rho{g, g, {}};
  for (Index x = 0; x < g->order(); ++x) {
    lam.images.push_back(left_translation(*g, x));
    rho.images.push_back(right_translation(*g, x));
  }
  auto b = rho.base_map();
  for (Index x = 0; x < g->order(); ++x) CHECK(b[x] == g->inv(x));
  CHECK(transport(lam).n == left_regular(*g));
  CHECK(transport(rho).n == right_regular(*g));

  auto embeddings = regular_embeddings(g, g);
  auto found = [&](const RegularEmbedding& e) {
    return std::any_of(embeddings.begin(), embeddings.end(),
                       [&](const RegularEmbedding& x) { return x.images == e.images; });
  };
  CHECK(found(lam));
  CHECK(found(rho));
}

TEST_CASE("enumeration is independent of the thread count") {
  auto g = catalog_group("C7:C3 x C2");
  auto a = enumerate_hgs(g, 1);
  auto b = enumerate_hgs(g, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].n_class == b[i].n_class);
    CHECK(a[i].provenance.embedding_id == b[i].provenance.embedding_id);
  }
}

TEST_CASE("degree 42 rows") {
  auto tally = [](const char* name) {
    auto g = catalog_group(name);
    auto counts = type_counts(*g, enumerate_hgs(g));
    std::vector<std::size_t> out;
    for (const auto& [n, c] : counts) out.push_back(c);
    return out;
  };
  CHECK(tally("C42") == std::vector<std::size_t>{1, 2, 4, 2, 4, 4});
  CHECK(tally("C7:C3 x C2") == std::vector<std::size_t>{7, 14, 16, 14, 28, 28});
  CHECK(tally("D21") == std::vector<std::size_t>{21, 14, 0, 6, 4, 0});
}

TEST_CASE("uncovered orders are refused") {
  CHECK_THROWS_AS((void)enumerate_hgs(make_group("C5 x C2")), Error);
}
