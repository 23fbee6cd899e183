#include "hgw/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "hgw/error.hpp"
#include "hgw/group_dsl.hpp"
#include "hgw/isomorphism.hpp"

namespace hgw {

namespace {

std::vector<CatalogEntry> make_entries() {
  // Orders 1-8, 12, 14, 21, 24 and 42 list every isomorphism type.
  return {
      {"C1", "C1", "1", 1},
      {"C2", "C2", "C2", 2},
      {"C3", "C3", "C3", 3},
      {"C4", "C4", "C4", 4},
      {"C2^2", "C2^2", "C2 × C2", 4},
      {"C5", "C5", "C5", 5},
      {"C6", "C6", "C6", 6},
      {"D3", "D3", "D3", 6},
      {"C7", "C7", "C7", 7},
      {"C8", "C8", "C8", 8},
      {"C4 x C2", "C4 x C2", "C4 × C2", 8},
      {"C2^3", "C2^3", "C2 × C2 × C2", 8},
      {"D4", "D4", "D4", 8},
      {"Q8", "Q8", "Q8", 8},
      {"C12", "C12", "C12", 12},
      {"C6 x C2", "C6 x C2", "C6 × C2", 12},
      {"D6", "D6", "D6", 12},
      {"A4", "A4", "A4", 12},
      {"C3:C4", "C3:C4", "C3 ⋊ C4", 12},
      {"C14", "C14", "C14", 14},
      {"D7", "D7", "D7", 14},
      {"C21", "C21", "C21", 21},
      {"C7:C3", "C7:C3", "C7 ⋊ C3", 21},
      {"C24", "C24", "C24", 24},
      {"C12 x C2", "C12 x C2", "C12 × C2", 24},
      {"C6 x C2^2", "C6 x C2^2", "C6 × C2 × C2", 24},
      {"S4", "S4", "S4", 24},
      {"SL(2,3)", "SL(2,3)", "SL(2,3)", 24},
      {"A4 x C2", "A4 x C2", "A4 × C2", 24},
      {"D12", "D12", "D12", 24},
      {"C3:C8", "C3:C8", "C3 ⋊ C8", 24},
      {"Dic6", "Dic6", "C3 ⋊ Q8", 24},
      {"C3 x Q8", "C3 x Q8", "C3 × Q8", 24},
      {"C3 x D4", "C3 x D4", "C3 × D4", 24},
      {"D3 x C4", "D3 x C4", "D3 × C4", 24},
      {"C3:C4 x C2", "C3:C4 x C2", "C2 × (C3 ⋊ C4)", 24},
      {"D3 x C2^2", "D3 x C2^2", "D3 × C2 × C2", 24},
      // The involution of C3 x C2^2 that inverts C3 and swaps two
      // involutions; the other two classes give D3 x C2^2 and C3 x D4.
      {"C3:D4", "sdp(C6 x C2, C2, 2, 2)", "C3 ⋊ D4", 24},
      {"C42", "C42", "C42", 42},
      {"C7 x D3", "C7 x D3", "C7 × D3", 42},
      {"C7:C3 x C2", "C7:C3 x C2", "C2 × (C7 ⋊ C3)", 42},
      {"C3 x D7", "C3 x D7", "C3 × D7", 42},
      {"D21", "D21", "D21", 42},
      {"(C7:C3):C2", "(C7:C3):C2", "(C7 ⋊ C3) ⋊ C2", 42},
  };
}

struct Built {
  CatalogEntry entry;
  GroupPtr group;
  Fingerprint print;
};

struct Catalog {
  std::vector<CatalogEntry> entries = make_entries();
  std::vector<Built> built;
  std::set<std::size_t> orders;

  Catalog() {
    for (const auto& e : entries) {
      auto g = std::make_shared<const FiniteGroup>(build_group(e.recipe).with_spec(e.name));
      if (g->order() != e.order) throw Error("catalog recipe has wrong order: " + e.name);
      built.push_back({e, g, fingerprint(*g)});
      orders.insert(e.order);
    }
  }
};

const Catalog& the_catalog() {
  static const Catalog instance;
  return instance;
}

std::string fingerprint_token(const Fingerprint& f) {
  std::ostringstream s;
  s << (f.abelian ? 'a' : 'n') << f.center_order << '.' << f.derived_order << '.';
  std::size_t h = 0;
  for (std::size_t k : f.element_orders) h = h * 131 + k;
  s << std::hex << (h & 0xffffffu);
  return s.str();
}

struct FallbackRegistry {
  std::mutex mutex;
  std::map<std::string, std::vector<GroupPtr>> by_token;
};

}  // namespace

const std::vector<CatalogEntry>& catalog() { return the_catalog().entries; }

bool catalog_covers(std::size_t order) { return the_catalog().orders.count(order) != 0; }

std::vector<GroupPtr> catalog_groups(std::size_t order) {
  std::vector<GroupPtr> out;
  for (const auto& b : the_catalog().built) {
    if (b.entry.order == order) out.push_back(b.group);
  }
  return out;
}

GroupPtr catalog_group(const std::string& name) {
  for (const auto& b : the_catalog().built) {
    if (b.entry.name == name) return b.group;
  }
  throw Error("unknown catalog group '" + name + "'");
}

std::string display_name(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e.display;
  }
  return name;
}

GroupClassLabel iso_class(const FiniteGroup& g) {
  const Fingerprint f = fingerprint(g);
  for (const auto& b : the_catalog().built) {
    if (b.entry.order != g.order() || !(b.print == f)) continue;
    if (is_isomorphic(g, *b.group)) return {b.entry.name, g.order()};
  }
  static FallbackRegistry registry;
  const std::string token = "order" + std::to_string(g.order()) + "#" + fingerprint_token(f);
  std::lock_guard lock(registry.mutex);
  auto& reps = registry.by_token[token];
  for (std::size_t j = 0; j < reps.size(); ++j) {
    if (is_isomorphic(g, *reps[j])) return {j == 0 ? token : token + "/" + std::to_string(j), g.order()};
  }
  reps.push_back(std::make_shared<const FiniteGroup>(g));
  std::size_t j = reps.size() - 1;
  return {j == 0 ? token : token + "/" + std::to_string(j), g.order()};
}

GroupClassLabel iso_class(const PermGroup& v) { return iso_class(to_finite_group(v)); }

}  // namespace hgw
