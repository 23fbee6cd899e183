#include "hgw/isomorphism.hpp"

#include <algorithm>

#include "hgw/error.hpp"
#include "hgw/hom_search.hpp"

namespace hgw {

namespace {

struct TableTarget {
  using Elem = Index;
  const FiniteGroup& g;
  [[nodiscard]] Elem one() const { return 0; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const { return g.mul(a, b); }
};

struct InjectiveChecker {
  std::vector<char> seen;
  void reset() { std::fill(seen.begin(), seen.end(), 0); }
  bool accept(Index, Index image) {
    if (seen[image]) return false;
    seen[image] = 1;
    return true;
  }
};

}  // namespace

Fingerprint fingerprint(const FiniteGroup& g) {
  Fingerprint f;
  f.order = g.order();
  for (std::size_t x = 0; x < g.order(); ++x) f.element_orders.push_back(g.element_order(static_cast<Index>(x)));
  std::sort(f.element_orders.begin(), f.element_orders.end());
  f.abelian = g.is_abelian();
  f.center_order = center(g).order();
  f.derived_order = derived_subgroup(g).order();
  return f;
}

std::vector<GroupMap> isomorphisms(const FiniteGroup& a, const FiniteGroup& b, std::size_t limit) {
  std::vector<GroupMap> result;
  if (a.order() != b.order() || limit == 0) return result;
  if (!(fingerprint(a) == fingerprint(b))) return result;

  std::vector<Index> gens = generating_sequence(a);
  std::vector<std::vector<Index>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t y = 0; y < b.order(); ++y) {
      if (b.element_order(static_cast<Index>(y)) == a.element_order(gens[i])) {
        cands[i].push_back(static_cast<Index>(y));
      }
    }
  }
  TableTarget target{b};
  InjectiveChecker checker{std::vector<char>(b.order(), 0)};
  bool stop = false;
  auto candidates = [&](std::size_t level) -> const std::vector<Index>& {
    static const std::vector<Index> empty;
    return stop ? empty : cands[level];
  };
  auto complete = [&](const std::vector<Index>& out) {
    if (stop) return;
    result.push_back(out);
    if (result.size() >= limit) stop = true;
  };
  detail::HomSearch search(a, gens, target, checker, candidates, complete);
  search.run();
  return result;
}

std::optional<GroupMap> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  auto found = isomorphisms(a, b, 1);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  return find_isomorphism(a, b).has_value();
}

bool is_isomorphic(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  return is_isomorphic(to_finite_group(a), to_finite_group(b));
}

std::vector<GroupMap> automorphism_maps(const FiniteGroup& m) {
  auto maps = isomorphisms(m, m);
  std::sort(maps.begin(), maps.end());
  return maps;
}

std::vector<Permutation> small_generating_set(const std::vector<Permutation>& elements,
                                              std::size_t degree) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::closure({}, degree);
  for (const auto& p : elements) {
    if (current.order() == elements.size()) break;
    if (current.contains(p)) continue;
    gens.push_back(p);
    current = PermGroup::closure(gens, degree);
  }
  return gens;
}

PermGroup automorphisms(const FiniteGroup& m) {
  std::vector<Permutation> elements;
  for (auto& map : automorphism_maps(m)) {
    elements.push_back(Permutation::from_images(std::vector<Point>(map.begin(), map.end())));
  }
  auto gens = small_generating_set(elements, m.order());
  return PermGroup::from_elements(std::move(gens), std::move(elements), m.order());
}

PermGroup holomorph(const FiniteGroup& m) {
  PermGroup aut = automorphisms(m);
  std::vector<Permutation> gens;
  for (Index s : generating_sequence(m)) gens.push_back(left_translation(m, s));
  for (const auto& a : aut.generators()) gens.push_back(a);
  PermGroup hol = PermGroup::closure(std::move(gens), m.order());
  if (hol.order() != m.order() * aut.order()) {
    throw TheoremViolation("holomorph order differs from |M|*|Aut(M)|");
  }
  return hol;
}

}  // namespace hgw
