#include "hgw/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "hgw/error.hpp"

namespace hgw {

PermGroup PermGroup::closure(std::vector<Permutation> gens, std::size_t degree, std::size_t cap) {
  for (const auto& s : gens) {
    if (s.degree() != degree) throw Error("generator degree mismatch");
  }
  PermGroup out;
  out.degree_ = degree;
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> queue{Permutation::identity(degree)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : gens) {
      Permutation y = s * queue[head];
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          throw EnumerationOverflow("closure exceeded " + std::to_string(cap) + " elements");
        }
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  out.elements_ = std::move(queue);
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  out.generators_ = std::move(gens);
  return out;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> gens, std::vector<Permutation> elements,
                                   std::size_t degree) {
  PermGroup out;
  out.degree_ = degree;
  std::sort(elements.begin(), elements.end());
  out.elements_ = std::move(elements);
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  out.generators_ = std::move(gens);
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<Point> PermGroup::orbit(Point x) const {
  std::vector<bool> in(degree_, false);
  std::vector<Point> out;
  for (const auto& g : elements_) {
    Point y = g(x);
    if (!in[y]) {
      in[y] = true;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> done(degree_, false);
  std::vector<std::vector<Point>> out;
  for (std::size_t x = 0; x < degree_; ++x) {
    if (done[x]) continue;
    auto orb = orbit(static_cast<Point>(x));
    for (Point y : orb) done[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const PermGroup& v) {
  return v.degree() == 0 || v.orbit(0).size() == v.degree();
}

bool is_semiregular(const PermGroup& v) {
  for (std::size_t i = 1; i < v.order(); ++i) {
    if (v.elements()[i].fixed_points() != 0) return false;
  }
  return true;
}

bool is_regular(const PermGroup& v) { return is_semiregular(v) && v.order() == v.degree(); }

bool normalizes(const PermGroup& a, const PermGroup& b) {
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      if (!b.contains(x.conjugate(y))) return false;
    }
  }
  return true;
}

Permutation left_translation(const FiniteGroup& g, Index x) {
  std::vector<Point> images(g.order());
  for (std::size_t y = 0; y < g.order(); ++y) images[y] = g.mul(x, static_cast<Index>(y));
  return Permutation::from_images(std::move(images));
}

Permutation right_translation(const FiniteGroup& g, Index x) {
  std::vector<Point> images(g.order());
  Index xi = g.inv(x);
  for (std::size_t y = 0; y < g.order(); ++y) images[y] = g.mul(static_cast<Index>(y), xi);
  return Permutation::from_images(std::move(images));
}

namespace {

template <typename F>
PermGroup regular_image(const FiniteGroup& g, F translate) {
  std::vector<Permutation> elements;
  elements.reserve(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) elements.push_back(translate(g, static_cast<Index>(x)));
  std::vector<Permutation> gens;
  for (Index s : generating_sequence(g)) gens.push_back(translate(g, s));
  return PermGroup::from_elements(std::move(gens), std::move(elements), g.order());
}

}  // namespace

PermGroup left_regular(const FiniteGroup& g) { return regular_image(g, left_translation); }
PermGroup right_regular(const FiniteGroup& g) { return regular_image(g, right_translation); }

FiniteGroup to_finite_group(const PermGroup& v) {
  const std::size_t n = v.order();
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto k = v.index_of(v.elements()[i] * v.elements()[j]);
      if (!k) throw Error("permutation group is not closed");
      table[i * n + j] = static_cast<Index>(*k);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : v.elements()) labels.push_back(p.to_cycles());
  return FiniteGroup(n, std::move(table), "perm", std::move(labels));
}

PermGroup subgroup_perm_group(const PermGroup& v, const Subgroup& h) {
  std::vector<Permutation> elements, gens;
  for (Index m : h.members) elements.push_back(v.elements()[m]);
  for (Index s : h.generators) gens.push_back(v.elements()[s]);
  return PermGroup::from_elements(std::move(gens), std::move(elements), v.degree());
}

std::vector<Permutation> elements_by_point(const PermGroup& v) {
  if (!is_regular(v)) throw Error("group is not regular");
  std::vector<Permutation> by_point(v.degree());
  for (const auto& p : v.elements()) by_point[p(0)] = p;
  return by_point;
}

FiniteGroup regular_point_group(const PermGroup& v, std::string spec) {
  const std::size_t n = v.degree();
  const auto by_point = elements_by_point(v);
  std::vector<Index> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = by_point[x](static_cast<Point>(y));
  }
  return FiniteGroup(n, std::move(table), std::move(spec));
}

}  // namespace hgw
