#include "hgw/finite_group.hpp"

#include <algorithm>
#include <set>

#include "hgw/error.hpp"

namespace hgw {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Index> table, std::string spec,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), spec_(std::move(spec)), labels_(std::move(labels)) {
  if (order_ == 0 || table_.size() != order_ * order_) {
    throw Error("Cayley table has wrong size");
  }
  std::vector<bool> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < order_; ++b) {
      Index c = table_[a * order_ + b];
      if (c >= order_ || seen[c]) throw Error("Cayley table row is not a permutation");
      seen[c] = true;
    }
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul(0, static_cast<Index>(a)) != a || mul(static_cast<Index>(a), 0) != a) {
      throw Error("index 0 is not the identity");
    }
  }
  inverse_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (table_[a * order_ + b] == 0) {
        inverse_[a] = static_cast<Index>(b);
        break;
      }
    }
  }
  element_orders_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::size_t k = 1;
    for (Index x = static_cast<Index>(a); x != 0; x = mul(x, static_cast<Index>(a))) ++k;
    element_orders_[a] = k;
  }
  if (labels_.empty()) {
    labels_.reserve(order_);
    for (std::size_t a = 0; a < order_; ++a) labels_.push_back(std::to_string(a));
  } else if (labels_.size() != order_) {
    throw Error("label count does not match group order");
  }
}

Index FiniteGroup::power(Index a, long k) const {
  long n = static_cast<long>(element_orders_[a]);
  k %= n;
  if (k < 0) k += n;
  Index r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

bool FiniteGroup::verify_associativity() const noexcept {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      Index ab = table_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c) {
        if (table_[ab * order_ + c] != table_[a * order_ + table_[b * order_ + c]]) return false;
      }
    }
  }
  return true;
}

bool Subgroup::contains(Index x) const noexcept {
  return std::binary_search(members.begin(), members.end(), x);
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members < b.members;
}

Subgroup generate(const FiniteGroup& g, std::span<const Index> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Index> queue{0};
  in[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Index x = queue[head];
    for (Index s : gens) {
      Index y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  Subgroup h;
  h.generators.assign(gens.begin(), gens.end());
  std::sort(queue.begin(), queue.end());
  h.members = std::move(queue);
  return h;
}

Subgroup whole_group(const FiniteGroup& g) {
  auto gens = generating_sequence(g);
  return generate(g, gens);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return generate(g, std::span<const Index>{}); }

bool is_subgroup(const FiniteGroup& g, std::span<const Index> members) {
  if (members.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (Index x : members) in[x] = true;
  for (Index a : members) {
    if (!in[g.inv(a)]) return false;
    for (Index b : members) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    throw EnumerationOverflow("subgroup enumeration cap exceeded (order " +
                              std::to_string(g.order()) + ")");
  }
  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup h) {
    if (seen.insert(h.members).second) found.push_back(std::move(h));
  };
  add(trivial_subgroup(g));
  for (std::size_t x = 1; x < g.order(); ++x) {
    Index gen = static_cast<Index>(x);
    add(generate(g, std::span<const Index>(&gen, 1)));
  }
  // Extend each known subgroup by one outside element until no new
  // subgroups appear. New entries are appended, so one pass reaches the
  // fixpoint.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (found[i].contains(static_cast<Index>(x))) continue;
      std::vector<Index> gens = found[i].generators;
      gens.push_back(static_cast<Index>(x));
      add(generate(g, gens));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

bool normalizes(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  for (Index x : a.generators) {
    for (Index y : b.generators) {
      if (!b.contains(g.conj(x, y))) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Index y : h.generators) {
      if (!h.contains(g.conj(static_cast<Index>(x), y))) return false;
    }
  }
  return true;
}

Subgroup core_of(const FiniteGroup& g, const Subgroup& j) {
  std::vector<bool> in(g.order(), true);
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<bool> conj_set(g.order(), false);
    for (Index m : j.members) conj_set[g.conj(static_cast<Index>(x), m)] = true;
    for (std::size_t y = 0; y < g.order(); ++y) in[y] = in[y] && conj_set[y];
  }
  std::vector<Index> gens;
  for (std::size_t y = 0; y < g.order(); ++y) {
    if (in[y]) gens.push_back(static_cast<Index>(y));
  }
  return generate(g, gens);
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Index> gens;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < g.order() && central; ++y) {
      central = g.mul(static_cast<Index>(x), static_cast<Index>(y)) ==
                g.mul(static_cast<Index>(y), static_cast<Index>(x));
    }
    if (central) gens.push_back(static_cast<Index>(x));
  }
  return generate(g, gens);
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<bool> is_comm(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) {
      Index a = static_cast<Index>(x), b = static_cast<Index>(y);
      is_comm[g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))] = true;
    }
  }
  std::vector<Index> gens;
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (is_comm[x]) gens.push_back(static_cast<Index>(x));
  }
  return generate(g, gens);
}

std::vector<Index> generating_sequence(const FiniteGroup& g) {
  std::vector<Index> gens;
  Subgroup current = trivial_subgroup(g);
  while (current.order() < g.order()) {
    Index best = 0;
    std::size_t best_order = 0;
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (current.contains(static_cast<Index>(x))) continue;
      if (g.element_order(static_cast<Index>(x)) > best_order) {
        best_order = g.element_order(static_cast<Index>(x));
        best = static_cast<Index>(x);
      }
    }
    gens.push_back(best);
    current = generate(g, gens);
  }
  return gens;
}

FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t n = h.order();
  std::vector<Index> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[h.members[i]] = static_cast<Index>(i);
  std::vector<Index> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = local[g.mul(h.members[i], h.members[j])];
    }
  }
  std::vector<std::string> labels;
  for (Index m : h.members) labels.push_back(g.label(m));
  return FiniteGroup(n, std::move(table), g.spec() + " subgroup", std::move(labels));
}

}  // namespace hgw
