#include "hgw/hgs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "hgw/error.hpp"
#include "hgw/hom_search.hpp"
#include "hgw/holomorph_model.hpp"
#include "hgw/isomorphism.hpp"
#include "hgw/parallel.hpp"

namespace hgw {

namespace {

using Elem = HolomorphModel::Elem;

/// Rejects a partial map as soon as two elements send the identity of M to
/// the same point, which is semiregularity of the partial image.
struct BasePointChecker {
  std::vector<char> seen;
  void reset() { std::fill(seen.begin(), seen.end(), 0); }
  bool accept(Index, const Elem& e) {
    if (seen[e.m]) return false;
    seen[e.m] = 1;
    return true;
  }
};

struct SearchSpace {
  std::vector<Index> gens;
  std::vector<std::vector<Elem>> candidates;  // per generator
};

SearchSpace make_space(const FiniteGroup& g, const HolomorphModel& hol) {
  SearchSpace s;
  s.gens = generating_sequence(g);
  std::map<std::size_t, std::vector<Elem>> by_order;
  for (Index x : s.gens) {
    std::size_t k = g.element_order(x);
    if (!by_order.count(k)) by_order[k] = hol.semiregular_of_order(k);
    s.candidates.push_back(by_order[k]);
  }
  return s;
}

/// Aut(M)-conjugacy representatives among `elems`, in ascending order.
std::vector<Elem> aut_orbit_reps(const HolomorphModel& hol, const std::vector<Elem>& elems) {
  std::set<Elem> done;
  std::vector<Elem> reps;
  for (const Elem& e : elems) {
    if (done.count(e)) continue;
    reps.push_back(e);
    for (std::size_t phi = 0; phi < hol.aut_order(); ++phi) done.insert(hol.conj_by_aut(phi, e));
  }
  return reps;
}

/// Every embedding with the first generator sent to `first`, as image lists
/// indexed by G-element.
std::vector<std::vector<Elem>> search_from(const FiniteGroup& g, const HolomorphModel& hol,
                                           const SearchSpace& space, Elem first) {
  std::vector<std::vector<Elem>> found;
  if (space.gens.empty()) {
    found.push_back({hol.one()});
    return found;
  }
  BasePointChecker checker{std::vector<char>(hol.group().order(), 0)};
  auto candidates = [&](std::size_t level) -> const std::vector<Elem>& {
    return space.candidates[level];
  };
  auto complete = [&](const std::vector<Elem>& out) { found.push_back(out); };
  detail::HomSearch search(g, space.gens, hol, checker, candidates, complete);
  search.run_from(first);
  return found;
}

std::vector<Index> base_points(const std::vector<Elem>& images) {
  std::vector<Index> b(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) b[i] = images[i].m;
  return b;
}

/// b^-1 beta(g) b = lambda(g), i.e. beta(g)(b(h)) = b(g h).
void check_translation(const FiniteGroup& g, const HolomorphModel& hol,
                       const std::vector<Elem>& images) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t h = 0; h < g.order(); ++h) {
      if (hol.apply(images[x], images[h].m) != images[g.mul(static_cast<Index>(x), static_cast<Index>(h))].m) {
        throw TheoremViolation("transported embedding differs from lambda(G)");
      }
    }
  }
}

/// Elements of N = b^-1 lambda_M(M) b as permutations of G, sorted.
std::vector<Permutation> transported_elements(const FiniteGroup& m, const std::vector<Index>& b) {
  const std::size_t n = b.size();
  std::vector<Index> b_inv(n);
  for (std::size_t x = 0; x < n; ++x) b_inv[b[x]] = static_cast<Index>(x);
  std::vector<Permutation> elements;
  elements.reserve(n);
  std::vector<Point> images(n);
  for (std::size_t mm = 0; mm < n; ++mm) {
    for (std::size_t x = 0; x < n; ++x) images[x] = b_inv[m.mul(static_cast<Index>(mm), b[x])];
    elements.push_back(Permutation::from_images(images));
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

std::vector<Permutation> transported_generators(const FiniteGroup& m, const std::vector<Index>& b) {
  const std::size_t n = b.size();
  std::vector<Index> b_inv(n);
  for (std::size_t x = 0; x < n; ++x) b_inv[b[x]] = static_cast<Index>(x);
  std::vector<Permutation> gens;
  std::vector<Point> images(n);
  for (Index s : generating_sequence(m)) {
    for (std::size_t x = 0; x < n; ++x) images[x] = b_inv[m.mul(s, b[x])];
    gens.push_back(Permutation::from_images(images));
  }
  return gens;
}

void check_record(const HgsRecord& r, const std::string& expected_class) {
  if (!is_regular(r.n)) throw TheoremViolation("transported N is not regular");
  if (!normalizes(left_regular(*r.group), r.n)) {
    throw TheoremViolation("transported N is not normalized by lambda(G)");
  }
  if (r.n_class.name != expected_class) {
    throw TheoremViolation("transported N has class " + r.n_class.name + ", expected " + expected_class);
  }
}

}  // namespace

std::vector<Index> RegularEmbedding::base_map() const {
  std::vector<Index> b(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) b[i] = images[i](0);
  return b;
}

std::vector<RegularEmbedding> regular_embeddings(GroupPtr g, GroupPtr m, std::size_t threads) {
  if (g->order() != m->order()) throw Error("regular embedding needs |G| = |M|");
  HolomorphModel hol(m);
  SearchSpace space = make_space(*g, hol);
  const std::vector<Elem> firsts = space.gens.empty() ? std::vector<Elem>{hol.one()} : space.candidates[0];
  std::vector<std::vector<std::vector<Elem>>> parts(firsts.size());
  parallel_for(firsts.size(), threads, [&](std::size_t i) { parts[i] = search_from(*g, hol, space, firsts[i]); });
  std::vector<RegularEmbedding> out;
  for (const auto& part : parts) {
    for (const auto& images : part) {
      RegularEmbedding e{g, m, {}};
      e.images.reserve(images.size());
      for (const Elem& x : images) e.images.push_back(hol.to_permutation(x));
      out.push_back(std::move(e));
    }
  }
  return out;
}

HgsRecord transport(const RegularEmbedding& beta, std::size_t embedding_id) {
  const FiniteGroup& g = *beta.source;
  const FiniteGroup& m = *beta.target;
  if (beta.images.size() != g.order()) throw Error("embedding has wrong size");
  std::vector<Index> b = beta.base_map();
  std::vector<Index> b_inv(b.size());
  std::vector<char> hit(b.size(), 0);
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (hit[b[x]]) throw TheoremViolation("embedding image is not regular");
    hit[b[x]] = 1;
    b_inv[b[x]] = static_cast<Index>(x);
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t h = 0; h < g.order(); ++h) {
      if (b_inv[beta.images[x](b[h])] != g.mul(static_cast<Index>(x), static_cast<Index>(h))) {
        throw TheoremViolation("transported embedding differs from lambda(G)");
      }
    }
  }
  HgsRecord r;
  r.group = beta.source;
  r.n = PermGroup::from_elements(transported_generators(m, b), transported_elements(m, b), g.order());
  r.n_class = iso_class(r.n);
  r.provenance = {iso_class(m).name, embedding_id};
  check_record(r, r.provenance.m_class);
  return r;
}

HgsRecord make_record(GroupPtr g, PermGroup n, Provenance provenance) {
  HgsRecord r{std::move(g), std::move(n), {}, std::move(provenance)};
  r.n_class = iso_class(r.n);
  check_record(r, r.n_class.name);
  return r;
}

std::vector<HgsRecord> enumerate_hgs(GroupPtr g, std::size_t threads) {
  if (!catalog_covers(g->order())) {
    throw Error("catalog does not cover all groups of order " + std::to_string(g->order()));
  }
  if (g->order() > 48) throw Error("enumeration supports |G| <= 48");
  const auto models = catalog_groups(g->order());

  struct Task {
    std::size_t model;
    Elem first;
  };
  std::vector<HolomorphModel> hols;
  std::vector<SearchSpace> spaces;
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < models.size(); ++i) {
    hols.emplace_back(models[i]);
    spaces.push_back(make_space(*g, hols.back()));
  }
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (spaces[i].gens.empty()) {
      tasks.push_back({i, hols[i].one()});
      continue;
    }
    // Conjugating an embedding by Aut(M) leaves its N unchanged, so the
    // first generator only needs one image per Aut(M)-class.
    for (const Elem& rep : aut_orbit_reps(hols[i], spaces[i].candidates[0])) tasks.push_back({i, rep});
  }

  std::vector<std::vector<std::vector<Index>>> results(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    for (const auto& images : search_from(*g, hols[task.model], spaces[task.model], task.first)) {
      check_translation(*g, hols[task.model], images);
      results[t].push_back(base_points(images));
    }
  });

  std::vector<std::vector<std::vector<Index>>> unique_maps(models.size());
  std::vector<std::vector<std::size_t>> ids(models.size());
  {
    std::vector<std::set<std::vector<Permutation>>> seen(models.size());
    std::vector<std::size_t> counter(models.size(), 0);
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      const std::size_t i = tasks[t].model;
      for (const auto& b : results[t]) {
        if (seen[i].insert(transported_elements(*models[i], b)).second) {
          unique_maps[i].push_back(b);
          ids[i].push_back(counter[i]);
        }
        ++counter[i];
      }
    }
  }

  std::vector<HgsRecord> records;
  for (std::size_t i = 0; i < models.size(); ++i) {
    std::vector<HgsRecord> part(unique_maps[i].size());
    const std::string m_class = models[i]->spec();
    parallel_for(part.size(), threads, [&](std::size_t j) {
      const auto& b = unique_maps[i][j];
      HgsRecord r;
      r.group = g;
      r.n = PermGroup::from_elements(transported_generators(*models[i], b),
                                     transported_elements(*models[i], b), g->order());
      r.n_class = iso_class(r.n);
      r.provenance = {m_class, ids[i][j]};
      check_record(r, m_class);
      part[j] = std::move(r);
    });
    std::sort(part.begin(), part.end(), [](const HgsRecord& a, const HgsRecord& b) {
      return a.n.elements() < b.n.elements();
    });
    for (auto& r : part) records.push_back(std::move(r));
  }
  return records;
}

namespace {

/// Closure of `base` plus `extra` in Perm(n), abandoned as soon as it grows
/// past n elements or a non-identity element fixes a point.
bool semiregular_closure(const std::vector<Permutation>& base, const Permutation& extra, std::size_t n,
                         std::vector<Permutation>& out) {
  std::unordered_set<Permutation, PermutationHash> seen(base.begin(), base.end());
  out = base;
  std::vector<Permutation> gens;
  for (const auto& p : base) {
    if (!p.is_identity()) gens.push_back(p);
  }
  gens.push_back(extra);
  if (seen.insert(extra).second) out.push_back(extra);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      Permutation y = s * out[head];
      if (seen.count(y)) continue;
      if (!y.is_identity() && y.fixed_points() != 0) return false;
      seen.insert(y);
      out.push_back(std::move(y));
      if (out.size() > n) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<PermGroup> direct_enumerate_oracle(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 8) throw EnumerationOverflow("direct oracle supports |G| <= 8");

  // Semiregular permutations grouped by the image of point 0.
  std::vector<std::vector<Permutation>> by_image(n);
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  do {
    auto p = Permutation::from_images(images);
    if (p.is_identity()) continue;
    std::size_t k = p.order();
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      Point y = static_cast<Point>(x);
      std::size_t len = 0;
      do {
        y = p(y);
        ++len;
      } while (y != x);
      ok = len == k;
    }
    if (ok) by_image[p(0)].push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));

  std::set<std::vector<Permutation>> visited;
  std::set<std::vector<Permutation>> regular;
  std::vector<std::vector<Permutation>> stack{{Permutation::identity(n)}};
  while (!stack.empty()) {
    std::vector<Permutation> h = std::move(stack.back());
    stack.pop_back();
    if (h.size() == n) {
      std::sort(h.begin(), h.end());
      regular.insert(std::move(h));
      continue;
    }
    std::vector<char> covered(n, 0);
    for (const auto& p : h) covered[p(0)] = 1;
    std::size_t target = 0;
    while (covered[target]) ++target;
    std::vector<Permutation> next;
    for (const auto& s : by_image[target]) {
      if (!semiregular_closure(h, s, n, next)) continue;
      std::vector<Permutation> key = next;
      std::sort(key.begin(), key.end());
      if (visited.insert(key).second) stack.push_back(std::move(next));
    }
  }

  const PermGroup lambda = left_regular(g);
  std::vector<PermGroup> out;
  for (const auto& elems : regular) {
    auto gens = small_generating_set(elems, n);
    PermGroup v = PermGroup::from_elements(std::move(gens), elems, n);
    if (is_regular(v) && normalizes(lambda, v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<CountConsistency> count_consistency(GroupPtr g, const std::vector<HgsRecord>& records,
                                                std::size_t threads) {
  std::vector<CountConsistency> out;
  const std::size_t aut_g = automorphism_maps(*g).size();
  for (const GroupPtr& m : catalog_groups(g->order())) {
    CountConsistency c;
    c.m_class = m->spec();
    c.aut_g = aut_g;
    HolomorphModel hol(m);
    c.aut_m = hol.aut_order();
    for (const auto& r : records) c.structures += r.n_class.name == c.m_class;

    SearchSpace space = make_space(*g, hol);
    const std::vector<Elem> firsts = space.gens.empty() ? std::vector<Elem>{hol.one()} : space.candidates[0];
    std::vector<std::vector<std::vector<Elem>>> parts(firsts.size());
    parallel_for(firsts.size(), threads,
                 [&](std::size_t i) { parts[i] = search_from(*g, hol, space, firsts[i]); });
    std::set<std::vector<Elem>> images;
    for (auto& part : parts) {
      for (auto& emb : part) {
        ++c.embeddings;
        std::sort(emb.begin(), emb.end());
        images.insert(std::move(emb));
      }
    }
    c.regular_subgroups = images.size();
    out.push_back(c);
  }
  return out;
}

std::vector<std::pair<std::string, std::size_t>> type_counts(const FiniteGroup& g,
                                                             const std::vector<HgsRecord>& records) {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const GroupPtr& m : catalog_groups(g.order())) {
    std::size_t k = 0;
    for (const auto& r : records) k += r.n_class.name == m->spec();
    out.emplace_back(m->spec(), k);
  }
  return out;
}

}  // namespace hgw
