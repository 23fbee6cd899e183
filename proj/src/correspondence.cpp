#include "hgw/correspondence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "hgw/error.hpp"
#include "hgw/parallel.hpp"

namespace hgw {

namespace {

/// Subgroup record for a known closed member set, with a greedy generating
/// set.
Subgroup from_members(const FiniteGroup& g, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  Subgroup h;
  std::vector<Index> gens;
  Subgroup reached = trivial_subgroup(g);
  for (Index x : members) {
    if (reached.contains(x)) continue;
    gens.push_back(x);
    reached = generate(g, gens);
  }
  h.members = std::move(members);
  h.generators = std::move(gens);
  return h;
}

/// Conjugation by lambda(s) on N, in point coordinates:
/// lambda(s) n_x lambda(s)^-1 sends the identity to s * n_x(s^-1).
Index conj_point(const StructureView& v, Index s, Index x) {
  const FiniteGroup& g = v.g();
  return g.mul(s, v.by_point[x](g.inv(s)));
}

std::size_t catalog_position(const std::string& name) {
  const auto& cat = catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i].name == name) return i;
  }
  return cat.size();
}

}  // namespace

bool class_less(const GroupClassLabel& a, const GroupClassLabel& b) {
  return std::make_tuple(a.order, catalog_position(a.name), a.name) <
         std::make_tuple(b.order, catalog_position(b.name), b.name);
}

StructureView::StructureView(HgsRecord r)
    : record(std::move(r)),
      n_group(regular_point_group(record.n, record.n_class.name)),
      by_point(elements_by_point(record.n)) {
  if (record.n.degree() != record.group->order()) throw Error("structure degree differs from |G|");
}

ViewPtr make_view(HgsRecord record) { return std::make_shared<const StructureView>(std::move(record)); }

std::vector<Permutation> StableSubgroup::permutations() const {
  std::vector<Permutation> out;
  out.reserve(p.order());
  for (Index x : p.members) out.push_back(view->by_point[x]);
  return out;
}

GroupClassLabel StableSubgroup::p_class() const {
  return iso_class(subgroup_as_group(view->n_group, p));
}

std::vector<StableSubgroup> stable_subgroups(const ViewPtr& view) {
  const FiniteGroup& g = view->g();
  const auto g_gens = generating_sequence(g);
  std::vector<StableSubgroup> out;
  for (Subgroup& p : subgroups(view->n_group)) {
    bool stable = true;
    for (Index s : g_gens) {
      for (Index x : p.generators) {
        if (!p.contains(conj_point(*view, s, x))) {
          stable = false;
          break;
        }
      }
      if (!stable) break;
    }
    if (!stable) continue;
    bool normal = is_normal(view->n_group, p);
    out.push_back({view, std::move(p), normal});
  }
  return out;
}

std::vector<StableSubgroup> stable_subgroups(const HgsRecord& record) {
  return stable_subgroups(make_view(record));
}

PsiResult psi(const StableSubgroup& p) {
  const FiniteGroup& g = p.view->g();
  std::vector<Index> orbit;
  orbit.reserve(p.p.order());
  for (Index x : p.p.members) orbit.push_back(p.view->by_point[x](g.identity()));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  if (orbit.size() != p.p.order()) throw TheoremViolation("orbit of the identity is smaller than P");
  if (!is_subgroup(g, orbit)) throw TheoremViolation("orbit of the identity under P is not a subgroup");

  PsiResult r;
  r.j = from_members(g, std::move(orbit));
  r.j_class = iso_class(subgroup_as_group(g, r.j));
  r.core_order = core_of(g, r.j).order();
  r.normal_in_g = is_normal(g, r.j);
  if (r.j.order() % r.core_order != 0 || r.normal_in_g != (r.core_order == r.j.order())) {
    throw TheoremViolation("core order inconsistent with J");
  }
  return r;
}

bool orbit_coset_check(const StableSubgroup& p, const PsiResult& j) {
  const FiniteGroup& g = p.view->g();
  std::vector<Index> orbit, coset;
  for (std::size_t x = 0; x < g.order(); ++x) {
    orbit.clear();
    coset.clear();
    for (Index q : p.p.members) orbit.push_back(p.view->by_point[q](static_cast<Point>(x)));
    for (Index y : j.j.members) coset.push_back(g.mul(static_cast<Index>(x), y));
    std::sort(orbit.begin(), orbit.end());
    std::sort(coset.begin(), coset.end());
    if (orbit != coset) return false;
  }
  return true;
}

bool psi_onto(const ViewPtr& view, const std::vector<Subgroup>& subgroups_of_g) {
  std::set<std::vector<Index>> images;
  for (const auto& p : stable_subgroups(view)) images.insert(psi(p).j.members);
  std::set<std::vector<Index>> all;
  for (const auto& h : subgroups_of_g) all.insert(h.members);
  return images == all;
}

bool psi_onto(const HgsRecord& record) {
  return psi_onto(make_view(record), subgroups(*record.group));
}

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& j) {
  if (!is_subgroup(g, j.members)) throw Error("coset space needs a subgroup");
  CosetSpace s;
  s.j = j;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  s.block_of.assign(g.order(), unset);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (s.block_of[x] != unset) continue;
    std::vector<Index> block;
    for (Index y : j.members) block.push_back(g.mul(static_cast<Index>(x), y));
    std::sort(block.begin(), block.end());
    for (Index y : block) s.block_of[y] = s.blocks.size();
    s.representatives.push_back(static_cast<Index>(x));
    s.blocks.push_back(std::move(block));
  }
  return s;
}

Permutation induced_block_perm(const Permutation& pi, const CosetSpace& space) {
  if (pi.degree() != space.block_of.size()) throw Error("permutation degree differs from |G|");
  std::vector<Point> images(space.size());
  std::vector<char> hit(space.size(), 0);
  for (std::size_t k = 0; k < space.size(); ++k) {
    const std::size_t target = space.block_of[pi(space.blocks[k].front())];
    for (Index x : space.blocks[k]) {
      if (space.block_of[pi(x)] != target) {
        throw BlockViolation(k, "block " + std::to_string(k) + " is split by the permutation");
      }
    }
    if (hit[target]) throw BlockViolation(k, "block " + std::to_string(k) + " collides with another block");
    hit[target] = 1;
    images[k] = static_cast<Point>(target);
  }
  return Permutation::from_images(images);
}

bool acts_trivially_on_quotient(const StableSubgroup& p, const CosetSpace& space, Index t) {
  const StructureView& v = *p.view;
  const FiniteGroup& g = v.g();
  for (std::size_t k = 0; k < space.size(); ++k) {
    if (space.block_of[g.mul(t, space.representatives[k])] != k) return false;
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    Index y = conj_point(v, t, static_cast<Index>(x));
    if (!p.p.contains(v.n_group.mul(v.n_group.inv(static_cast<Index>(x)), y))) return false;
  }
  return true;
}

QuotientHGS quotient_structure(const StableSubgroup& p, const PsiResult& j) {
  if (!p.normal_in_n) throw Error("quotient structure needs P normal in N");
  const StructureView& v = *p.view;
  const FiniteGroup& g = v.g();
  QuotientHGS q;
  q.space = coset_space(g, j.j);
  const std::size_t m = q.space.size();

  for (const auto& n : v.record.n.generators()) q.nbar_gens.push_back(induced_block_perm(n, q.space));
  const auto g_gens = generating_sequence(g);
  for (Index s : g_gens) q.gbar_gens.push_back(induced_block_perm(left_translation(g, s), q.space));
  q.nbar = PermGroup::closure(q.nbar_gens, m);
  q.gbar = PermGroup::closure(q.gbar_gens, m);

  if (q.nbar.order() * p.p.order() != v.record.n.order() || !is_regular(q.nbar)) {
    throw TheoremViolation("image of N on cosets is not regular of order [N:P]");
  }
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool trivial = induced_block_perm(v.by_point[x], q.space).is_identity();
    if (trivial != p.p.contains(static_cast<Index>(x))) {
      throw TheoremViolation("kernel of N acting on cosets differs from P");
    }
  }
  if (!is_transitive(q.gbar)) throw TheoremViolation("image of lambda(G) on cosets is not transitive");
  if (!normalizes(q.gbar, q.nbar)) throw TheoremViolation("image of lambda(G) does not normalize N/P");
  // lambda(t) acts trivially on the cosets and on N/P for t in the core I of
  // J. For J normal that is all of lambda(J); otherwise lambda(t)(gJ) = tgJ
  // moves gJ as soon as g^-1 t g leaves J.
  for (Index t : core_of(g, j.j).members) {
    if (!acts_trivially_on_quotient(p, q.space, t)) {
      throw TheoremViolation("lambda(I) acts nontrivially on the cosets or on N/P");
    }
  }
  if (j.normal_in_g && (!is_regular(q.gbar) || q.gbar.order() * j.j.order() != g.order())) {
    throw TheoremViolation("J normal but lambda(G) image is not regular of order [G:J]");
  }
  return q;
}

StructureReport analyze_structure(const ViewPtr& view, const std::vector<Subgroup>& subgroups_of_g) {
  StructureReport rep;
  const auto stable = stable_subgroups(view);
  rep.stable = stable.size();
  rep.orbit_cosets = true;
  std::set<std::vector<Index>> images;
  const std::size_t n_order = view->record.n.order();
  for (const auto& p : stable) {
    PsiResult j = psi(p);
    rep.orbit_cosets = rep.orbit_cosets && orbit_coset_check(p, j);
    images.insert(j.j.members);
    if (!p.normal_in_n) continue;
    ++rep.normal_stable;
    (void)quotient_structure(p, j);
    ++rep.quotients_checked;
    if (p.p.order() == 1 || p.p.order() == n_order) continue;
    rep.rows.push_back({1, view->record.n_class, p.p_class(), j.j_class, j.normal_in_g, j.core_order});
  }
  rep.psi_injective = images.size() == stable.size();
  std::set<std::vector<Index>> all;
  for (const auto& h : subgroups_of_g) all.insert(h.members);
  rep.onto = images == all;
  return rep;
}

std::vector<CorrespondenceRow> aggregate_rows(std::vector<CorrespondenceRow> rows) {
  auto key_less = [](const CorrespondenceRow& a, const CorrespondenceRow& b) {
    if (a.n_class != b.n_class) return class_less(a.n_class, b.n_class);
    if (a.p_class != b.p_class) return class_less(a.p_class, b.p_class);
    if (a.j_class != b.j_class) return class_less(a.j_class, b.j_class);
    if (a.j_normal != b.j_normal) return a.j_normal > b.j_normal;
    return a.core_order < b.core_order;
  };
  std::sort(rows.begin(), rows.end(), key_less);
  std::vector<CorrespondenceRow> out;
  for (auto& r : rows) {
    if (!out.empty() && !key_less(out.back(), r) && !key_less(r, out.back())) {
      out.back().count += r.count;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

Census census(const std::vector<HgsRecord>& records, std::size_t threads) {
  Census c;
  if (records.empty()) return c;
  const FiniteGroup& g = *records.front().group;
  const auto subs = subgroups(g);
  c.reports.resize(records.size());
  parallel_for(records.size(), threads, [&](std::size_t i) {
    StructureReport rep = analyze_structure(make_view(records[i]), subs);
    if (!rep.psi_injective) throw TheoremViolation("Psi is not injective on stable subgroups");
    if (!rep.orbit_cosets) throw TheoremViolation("a P-orbit differs from the matching left coset");
    c.reports[i] = std::move(rep);
  });

  std::vector<CorrespondenceRow> all;
  std::map<std::string, OntoCount> by_class;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& r : c.reports[i].rows) all.push_back(r);
    auto& oc = by_class[records[i].n_class.name];
    oc.n_class = records[i].n_class.name;
    ++oc.structures;
    oc.onto += c.reports[i].onto;
  }
  c.rows = aggregate_rows(std::move(all));
  for (const GroupPtr& m : catalog_groups(g.order())) {
    auto it = by_class.find(m->spec());
    c.onto.push_back(it == by_class.end() ? OntoCount{m->spec(), 0, 0} : it->second);
  }
  return c;
}

std::vector<CorrespondenceRow> correspondence_rows(const std::vector<HgsRecord>& records, std::size_t threads) {
  return census(records, threads).rows;
}

std::vector<CorrespondenceRow> correspondence_rows(GroupPtr g, std::size_t threads) {
  return correspondence_rows(enumerate_hgs(std::move(g), threads), threads);
}

std::vector<OntoCount> onto_counts(const std::vector<HgsRecord>& records, std::size_t threads) {
  return census(records, threads).onto;
}

}  // namespace hgw
