#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hgw/catalog.hpp"
#include "hgw/finite_group.hpp"
#include "hgw/hgs.hpp"
#include "hgw/perm_group.hpp"

namespace hgw {

/// A structure N together with its abstract group indexed by points of G:
/// abstract element x stands for the unique n in N with n(identity) = x.
struct StructureView {
  HgsRecord record;
  FiniteGroup n_group;
  std::vector<Permutation> by_point;

  explicit StructureView(HgsRecord r);
  [[nodiscard]] const FiniteGroup& g() const { return *record.group; }
};

using ViewPtr = std::shared_ptr<const StructureView>;

/// A subgroup P of N normalized by lambda(G). Members are abstract elements
/// of view->n_group, i.e. points of G.
struct StableSubgroup {
  ViewPtr view;
  Subgroup p;
  bool normal_in_n = false;

  [[nodiscard]] std::vector<Permutation> permutations() const;
  [[nodiscard]] GroupClassLabel p_class() const;
};

struct PsiResult {
  Subgroup j;  // subgroup of G
  GroupClassLabel j_class;
  bool normal_in_g = false;
  std::size_t core_order = 0;  // |I|, I the intersection of conjugates of J
};

/// Left cosets gJ, ordered by least element; representatives[k] is the
/// least element of block k, so block 0 is J itself with representative 0.
struct CosetSpace {
  Subgroup j;
  std::vector<std::vector<Index>> blocks;
  std::vector<Index> representatives;
  std::vector<std::size_t> block_of;  // G-index -> block

  [[nodiscard]] std::size_t size() const { return blocks.size(); }
};

struct CorrespondenceRow {
  std::size_t count = 0;
  GroupClassLabel n_class;
  GroupClassLabel p_class;
  GroupClassLabel j_class;
  bool j_normal = false;
  std::size_t core_order = 0;

  friend bool operator==(const CorrespondenceRow&, const CorrespondenceRow&) = default;
};

/// Images of N and lambda(G) acting on the left cosets of J = Psi(P).
struct QuotientHGS {
  CosetSpace space;
  std::vector<Permutation> nbar_gens;
  std::vector<Permutation> gbar_gens;
  PermGroup nbar;
  PermGroup gbar;
};

[[nodiscard]] ViewPtr make_view(HgsRecord record);

/// Every P <= N normalized by lambda(G), including 1 and N, sorted by
/// (order, member set).
[[nodiscard]] std::vector<StableSubgroup> stable_subgroups(const ViewPtr& view);
[[nodiscard]] std::vector<StableSubgroup> stable_subgroups(const HgsRecord& record);

/// J = orbit of the identity under P. Throws TheoremViolation when J is not a
/// subgroup of G of order |P|.
[[nodiscard]] PsiResult psi(const StableSubgroup& p);

/// Every P-orbit Orb_P(g) equals the left coset gJ.
[[nodiscard]] bool orbit_coset_check(const StableSubgroup& p, const PsiResult& j);

/// {Psi(P)} over stable P equals the set of all subgroups of G.
[[nodiscard]] bool psi_onto(const ViewPtr& view, const std::vector<Subgroup>& subgroups_of_g);
[[nodiscard]] bool psi_onto(const HgsRecord& record);

[[nodiscard]] CosetSpace coset_space(const FiniteGroup& g, const Subgroup& j);

/// Throws BlockViolation naming the first block whose image is not a block.
[[nodiscard]] Permutation induced_block_perm(const Permutation& pi, const CosetSpace& space);

/// lambda(t) fixes every coset of `space` and conjugation by lambda(t) fixes
/// every coset nP of N.
[[nodiscard]] bool acts_trivially_on_quotient(const StableSubgroup& p, const CosetSpace& space, Index t);

/// Requires P normal in N. Throws TheoremViolation if any quotient property
/// fails: Nbar regular of order [N:P] with kernel P, Gbar transitive and
/// normalizing Nbar, lambda(I) trivial on blocks and on N/P for I the core of
/// J (so lambda(J) when J is normal), and Gbar regular of order [G:J] when J
/// is normal.
[[nodiscard]] QuotientHGS quotient_structure(const StableSubgroup& p, const PsiResult& j);

/// Census over (N, P) with P normal in N and 1 < P < N, sorted by catalog
/// position of [N], then [P], [J], normality and |I|.
[[nodiscard]] std::vector<CorrespondenceRow> correspondence_rows(const std::vector<HgsRecord>& records,
                                                                 std::size_t threads = 1);
[[nodiscard]] std::vector<CorrespondenceRow> correspondence_rows(GroupPtr g, std::size_t threads = 1);

/// Full analysis of a structure, as run by the census.
struct StructureReport {
  std::size_t stable = 0;
  std::size_t normal_stable = 0;
  bool onto = false;
  bool psi_injective = false;
  bool orbit_cosets = false;
  std::size_t quotients_checked = 0;
  std::vector<CorrespondenceRow> rows;  // count 1 each, proper nontrivial P normal in N
};

[[nodiscard]] StructureReport analyze_structure(const ViewPtr& view, const std::vector<Subgroup>& subgroups_of_g);

/// Per-type (structures, onto) pairs in catalog order of |G|.
struct OntoCount {
  std::string n_class;
  std::size_t structures = 0;
  std::size_t onto = 0;
};

[[nodiscard]] std::vector<OntoCount> onto_counts(const std::vector<HgsRecord>& records, std::size_t threads = 1);

struct Census {
  std::vector<CorrespondenceRow> rows;
  std::vector<OntoCount> onto;
  std::vector<StructureReport> reports;  // parallel to the input records
};

/// One pass producing both the row census and the onto counts. Every
/// structure is checked with analyze_structure.
[[nodiscard]] Census census(const std::vector<HgsRecord>& records, std::size_t threads = 1);

/// Sort key for class labels: (order, catalog position, name).
[[nodiscard]] bool class_less(const GroupClassLabel& a, const GroupClassLabel& b);

/// Aggregates per-structure rows by class tuple.
[[nodiscard]] std::vector<CorrespondenceRow> aggregate_rows(std::vector<CorrespondenceRow> rows);

}  // namespace hgw
