#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hgw/catalog.hpp"
#include "hgw/finite_group.hpp"
#include "hgw/perm_group.hpp"

namespace hgw {

/// An injective homomorphism G -> Hol(M) with regular image.
struct RegularEmbedding {
  GroupPtr source;
  GroupPtr target;
  /// images[g] is the image of G-element g, a permutation of M's indices.
  std::vector<Permutation> images;

  /// b(g) = images[g](identity of M), a bijection G -> M.
  [[nodiscard]] std::vector<Index> base_map() const;
};

struct Provenance {
  std::string m_class;
  std::size_t embedding_id = 0;
};

/// One Hopf-Galois structure on a G-Galois extension: a regular subgroup of
/// Perm(G) normalized by lambda(G).
struct HgsRecord {
  GroupPtr group;
  PermGroup n;
  GroupClassLabel n_class;
  Provenance provenance;
};

/// All regular embeddings, partitioned by the image of the first generator.
/// Requires |G| = |M|.
[[nodiscard]] std::vector<RegularEmbedding> regular_embeddings(GroupPtr g, GroupPtr m,
                                                               std::size_t threads = 1);

/// N = { b^-1 lambda_M(m) b }. Throws TheoremViolation when any postcondition
/// (regularity, lambda(G)-normality, N = M up to isomorphism, b^-1 beta(G) b =
/// lambda(G)) fails.
[[nodiscard]] HgsRecord transport(const RegularEmbedding& beta, std::size_t embedding_id = 0);

/// Builds a record for a known N and asserts regularity and normality.
[[nodiscard]] HgsRecord make_record(GroupPtr g, PermGroup n, Provenance provenance);

/// Every Hopf-Galois structure on a G-extension, deduplicated by element set,
/// sorted by (catalog position of [N], element set). Throws Error when the
/// catalog does not cover |G|.
[[nodiscard]] std::vector<HgsRecord> enumerate_hgs(GroupPtr g, std::size_t threads = 1);

/// Brute force inside Perm(G) for |G| <= 8: regular subgroups built from
/// semiregular elements, filtered by lambda(G)-normality. Sorted by element set.
[[nodiscard]] std::vector<PermGroup> direct_enumerate_oracle(const FiniteGroup& g);

/// One line of the translation count identity
/// (#N of type M) * |Aut(M)| = (#regular subgroups of Hol(M) isomorphic to G) * |Aut(G)|.
struct CountConsistency {
  std::string m_class;
  std::size_t structures = 0;          // #N from enumerate_hgs
  std::size_t aut_m = 0;
  std::size_t regular_subgroups = 0;   // distinct images of regular embeddings
  std::size_t aut_g = 0;
  std::size_t embeddings = 0;
  [[nodiscard]] bool holds() const {
    return structures * aut_m == regular_subgroups * aut_g && embeddings == regular_subgroups * aut_g;
  }
};

[[nodiscard]] std::vector<CountConsistency> count_consistency(GroupPtr g,
                                                              const std::vector<HgsRecord>& records,
                                                              std::size_t threads = 1);

/// Per-type counts in catalog order of |G|.
[[nodiscard]] std::vector<std::pair<std::string, std::size_t>> type_counts(
    const FiniteGroup& g, const std::vector<HgsRecord>& records);

}  // namespace hgw
