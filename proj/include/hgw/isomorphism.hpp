#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hgw/finite_group.hpp"
#include "hgw/perm_group.hpp"

namespace hgw {

/// Images of every element of the source group, by index.
using GroupMap = std::vector<Index>;

/// Cheap isomorphism invariants.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<std::size_t> element_orders;  // sorted multiset
  bool abelian = false;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

[[nodiscard]] Fingerprint fingerprint(const FiniteGroup& g);

/// All isomorphisms a -> b, at most `limit` of them, in search order.
[[nodiscard]] std::vector<GroupMap> isomorphisms(const FiniteGroup& a, const FiniteGroup& b,
                                                 std::size_t limit = static_cast<std::size_t>(-1));
[[nodiscard]] std::optional<GroupMap> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);
[[nodiscard]] bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);
[[nodiscard]] bool is_isomorphic(const PermGroup& a, const PermGroup& b);

/// Every automorphism as an image map, sorted; the identity comes first.
[[nodiscard]] std::vector<GroupMap> automorphism_maps(const FiniteGroup& m);

/// Aut(M) acting on the element indices of M.
[[nodiscard]] PermGroup automorphisms(const FiniteGroup& m);

/// Closure of lambda(M) and Aut(M) inside Perm(M). Throws TheoremViolation
/// if its order is not |M| * |Aut(M)|.
[[nodiscard]] PermGroup holomorph(const FiniteGroup& m);

/// A short generating list for the group formed by `elements`.
[[nodiscard]] std::vector<Permutation> small_generating_set(const std::vector<Permutation>& elements,
                                                           std::size_t degree);

}  // namespace hgw
