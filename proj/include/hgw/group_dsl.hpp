#pragma once

#include <cstddef>
#include <string_view>

#include "hgw/finite_group.hpp"
#include "hgw/isomorphism.hpp"

namespace hgw {

// Group-expression language:
//
//   C<k>        cyclic, element i is a^i
//   D<k>        dihedral of order 2k, element i + k*e is r^i s^e
//   A<k> S<k>   alternating / symmetric on k <= 6 points
//   Q8 Dic<k>   quaternion, dicyclic of order 4k
//   SL(2,3)
//   X x Y       direct product, element (x, y) is x*|Y| + y
//   X^k         k-fold direct power
//   X : C<k>    semidirect product by the largest divisor a > 1 of k such that
//               X has an automorphism of order a
//   sdp(X, C<k>, a [, v])
//               semidirect product by an automorphism of order a; v selects
//               the v-th Aut(X)-conjugacy class of such automorphisms
//               (classes ordered by their least member, default 0)
//   ( E )       grouping
//
// Precedence from loosest: "x", ":", "^". Semidirect elements (x, t) are
// indexed x + |X|*t with multiplication (x1,t1)(x2,t2) = (x1 phi^t1(x2), t1+t2).

/// Throws ParseError on malformed input or an impossible semidirect action.
[[nodiscard]] FiniteGroup build_group(std::string_view spec);
[[nodiscard]] GroupPtr make_group(std::string_view spec);

[[nodiscard]] FiniteGroup cyclic_group(std::size_t k);
[[nodiscard]] FiniteGroup dihedral_group(std::size_t k);
[[nodiscard]] FiniteGroup dicyclic_group(std::size_t k);
[[nodiscard]] FiniteGroup symmetric_group(std::size_t k);
[[nodiscard]] FiniteGroup alternating_group(std::size_t k);
[[nodiscard]] FiniteGroup special_linear_2_3();
[[nodiscard]] FiniteGroup direct_product(const FiniteGroup& x, const FiniteGroup& y);
/// X semidirect C_k where the generator of C_k acts by `phi` (order divides k).
[[nodiscard]] FiniteGroup semidirect_product(const FiniteGroup& x, std::size_t k,
                                             const GroupMap& phi);

}  // namespace hgw
