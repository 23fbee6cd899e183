#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hgw/finite_group.hpp"
#include "hgw/permutation.hpp"

namespace hgw {

inline constexpr std::size_t kDefaultClosureCap = 200000;

/// A permutation group with its full element set materialized, sorted by
/// image sequence (so the identity is element 0).
class PermGroup {
public:
  PermGroup() = default;

  /// Closure of `gens`. Throws EnumerationOverflow above `cap` elements and
  /// Error on mismatched degrees.
  static PermGroup closure(std::vector<Permutation> gens, std::size_t degree,
                           std::size_t cap = kDefaultClosureCap);

  /// Builds from a known element set. The caller guarantees closure.
  static PermGroup from_elements(std::vector<Permutation> gens, std::vector<Permutation> elements,
                                 std::size_t degree);

  [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<Permutation>& elements() const noexcept { return elements_; }
  [[nodiscard]] const std::vector<Permutation>& generators() const noexcept { return generators_; }

  [[nodiscard]] bool contains(const Permutation& p) const;
  [[nodiscard]] std::optional<std::size_t> index_of(const Permutation& p) const;

  [[nodiscard]] std::vector<Point> orbit(Point x) const;
  /// Orbits sorted by smallest point, each orbit sorted.
  [[nodiscard]] std::vector<std::vector<Point>> orbits() const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

[[nodiscard]] bool is_transitive(const PermGroup& v);
[[nodiscard]] bool is_semiregular(const PermGroup& v);
[[nodiscard]] bool is_regular(const PermGroup& v);

/// a*b*a^-1 lies in B for all generators a of A and b of B.
[[nodiscard]] bool normalizes(const PermGroup& a, const PermGroup& b);

[[nodiscard]] Permutation left_translation(const FiniteGroup& g, Index x);
[[nodiscard]] Permutation right_translation(const FiniteGroup& g, Index x);

/// lambda(g)(x) = g*x
[[nodiscard]] PermGroup left_regular(const FiniteGroup& g);
/// rho(g)(x) = x*g^-1
[[nodiscard]] PermGroup right_regular(const FiniteGroup& g);

/// Abstract group on the element indices of `v` (sorted order; identity 0).
[[nodiscard]] FiniteGroup to_finite_group(const PermGroup& v);

/// Permutation group formed by the members of `h`, a subgroup of
/// to_finite_group(v).
[[nodiscard]] PermGroup subgroup_perm_group(const PermGroup& v, const Subgroup& h);

}  // namespace hgw

namespace hgw {

/// Abstract group of a regular permutation group, indexed by points: element
/// x is the unique v with v(0) = x, so mul(x, y) = v_x(y). Left translations
/// of the result recover `v` itself.
[[nodiscard]] FiniteGroup regular_point_group(const PermGroup& v, std::string spec = "perm");

/// by_point[x] is the element of the regular group `v` sending 0 to x.
[[nodiscard]] std::vector<Permutation> elements_by_point(const PermGroup& v);

}  // namespace hgw
