#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hgw {

using Index = std::uint16_t;

/// An abstract finite group given by its Cayley table.
///
/// Elements are the indices 0..order-1 and the identity is always index 0.
/// Instances are immutable after construction.
class FiniteGroup {
public:
  /// `table[a * order + b]` is the index of a*b. Throws Error if the table is
  /// not a Latin square with identity 0. Associativity is not checked here,
  /// see verify_associativity().
  FiniteGroup(std::size_t order, std::vector<Index> table, std::string spec,
              std::vector<std::string> labels = {});

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] Index identity() const noexcept { return 0; }
  [[nodiscard]] Index mul(Index a, Index b) const noexcept { return table_[a * order_ + b]; }
  [[nodiscard]] Index inv(Index a) const noexcept { return inverse_[a]; }
  /// g * x * g^-1
  [[nodiscard]] Index conj(Index g, Index x) const noexcept { return mul(mul(g, x), inv(g)); }
  [[nodiscard]] Index power(Index a, long k) const;
  [[nodiscard]] std::size_t element_order(Index a) const noexcept { return element_orders_[a]; }

  [[nodiscard]] const std::string& spec() const noexcept { return spec_; }
  [[nodiscard]] const std::string& label(Index a) const { return labels_[a]; }

  [[nodiscard]] FiniteGroup with_spec(std::string spec) const {
    FiniteGroup g = *this;
    g.spec_ = std::move(spec);
    return g;
  }

  [[nodiscard]] bool is_abelian() const noexcept;
  [[nodiscard]] bool verify_associativity() const noexcept;

private:
  std::size_t order_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::size_t> element_orders_;
  std::string spec_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of some FiniteGroup, stored as its sorted member indices.
/// The ambient group is supplied by the caller of every operation.
struct Subgroup {
  std::vector<Index> members;
  std::vector<Index> generators;

  [[nodiscard]] std::size_t order() const noexcept { return members.size(); }
  [[nodiscard]] bool contains(Index x) const noexcept;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

/// Subgroups compare by (order, member set).
bool subgroup_less(const Subgroup& a, const Subgroup& b);

[[nodiscard]] Subgroup generate(const FiniteGroup& g, std::span<const Index> gens);
[[nodiscard]] Subgroup whole_group(const FiniteGroup& g);
[[nodiscard]] Subgroup trivial_subgroup(const FiniteGroup& g);

/// Checks that `members` is nonempty and closed under product and inverse.
[[nodiscard]] bool is_subgroup(const FiniteGroup& g, std::span<const Index> members);

/// Every subgroup, sorted by (order, member set). Throws EnumerationOverflow
/// for groups larger than `cap`.
[[nodiscard]] std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t cap = 100);

[[nodiscard]] bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// a*B*a^-1 = B for every generator a of A.
[[nodiscard]] bool normalizes(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Intersection of all conjugates g*J*g^-1.
[[nodiscard]] Subgroup core_of(const FiniteGroup& g, const Subgroup& j);

[[nodiscard]] Subgroup center(const FiniteGroup& g);
[[nodiscard]] Subgroup derived_subgroup(const FiniteGroup& g);

/// Greedy generating sequence: repeatedly the element of largest order not
/// yet generated, ties broken by smallest index.
[[nodiscard]] std::vector<Index> generating_sequence(const FiniteGroup& g);

/// Cayley table of the subgroup `h`, re-indexed in member order.
[[nodiscard]] FiniteGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

}  // namespace hgw
