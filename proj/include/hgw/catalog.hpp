#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hgw/finite_group.hpp"
#include "hgw/perm_group.hpp"

namespace hgw {

/// Canonical isomorphism-class token, e.g. "C42", "C7:C3 x C2", "A4 x C2".
struct GroupClassLabel {
  std::string name;
  std::size_t order = 0;

  friend bool operator==(const GroupClassLabel&, const GroupClassLabel&) = default;
  friend std::strong_ordering operator<=>(const GroupClassLabel&, const GroupClassLabel&) = default;
};

struct CatalogEntry {
  std::string name;     // canonical token
  std::string recipe;   // group expression that builds it
  std::string display;  // conventional notation for rendered tables
  std::size_t order;
};

/// Every named group, grouped by order in a fixed listing order.
[[nodiscard]] const std::vector<CatalogEntry>& catalog();

/// True when every isomorphism type of this order is named in the catalog.
[[nodiscard]] bool catalog_covers(std::size_t order);

/// Built groups of the given order in catalog order (empty when uncovered).
[[nodiscard]] std::vector<GroupPtr> catalog_groups(std::size_t order);

/// Throws Error for an unknown name.
[[nodiscard]] GroupPtr catalog_group(const std::string& name);

/// Display notation for a canonical name; falls back to the name itself.
[[nodiscard]] std::string display_name(const std::string& name);

/// Catalog name when `g` is isomorphic to a named group, otherwise
/// "order<k>#<fingerprint>" (with a "/<j>" suffix separating non-isomorphic
/// groups that share a fingerprint).
[[nodiscard]] GroupClassLabel iso_class(const FiniteGroup& g);
[[nodiscard]] GroupClassLabel iso_class(const PermGroup& v);

}  // namespace hgw
