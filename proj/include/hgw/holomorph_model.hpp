#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hgw/finite_group.hpp"
#include "hgw/permutation.hpp"

namespace hgw {

/// Hol(M) = lambda(M) Aut(M) in pair form: (m, a) is the map x -> m * a(x).
class HolomorphModel {
public:
  struct Elem {
    Index m = 0;
    std::uint16_t a = 0;
    friend bool operator==(const Elem&, const Elem&) = default;
    friend auto operator<=>(const Elem&, const Elem&) = default;
  };

  explicit HolomorphModel(GroupPtr m);

  [[nodiscard]] const FiniteGroup& group() const noexcept { return *m_; }
  [[nodiscard]] std::size_t aut_order() const noexcept { return auts_.size(); }
  [[nodiscard]] std::size_t order() const noexcept { return m_->order() * auts_.size(); }

  [[nodiscard]] Elem one() const noexcept { return {0, 0}; }
  [[nodiscard]] Elem mul(Elem x, Elem y) const noexcept {
    return {m_->mul(x.m, act(x.a, y.m)), compose_[x.a * auts_.size() + y.a]};
  }
  [[nodiscard]] Index apply(Elem x, Index point) const noexcept {
    return m_->mul(x.m, act(x.a, point));
  }
  /// phi * x * phi^-1 for the automorphism with index `phi`.
  [[nodiscard]] Elem conj_by_aut(std::size_t phi, Elem x) const noexcept {
    return {act(static_cast<std::uint16_t>(phi), x.m),
            compose_[compose_[phi * auts_.size() + x.a] * auts_.size() + aut_inverse_[phi]]};
  }

  [[nodiscard]] Permutation to_permutation(Elem x) const;
  [[nodiscard]] std::vector<Elem> elements() const;

  /// Elements that act semiregularly with every cycle of length k.
  [[nodiscard]] std::vector<Elem> semiregular_of_order(std::size_t k) const;

private:
  [[nodiscard]] Index act(std::uint16_t a, Index x) const noexcept {
    return auts_[a][x];
  }

  GroupPtr m_;
  std::vector<std::vector<Index>> auts_;
  std::vector<std::uint16_t> compose_;
  std::vector<std::uint16_t> aut_inverse_;
};

}  // namespace hgw
