#include "hgw/holomorph_model.hpp"

#include <map>

#include "hgw/error.hpp"
#include "hgw/isomorphism.hpp"

namespace hgw {

HolomorphModel::HolomorphModel(GroupPtr m) : m_(std::move(m)) {
  auts_ = automorphism_maps(*m_);
  const std::size_t k = auts_.size(), n = m_->order();
  std::map<std::vector<Index>, std::uint16_t> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(auts_[i], static_cast<std::uint16_t>(i));
  compose_.resize(k * k);
  aut_inverse_.resize(k);
  std::vector<Index> tmp(n);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t x = 0; x < n; ++x) tmp[x] = auts_[a][auts_[b][x]];
      auto it = index.find(tmp);
      if (it == index.end()) throw TheoremViolation("automorphisms not closed under composition");
      compose_[a * k + b] = it->second;
      if (it->second == 0) aut_inverse_[a] = static_cast<std::uint16_t>(b);
    }
  }
}

Permutation HolomorphModel::to_permutation(Elem x) const {
  std::vector<Point> images(m_->order());
  for (std::size_t p = 0; p < images.size(); ++p) images[p] = apply(x, static_cast<Index>(p));
  return Permutation::from_images(std::move(images));
}

std::vector<HolomorphModel::Elem> HolomorphModel::elements() const {
  std::vector<Elem> out;
  out.reserve(order());
  for (std::size_t m = 0; m < m_->order(); ++m) {
    for (std::size_t a = 0; a < auts_.size(); ++a) {
      out.push_back({static_cast<Index>(m), static_cast<std::uint16_t>(a)});
    }
  }
  return out;
}

std::vector<HolomorphModel::Elem> HolomorphModel::semiregular_of_order(std::size_t k) const {
  std::vector<Elem> out;
  const std::size_t n = m_->order();
  if (k == 0 || n % k != 0) return out;
  for (const Elem& e : elements()) {
    bool ok = true;
    for (std::size_t p = 0; p < n && ok; ++p) {
      Index y = static_cast<Index>(p);
      std::size_t length = 0;
      do {
        y = apply(e, y);
        ++length;
      } while (y != p && length <= k);
      ok = length == k;
    }
    if (ok) out.push_back(e);
  }
  return out;
}

}  // namespace hgw
