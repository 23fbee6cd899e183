#pragma once

// Backtracking over images of a generating sequence. Shared by the
// isomorphism tests and the holomorph embedding search.

#include <cstddef>
#include <span>
#include <vector>

#include "hgw/finite_group.hpp"

namespace hgw::detail {

/// Extends generator images along the Cayley graph of <gens> in `src`.
///
/// `Target` provides `Elem`, `Elem one() const` and `Elem mul(Elem, Elem) const`.
/// `Checker` provides `reset()` and `bool accept(Index, const Elem&)`; a false
/// return aborts. Returns false when the assignment is not a well-defined
/// homomorphism on <gens> or the checker rejects it. On success `out[x]` and
/// `reached` describe the map on the generated subgroup.
template <class Target, class Checker>
bool extend_images(const FiniteGroup& src, std::span<const Index> gens,
                   std::span<const typename Target::Elem> imgs, const Target& tgt,
                   std::vector<typename Target::Elem>& out, std::vector<Index>& reached,
                   std::vector<char>& assigned, Checker& checker) {
  const std::size_t n = src.order();
  out.resize(n);
  assigned.assign(n, 0);
  reached.clear();
  checker.reset();
  out[0] = tgt.one();
  assigned[0] = 1;
  if (!checker.accept(0, out[0])) return false;
  reached.push_back(0);
  for (std::size_t head = 0; head < reached.size(); ++head) {
    const Index x = reached[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Index y = src.mul(x, gens[j]);
      auto image = tgt.mul(out[x], imgs[j]);
      if (assigned[y]) {
        if (!(out[y] == image)) return false;
        continue;
      }
      assigned[y] = 1;
      out[y] = image;
      if (!checker.accept(y, out[y])) return false;
      reached.push_back(y);
    }
  }
  return true;
}

/// Enumerates all homomorphisms determined by images of `gens` that pass the
/// checker at every prefix. `candidates(level)` returns the admissible images
/// of gens[level] and `complete(out)` receives each full map.
template <class Target, class Checker, class Candidates, class Complete>
class HomSearch {
public:
  using Elem = typename Target::Elem;

  HomSearch(const FiniteGroup& src, std::vector<Index> gens, const Target& tgt, Checker checker,
            Candidates candidates, Complete complete)
      : src_(src), gens_(std::move(gens)), tgt_(tgt), checker_(std::move(checker)),
        candidates_(std::move(candidates)), complete_(std::move(complete)) {
    imgs_.resize(gens_.size());
  }

  /// Runs the search with gens[0] fixed to `first`.
  void run_from(const Elem& first) {
    imgs_[0] = first;
    step(0);
  }

  void run() {
    if (gens_.empty()) {
      std::vector<Index> none;
      if (extend_images(src_, std::span<const Index>(none), std::span<const Elem>(), tgt_, out_,
                        reached_, assigned_, checker_)) {
        complete_(out_);
      }
      return;
    }
    for (const Elem& c : candidates_(0)) run_from(c);
  }

private:
  void step(std::size_t level) {
    std::span<const Index> prefix(gens_.data(), level + 1);
    std::span<const Elem> prefix_imgs(imgs_.data(), level + 1);
    if (!extend_images(src_, prefix, prefix_imgs, tgt_, out_, reached_, assigned_, checker_)) {
      return;
    }
    if (level + 1 == gens_.size()) {
      complete_(out_);
      return;
    }
    for (const Elem& c : candidates_(level + 1)) {
      imgs_[level + 1] = c;
      step(level + 1);
    }
  }

  const FiniteGroup& src_;
  std::vector<Index> gens_;
  const Target& tgt_;
  Checker checker_;
  Candidates candidates_;
  Complete complete_;
  std::vector<Elem> imgs_;
  std::vector<Elem> out_;
  std::vector<Index> reached_;
  std::vector<char> assigned_;
};

}  // namespace hgw::detail
