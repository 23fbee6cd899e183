#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hgw {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}, stored as its image sequence.
///
/// Composition follows function notation: (a * b)(x) = a(b(x)).
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Throws ParseError when `images` is not a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Parses cycle notation such as "(1,2)(3,13)". Points are 1-based when
  /// `one_based` is set. Unlisted points are fixed.
  static Permutation from_cycles(std::string_view text, std::size_t degree,
                                 bool one_based = true);

  [[nodiscard]] std::size_t degree() const noexcept { return images_.size(); }
  [[nodiscard]] Point operator()(Point x) const noexcept { return images_[x]; }
  [[nodiscard]] std::span<const Point> images() const noexcept { return images_; }

  [[nodiscard]] Permutation operator*(const Permutation& rhs) const;
  [[nodiscard]] Permutation inverse() const;
  /// this * other * this^-1
  [[nodiscard]] Permutation conjugate(const Permutation& other) const;

  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] std::size_t fixed_points() const noexcept;
  [[nodiscard]] std::size_t order() const;

  /// Cycle notation, identity rendered as "()".
  [[nodiscard]] std::string to_cycles(bool one_based = true) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace hgw
