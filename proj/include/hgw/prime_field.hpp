#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hgw {

using Fp = std::uint32_t;

/// Arithmetic in Z/p for a prime p < 2^16.
struct PrimeField {
  Fp p;

  explicit PrimeField(Fp prime);
  [[nodiscard]] Fp add(Fp a, Fp b) const { return (a + b) % p; }
  [[nodiscard]] Fp sub(Fp a, Fp b) const { return (a + p - b) % p; }
  [[nodiscard]] Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>((static_cast<std::uint64_t>(a) * b) % p);
  }
  [[nodiscard]] Fp neg(Fp a) const { return a == 0 ? 0 : p - a; }
  [[nodiscard]] Fp pow(Fp a, std::uint64_t e) const;
  /// Throws Error on zero.
  [[nodiscard]] Fp inv(Fp a) const;
  [[nodiscard]] Fp from_int(long long v) const;
};

[[nodiscard]] bool is_prime(std::uint64_t v);

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
  FpMatrix(std::size_t rows, std::size_t cols, Fp p);

  static FpMatrix identity(std::size_t n, Fp p);
  /// Rows given as equal-length vectors; `cols` is used when `rows` is empty.
  static FpMatrix from_rows(const std::vector<std::vector<Fp>>& rows, std::size_t cols, Fp p);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] Fp prime() const noexcept { return p_; }
  [[nodiscard]] Fp& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  [[nodiscard]] Fp at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  [[nodiscard]] std::vector<Fp> row(std::size_t r) const;
  void append_row(const std::vector<Fp>& r);

  [[nodiscard]] FpMatrix operator*(const FpMatrix& o) const;
  [[nodiscard]] FpMatrix operator+(const FpMatrix& o) const;
  [[nodiscard]] FpMatrix operator-(const FpMatrix& o) const;
  [[nodiscard]] std::vector<Fp> apply(const std::vector<Fp>& v) const;
  [[nodiscard]] FpMatrix transpose() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  Fp p_;
  std::vector<Fp> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(FpMatrix& m);
[[nodiscard]] std::size_t rank(FpMatrix m);
/// Basis of {x : m x = 0}, one vector per row of the result.
[[nodiscard]] FpMatrix nullspace(const FpMatrix& m);
/// Every row of `b` lies in the row space of `a`.
[[nodiscard]] bool row_space_contains(const FpMatrix& a, const FpMatrix& b);
[[nodiscard]] bool same_row_space(const FpMatrix& a, const FpMatrix& b);

}  // namespace hgw
