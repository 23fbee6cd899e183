#include "hgw/prime_field.hpp"

#include <utility>

#include "hgw/error.hpp"

namespace hgw {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Fp prime) : p(prime) {
  if (!is_prime(prime) || prime >= (1u << 16)) throw Error("field characteristic must be a prime below 65536");
}

Fp PrimeField::pow(Fp a, std::uint64_t e) const {
  Fp r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fp PrimeField::inv(Fp a) const {
  if (a % p == 0) throw Error("division by zero in F_p");
  return pow(a, p - 2);
}

Fp PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p);
  return static_cast<Fp>(r < 0 ? r + p : r);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Fp p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Fp p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<Fp>>& rows, std::size_t cols, Fp p) {
  FpMatrix m(0, rows.empty() ? cols : rows.front().size(), p);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Fp> FpMatrix::row(std::size_t r) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_), a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void FpMatrix::append_row(const std::vector<Fp>& r) {
  if (r.size() != cols_) throw Error("row length mismatch");
  for (Fp x : r) a_.push_back(x % p_);
  ++rows_;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw Error("matrix shape mismatch");
  FpMatrix r(rows_, o.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        r.at(i, j) = static_cast<Fp>((r.at(i, j) + a * o.at(k, j)) % p_);
      }
    }
  }
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  FpMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  FpMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return r;
}

std::vector<Fp> FpMatrix::apply(const std::vector<Fp>& v) const {
  if (v.size() != cols_) throw Error("vector length mismatch");
  std::vector<Fp> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s = (s + static_cast<std::uint64_t>(at(i, j)) * v[j]) % p_;
    out[i] = static_cast<Fp>(s);
  }
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

std::vector<std::size_t> rref(FpMatrix& m) {
  const PrimeField f(m.prime());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    }
    const Fp s = f.inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Fp t = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(FpMatrix m) { return rref(m).size(); }

FpMatrix nullspace(const FpMatrix& m) {
  FpMatrix e = m;
  const auto pivots = rref(e);
  const PrimeField f(m.prime());
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  FpMatrix basis(0, m.cols(), m.prime());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Fp> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(e.at(i, free));
    basis.append_row(v);
  }
  return basis;
}

bool row_space_contains(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols()) throw Error("column count mismatch");
  FpMatrix both = a;
  for (std::size_t i = 0; i < b.rows(); ++i) both.append_row(b.row(i));
  return rank(both) == rank(a);
}

bool same_row_space(const FpMatrix& a, const FpMatrix& b) {
  return row_space_contains(a, b) && row_space_contains(b, a);
}

}  // namespace hgw
