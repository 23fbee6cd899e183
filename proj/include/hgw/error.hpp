#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgw {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed group expression or cycle string.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A closure or subgroup enumeration exceeded its configured cap.
class EnumerationOverflow : public Error {
public:
  using Error::Error;
};

/// A statement that must hold by theory failed at runtime. Always a bug or a
/// contract breach upstream.
class TheoremViolation : public Error {
public:
  using Error::Error;
};

/// A permutation fails to map some block of a coset partition onto a block.
class BlockViolation : public Error {
public:
  BlockViolation(std::size_t block, const std::string& what) : Error(what), block_(block) {}
  [[nodiscard]] std::size_t block() const noexcept { return block_; }

private:
  std::size_t block_;
};

class FixtureFailure : public Error {
public:
  using Error::Error;
};

class UsageError : public Error {
public:
  using Error::Error;
};

}  // namespace hgw
