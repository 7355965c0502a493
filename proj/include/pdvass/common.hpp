#pragma once

// Shared vocabulary: integer vectors, error types, small arithmetic helpers.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdvass {

using Int = std::int64_t;
using Vec = std::vector<Int>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 1-based line/column when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was called on an input that violates its contract
/// (non-bidirected machine, arity mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured iteration or level cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

namespace vec {

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, Int k);
void add_into(Vec& acc, const Vec& b, Int k = 1);

bool is_zero(const Vec& a);
bool is_nonneg(const Vec& a);
/// Componentwise a <= b.
bool leq(const Vec& a, const Vec& b);
Int max_norm(const Vec& a);
Int one_norm(const Vec& a);
Int dot(const Vec& a, const Vec& b);

Vec concat(const Vec& a, const Vec& b);
Vec slice(const Vec& a, std::size_t from, std::size_t count);

/// "1,2,3"
std::string to_string(const Vec& a);
/// Inverse of to_string; accepts surrounding whitespace.
Vec parse(const std::string& text);

}  // namespace vec

/// a * b with overflow detection; throws std::overflow_error.
Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int gcd(Int a, Int b);
/// Mathematical modulo: result in [0, m) for m > 0.
Int floor_mod(Int a, Int m);

}  // namespace pdvass
