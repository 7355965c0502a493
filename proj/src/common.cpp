#include "pdvass/common.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pdvass {
namespace vec {

Vec zeros(std::size_t n) { return Vec(n, 0); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  add_into(r, b);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  add_into(r, b, -1);
  return r;
}

Vec scale(const Vec& a, Int k) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

void add_into(Vec& acc, const Vec& b, Int k) {
  if (acc.size() != b.size()) {
    throw PreconditionError("vector arity mismatch: " + std::to_string(acc.size()) +
                            " vs " + std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += k * b[i];
}

bool is_zero(const Vec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

bool is_nonneg(const Vec& a) {
  for (Int x : a)
    if (x < 0) return false;
  return true;
}

bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Int max_norm(const Vec& a) {
  Int m = 0;
  for (Int x : a) m = std::max(m, std::abs(x));
  return m;
}

Int one_norm(const Vec& a) {
  Int m = 0;
  for (Int x : a) m += std::abs(x);
  return m;
}

Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Vec slice(const Vec& a, std::size_t from, std::size_t count) {
  return Vec(a.begin() + static_cast<std::ptrdiff_t>(from),
             a.begin() + static_cast<std::ptrdiff_t>(from + count));
}

std::string to_string(const Vec& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[i]);
  }
  return out;
}

Vec parse(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (out.empty() && ss.eof()) break;
      throw Error("empty vector component in '" + text + "'");
    }
    out.push_back(std::stoll(item, &pos));
    if (item.find_first_not_of(" \t\r", pos) != std::string::npos)
      throw Error("malformed vector component in '" + text + "'");
  }
  return out;
}

}  // namespace vec

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace pdvass
