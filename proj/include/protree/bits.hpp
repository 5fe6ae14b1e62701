#pragma once

#include <bit>
#include <cstdint>

#include "protree/error.hpp"

namespace protree {

// Integer-only logarithms. Floating point floor(log) misbehaves right at powers.

/// floor(log2 x) for x >= 1.
constexpr unsigned floor_log2(std::uint64_t x) {
  if (x == 0) throw DomainError("floor_log2: argument must be positive");
  return static_cast<unsigned>(std::bit_width(x)) - 1;
}

constexpr unsigned popcount(std::uint64_t x) { return static_cast<unsigned>(std::popcount(x)); }

/// Number of zero digits in the binary expansion of x (no leading zeros).
constexpr unsigned zero_bits(std::uint64_t x) {
  if (x == 0) throw DomainError("zero_bits: argument must be positive");
  return static_cast<unsigned>(std::bit_width(x)) - popcount(x);
}

constexpr bool is_power_of_two(std::uint64_t x) { return std::has_single_bit(x); }

/// floor(log_base x) for x >= 1, base >= 2, by repeated multiplication.
constexpr unsigned floor_log(std::uint64_t x, std::uint64_t base) {
  if (x == 0) throw DomainError("floor_log: argument must be positive");
  if (base < 2) throw DomainError("floor_log: base must be at least 2");
  unsigned e = 0;
  std::uint64_t p = 1;
  // p * base <= x without overflowing
  while (p <= x / base) {
    p *= base;
    ++e;
  }
  return e;
}

}  // namespace protree
