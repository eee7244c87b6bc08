#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsq {

// Malformed input text; position is a 0-based character offset.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Resource exhaustion: exponent overflow, closure blow-up, search caps.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent arithmetic never wraps silently; out-of-range results are reported.
inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r))
    throw LimitError("exponent overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r))
    throw LimitError("exponent overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r))
    throw LimitError("exponent overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t x) {
  if (x == INT64_MIN) throw LimitError("exponent overflow in negation");
  return -x;
}

inline std::int64_t checked_abs(std::int64_t x) {
  return x < 0 ? checked_neg(x) : x;
}

}  // namespace bsq
