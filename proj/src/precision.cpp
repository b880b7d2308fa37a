#include "mzt/precision.hpp"

#include <cstdint>

#include "mzt/errors.hpp"

namespace mzt {

namespace {

// ceil(n * mant / 10^16) in exact integer arithmetic.
long ceil_scaled(long n, std::int64_t mant) {
  const __int128 scale = static_cast<__int128>(10000000000000000LL);
  __int128 p = static_cast<__int128>(n) * mant;
  return static_cast<long>((p + scale - 1) / scale);
}

}  // namespace

PrecisionContext make_context(int target_digits, int guard_digits) {
  if (target_digits < 10) throw ConfigError("target_digits must be at least 10");
  if (guard_digits < 5) throw ConfigError("guard_digits must be at least 5");
  const long total = static_cast<long>(target_digits) + guard_digits;
  // 3.3219280948873624 rounds log2(10) up in the 16th decimal place.
  const long bits_exact = ceil_scaled(total, 33219280948873624LL);
  const long bits_floor = (total * 333 + 99) / 100;
  return PrecisionContext{target_digits, guard_digits,
                          bits_exact > bits_floor ? bits_exact : bits_floor};
}

const PrecisionContext& finer(const PrecisionContext& a, const PrecisionContext& b) {
  return b.working_bits > a.working_bits ? b : a;
}

}  // namespace mzt
