#pragma once

namespace mzt {

// Precision request shared by every arbitrary-precision value and routine.
//
// target_digits is the number of correct decimal digits the caller wants,
// guard_digits the extra decimal headroom carried internally.  working_bits
// is the binary precision derived from their sum; it is never chosen by hand.
struct PrecisionContext {
  int target_digits;
  int guard_digits;
  long working_bits;
};

// Builds a context.  Requires target_digits >= 10 and guard_digits >= 5,
// otherwise throws ConfigError.  working_bits is the exact integer ceiling of
// (target_digits + guard_digits) * log2(10), floored at a 3.33 bits-per-digit
// rate so small requests keep slack.
PrecisionContext make_context(int target_digits, int guard_digits);

// Whichever context carries more working precision (left wins ties).
const PrecisionContext& finer(const PrecisionContext& a, const PrecisionContext& b);

}  // namespace mzt
