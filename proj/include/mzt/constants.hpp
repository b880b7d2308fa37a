#pragma once

#include <map>
#include <mutex>
#include <optional>

#include "mzt/precision.hpp"
#include "mzt/real.hpp"

namespace mzt {

// Memoized store of the constants every route leans on: pi, log 2, zeta at
// integer arguments, and the all-twos zeta/t families.  One cache serves one
// PrecisionContext.  Reads and writes are mutex-guarded; computed values are
// deterministic, so concurrent duplicate work is safe and the first stored
// value wins.
class ConstantCache {
 public:
  explicit ConstantCache(const PrecisionContext& ctx);
  ConstantCache(const ConstantCache&) = delete;
  ConstantCache& operator=(const ConstantCache&) = delete;

  const PrecisionContext& context() const { return ctx_; }

  Real pi();
  Real log2();

  // zeta(m) for integer m: m == 0 gives -1/2, even m >= 2 the Bernoulli
  // closed form, odd m >= 3 an Euler-Maclaurin evaluation whose remainder is
  // kept below the guard allowance.  m == 1 and m < 0 throw
  // std::domain_error.
  Real zeta(long m);

  // zeta({2}^d) = pi^(2d)/(2d+1)! and t({2}^d) = pi^(2d)/(4^d (2d)!), d >= 0.
  Real zeta_all_twos(long d);
  Real t_all_twos(long d);

  // Memo surface for the one series family expensive enough to share.
  std::optional<EvalResult> cached_lupu(long p) const;
  void store_lupu(long p, const EvalResult& r);

 private:
  Real get(int kind, long arg);
  Real compute(int kind, long arg);
  void ensure_even_zetas(long m);

  PrecisionContext ctx_;
  mutable std::mutex mu_;
  std::map<std::pair<int, long>, Real> memo_;
  std::map<long, EvalResult> lupu_memo_;
};

// The individual construction routes, exposed so tests can cross-check
// independent formulas against each other.
Real pi_machin(const PrecisionContext& ctx);     // 16 atan(1/5) - 4 atan(1/239)
Real pi_alternate(const PrecisionContext& ctx);  // 4 atan(1/2) + 4 atan(1/3)
Real log2_geometric(const PrecisionContext& ctx);  // sum 1/(k 2^k)
Real log2_atanh(const PrecisionContext& ctx);      // 2 atanh(1/3)

// Euler-Maclaurin zeta(m) for any integer m >= 2.  N starts at
// max(16, working_bits/4) and doubles until the first omitted correction
// term drops below 10^-(target + guard).
Real zeta_euler_maclaurin(long m, const PrecisionContext& ctx);

}  // namespace mzt
