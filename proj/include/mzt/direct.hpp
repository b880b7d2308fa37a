#pragma once

#include <string>
#include <vector>

#include "mzt/precision.hpp"
#include "mzt/real.hpp"

namespace mzt {

enum class IndexKind { zeta, t };

// Composition index (s_1, ..., s_l) for a nested sum over k_1 < ... < k_l.
// Every entry must be >= 2 so each truncated sum carries a provable tail
// bound; an empty index is rejected.
class Index {
 public:
  Index(std::vector<int> entries, IndexKind kind);

  const std::vector<int>& entries() const { return entries_; }
  IndexKind kind() const { return kind_; }
  int depth() const { return static_cast<int>(entries_.size()); }
  long weight() const;

  // "zeta(2,3,2)" / "t(2,2)"
  std::string to_string() const;

 private:
  std::vector<int> entries_;
  IndexKind kind_;
};

// ({2}^r, 3, {2}^s) with r, s >= 0.
Index hoffman_index(int r, int s, IndexKind kind);

// Truncated evaluation of zeta(s_1,...,s_l) = sum over k_1 < ... < k_l <= N
// of prod k_i^(-s_i), by one ascending pass that carries a running prefix
// accumulator per nesting level.  All terms are positive, so the value
// underestimates the limit and the limit lies in [value, value + tail_bound]
// with tail_bound = U^(depth-1) * N^(1-s_l) / (s_l - 1), where U is a fixed
// rational upper bound on zeta(2).  Requires kind == zeta and N >= depth.
EvalResult mzv_direct(const Index& index, long terms, const PrecisionContext& ctx);

// Same for t(s_1,...,s_l) = sum over odd denominators (2k_i - 1)^(-s_i); the
// tail bound is U^(depth-1) * (2N-1)^(1-s_l) / (2 (s_l - 1)).
EvalResult tvalue_direct(const Index& index, long terms, const PrecisionContext& ctx);

}  // namespace mzt
