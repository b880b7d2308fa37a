#pragma once

#include "mzt/constants.hpp"
#include "mzt/real.hpp"

namespace mzt {

// L(p) = sum_{n>=0} zeta(2n) / ((2n+p) 4^n), with zeta(0) = -1/2, p >= 1.
// Terms are added in ascending n until the geometric tail bound
// 2 / ((2N+p) * 3 * 4^(N-1)) falls below 10^-(target_digits+2); results are
// memoized in the cache.
EvalResult lupu_series_direct(long p, ConstantCache& cache);

// The same quantity as a finite combination of log 2, odd zeta values and,
// for even p, zeta(p+1):
//   L(p) = -log(2)/2
//          - sum_{k=1}^{floor(p/2)} p! (-1)^k (4^k-1) zeta(2k+1)
//                                   / (2 (p-2k)! (2 pi)^(2k))
//          - [p even] p! (-1)^(p/2) zeta(p+1) / (2 pi^p).
EvalResult lupu_closed_form(long p, ConstantCache& cache);

// A(r,s) = sum_{n>=0} zeta(2n) / (4^n prod_{i=2}^{2s+3} (2n+2r+i)), r, s >= 0.
// Same ascending summation and tail-bound policy as lupu_series_direct.
EvalResult a_series(int r, int s, ConstantCache& cache);

// C(r,s) = sum_{n>=0} zeta(2n) / (4^n prod_{i=1}^{2s+2} (2n+2r+i)).
EvalResult c_series(int r, int s, ConstantCache& cache);

// B(r,s) = (2s+1)! A(r,s), assembled from L values:
//   sum_{i=2}^{2s+3} (-1)^i C(2s+1, i-2) L(2r+i).
EvalResult b_sum_definition(int r, int s, ConstantCache& cache);

// B(r,s) as a finite combination of odd zeta values:
//   sum_{k=1}^{r+s+1} (1/2) (-1)^k (2k)!
//       [ (1-4^-k) C(2r+2, 2k-2s-1) - C(2s+1, 2k-2r-2) ]
//       zeta(2k+1) / pi^(2k).
EvalResult b_sum_closed(int r, int s, ConstantCache& cache);

// D(r,s) = (2s+1)! C(r,s):
//   sum_{i=1}^{2s+2} (-1)^(i-1) C(2s+1, i-1) L(2r+i).
EvalResult d_sum_definition(int r, int s, ConstantCache& cache);

// D(r,s) closed form:
//   sum_{k=1}^{r+s+1} (1/2) (-1)^k (2k)!
//       [ (1-4^-k) C(2r+1, 2k-2s-1) + C(2s+1, 2k-2r-1) ]
//       zeta(2k+1) / pi^(2k).
EvalResult d_sum_closed(int r, int s, ConstantCache& cache);

namespace detail {

// Fixed-length truncations used by convergence tests: identical summation
// order to the adaptive versions, stopping after exactly `terms` terms and
// reporting the bound at that cutoff.
EvalResult lupu_series_truncated(long p, ConstantCache& cache, long terms);
EvalResult a_series_truncated(int r, int s, ConstantCache& cache, long terms);
EvalResult c_series_truncated(int r, int s, ConstantCache& cache, long terms);

}  // namespace detail

}  // namespace mzt
