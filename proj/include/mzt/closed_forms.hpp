#pragma once

#include "mzt/constants.hpp"
#include "mzt/rational.hpp"
#include "mzt/real.hpp"

namespace mzt {

// Coefficient of zeta(2k+1) zeta({2}^(r+s+1-k)) in the expansion of
// H(r,s) = zeta({2}^r, 3, {2}^s):
//   c(k; r, s) = C(2k, 2r+2) - (1 - 4^-k) C(2k, 2s+1),
// with 1 <= k <= r+s+1 and r, s >= 0.
Rational zagier_coeff(int k, int r, int s);

// Coefficient in the corresponding expansion of T(r,s) = t({2}^r, 3, {2}^s):
//   d(k; r, s) = C(2k, 2r+1) + (1 - 4^-k) C(2k, 2s+1).
Rational murakami_coeff(int k, int r, int s);

// H(r,s) = 2 sum_{k=1}^{r+s+1} (-1)^k c(k; r, s) zeta(2k+1) zeta({2}^(r+s+1-k)).
// Finite form: zero tail bound.
EvalResult h_zagier(int r, int s, ConstantCache& cache);

// T(r,s) = sum_{k=1}^{r+s+1} (-1)^(k-1) d(k; r, s) 4^-k zeta(2k+1) t({2}^(r+s+1-k)).
EvalResult t_murakami(int r, int s, ConstantCache& cache);

// H(r,s) = -4 pi^(2r+2s+2) / (2r+2)! * A(r,s), inheriting the series bound.
EvalResult h_lyh(int r, int s, ConstantCache& cache);

// T(r,s) = -2 / (2r+1)! * (pi/2)^(2r+2s+2) * C(r,s).
EvalResult t_lyh(int r, int s, ConstantCache& cache);

// K(r,s) = 2 sum_{k=1}^{r+s+1} (-1)^(k-1) d(k; r, s) K(r+s+1-k) zeta(2k+1),
// where K(d) = 2^(2d) t({2}^d).  Satisfies K(r,s) = 2^(2r+2s+3) T(r,s).
EvalResult k_murakami(int r, int s, ConstantCache& cache);

// h_zagier with the sign of the k = flip_k coefficient deliberately flipped.
// Exists so the verifier can prove a single-sign mutation is caught; never a
// production route.
EvalResult h_zagier_mutated(int r, int s, ConstantCache& cache, int flip_k);

}  // namespace mzt
