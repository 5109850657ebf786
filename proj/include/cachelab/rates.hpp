#pragma once

#include <string>
#include <vector>

#include "cachelab/rational.hpp"

namespace cachelab {

// Achievable schemes and lower bounds tracked on the rate-memory plane.
enum class Scheme {
  kProposed,
  kMncBaseline,
  kMnScheme,
  kChenPoint,
  kLowerCutset,
  kLowerSengupta,
};

struct RatePoint {
  Rational m;     // normalized cache capacity, 0 <= m <= N
  Rational rate;  // delivery rate, >= 0
  Scheme scheme = Scheme::kProposed;
};

// Worst-case rate of the coded-placement scheme at M = (N-1)/K:
// N(1 - N/(2K)) for N < K, K/2 otherwise.
Rational rate_proposed_point(int n_files, int n_users);

// Rate delivered for a demand vector with n_prime distinct files:
// n_prime (1 - n_prime/(2K)) for n_prime >= 2, and 1 for the single-file
// fallback.
Rational delivered_rate_for_distinct(int n_prime, int n_users);

// Memory-sharing line between the M = 1/K coded point and the t-th
// uncoded-placement point: R = alpha_t M + beta_t on [1/K, tN/K].
struct MemorySharingCoefficients {
  int t = 0;
  Rational alpha;
  Rational beta;
};

MemorySharingCoefficients memory_sharing_coeffs(int n_files, int n_users, int t);

// The t in [K] minimizing alpha_t (smallest t on ties).
int t_star(int n_files, int n_users);

// Baseline rate alpha_{t*} M + beta_{t*} on [1/K, t* N/K].
Rational rate_mnc(int n_files, int n_users, const Rational& m);

// The M = 1/K anchor shared by every memory-sharing line: (1/K, N - N/K).
RatePoint rate_chen_point(int n_files, int n_users);

// Piecewise-linear rate of the uncoded-placement reference scheme:
// (K - t)/(t + 1) at M = tN/K, min(N,K) at M = 0, linear in between.
Rational rate_mn(int n_files, int n_users, const Rational& m);

// Two-segment achievable trade-off for K > N: slope -N/2 from the anchor
// down to M = (N-1)/K, then the memory-sharing segment to M = t* N/K.
Rational rate_tradeoff(int n_files, int n_users, const Rational& m);

// Lower bound maximized over (s, l): (1/l){N - sM - mu (N-ls)^+ / (s+mu)
// - (N-Kl)^+} with mu = min(ceil((N-ls)/l), K-s); floored at 0.
Rational lower_bound_sengupta(int n_files, int n_users, const Rational& m);

// Cut-set bound: max over s in [min(N,K)] of s - sM/floor(N/s), floored at 0.
Rational lower_bound_cutset(int n_files, int n_users, const Rational& m);

// rate_tradeoff / max(both lower bounds) on 1/K <= M <= (N-1)/K, K > N >= 3.
Rational gap_ratio(int n_files, int n_users, const Rational& m);

// alpha_t + N/2, nonnegative for all t when K > N >= 3.
Rational g_function(int n_files, int n_users, int t);

// Completed-square certificate for g >= 0; satisfies
// g * (t+1)(tN-1) == h exactly.
Rational h_function(int n_files, int n_users, int t);

// Endpoint-slack certificate for the gap bound at M = (N-1)/K (odd N).
Rational p_function(int n_files, int n_users);

// Ratio-bound value at the M range endpoint: 2(2K-N)/(3K-2N+2) (even N).
Rational even_endpoint_ratio_bound(int n_files, int n_users);

// Parity-dependent closed-form ratio bound f(M) dominating gap_ratio on
// [1/K, (N-1)/K]; nondecreasing in M for K > N >= 3.
Rational ratio_bound_f(int n_files, int n_users, const Rational& m);

struct AlphaLowerCheck {
  bool ok = false;
  int violating_t = 0;  // 0 when ok
};

// Checks g(N,K,t) >= 0 (equivalently alpha_t >= -N/2) for every t in [K].
AlphaLowerCheck check_alpha_lower(int n_files, int n_users);

struct GapFunctionReport {
  bool h_ok = false;          // h(N,K,t) >= 0 for all t in [K]
  bool f_monotone_ok = false; // f nondecreasing over breakpoints + 100-pt grid
  bool p_ok = false;          // endpoint certificate (p >= 0 / even-N bound <= 2)
  Rational p_value;           // p(N,K) for odd N, 2 - endpoint bound for even N
  Rational endpoint_ratio_bound;  // f((N-1)/K)
};

// Instance-level numeric verification of the gap certificates for K > N >= 3.
GapFunctionReport check_gap_functions(int n_files, int n_users);

std::string to_string(Scheme scheme);

}  // namespace cachelab
