#include "cachelab/rates.hpp"

#include <stdexcept>

namespace cachelab {

namespace {

void require_instance(int n_files, int n_users) {
  if (n_files < 2 || n_users < 1) {
    throw std::invalid_argument("rates: need N >= 2 and K >= 1");
  }
}

void require_gap_domain(int n_files, int n_users) {
  if (!(n_users > n_files && n_files >= 3)) {
    throw std::domain_error("rates: this check requires K > N >= 3");
  }
}

}  // namespace

Rational rate_proposed_point(int n_files, int n_users) {
  require_instance(n_files, n_users);
  if (n_files >= n_users) return Rational(n_users, 2);
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  return Rational(n * (2 * k - n), 2 * k);
}

Rational delivered_rate_for_distinct(int n_prime, int n_users) {
  if (n_prime < 1 || n_prime > n_users) {
    throw std::invalid_argument("delivered_rate_for_distinct: n_prime outside [1, K]");
  }
  if (n_prime == 1) return Rational(1);
  const std::int64_t np = n_prime;
  const std::int64_t k = n_users;
  return Rational(np * (2 * k - np), 2 * k);
}

MemorySharingCoefficients memory_sharing_coeffs(int n_files, int n_users, int t) {
  require_instance(n_files, n_users);
  if (t < 1 || t > n_users) throw std::invalid_argument("memory_sharing_coeffs: t outside [1, K]");
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  const std::int64_t tn1 = static_cast<std::int64_t>(t) * n - 1;
  if (tn1 == 0) throw std::invalid_argument("memory_sharing_coeffs: tN == 1 is excluded");
  MemorySharingCoefficients coeffs;
  coeffs.t = t;
  coeffs.alpha = Rational(k * (k - t), (t + 1) * tn1) - Rational(n * (k - 1), tn1);
  coeffs.beta = Rational(n) - Rational(n, k) - Rational(k - t, (t + 1) * tn1) +
                Rational(n * (k - 1), k * tn1);
  return coeffs;
}

int t_star(int n_files, int n_users) {
  require_instance(n_files, n_users);
  int best_t = 1;
  Rational best_alpha = memory_sharing_coeffs(n_files, n_users, 1).alpha;
  for (int t = 2; t <= n_users; ++t) {
    const Rational alpha = memory_sharing_coeffs(n_files, n_users, t).alpha;
    if (alpha < best_alpha) {
      best_alpha = alpha;
      best_t = t;
    }
  }
  return best_t;
}

Rational rate_mnc(int n_files, int n_users, const Rational& m) {
  const int ts = t_star(n_files, n_users);
  const Rational lo(1, n_users);
  const Rational hi(static_cast<std::int64_t>(ts) * n_files, n_users);
  if (m < lo || m > hi) {
    throw std::domain_error("rate_mnc: M outside [1/K, t*N/K]");
  }
  const auto coeffs = memory_sharing_coeffs(n_files, n_users, ts);
  return coeffs.alpha * m + coeffs.beta;
}

RatePoint rate_chen_point(int n_files, int n_users) {
  require_instance(n_files, n_users);
  if (n_files > n_users) {
    throw std::domain_error("rate_chen_point: defined for N <= K");
  }
  return RatePoint{Rational(1, n_users),
                   Rational(n_files) - Rational(n_files, n_users), Scheme::kChenPoint};
}

Rational rate_mn(int n_files, int n_users, const Rational& m) {
  require_instance(n_files, n_users);
  if (m < Rational(0) || m > Rational(n_files)) {
    throw std::domain_error("rate_mn: M outside [0, N]");
  }
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  auto point = [&](int t) {  // (tN/K, (K-t)/(t+1)); t = 0 is the empty-cache corner
    if (t == 0) return RatePoint{Rational(0), Rational(std::min(n, k)), Scheme::kMnScheme};
    return RatePoint{Rational(t * n, k), Rational(k - t, t + 1), Scheme::kMnScheme};
  };
  for (int t = 0; t < n_users; ++t) {
    const RatePoint a = point(t);
    const RatePoint b = point(t + 1);
    if (m >= a.m && m <= b.m) {
      return a.rate + (b.rate - a.rate) * (m - a.m) / (b.m - a.m);
    }
  }
  return Rational(0);  // m == N exactly
}

Rational rate_tradeoff(int n_files, int n_users, const Rational& m) {
  require_instance(n_files, n_users);
  if (n_users <= n_files) {
    throw std::domain_error("rate_tradeoff: defined for K > N");
  }
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  const int ts = t_star(n_files, n_users);
  const Rational lo(1, k);
  const Rational brk(n - 1, k);
  const Rational hi(static_cast<std::int64_t>(ts) * n, k);
  if (m < lo || m > hi) {
    throw std::domain_error("rate_tradeoff: M outside [1/K, t*N/K]");
  }
  const Rational at_break = Rational(n) - Rational(n * n, 2 * k);
  if (m <= brk) {
    // R = -N(M/2 - 1 + 1/(2K))
    return -Rational(n) * (m / Rational(2) - Rational(1) + Rational(1, 2 * k));
  }
  const Rational slope =
      (Rational(k * (k - ts), ts + 1) - Rational(n) * (Rational(k) - Rational(n, 2))) /
      Rational((static_cast<std::int64_t>(ts) - 1) * n + 1);
  return slope * (m - brk) + at_break;
}

Rational lower_bound_sengupta(int n_files, int n_users, const Rational& m) {
  require_instance(n_files, n_users);
  if (m < Rational(0) || m > Rational(n_files)) {
    throw std::domain_error("lower_bound_sengupta: M outside [0, N]");
  }
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  Rational best(0);
  for (std::int64_t s = 1; s <= k; ++s) {
    const std::int64_t l_max = (n + s - 1) / s;  // ceil(N/s)
    for (std::int64_t l = 1; l <= l_max; ++l) {
      Rational value = Rational(n) - Rational(s) * m;
      const std::int64_t uncovered = n - l * s;
      if (uncovered > 0) {
        const std::int64_t mu = std::min((uncovered + l - 1) / l, k - s);
        if (mu > 0) value -= Rational(mu * uncovered, s + mu);
      }
      if (n - k * l > 0) value -= Rational(n - k * l);
      value /= Rational(l);
      if (value > best) best = value;
    }
  }
  return best;
}

Rational lower_bound_cutset(int n_files, int n_users, const Rational& m) {
  require_instance(n_files, n_users);
  if (m < Rational(0) || m > Rational(n_files)) {
    throw std::domain_error("lower_bound_cutset: M outside [0, N]");
  }
  const std::int64_t limit = std::min(n_files, n_users);
  Rational best(0);
  for (std::int64_t s = 1; s <= limit; ++s) {
    const Rational value = Rational(s) - Rational(s) * m / Rational(n_files / s);
    if (value > best) best = value;
  }
  return best;
}

Rational gap_ratio(int n_files, int n_users, const Rational& m) {
  require_gap_domain(n_files, n_users);
  if (m < Rational(1, n_users) || m > Rational(n_files - 1, n_users)) {
    throw std::domain_error("gap_ratio: M outside [1/K, (N-1)/K]");
  }
  const Rational bound = max(lower_bound_sengupta(n_files, n_users, m),
                             lower_bound_cutset(n_files, n_users, m));
  if (bound.is_zero()) {
    throw std::logic_error("gap_ratio: lower bound vanished inside the improvement range");
  }
  return rate_tradeoff(n_files, n_users, m) / bound;
}

Rational g_function(int n_files, int n_users, int t) {
  return memory_sharing_coeffs(n_files, n_users, t).alpha + Rational(n_files, 2);
}

Rational h_function(int n_files, int n_users, int t) {
  const Rational n(n_files);
  const Rational k(n_users);
  const Rational tt(t);
  const Rational square = k - (tt + n * (tt + Rational(1))) / Rational(2);
  return square * square + (tt * tt - Rational(1)) * n * (n - Rational(2)) / Rational(4) -
         tt * tt / Rational(4);
}

Rational p_function(int n_files, int n_users) {
  if (n_files % 2 == 0) throw std::domain_error("p_function: defined for odd N");
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  return Rational(1) - Rational(n - 4, k) - Rational(2, k * n) - Rational(1, n * n) -
         Rational(2, n);
}

Rational even_endpoint_ratio_bound(int n_files, int n_users) {
  if (n_files % 2 != 0) throw std::domain_error("even_endpoint_ratio_bound: defined for even N");
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  return Rational(2 * (2 * k - n), 3 * k - 2 * n + 2);
}

Rational ratio_bound_f(int n_files, int n_users, const Rational& m) {
  require_gap_domain(n_files, n_users);
  const std::int64_t n = n_files;
  const std::int64_t k = n_users;
  const Rational numer = Rational(2) - m - Rational(1, k);
  if (n % 2 == 0) {
    // Even N uses the s = N/2 specialization of the lower bound.
    return Rational(2) * numer / (Rational(3) - Rational(2) * m);
  }
  const Rational one_over_n(1, n);
  const Rational denom = Rational(2) - (Rational(1) - one_over_n) * m -
                         (Rational(1) + one_over_n) * (Rational(1) + one_over_n) / Rational(2);
  if (!(denom > Rational(0))) {
    throw std::logic_error("ratio_bound_f: nonpositive denominator");
  }
  return numer / denom;
}

AlphaLowerCheck check_alpha_lower(int n_files, int n_users) {
  require_gap_domain(n_files, n_users);
  for (int t = 1; t <= n_users; ++t) {
    if (g_function(n_files, n_users, t) < Rational(0)) {
      return AlphaLowerCheck{false, t};
    }
  }
  return AlphaLowerCheck{true, 0};
}

GapFunctionReport check_gap_functions(int n_files, int n_users) {
  require_gap_domain(n_files, n_users);
  GapFunctionReport report;

  report.h_ok = true;
  for (int t = 1; t <= n_users; ++t) {
    if (h_function(n_files, n_users, t) < Rational(0)) {
      report.h_ok = false;
      break;
    }
  }

  // Monotonicity of f over the range endpoints plus a 100-point grid.
  const Rational lo(1, n_users);
  const Rational hi(n_files - 1, n_users);
  report.f_monotone_ok = true;
  Rational prev = ratio_bound_f(n_files, n_users, lo);
  const int grid = 100;
  for (int idx = 1; idx <= grid; ++idx) {
    const Rational m = lo + (hi - lo) * Rational(idx, grid);
    const Rational value = ratio_bound_f(n_files, n_users, m);
    if (value < prev) {
      report.f_monotone_ok = false;
      break;
    }
    prev = value;
  }

  report.endpoint_ratio_bound = ratio_bound_f(n_files, n_users, hi);
  if (n_files % 2 == 0) {
    report.p_value = Rational(2) - even_endpoint_ratio_bound(n_files, n_users);
  } else {
    report.p_value = p_function(n_files, n_users);
  }
  report.p_ok = report.p_value >= Rational(0);
  return report;
}

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kProposed: return "proposed";
    case Scheme::kMncBaseline: return "mnc_baseline";
    case Scheme::kMnScheme: return "mn_scheme";
    case Scheme::kChenPoint: return "chen_point";
    case Scheme::kLowerCutset: return "lower_cutset";
    case Scheme::kLowerSengupta: return "lower_sengupta";
  }
  throw std::logic_error("to_string: unknown scheme");
}

}  // namespace cachelab
