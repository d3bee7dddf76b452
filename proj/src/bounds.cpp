#include "richwords/bounds.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace richwords::bounds {

namespace {

unsigned digits10_for_bits(unsigned bits) {
  // log10(2) = 0.30103...; a few guard digits on top
  return static_cast<unsigned>(static_cast<double>(bits) * 0.30103) + 5;
}

// the mpfr default precision is process-global; serialize everything that
// depends on it so bounds calls are safe from any thread
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}

constexpr unsigned kMaxAutoPrecisionBits = 1u << 20;

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + " must be at least 1");
}

Real ln_u64(std::uint64_t n) { return log(Real(n)); }

// c1 i^(c2 ln i) evaluated in log space
Real growth_term(std::uint64_t i, const BoundParams& p) {
  const Real li = ln_u64(i);
  return exp(log(p.c1) + p.c2 * li * li);
}

}  // namespace

PrecisionGuard::PrecisionGuard(unsigned bits) {
  precision_mutex().lock();
  saved_digits10_ = Real::default_precision();
  Real::default_precision(digits10_for_bits(bits));
}

PrecisionGuard::~PrecisionGuard() {
  Real::default_precision(saved_digits10_);
  precision_mutex().unlock();
}

BoundParams make_params(unsigned q, double d, unsigned precision_bits) {
  if (q == 0) throw std::invalid_argument("alphabet size q must be at least 1");
  if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("d must lie in the open interval (0,1)");
  if (precision_bits < kMinPrecisionBits) {
    throw std::invalid_argument("precision_bits must be at least 64");
  }
  PrecisionGuard guard(precision_bits);
  BoundParams p;
  p.q = q;
  p.d_input = d;
  p.precision_bits = precision_bits;
  p.d = Real(d);
  const Real ln2 = log(Real(2));
  const Real ln4 = log(Real(4));
  const Real lnq = log(Real(q));
  p.delta = Real(3) / (2 * (log(Real(3)) - ln2));
  p.c2 = p.delta * (ln4 + 2 * lnq) + p.delta + p.delta * ln2 + 2;
  p.alpha = sqrt(1 / p.c2);
  p.beta = (-1 - p.d) / (2 * p.c2);
  p.c1_candidate_growth = exp((p.delta * ln2 + 2) * (ln4 + 2 * lnq));
  p.c1_candidate_unit = exp(-(p.beta + p.d * p.beta + p.c2 * p.beta * p.beta));
  // the smallest constant satisfying both >= constraints is the larger candidate
  p.c1 = std::max(p.c1_candidate_growth, p.c1_candidate_unit);
  p.gamma = p.beta + log(p.c1) + p.c2 * p.beta * p.beta;
  return p;
}

Real fc_bound_raw(std::uint64_t n, unsigned q, unsigned precision_bits) {
  require_positive(n, "n");
  if (q == 0) throw std::invalid_argument("alphabet size q must be at least 1");
  PrecisionGuard guard(precision_bits);
  const Real delta = Real(3) / (2 * (log(Real(3)) - log(Real(2))));
  // (4 q^2 n)^(delta ln(2n) + 2)
  const Real ln_base = log(Real(4)) + 2 * log(Real(q)) + ln_u64(n);
  const Real expo = delta * log(2 * Real(n)) + 2;
  return exp(ln_base * expo);
}

Real fc_bound_simple(std::uint64_t n, const BoundParams& params) {
  require_positive(n, "n");
  PrecisionGuard guard(params.precision_bits);
  return growth_term(n, params);
}

Real weighted_floor_sum(std::uint64_t t, const BoundParams& params) {
  require_positive(t, "t");
  PrecisionGuard guard(params.precision_bits);
  const Real ln2 = log(Real(2));
  const Real near_int_eps = ldexp(Real(1), -20);
  Real sum = 0;
  for (std::uint64_t i = 1; i <= t; ++i) {
    const Real li = ln_u64(i);
    const Real ln_x = log(params.c1) + params.c2 * li * li;
    // the integer part is only resolvable while log2(x) stays well below the
    // mantissa width; beyond that the stored value is itself an integer
    if (ln_x / ln2 > Real(params.precision_bits) - 44) {
      throw PrecisionError("weighted_floor_sum: term too large to resolve its floor at " +
                           std::to_string(params.precision_bits) + " bits");
    }
    const Real x = exp(ln_x);
    const Real fl = floor(x);
    const Real frac = x - fl;
    if (frac < near_int_eps || 1 - frac < near_int_eps) {
      throw PrecisionError("weighted_floor_sum: term within 2^-20 of an integer at " +
                           std::to_string(params.precision_bits) + " bits");
    }
    sum += Real(i) * fl;
  }
  return sum;
}

Real count_sum(std::uint64_t t, const BoundParams& params) {
  require_positive(t, "t");
  PrecisionGuard guard(params.precision_bits);
  Real sum = 0;
  for (std::uint64_t i = 1; i <= t; ++i) sum += growth_term(i, params);
  return sum;
}

namespace {

// minimal t with weighted_floor_sum(t) >= n, escalating precision on demand;
// returns the escalated params alongside so callers can keep using them
std::pair<std::uint64_t, BoundParams> scan_t_min(std::uint64_t n, const BoundParams& params) {
  BoundParams working = params;
  for (;;) {
    try {
      for (std::uint64_t t = 1;; ++t) {
        if (weighted_floor_sum(t, working) >= n) return {t, working};
      }
    } catch (const PrecisionError&) {
      const unsigned next = working.precision_bits * 2;
      if (next > kMaxAutoPrecisionBits) throw;
      working = make_params(working.q, working.d_input, next);
    }
  }
}

}  // namespace

std::uint64_t luf_bound_t_min(std::uint64_t n, const BoundParams& params) {
  require_positive(n, "n");
  return scan_t_min(n, params).first;
}

Real luf_bound(std::uint64_t n, const BoundParams& params) {
  require_positive(n, "n");
  const auto [t, working] = scan_t_min(n, params);
  return count_sum(t, working);
}

Real sigma(std::uint64_t n, const BoundParams& params) {
  require_positive(n, "n");
  PrecisionGuard guard(params.precision_bits);
  return params.alpha * sqrt(ln_u64(n)) + params.beta;
}

SigmaIdentityCheck check_sigma_identity(std::uint64_t n, const BoundParams& params) {
  require_positive(n, "n");
  PrecisionGuard guard(params.precision_bits);
  const Real s = params.alpha * sqrt(ln_u64(n)) + params.beta;
  SigmaIdentityCheck out;
  out.lhs = exp((1 + params.d) * s + params.c2 * s * s) / Real(n);
  out.rhs = exp(params.beta + params.d * params.beta + params.c2 * params.beta * params.beta);
  out.relative_error = abs(out.lhs - out.rhs) / out.rhs;
  return out;
}

bool check_sum_lower_bound(std::uint64_t k, const BoundParams& params) {
  if (k < 2) {
    // at k = 1 the bound degenerates to 0^(c2 ln 0)
    throw std::domain_error("check_sum_lower_bound requires k >= 2");
  }
  BoundParams working = params;
  Real lhs;
  for (;;) {
    try {
      lhs = weighted_floor_sum(k, working);
      break;
    } catch (const PrecisionError&) {
      const unsigned next = working.precision_bits * 2;
      if (next > kMaxAutoPrecisionBits) throw;
      working = make_params(working.q, working.d_input, next);
    }
  }
  PrecisionGuard guard(working.precision_bits);
  const Real kd = exp(working.d * ln_u64(k));
  const Real r = Real(k) - kd;  // positive for k >= 2 since d < 1
  const Real lr = log(r);
  const Real rhs =
      (kd - 1) * r * exp(log(working.c1) + working.c2 * lr * lr) - Real(k) * (Real(k) + 1) / 2;
  return lhs >= rhs;
}

bool check_sum_upper_bound(std::uint64_t n, const BoundParams& params) {
  require_positive(n, "n");
  PrecisionGuard guard(params.precision_bits);
  const Real s = params.alpha * sqrt(ln_u64(n)) + params.beta;
  const Real kf = floor(exp(s));  // sigma(n) is tiny; the floor fits easily
  const auto t = kf.convert_to<std::uint64_t>();
  const Real lhs = t >= 1 ? count_sum(t, params) : Real(0);
  const Real rhs = exp(params.gamma) * Real(n) / exp(params.d * params.alpha * sqrt(ln_u64(n)));
  return lhs <= rhs;
}

bool check_weighted_sums_lemma(std::uint64_t t, std::uint64_t tbar,
                               std::span<const std::uint64_t> omega,
                               std::span<const std::uint64_t> omegabar) {
  if (t < 1 || tbar <= t) throw std::invalid_argument("need tbar > t >= 1");
  if (omega.size() < t || omegabar.size() < tbar) {
    throw std::invalid_argument("sequences shorter than their sum ranges");
  }
  for (std::size_t i = 0; i < t; ++i) {
    if (omega[i] == 0) throw std::invalid_argument("omega must be positive");
    if (omegabar[i] > omega[i]) {
      throw std::invalid_argument("omegabar must not exceed omega pointwise");
    }
  }
  for (std::size_t i = 0; i < tbar; ++i) {
    if (omegabar[i] == 0) throw std::invalid_argument("omegabar must be positive");
  }
  std::uint64_t plain_bar = 0, plain = 0, weighted_bar = 0, weighted = 0;
  for (std::size_t i = 0; i < tbar; ++i) {
    plain_bar += omegabar[i];
    weighted_bar += (i + 1) * omegabar[i];
  }
  for (std::size_t i = 0; i < t; ++i) {
    plain += omega[i];
    weighted += (i + 1) * omega[i];
  }
  if (plain_bar <= plain) {
    throw std::invalid_argument("hypothesis sum(omegabar) > sum(omega) violated");
  }
  return weighted_bar > weighted;
}

Real main_theorem_bound(std::uint64_t n, const Real& mu, const Real& pi,
                        unsigned precision_bits) {
  require_positive(n, "n");
  if (mu <= 0 || pi <= 0) throw std::invalid_argument("mu and pi must be positive");
  PrecisionGuard guard(precision_bits);
  return mu * Real(n) / exp(pi * sqrt(ln_u64(n)));
}

Real main_theorem_bound(std::uint64_t n, const BoundParams& params) {
  PrecisionGuard guard(params.precision_bits);
  return main_theorem_bound(n, exp(params.gamma), params.d * params.alpha,
                            params.precision_bits);
}

Real limit_ratio_diagnostic(const Real& n, const BoundParams& params) {
  PrecisionGuard guard(params.precision_bits);
  if (n < 1) throw std::domain_error("n must be at least 1");
  const Real s = params.alpha * sqrt(log(n)) + params.beta;
  const Real k = exp(s);
  const Real kd = exp(params.d * s);
  const Real r = k - kd;
  if (r <= 1) throw std::domain_error("limit_ratio_diagnostic needs e^sigma(n) - e^(d sigma(n)) > 1");
  const Real lr = log(r);
  const Real numerator =
      (kd - 1) * r * exp(log(params.c1) + params.c2 * lr * lr) - k * (k + 1) / 2;
  const Real denominator = exp((1 + params.d) * s + params.c2 * s * s + log(params.c1));
  return numerator / denominator;
}

}  // namespace richwords::bounds
