#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <span>
#include <vector>

#include "richwords/errors.hpp"

namespace richwords::bounds {

/// Arbitrary-precision real; working precision is taken from BoundParams and
/// applied per call, so values of different precisions mix safely.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

constexpr unsigned kDefaultPrecisionBits = 256;
constexpr unsigned kMinPrecisionBits = 64;

/// Sets the default mpfr precision for the lifetime of the guard. The
/// precision knob is process-global, so the guard also holds a recursive
/// process-wide lock; bounds operations are therefore serialized but safe to
/// call from any thread.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_digits10_ = 0;
};

/// Alphabet size q, the free parameter d in (0,1), and the derived constants
///   delta = 3 / (2 (ln 3 - ln 2))
///   c2    = delta (ln 4 + 2 ln q) + delta + delta ln 2 + 2
///   alpha = sqrt(1/c2),  beta = (-1-d)/(2 c2)
///   c1    = the smallest constant satisfying both
///             c1 >= e^{(delta ln 2 + 2)(ln 4 + 2 ln q)}  and
///             c1 e^{beta + d beta + c2 beta^2} >= 1,
///           i.e. the max of the two candidate values (both kept for display)
///   gamma = beta + ln c1 + c2 beta^2
/// All values are computed at precision_bits and immutable afterwards.
struct BoundParams {
  unsigned q = 2;
  double d_input = 0.5;
  unsigned precision_bits = kDefaultPrecisionBits;
  Real d;
  Real delta;
  Real c2;
  Real alpha;
  Real beta;
  Real c1;
  Real c1_candidate_growth;  // e^{(delta ln 2 + 2)(ln 4 + 2 ln q)}
  Real c1_candidate_unit;    // e^{-(beta + d beta + c2 beta^2)}
  Real gamma;
};

/// Throws std::invalid_argument for q = 0, d outside (0,1), or
/// precision_bits < kMinPrecisionBits.
BoundParams make_params(unsigned q, double d, unsigned precision_bits = kDefaultPrecisionBits);

/// Factor-complexity bound (4 q^2 n)^(delta ln(2n) + 2), evaluated in log space.
Real fc_bound_raw(std::uint64_t n, unsigned q, unsigned precision_bits = kDefaultPrecisionBits);

/// Simplified factor-complexity bound c1 n^(c2 ln n).
Real fc_bound_simple(std::uint64_t n, const BoundParams& params);

/// sum_{i=1..t} i * floor(c1 i^(c2 ln i)). Throws PrecisionError when some
/// term lands within 2^-20 of an integer at the working precision (the floor
/// cannot be trusted; retry with more bits).
Real weighted_floor_sum(std::uint64_t t, const BoundParams& params);

/// sum_{i=1..t} c1 i^(c2 ln i), no floors.
Real count_sum(std::uint64_t t, const BoundParams& params);

/// Minimal t with weighted_floor_sum(t) >= n, found by linear scan (terms grow
/// like e^{c2 ln^2 t}, so t stays tiny); escalates precision internally as
/// needed. Returns count_sum(t), an upper bound on LUF for every rich word of
/// length n.
Real luf_bound(std::uint64_t n, const BoundParams& params);

/// The t chosen by luf_bound's scan, for display.
std::uint64_t luf_bound_t_min(std::uint64_t n, const BoundParams& params);

/// sigma(n) = alpha sqrt(ln n) + beta.
Real sigma(std::uint64_t n, const BoundParams& params);

struct SigmaIdentityCheck {
  Real lhs;  // e^{(1+d) sigma(n)} e^{c2 sigma(n)^2} / n
  Real rhs;  // e^{beta + d beta + c2 beta^2}
  Real relative_error;
};

/// The two sides are equal by algebra; relative_error reflects rounding only.
SigmaIdentityCheck check_sigma_identity(std::uint64_t n, const BoundParams& params);

/// True iff sum_{i=1..k} i floor(c1 i^(c2 ln i))
///   >= (k^d - 1)(k - k^d) c1 (k - k^d)^(c2 ln(k - k^d)) - k(k+1)/2.
/// Throws std::domain_error for k < 2 (at k = 1 the right-hand side contains
/// 0^(c2 ln 0)). Note the inequality itself can genuinely fail when
/// k - k^d < 1, e.g. k = 2 with d close to 1.
bool check_sum_lower_bound(std::uint64_t k, const BoundParams& params);

/// True iff sum_{i=1..floor(e^sigma(n))} c1 i^(c2 ln i)
///   <= e^gamma n / e^(d alpha sqrt(ln n)).  An empty sum counts as 0.
bool check_sum_upper_bound(std::uint64_t n, const BoundParams& params);

/// Checks that sum_{i=1..tbar} i*omegabar(i) > sum_{i=1..t} i*omega(i) given
/// the hypotheses tbar > t >= 1, all values positive, omegabar(i) <= omega(i)
/// for i <= t, and sum omegabar > sum omega. Hypothesis violations throw
/// std::invalid_argument (distinguishing them from a false conclusion).
bool check_weighted_sums_lemma(std::uint64_t t, std::uint64_t tbar,
                               std::span<const std::uint64_t> omega,
                               std::span<const std::uint64_t> omegabar);

/// mu n / e^(pi sqrt(ln n)).
Real main_theorem_bound(std::uint64_t n, const Real& mu, const Real& pi,
                        unsigned precision_bits = kDefaultPrecisionBits);

/// Proof-suggested defaults mu = e^gamma, pi = d alpha. For finite n the
/// luf_bound route is the authoritative bound; this form is the smooth
/// envelope it approaches.
Real main_theorem_bound(std::uint64_t n, const BoundParams& params);

/// Finite-n value of the ratio
///   [(k^d-1)(k-k^d) c1 (k-k^d)^(c2 ln(k-k^d)) - k(k+1)/2]
///   / [e^((1+d) sigma(n)) c1 e^(c2 sigma(n)^2)]
/// with k = e^sigma(n); its limit in n is 1, approached extremely slowly.
/// Diagnostic only. Throws std::domain_error when k - k^d <= 1.
Real limit_ratio_diagnostic(const Real& n, const BoundParams& params);

}  // namespace richwords::bounds
