#pragma once

#include <cstdint>
#include <vector>

#include "qpf/core.hpp"

namespace qpf {

/// Threshold for classifying an exact a_z value as a peak. Exact peaks at
/// desk scale are no smaller than O(2^{q'}/2N), orders of magnitude above
/// this; off-pattern values are zero up to rounding.
constexpr double kDefaultEpsZero = 1e-6;

/// Exponent of the largest power of two dividing r (r >= 1).
int pow2_exponent(std::uint64_t r);

/// r with all factors of two removed.
std::uint64_t odd_part(std::uint64_t r);

/// Closed-form a_z of qubit q for power-of-two periods r = 2^k:
/// 0.5 when k <= n-q-1, exactly 0 otherwise.
double az_analytic_pow2(int n, int k, int q);

/// Peak-pattern rule: a_z^{(q)}(r) > 0 exactly when r = 2^k * r' with odd
/// r' < 2^{q+1} and k <= n-1-q. Subsumes the power-of-two results.
bool peak_predicate(int n, int q, std::uint64_t r);

/// All periods in [1, 2^n) with a predicted peak at qubit q.
std::vector<std::uint64_t> peak_set(int n, int q);

/// Peaks gained and lost when stepping from qubit q-1 to qubit q.
struct PeakSetDelta {
    std::vector<std::uint64_t> added;
    std::vector<std::uint64_t> removed;
};

/// Trend rules: qubit q adds periods 2^k * r' for odd r' in (2^q, 2^{q+1})
/// and removes periods 2^{n-q} * r' for odd r' < 2^q. Consistent with
/// peak_predicate at q-1 and q; kept as a cross-check of the predicate.
PeakSetDelta peak_set_delta(int n, int q);

/// Geometric counting model for the diagonal marginal: the fraction of the
/// points j*N/r, j in [0, r), that land inside the real range spanned by
/// beta_q. Membership is decided in exact integer arithmetic.
double rho00_counting(Domain domain, std::uint64_t r, int q);

/// True when r = 2^{q_from_last} * r' with r' odd and r' < 2^{n - q_from_last},
/// the family on which the approximate marginal formula is defined.
bool is_candidate_period(int n, int q_from_last, std::uint64_t r);

/// Approximate a_z of the qubit q_from_last positions before the last one,
/// for candidate periods: (2^{q'}/r) * ceil((r/2^{q'})/2) - 0.5, which
/// simplifies to 2^{q'}/(2r) on the candidate family. Off-family periods are
/// rejected; use az_approx_continuous for the root-finder's smooth curve.
double az_approx(int n, int q_from_last, std::uint64_t r);

/// Smooth continuation 2^{q'}/(2 rho) that the secant iteration runs on; it
/// coincides with az_approx at every candidate period.
double az_approx_continuous(int q_from_last, double rho);

} // namespace qpf
