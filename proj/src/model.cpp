#include "qpf/model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qpf {

namespace {

void check_qubit(int n, int q, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": need n >= 1");
    if (q < 0 || q >= n) {
        throw std::out_of_range(std::string(who) + ": qubit index " + std::to_string(q) +
                                " outside [0, " + std::to_string(n) + ")");
    }
}

} // namespace

int pow2_exponent(std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("pow2_exponent: r must be positive");
    return std::countr_zero(r);
}

std::uint64_t odd_part(std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("odd_part: r must be positive");
    return r >> std::countr_zero(r);
}

double az_analytic_pow2(int n, int k, int q) {
    check_qubit(n, q, "az_analytic_pow2");
    if (k < 0 || k >= n) {
        throw std::out_of_range("az_analytic_pow2: exponent k outside [0, n)");
    }
    return k <= n - q - 1 ? 0.5 : 0.0;
}

bool peak_predicate(int n, int q, std::uint64_t r) {
    check_qubit(n, q, "peak_predicate");
    if (r < 1) throw std::invalid_argument("peak_predicate: period must be positive");
    // Any r passing the rule lies below 2^n, so out-of-domain periods simply
    // classify as peakless.
    const int k = pow2_exponent(r);
    return odd_part(r) < (std::uint64_t{1} << (q + 1)) && k <= n - 1 - q;
}

std::vector<std::uint64_t> peak_set(int n, int q) {
    check_qubit(n, q, "peak_set");
    std::vector<std::uint64_t> peaks;
    for (std::uint64_t rp = 1; rp < (std::uint64_t{1} << (q + 1)); rp += 2) {
        for (int k = 0; k <= n - 1 - q; ++k) {
            const std::uint64_t r = rp << k;
            if (r < (std::uint64_t{1} << n)) peaks.push_back(r);
        }
    }
    std::sort(peaks.begin(), peaks.end());
    return peaks;
}

PeakSetDelta peak_set_delta(int n, int q) {
    check_qubit(n, q, "peak_set_delta");
    if (q == 0) {
        throw std::invalid_argument("peak_set_delta: qubit 0 has no predecessor");
    }
    PeakSetDelta delta;
    for (std::uint64_t rp = (std::uint64_t{1} << q) + 1;
         rp < (std::uint64_t{1} << (q + 1)); rp += 2) {
        for (int k = 0; k <= n - 1 - q; ++k) {
            const std::uint64_t r = rp << k;
            if (r < (std::uint64_t{1} << n)) delta.added.push_back(r);
        }
    }
    for (std::uint64_t rp = 1; rp < (std::uint64_t{1} << q); rp += 2) {
        const std::uint64_t r = rp << (n - q);
        if (r < (std::uint64_t{1} << n)) delta.removed.push_back(r);
    }
    std::sort(delta.added.begin(), delta.added.end());
    std::sort(delta.removed.begin(), delta.removed.end());
    return delta;
}

double rho00_counting(Domain domain, std::uint64_t r, int q) {
    check_qubit(domain.n, q, "rho00_counting");
    if (r < 1 || r >= domain.size) {
        throw std::invalid_argument("rho00_counting: period outside [1, 2^n)");
    }
    const IntervalRange range = beta_range(domain, q);
    std::uint64_t matches = 0;
    for (std::uint64_t j = 0; j < r; ++j) {
        if (range.contains_ratio(j * domain.size, r)) ++matches;
    }
    return static_cast<double>(matches) / static_cast<double>(r);
}

bool is_candidate_period(int n, int q_from_last, std::uint64_t r) {
    if (n < 1 || q_from_last < 0 || q_from_last >= n) return false;
    if (r < 1 || r >= (std::uint64_t{1} << n)) return false;
    if (pow2_exponent(r) != q_from_last) return false;
    return odd_part(r) < (std::uint64_t{1} << (n - q_from_last));
}

double az_approx(int n, int q_from_last, std::uint64_t r) {
    if (!is_candidate_period(n, q_from_last, r)) {
        throw std::domain_error("az_approx: period " + std::to_string(r) +
                                " is not of the form 2^" + std::to_string(q_from_last) +
                                " * odd below 2^n");
    }
    const std::uint64_t rp = r >> q_from_last;
    // ceil(r'/2) points of the comb fall inside each of the 2^{q'} intervals.
    const std::uint64_t matches = (std::uint64_t{1} << q_from_last) * ((rp + 1) / 2);
    return static_cast<double>(matches) / static_cast<double>(r) - 0.5;
}

double az_approx_continuous(int q_from_last, double rho) {
    return static_cast<double>(std::uint64_t{1} << q_from_last) / (2.0 * rho);
}

} // namespace qpf
