#pragma once

#include <complex>
#include <cstdint>

namespace qpf {

/// Kahan compensated accumulator. The direct 1-RDM formulas sum 2^{n-1}
/// kernel terms; plain accumulation loses digits once n grows past ~16.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// sum_{m=0}^{M-1} exp(i 2π m t / N) for integers 0 <= t < N, M >= 1.
///
/// Evaluated through the closed form e^{iπ(M-1)t/N} sin(πMt/N)/sin(πt/N),
/// with all angle reductions done in integer arithmetic so the resonant case
/// t == 0 (value M) is detected exactly and large arguments never reach sin.
std::complex<double> geometric_phase_sum(std::uint64_t t, std::uint64_t M, std::uint64_t N);

/// |geometric_phase_sum(t, M, N)|^2 without touching the phase.
double geometric_phase_sum_sq(std::uint64_t t, std::uint64_t M, std::uint64_t N);

/// exp(i 2π s / N) with the argument reduced modulo N in integers.
std::complex<double> unit_phase(std::uint64_t s, std::uint64_t N);

} // namespace qpf
