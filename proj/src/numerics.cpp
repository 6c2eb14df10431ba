#include "qpf/numerics.hpp"

#include <cmath>
#include <numbers>

namespace qpf {

namespace {

using u128 = unsigned __int128;

constexpr double kPi = std::numbers::pi;

// sin(π k / N) for any integer k, reduced as sin(π (k mod N)/N) with the sign
// (-1)^{floor(k/N)} folded in.
double signed_sin(u128 k, std::uint64_t N, int& sign) {
    const std::uint64_t rem = static_cast<std::uint64_t>(k % N);
    sign = (static_cast<std::uint64_t>(k / N) & 1u) ? -1 : 1;
    return std::sin(kPi * static_cast<double>(rem) / static_cast<double>(N));
}

} // namespace

std::complex<double> unit_phase(std::uint64_t s, std::uint64_t N) {
    const double angle = 2.0 * kPi * static_cast<double>(s % N) / static_cast<double>(N);
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> geometric_phase_sum(std::uint64_t t, std::uint64_t M, std::uint64_t N) {
    if (t % N == 0) return {static_cast<double>(M), 0.0};
    int sign_num = 1;
    int sign_den = 1;
    const double num = signed_sin(u128(M) * t, N, sign_num);
    const double den = signed_sin(u128(t), N, sign_den);
    const double magnitude = (sign_num * sign_den) * num / den;
    // Leading phase e^{iπ(M-1)t/N}, reduced modulo 2N.
    const std::uint64_t p = static_cast<std::uint64_t>((u128(M - 1) * t) % (2 * u128(N)));
    const double angle = kPi * static_cast<double>(p) / static_cast<double>(N);
    return magnitude * std::complex<double>{std::cos(angle), std::sin(angle)};
}

double geometric_phase_sum_sq(std::uint64_t t, std::uint64_t M, std::uint64_t N) {
    if (t % N == 0) return static_cast<double>(M) * static_cast<double>(M);
    int ignored = 1;
    const double num = signed_sin(u128(M) * t, N, ignored);
    const double den = signed_sin(u128(t), N, ignored);
    const double ratio = num / den;
    return ratio * ratio;
}

} // namespace qpf
