#include "qpf/rdm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpf/numerics.hpp"

namespace qpf {

namespace {

void check_args(Domain domain, std::uint64_t r, int q) {
    if (q < 0 || q >= domain.n) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " outside [0, n)");
    }
    if (r < 1 || r >= domain.size) {
        throw std::invalid_argument("period must be in [1, 2^n), got " + std::to_string(r));
    }
}

std::uint64_t comb_size(Domain domain, std::uint64_t r, std::uint64_t x0) {
    return (domain.size - 1 - x0) / r + 1;
}

} // namespace

double BlochCoefficients::length() const {
    return std::sqrt(ax * ax + ay * ay + az * az);
}

std::array<double, 2> OneQubitRDM::eigenvalues() const {
    const double radius = bloch().length();
    return {0.5 - radius, 0.5 + radius};
}

OneQubitRDM rdm_from_state(const StateVector& state, int q) {
    const Domain domain = state.domain();
    const BetaSet beta(domain, q);
    KahanSum diag;
    KahanSum coh_re;
    KahanSum coh_im;
    for (std::uint64_t b : beta) {
        const std::complex<double> amp = state[b];
        diag.add(std::norm(amp));
        const std::complex<double> cross = amp * std::conj(state[complement_string(b, q)]);
        coh_re.add(cross.real());
        coh_im.add(cross.imag());
    }
    OneQubitRDM rdm;
    rdm.q = q;
    rdm.rho00 = diag.value();
    rdm.rho11 = 1.0 - rdm.rho00;
    rdm.rho01 = {coh_re.value(), coh_im.value()};
    return rdm;
}

double rho00_direct_offset(Domain domain, std::uint64_t r, int q, std::uint64_t x0) {
    check_args(domain, r, q);
    if (x0 >= r) throw std::invalid_argument("preimage offset must satisfy x0 < r");
    const std::uint64_t n_size = domain.size;
    const std::uint64_t m_count = comb_size(domain, r, x0);
    KahanSum sum;
    for (std::uint64_t b : BetaSet(domain, q)) {
        sum.add(geometric_phase_sum_sq((r * b) % n_size, m_count, n_size));
    }
    return sum.value() /
           (static_cast<double>(n_size) * static_cast<double>(m_count));
}

double rho00_direct(Domain domain, std::uint64_t r, int q) {
    return rho00_direct_offset(domain, r, q, 0);
}

std::complex<double> rho01_direct(Domain domain, std::uint64_t r, int q, std::uint64_t a0) {
    check_args(domain, r, q);
    if (a0 >= r) {
        throw std::invalid_argument("measured value must satisfy 0 <= a0 < r");
    }
    const std::uint64_t n_size = domain.size;
    const std::uint64_t m_count = comb_size(domain, r, a0);
    KahanSum sum_re;
    KahanSum sum_im;
    for (std::uint64_t b : BetaSet(domain, q)) {
        const std::uint64_t partner = complement_string(b, q);
        const std::complex<double> term =
            geometric_phase_sum((r * b) % n_size, m_count, n_size) *
            std::conj(geometric_phase_sum((r * partner) % n_size, m_count, n_size));
        sum_re.add(term.real());
        sum_im.add(term.imag());
    }
    // The a0 phases of b and its complement differ by the constant
    // exp(-i 2π a0 2^q / N), which factors out of the sum.
    const std::complex<double> shift =
        std::conj(unit_phase((a0 * (std::uint64_t{1} << q)) % n_size, n_size));
    const double scale =
        1.0 / (static_cast<double>(n_size) * static_cast<double>(m_count));
    return shift * std::complex<double>{sum_re.value(), sum_im.value()} * scale;
}

MarginalProfile profile(Domain domain, std::uint64_t r) {
    check_args(domain, r, 0);
    MarginalProfile result;
    result.n = domain.n;
    result.r_true = r;
    result.az.reserve(domain.n);
    for (int q = 0; q < domain.n; ++q) {
        result.az.push_back(rho00_direct(domain, r, q) - 0.5);
    }
    return result;
}

MarginalProfile profile_from_state(const StateVector& state,
                                   std::optional<std::uint64_t> r_true) {
    MarginalProfile result;
    result.n = state.qubits();
    result.r_true = r_true;
    result.az.reserve(result.n);
    for (int q = 0; q < result.n; ++q) {
        result.az.push_back(rdm_from_state(state, q).rho00 - 0.5);
    }
    return result;
}

} // namespace qpf
