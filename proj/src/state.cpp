#include "qpf/state.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "qpf/numerics.hpp"

namespace qpf {

namespace {

void check_period(Domain domain, std::uint64_t r) {
    if (r < 1 || r >= domain.size) {
        throw std::invalid_argument("period must be in [1, 2^n), got " + std::to_string(r));
    }
}

void check_offset(std::uint64_t r, std::uint64_t x0) {
    if (x0 >= r) {
        throw std::invalid_argument("preimage offset x0 must satisfy 0 <= x0 < r");
    }
}

// Number of values x0 + m*r inside [0, N). For x0 = 0 this is ceil(N/r),
// with the convention that r | N gives exactly N/r terms.
std::uint64_t comb_size(Domain domain, std::uint64_t r, std::uint64_t x0) {
    return (domain.size - 1 - x0) / r + 1;
}

// Uniform double in [0, 1) from the top 53 bits of the generator output;
// spelled out so sampling is reproducible independent of the standard
// library's distribution implementations.
double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

StateVector::StateVector(Domain domain, std::vector<std::complex<double>> amplitudes)
    : domain_(domain), amps_(std::move(amplitudes)) {
    if (amps_.size() != domain_.size) {
        throw std::invalid_argument("StateVector: expected " + std::to_string(domain_.size) +
                                    " amplitudes, got " + std::to_string(amps_.size()));
    }
}

StateVector StateVector::computational_basis(Domain domain, std::uint64_t b) {
    if (!domain.contains(b)) {
        throw std::out_of_range("computational_basis: state index outside domain");
    }
    std::vector<std::complex<double>> amps(domain.size);
    amps[b] = 1.0;
    return StateVector(domain, std::move(amps));
}

double StateVector::norm() const {
    KahanSum sum;
    for (const auto& a : amps_) sum.add(std::norm(a));
    return std::sqrt(sum.value());
}

StateVector build_phi_direct(Domain domain, std::uint64_t r, std::uint64_t x0) {
    check_period(domain, r);
    check_offset(r, x0);
    const std::uint64_t m_count = comb_size(domain, r, x0);
    const double amp = 1.0 / std::sqrt(static_cast<double>(m_count));
    std::vector<std::complex<double>> amps(domain.size);
    for (std::uint64_t x = x0; x < domain.size; x += r) amps[x] = amp;
    return StateVector(domain, std::move(amps));
}

StateVector build_psi_direct(Domain domain, std::uint64_t r, std::uint64_t x0) {
    check_period(domain, r);
    check_offset(r, x0);
    const std::uint64_t n_size = domain.size;
    const std::uint64_t m_count = comb_size(domain, r, x0);
    const double scale =
        1.0 / std::sqrt(static_cast<double>(n_size) * static_cast<double>(m_count));
    std::vector<std::complex<double>> amps(n_size);
    for (std::uint64_t b = 0; b < n_size; ++b) {
        const std::complex<double> comb =
            geometric_phase_sum((r * b) % n_size, m_count, n_size);
        amps[b] = scale * unit_phase(x0 * b % n_size, n_size) * comb;
    }
    return StateVector(domain, std::move(amps));
}

StateVector qft_dense(const StateVector& state) {
    const Domain domain = state.domain();
    const std::uint64_t n_size = domain.size;
    const std::uint64_t mask = n_size - 1;
    // One period of the kernel; (x*b) mod N indexes into it.
    std::vector<std::complex<double>> twiddle(n_size);
    for (std::uint64_t k = 0; k < n_size; ++k) twiddle[k] = unit_phase(k, n_size);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_size));
    std::vector<std::complex<double>> out(n_size);
    for (std::uint64_t b = 0; b < n_size; ++b) {
        KahanSum re;
        KahanSum im;
        for (std::uint64_t x = 0; x < n_size; ++x) {
            const std::complex<double> term = twiddle[(x * b) & mask] * state[x];
            re.add(term.real());
            im.add(term.imag());
        }
        out[b] = scale * std::complex<double>{re.value(), im.value()};
    }
    return StateVector(domain, std::move(out));
}

StateVector qft_radix2(const StateVector& state) {
    const Domain domain = state.domain();
    const std::uint64_t n_size = domain.size;
    std::vector<std::complex<double>> a(state.amplitudes().begin(), state.amplitudes().end());

    // Bit-reversal permutation.
    for (std::uint64_t i = 1, j = 0; i < n_size; ++i) {
        std::uint64_t bit = n_size >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    // Cooley-Tukey butterflies with the +i kernel.
    for (std::uint64_t len = 2; len <= n_size; len <<= 1) {
        const std::complex<double> step = unit_phase(n_size / len, n_size);
        for (std::uint64_t block = 0; block < n_size; block += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::uint64_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[block + k];
                const std::complex<double> v = a[block + k + len / 2] * w;
                a[block + k] = u + v;
                a[block + k + len / 2] = u - v;
                w *= step;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_size));
    for (auto& amp : a) amp *= scale;
    return StateVector(domain, std::move(a));
}

StateVector qft(const StateVector& state) {
    return state.qubits() < kFastTransformQubits ? qft_dense(state) : qft_radix2(state);
}

std::uint64_t sample_preimage_offset(Domain domain, std::uint64_t r, std::uint64_t seed) {
    check_period(domain, r);
    std::mt19937_64 rng(seed);
    const double u = next_unit(rng);
    const double n_size = static_cast<double>(domain.size);
    double cumulative = 0.0;
    for (std::uint64_t x0 = 0; x0 < r; ++x0) {
        cumulative += static_cast<double>(comb_size(domain, r, x0)) / n_size;
        if (u < cumulative) return x0;
    }
    return r - 1;
}

std::pair<StateVector, MeasurementRecord>
run_full_circuit(Domain domain, const PeriodicFunction& f, const A0Mode& mode) {
    if (domain.n > kFullCircuitMaxQubits) {
        throw std::length_error("run_full_circuit: " + std::to_string(domain.n) +
                                " qubits exceeds the two-register capacity of n <= " +
                                std::to_string(kFullCircuitMaxQubits));
    }
    if (f.domain().n != domain.n) {
        throw std::invalid_argument("run_full_circuit: oracle domain mismatch");
    }
    const std::uint64_t n_size = domain.size;

    // Joint register |x>|y>, index (x << n) | y.
    std::vector<std::complex<double>> joint(n_size * n_size);
    const double h_amp = 1.0 / std::sqrt(static_cast<double>(n_size));
    for (std::uint64_t x = 0; x < n_size; ++x) joint[x << domain.n] = h_amp;

    // Oracle unitary |x>|y> -> |x>|y xor f(x)>: an involutive permutation of
    // each x block, applied by swapping the paired entries.
    for (std::uint64_t x = 0; x < n_size; ++x) {
        const std::uint64_t fx = f(x);
        if (fx == 0) continue;
        const std::uint64_t base = x << domain.n;
        for (std::uint64_t y = 0; y < n_size; ++y) {
            const std::uint64_t partner = y ^ fx;
            if (y < partner) std::swap(joint[base | y], joint[base | partner]);
        }
    }

    // Exact marginal of the second register.
    std::vector<double> marginal(n_size, 0.0);
    for (std::uint64_t x = 0; x < n_size; ++x) {
        const std::uint64_t base = x << domain.n;
        for (std::uint64_t y = 0; y < n_size; ++y) {
            marginal[y] += std::norm(joint[base | y]);
        }
    }

    MeasurementRecord record;
    if (mode.is_sample()) {
        std::mt19937_64 rng(mode.seed());
        const double u = next_unit(rng);
        double cumulative = 0.0;
        std::uint64_t chosen = 0;
        bool found = false;
        for (std::uint64_t y = 0; y < n_size; ++y) {
            cumulative += marginal[y];
            if (u < cumulative) {
                chosen = y;
                found = true;
                break;
            }
        }
        if (!found) { // rounding tail: take the last value with weight
            for (std::uint64_t y = n_size; y-- > 0;) {
                if (marginal[y] > 0.0) {
                    chosen = y;
                    break;
                }
            }
        }
        record.a0 = chosen;
        record.seed = mode.seed();
        record.sampled = true;
    } else {
        if (mode.a0() >= n_size || marginal[mode.a0()] <= 0.0) {
            throw std::invalid_argument("run_full_circuit: post-selected value " +
                                        std::to_string(mode.a0()) +
                                        " is not in the image of the oracle");
        }
        record.a0 = mode.a0();
    }

    // Collapse the second register and renormalize the first.
    std::vector<std::complex<double>> reg1(n_size);
    KahanSum weight;
    std::uint64_t preimages = 0;
    for (std::uint64_t x = 0; x < n_size; ++x) {
        const std::complex<double> amp = joint[(x << domain.n) | record.a0];
        reg1[x] = amp;
        weight.add(std::norm(amp));
        if (amp != std::complex<double>{0.0, 0.0}) ++preimages;
    }
    record.multiplicity = preimages;
    const double inv = 1.0 / std::sqrt(weight.value());
    for (auto& amp : reg1) amp *= inv;

    return {qft(StateVector(domain, std::move(reg1))), record};
}

} // namespace qpf
