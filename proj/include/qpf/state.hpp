#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qpf/core.hpp"
#include "qpf/oracle.hpp"

namespace qpf {

/// Amplitudes of an n-qubit register state, indexed by basis integer.
class StateVector {
public:
    StateVector(Domain domain, std::vector<std::complex<double>> amplitudes);

    static StateVector computational_basis(Domain domain, std::uint64_t b);

    Domain domain() const { return domain_; }
    int qubits() const { return domain_.n; }
    std::uint64_t size() const { return domain_.size; }

    const std::complex<double>& operator[](std::uint64_t b) const { return amps_[b]; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }

    double probability(std::uint64_t b) const { return std::norm(amps_[b]); }
    double norm() const;

private:
    Domain domain_;
    std::vector<std::complex<double>> amps_;
};

/// Outcome of measuring the second register.
struct MeasurementRecord {
    std::uint64_t a0 = 0;           ///< measured function value
    std::uint64_t multiplicity = 0; ///< number of x in [0, 2^n) with f(x) = a0
    std::uint64_t seed = 0;         ///< RNG seed (sample mode only)
    bool sampled = false;           ///< false for post-selection
};

/// How run_full_circuit resolves the second-register measurement: draw from
/// the exact marginal distribution with a fixed seed, or post-select a value.
class A0Mode {
public:
    static A0Mode sample(std::uint64_t seed) { return A0Mode(true, seed); }
    static A0Mode postselect(std::uint64_t a0) { return A0Mode(false, a0); }

    bool is_sample() const { return sample_; }
    std::uint64_t seed() const { return value_; }
    std::uint64_t a0() const { return value_; }

private:
    A0Mode(bool sample, std::uint64_t value) : sample_(sample), value_(value) {}
    bool sample_;
    std::uint64_t value_;
};

/// Post-measurement comb state: amplitude 1/sqrt(M) on the M values
/// x0 + m*r that fit in [0, 2^n), zero elsewhere. Requires 0 <= x0 < r.
StateVector build_phi_direct(Domain domain, std::uint64_t r, std::uint64_t x0);

/// Fourier transform of the comb state, evaluated in closed form:
/// amplitude_b = (1/sqrt(N*M)) sum_m exp(i 2π (x0 + m r) b / N).
/// Agrees with qft(build_phi_direct(...)) to machine precision.
StateVector build_psi_direct(Domain domain, std::uint64_t r, std::uint64_t x0);

/// N-point Fourier transform with kernel exp(+i 2π x b / N)/sqrt(N).
/// Dense evaluation below kFastTransformQubits, radix-2 above.
StateVector qft(const StateVector& state);

/// Dense O(N^2) transform; the reference evaluation.
StateVector qft_dense(const StateVector& state);

/// Iterative radix-2 transform; pure speedup, validated against qft_dense.
StateVector qft_radix2(const StateVector& state);

constexpr int kFastTransformQubits = 14;

/// Largest register for which the two-register simulation is allowed
/// (it allocates 2^{2n} amplitudes).
constexpr int kFullCircuitMaxQubits = 13;

/// Runs the whole period-finding circuit: Hadamards on the first register,
/// the oracle map |x>|0> -> |x>|f(x)>, measurement of the second register,
/// renormalization, and the Fourier transform. Returns the first-register
/// state and the measurement outcome.
std::pair<StateVector, MeasurementRecord>
run_full_circuit(Domain domain, const PeriodicFunction& f, const A0Mode& mode);

/// Draws a preimage offset x0 in [0, r) from the exact measurement marginal
/// P(x0) = M(x0)/N, M(x0) the count of comb points, using the same sampling
/// rule as run_full_circuit. Lets sweeps emulate sampling without the
/// two-register state.
std::uint64_t sample_preimage_offset(Domain domain, std::uint64_t r, std::uint64_t seed);

} // namespace qpf
