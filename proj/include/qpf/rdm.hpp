#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "qpf/core.hpp"
#include "qpf/state.hpp"

namespace qpf {

/// Real coefficients of the Pauli decomposition rho = I/2 + sigma . a,
/// with rho01 = ax - i*ay and az = rho00 - 1/2.
struct BlochCoefficients {
    double ax = 0.0;
    double ay = 0.0;
    double az = 0.0;

    double length() const;
};

/// One-qubit reduced density matrix: Hermitian, unit trace, rho10 implied by
/// conjugation.
struct OneQubitRDM {
    double rho00 = 0.0;
    double rho11 = 0.0;
    std::complex<double> rho01;
    int q = 0;

    BlochCoefficients bloch() const {
        return {rho01.real(), -rho01.imag(), rho00 - 0.5};
    }

    /// Eigenvalues {1/2 - |a|, 1/2 + |a|}; both in [0, 1] since |a| <= 1/2.
    std::array<double, 2> eigenvalues() const;

    /// Bloch-vector diameter 2|a|: 1 for a pure qubit, < 1 for a mixed one.
    double purity_radius() const { return 2.0 * bloch().length(); }
};

/// The n diagonal coefficients a_z, one per qubit, for a single period.
/// This is the period finder's entire input.
struct MarginalProfile {
    int n = 0;
    std::optional<std::uint64_t> r_true; ///< ground truth when known
    std::vector<double> az;
};

/// Partial trace of |state><state| onto qubit q:
/// rho00 = sum_{b in beta_q} |amp_b|^2, rho01 = sum amp_b * conj(amp_{xi(b)}).
OneQubitRDM rdm_from_state(const StateVector& state, int q);

/// Diagonal element rho00 of qubit q for the canonical (x0 = 0) output state
/// of period r, evaluated from the Dirichlet-kernel closed form without
/// building the state. Matches rdm_from_state(build_psi_direct(d, r, 0), q).
double rho00_direct(Domain domain, std::uint64_t r, int q);

/// Same, for the comb state with preimage offset x0 (rho00 depends on x0
/// only through the preimage count).
double rho00_direct_offset(Domain domain, std::uint64_t r, int q, std::uint64_t x0);

/// Coherence rho01 of qubit q for the state measured at a0 (smallest
/// preimage offset x0 = a0 under the canonical sawtooth identification).
/// Unlike the diagonals, this carries an a0-dependent phase.
std::complex<double> rho01_direct(Domain domain, std::uint64_t r, int q, std::uint64_t a0);

/// az[q] = rho00_direct(domain, r, q) - 0.5 for every first-register qubit.
MarginalProfile profile(Domain domain, std::uint64_t r);

/// Profile extracted from an explicit state by partial traces.
MarginalProfile profile_from_state(const StateVector& state,
                                   std::optional<std::uint64_t> r_true = std::nullopt);

} // namespace qpf
