#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpf/model.hpp"
#include "qpf/oracle.hpp"
#include "qpf/rdm.hpp"

namespace qpf {

/// Candidate-period family read off a marginal profile: every member is
/// 2^{q_from_last} times an odd number in [2^{first_peak}, 2^{first_peak+1}).
struct PeriodHypothesis {
    int first_peak = 0;   ///< lowest qubit with a_z above threshold
    int q_from_last = 0;  ///< offset of the first signal qubit from the last
    std::vector<std::uint64_t> candidates; ///< ascending
};

struct FinderResult {
    std::optional<std::uint64_t> period;
    int iterations = 0;  ///< secant steps behind the reported period
    int qubits_used = 0;
    std::vector<std::string> trace; ///< deterministic per-step log
};

struct AccuracyReport {
    int bits = 0;
    int extra = 0;
    std::uint64_t total_periods = 0;
    std::uint64_t correct = 0;
    double accuracy = 0.0;
};

/// Which pipeline produces the profiles the finder consumes. The direct path
/// evaluates the closed-form marginals; the full circuit cross-validates it
/// at small sizes (n <= 13).
enum class ProfileMode { direct, full_circuit };

/// Largest register the direct-path sweeps accept. No state is allocated,
/// but each profile costs O(n 2^n) kernel evaluations.
constexpr int kDirectSweepMaxQubits = 26;

/// Reads the candidate family off the profile: the first qubit from the
/// bottom with a_z > eps fixes the odd-part bracket, the first from the top
/// fixes the power-of-two factor. Throws when no qubit carries signal.
PeriodHypothesis hypothesize(const MarginalProfile& profile, double eps = kDefaultEpsZero);

/// Narrows the hypothesis to one period. Lists of one or two candidates are
/// settled by the closer approximate marginal; longer lists run the secant
/// iteration on a_z - 2^{q'}/(2 rho) = 0 and round the converged root to the
/// nearest candidate. A diverging iteration yields period = nullopt.
FinderResult secant_refine(const MarginalProfile& profile, const PeriodHypothesis& hypothesis,
                           double eps = kDefaultEpsZero);

/// Full recovery loop: profiles at n_base, n_base+1, ... qubits until two
/// consecutive register sizes agree on a validated period, up to max_extra
/// added qubits. Falls back to the last validated result.
FinderResult find_period(const PeriodicFunction& f, int n_base, int max_extra,
                         ProfileMode mode = ProfileMode::direct,
                         double eps = kDefaultEpsZero);

/// Fraction of all periods r in [1, 2^bits) recovered exactly from profiles
/// with `extra` additional qubits (fixed budget, no convergence loop).
std::vector<AccuracyReport> accuracy_sweep(int bits, const std::vector<int>& extra_range,
                                           int workers = 0, double eps = kDefaultEpsZero);

} // namespace qpf
