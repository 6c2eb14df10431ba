#include "qpf/finder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qpf/format.hpp"
#include "qpf/parallel.hpp"
#include "qpf/state.hpp"

namespace qpf {

namespace {

std::string join_u64(const std::vector<std::uint64_t>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

// Nearest odd integer to x; exact ties go to the smaller odd.
std::uint64_t nearest_odd(double x) {
    if (x <= 1.0) return 1;
    const double lower = 2.0 * std::floor((x - 1.0) / 2.0) + 1.0; // largest odd <= x
    const double upper = lower + 2.0;
    const std::uint64_t lo = static_cast<std::uint64_t>(lower);
    return (x - lower <= upper - x) ? lo : lo + 2;
}

MarginalProfile profile_at(const PeriodicFunction& f, int n, ProfileMode mode) {
    const Domain domain(n);
    if (mode == ProfileMode::direct) {
        if (n > kDirectSweepMaxQubits) {
            throw std::length_error("find_period: register of " + std::to_string(n) +
                                    " qubits exceeds the direct-path capacity");
        }
        return profile(domain, f.fundamental_period());
    }
    const PeriodicFunction wide = f.with_domain(domain);
    auto [state, record] = run_full_circuit(domain, wide, A0Mode::postselect(wide(0)));
    return profile_from_state(state, wide.fundamental_period());
}

} // namespace

PeriodHypothesis hypothesize(const MarginalProfile& profile, double eps) {
    const int n = profile.n;
    if (n < 1 || profile.az.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("hypothesize: malformed profile");
    }
    int first = -1;
    for (int q = 0; q < n; ++q) {
        if (profile.az[q] > eps) {
            first = q;
            break;
        }
    }
    if (first < 0) {
        throw std::invalid_argument("hypothesize: degenerate profile, no qubit has a_z above " +
                                    format_double(eps));
    }
    int from_last = 0;
    while (profile.az[n - 1 - from_last] <= eps) ++from_last; // terminates: `first` qualifies

    PeriodHypothesis hyp;
    hyp.first_peak = first;
    hyp.q_from_last = from_last;
    // Odd parts bracketed by the first peak qubit: [2^l, 2^{l+1}).
    const std::uint64_t lo = std::uint64_t{1} << first;
    const std::uint64_t hi = lo << 1;
    const std::uint64_t n_size = std::uint64_t{1} << n;
    for (std::uint64_t rp = (first == 0) ? 1 : lo + 1; rp < hi; rp += 2) {
        const std::uint64_t r = rp << from_last;
        if (r >= 1 && r < n_size) hyp.candidates.push_back(r);
    }
    return hyp;
}

FinderResult secant_refine(const MarginalProfile& profile, const PeriodHypothesis& hypothesis,
                           double eps) {
    FinderResult result;
    result.qubits_used = profile.n;
    if (hypothesis.candidates.empty()) {
        throw std::invalid_argument("secant_refine: empty candidate list");
    }
    const int n = profile.n;
    const int probe = n - 1 - hypothesis.q_from_last;
    if (probe < 0 || probe >= n) {
        throw std::invalid_argument("secant_refine: hypothesis does not fit the profile");
    }
    const double az_probe = profile.az[probe];
    result.trace.push_back("hypothesis: first_peak=" + std::to_string(hypothesis.first_peak) +
                           " q_from_last=" + std::to_string(hypothesis.q_from_last) +
                           " candidates=" + join_u64(hypothesis.candidates));
    result.trace.push_back("signal: qubit=" + std::to_string(probe) +
                           " az=" + format_double(az_probe));
    if (az_probe <= eps) {
        throw std::invalid_argument("secant_refine: probe qubit " + std::to_string(probe) +
                                    " carries no signal (az=" + format_double(az_probe) + ")");
    }

    if (hypothesis.candidates.size() <= 2) {
        std::uint64_t best = hypothesis.candidates.front();
        double best_gap = std::abs(az_probe - az_approx(n, hypothesis.q_from_last, best));
        for (std::uint64_t c : hypothesis.candidates) {
            const double gap = std::abs(az_probe - az_approx(n, hypothesis.q_from_last, c));
            if (gap < best_gap) {
                best = c;
                best_gap = gap;
            }
        }
        result.period = best;
        result.trace.push_back("select: nearest-approx period=" + std::to_string(best));
        return result;
    }

    // Secant iteration on g(rho) = az - 2^{q'}/(2 rho), seeded at the
    // candidate-range midpoint.
    const double pow2 = static_cast<double>(std::uint64_t{1} << hypothesis.q_from_last);
    const auto g = [&](double rho) { return az_probe - az_approx_continuous(hypothesis.q_from_last, rho); };
    const double rho_min = 1.0;
    const double rho_max = static_cast<double>(std::uint64_t{1} << n) * 4.0;

    double x_prev = 0.5 * (static_cast<double>(hypothesis.candidates.front()) +
                           static_cast<double>(hypothesis.candidates.back()));
    double x_curr = x_prev + 2.0 * pow2;
    double g_prev = g(x_prev);
    double g_curr = g(x_curr);
    result.trace.push_back("secant: start x0=" + format_double(x_prev) +
                           " x1=" + format_double(x_curr));
    bool converged = false;
    while (result.iterations < 50) {
        if (g_curr == g_prev) break; // flat secant, cannot advance
        const double x_next = x_curr - g_curr * (x_curr - x_prev) / (g_curr - g_prev);
        ++result.iterations;
        if (x_next < rho_min || x_next > rho_max) {
            result.trace.push_back("secant: iter=" + std::to_string(result.iterations) +
                                   " rho=" + format_double(x_next) + " diverged outside [" +
                                   format_double(rho_min) + ", " + format_double(rho_max) +
                                   "]");
            return result; // period stays empty
        }
        const double g_next = g(x_next);
        result.trace.push_back("secant: iter=" + std::to_string(result.iterations) +
                               " rho=" + format_double(x_next) +
                               " g=" + format_double(g_next));
        if (std::abs(x_next - x_curr) < 0.5) {
            x_curr = x_next;
            converged = true;
            break;
        }
        x_prev = x_curr;
        g_prev = g_curr;
        x_curr = x_next;
        g_curr = g_next;
    }
    if (!converged) {
        result.trace.push_back("secant: no convergence after " +
                               std::to_string(result.iterations) + " iterations");
        return result;
    }

    // Round to the nearest candidate 2^{q'} * odd inside the bracket.
    std::uint64_t rp = nearest_odd(x_curr / pow2);
    const std::uint64_t rp_lo = hypothesis.candidates.front() >> hypothesis.q_from_last;
    const std::uint64_t rp_hi = hypothesis.candidates.back() >> hypothesis.q_from_last;
    rp = std::clamp(rp, rp_lo, rp_hi);
    result.period = rp << hypothesis.q_from_last;
    result.trace.push_back("round: rho=" + format_double(x_curr) +
                           " -> period=" + std::to_string(*result.period));
    return result;
}

FinderResult find_period(const PeriodicFunction& f, int n_base, int max_extra,
                         ProfileMode mode, double eps) {
    if (n_base < 1 || max_extra < 0) {
        throw std::invalid_argument("find_period: need n_base >= 1 and max_extra >= 0");
    }
    if (f.fundamental_period() >= (std::uint64_t{1} << n_base)) {
        throw std::invalid_argument("find_period: fundamental period does not fit in " +
                                    std::to_string(n_base) + " bits");
    }

    FinderResult last_validated;
    std::vector<std::string> trace;
    bool has_previous = false;
    std::uint64_t previous = 0;

    for (int extra = 0; extra <= max_extra; ++extra) {
        const int n = n_base + extra;
        const MarginalProfile prof = profile_at(f, n, mode);
        const PeriodHypothesis hyp = hypothesize(prof, eps);
        FinderResult round = secant_refine(prof, hyp, eps);
        for (auto& line : round.trace) trace.push_back("n=" + std::to_string(n) + " " + line);

        const bool validated = round.period.has_value() && f.validate_period(*round.period);
        trace.push_back("round: extra=" + std::to_string(extra) + " n=" + std::to_string(n) +
                        " period=" +
                        (round.period ? std::to_string(*round.period) : std::string("none")) +
                        " validated=" + (validated ? "true" : "false"));

        if (validated) {
            if (has_previous && previous == *round.period) {
                trace.push_back("converged: period=" + std::to_string(*round.period) +
                                " qubits=" + std::to_string(n));
                round.qubits_used = n;
                round.trace = std::move(trace);
                return round;
            }
            has_previous = true;
            previous = *round.period;
            last_validated = round;
            last_validated.qubits_used = n;
        } else {
            has_previous = false;
        }
    }

    last_validated.trace = std::move(trace);
    if (!last_validated.period) {
        last_validated.qubits_used = n_base + max_extra;
        last_validated.trace.push_back("exhausted: no validated period within " +
                                       std::to_string(max_extra) + " extra qubits");
    }
    return last_validated;
}

std::vector<AccuracyReport> accuracy_sweep(int bits, const std::vector<int>& extra_range,
                                           int workers, double eps) {
    if (bits < 1) throw std::invalid_argument("accuracy_sweep: need bits >= 1");
    for (int extra : extra_range) {
        if (extra < 0 || bits + extra > kDirectSweepMaxQubits) {
            throw std::length_error("accuracy_sweep: bits+extra exceeds direct-path capacity");
        }
    }
    const int pool = resolve_workers(workers);
    const std::uint64_t total = (std::uint64_t{1} << bits) - 1;

    std::vector<AccuracyReport> reports;
    reports.reserve(extra_range.size());
    for (int extra : extra_range) {
        const Domain domain(bits + extra);
        std::vector<char> hit(total, 0);
        parallel_for(total, pool, [&](std::uint64_t index) {
            const std::uint64_t r = index + 1;
            const MarginalProfile prof = profile(domain, r);
            const FinderResult res = secant_refine(prof, hypothesize(prof, eps), eps);
            hit[index] = res.period.has_value() && *res.period == r;
        });
        AccuracyReport report;
        report.bits = bits;
        report.extra = extra;
        report.total_periods = total;
        report.correct = static_cast<std::uint64_t>(
            std::count(hit.begin(), hit.end(), char{1}));
        report.accuracy =
            static_cast<double>(report.correct) / static_cast<double>(report.total_periods);
        reports.push_back(report);
    }
    return reports;
}

} // namespace qpf
