// Acceptance suite: one check per criterion, one PASS/FAIL line each.
// Exit code is the number of failed criteria.
//
// Usage: acceptance_tests [--criterion K] [--cli PATH]
//   --criterion K  run only criterion K (1..8)
//   --cli PATH     path to the qpf-rdm binary, needed by criterion 8

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "qpf/finder.hpp"
#include "qpf/format.hpp"
#include "qpf/model.hpp"
#include "qpf/oracle.hpp"
#include "qpf/rdm.hpp"
#include "qpf/state.hpp"

namespace {

using namespace qpf;

std::string g_cli_path;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

// 1. Power-of-two closed form: a_z(2^k) is exactly 0.5 or 0, within 1e-12.
bool criterion1(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        const Domain domain(n);
        for (int k = 0; k < n; ++k) {
            for (int q = 0; q < n; ++q) {
                const double az = rho00_direct(domain, std::uint64_t{1} << k, q) - 0.5;
                const double expected = k <= n - q - 1 ? 0.5 : 0.0;
                worst = std::max(worst, std::abs(az - expected));
            }
        }
    }
    detail = "n<=10, worst |az - closed form| = " + sci(worst);
    return worst <= 1e-12;
}

// 2. Two-register circuit vs direct evaluation of the diagonal marginals.
bool criterion2(std::string& detail) {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const Domain domain(n);
        for (std::uint64_t r = 1; r < domain.size; ++r) {
            const auto f = PeriodicFunction::sawtooth(domain, r);
            const auto [state, record] = run_full_circuit(domain, f, A0Mode::postselect(f(0)));
            for (int q = 0; q < n; ++q) {
                const double traced = rdm_from_state(state, q).rho00;
                worst = std::max(worst, std::abs(traced - rho00_direct(domain, r, q)));
            }
        }
    }
    detail = "n<=6 exhaustive, worst |rho00 gap| = " + sci(worst);
    return worst <= 1e-9;
}

// 3. Peak rule vs exact classification, exhaustive to eight qubits.
bool criterion3(std::string& detail) {
    std::uint64_t mismatches = 0;
    std::uint64_t rows = 0;
    for (int n = 1; n <= 8; ++n) {
        const Domain domain(n);
        for (int q = 0; q < n; ++q) {
            for (std::uint64_t r = 1; r < domain.size; ++r) {
                const bool observed = rho00_direct(domain, r, q) - 0.5 > 1e-6;
                if (observed != peak_predicate(n, q, r)) ++mismatches;
                ++rows;
            }
        }
    }
    detail = std::to_string(rows) + " (n,q,r) rows, " + std::to_string(mismatches) +
             " mismatches";
    return mismatches == 0;
}

// 4. Unit recovery accuracy with as many extra qubits as period bits.
bool criterion4(std::string& detail) {
    bool ok = true;
    std::string parts;
    for (int bits : {6, 7, 8}) {
        const auto reports = accuracy_sweep(bits, {bits});
        const AccuracyReport& report = reports.front();
        if (!parts.empty()) parts += ", ";
        parts += std::to_string(bits) + "-bit: " + std::to_string(report.correct) + "/" +
                 std::to_string(report.total_periods);
        ok = ok && report.accuracy == 1.0;
    }
    detail = parts;
    return ok;
}

// 5. Approximate marginal equals the interval-counting model exactly.
bool criterion5(std::string& detail) {
    std::uint64_t candidates = 0;
    std::uint64_t mismatches = 0;
    for (int n = 1; n <= 10; ++n) {
        const Domain domain(n);
        for (int q_from_last = 0; q_from_last < n; ++q_from_last) {
            const int q = n - 1 - q_from_last;
            for (std::uint64_t rp = 1; rp < (std::uint64_t{1} << (n - q_from_last)); rp += 2) {
                const std::uint64_t r = rp << q_from_last;
                ++candidates;
                if (az_approx(n, q_from_last, r) != rho00_counting(domain, r, q) - 0.5) {
                    ++mismatches;
                }
            }
        }
    }
    const double spot_last = std::abs(az_approx(6, 0, 7) - 1.0 / 14.0);
    const double spot_penultimate = std::abs(az_approx(6, 1, 14) - 1.0 / 14.0);
    detail = std::to_string(candidates) + " candidates, " + std::to_string(mismatches) +
             " mismatches; spot gaps " + sci(spot_last) + ", " + sci(spot_penultimate);
    return mismatches == 0 && spot_last <= 1e-15 && spot_penultimate <= 1e-15;
}

// 6. Coherences depend on the measured value; diagonals do not within a
//    multiplicity class.
bool criterion6(std::string& detail) {
    std::string parts;
    bool ok = true;
    for (int n : {3, 4, 5}) {
        const Domain domain(n);
        double best_coherence_gap = 0.0;
        double worst_diagonal_gap = 0.0;
        for (std::uint64_t r = 2; r < domain.size; ++r) {
            for (std::uint64_t x0a = 0; x0a < r; ++x0a) {
                for (std::uint64_t x0b = x0a + 1; x0b < r; ++x0b) {
                    const std::uint64_t ma = (domain.size - 1 - x0a) / r + 1;
                    const std::uint64_t mb = (domain.size - 1 - x0b) / r + 1;
                    if (ma != mb) continue; // compare within one multiplicity class
                    for (int q = 0; q < n; ++q) {
                        best_coherence_gap = std::max(
                            best_coherence_gap, std::abs(rho01_direct(domain, r, q, x0a) -
                                                         rho01_direct(domain, r, q, x0b)));
                        worst_diagonal_gap = std::max(
                            worst_diagonal_gap,
                            std::abs(rho00_direct_offset(domain, r, q, x0a) -
                                     rho00_direct_offset(domain, r, q, x0b)));
                    }
                }
            }
        }
        if (!parts.empty()) parts += "; ";
        parts += "n=" + std::to_string(n) + ": max |drho01| = " + sci(best_coherence_gap) +
                 ", max same-class |drho00| = " + sci(worst_diagonal_gap);
        ok = ok && best_coherence_gap > 1e-3 && worst_diagonal_gap <= 1e-12;
    }
    detail = parts;
    return ok;
}

// 7. Density-matrix sanity on randomized pipeline states. The purity clause
//    2|a| = 1 is asserted exactly as specified; it holds only when the
//    output state factorizes (power-of-two periods), so generic draws are
//    expected to report mixed marginals here.
bool criterion7(std::string& detail) {
    std::mt19937_64 rng(20250810);
    std::uint64_t trace_failures = 0;
    std::uint64_t eigen_failures = 0;
    std::uint64_t purity_failures = 0;
    double min_purity = 2.0;
    std::string example;
    for (int draw = 0; draw < 1000; ++draw) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Domain domain(n);
        const std::uint64_t r = 1 + rng() % (domain.size - 1);
        const int q = static_cast<int>(rng() % n);
        const OneQubitRDM rdm = rdm_from_state(build_psi_direct(domain, r, 0), q);

        if (std::abs(rdm.rho00 + rdm.rho11 - 1.0) > 1e-12) ++trace_failures;
        const auto eigen = rdm.eigenvalues();
        if (eigen[0] < -1e-12 || eigen[1] > 1.0 + 1e-12) ++eigen_failures;
        const double purity = rdm.purity_radius();
        if (std::abs(purity - 1.0) > 1e-9) {
            ++purity_failures;
            if (purity < min_purity) {
                min_purity = purity;
                example = "(n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                          ", q=" + std::to_string(q) + ")";
            }
        }
    }
    detail = "1000 draws; trace/eigenvalue failures " + std::to_string(trace_failures) +
             "/" + std::to_string(eigen_failures) + "; purity 2|a|=1 violated on " +
             std::to_string(purity_failures) + " draws";
    if (purity_failures > 0) {
        detail += ", min 2|a| = " + sci(min_purity) + " at " + example +
                  " (marginals of entangled outputs are mixed)";
    }
    return trace_failures == 0 && eigen_failures == 0 && purity_failures == 0;
}

// 8. Byte-identical CLI outputs under repeated runs with fixed seeds.
bool criterion8(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "no --cli path provided";
        return false;
    }
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "qpf-rdm-acceptance";
    std::filesystem::create_directories(dir);

    const std::vector<std::pair<std::string, int>> commands = {
        {"simulate --n 5", 0},
        {"simulate --n 4 --mode full --a0 sample --seed 7", 0},
        {"simulate --n 3 --r 4 --a0 postselect:1", 0},
        {"pattern --n 6", 0},
        {"find-period --oracle sawtooth:r=21 --bits 6 --max-extra 6", 0},
        {"find-period --oracle modexp:a=7,S=15 --bits 4", 0},
        {"accuracy --bits 5 --extra 0..3", 0},
    };

    const auto slurp = [](const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };

    int checked = 0;
    for (const auto& [args, expected_exit] : commands) {
        const std::filesystem::path out_a = dir / ("a" + std::to_string(checked));
        const std::filesystem::path out_b = dir / ("b" + std::to_string(checked));
        for (const auto& out : {out_a, out_b}) {
            const std::string cmd =
                '"' + g_cli_path + "\" " + args + " --out \"" + out.string() + '"';
            const int status = std::system(cmd.c_str());
            const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
            if (code != expected_exit) {
                detail = "command '" + args + "' exited " + std::to_string(code) +
                         ", expected " + std::to_string(expected_exit);
                return false;
            }
        }
        const std::string first = slurp(out_a);
        if (first.empty() || first != slurp(out_b)) {
            detail = "command '" + args + "' is not byte-deterministic";
            return false;
        }
        ++checked;
    }
    std::filesystem::remove_all(dir);
    detail = std::to_string(checked) + " commands, each byte-identical across two runs";
    return true;
}

struct Criterion {
    int id;
    const char* title;
    std::function<bool(std::string&)> run;
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (arg == "--cli" && i + 1 < argc) {
            g_cli_path = argv[++i];
        } else {
            std::cerr << "usage: acceptance_tests [--criterion K] [--cli PATH]\n";
            return 64;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "power-of-two closed form exact to 1e-12", criterion1},
        {2, "full circuit matches direct marginals to 1e-9", criterion2},
        {3, "peak rule matches exact classification (n <= 8)", criterion3},
        {4, "unit recovery accuracy with 2n qubits", criterion4},
        {5, "approximate marginal equals counting model exactly", criterion5},
        {6, "coherences a0-dependent, diagonals class-invariant", criterion6},
        {7, "density-matrix sanity incl. purity 2|a| = 1", criterion7},
        {8, "CLI runs are byte-deterministic", criterion8},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        if (only != 0 && criterion.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
                  << criterion.title << " [" << detail << "]\n";
        if (!ok) ++failures;
    }
    return failures;
}
