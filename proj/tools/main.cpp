// qpf-rdm: sweep, verify and invert one-qubit marginals of the
// period-finding circuit.
//
// Subcommands
//   simulate     per-(r, q) reduced-density-matrix table (CSV)
//   pattern      peak-rule verification against the exact marginals (CSV)
//   find-period  recover an oracle's period from its marginals (JSON)
//   accuracy     fraction of periods recovered vs extra qubits (CSV)
//
// Exit codes: 0 ok, 1 usage or capacity error, 2 pattern mismatch,
// 3 period not found.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpf/finder.hpp"
#include "qpf/format.hpp"
#include "qpf/model.hpp"
#include "qpf/oracle.hpp"
#include "qpf/parallel.hpp"
#include "qpf/rdm.hpp"
#include "qpf/state.hpp"

namespace {

constexpr const char* kSchemaHeader = "# qpf-rdm v1\n";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPatternMismatch = 2;
constexpr int kExitPeriodNotFound = 3;

void write_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << payload;
}

// "postselect:<int>" or "sample"; empty selects postselect of f(0).
struct A0Flag {
    bool sample = false;
    std::optional<std::uint64_t> value;
};

A0Flag parse_a0_flag(const std::string& text) {
    A0Flag flag;
    if (text.empty()) return flag;
    if (text == "sample") {
        flag.sample = true;
        return flag;
    }
    if (text.rfind("postselect:", 0) == 0) {
        flag.value = std::stoull(text.substr(11));
        return flag;
    }
    throw CLI::ValidationError("--a0", "expected 'postselect:<int>' or 'sample'");
}

struct SimulateOptions {
    int n = 0;
    std::optional<std::uint64_t> r;
    std::string mode = "direct";
    std::string a0_text;
    std::optional<std::uint64_t> seed;
    int threads = 0;
    std::string out;
};

int run_simulate(const SimulateOptions& opt) {
    const qpf::Domain domain(opt.n);
    const A0Flag a0 = parse_a0_flag(opt.a0_text);
    if (a0.sample && !opt.seed) {
        throw CLI::ValidationError("--a0", "sample mode requires --seed");
    }
    if (a0.value && !opt.r) {
        throw CLI::ValidationError("--a0", "an explicit post-selected value requires --r");
    }
    const bool full = opt.mode == "full";
    if (full && opt.n > qpf::kFullCircuitMaxQubits) {
        throw std::length_error("--mode full is limited to n <= " +
                                std::to_string(qpf::kFullCircuitMaxQubits) +
                                " (two-register state)");
    }

    std::vector<std::uint64_t> periods;
    if (opt.r) {
        if (*opt.r < 1 || *opt.r >= domain.size) {
            throw CLI::ValidationError("--r", "period must be in [1, 2^n)");
        }
        periods.push_back(*opt.r);
    } else {
        for (std::uint64_t r = 1; r < domain.size; ++r) periods.push_back(r);
    }

    std::vector<std::string> blocks(periods.size());
    const auto emit_row = [&](std::string& out, std::uint64_t r, const qpf::OneQubitRDM& rdm) {
        const qpf::BlochCoefficients bloch = rdm.bloch();
        out += std::to_string(opt.n) + ',' + std::to_string(r) + ',' +
               std::to_string(rdm.q) + ',' + qpf::format_double(rdm.rho00) + ',' +
               qpf::format_double(rdm.rho01.real()) + ',' +
               qpf::format_double(rdm.rho01.imag()) + ',' + qpf::format_double(bloch.ax) +
               ',' + qpf::format_double(bloch.ay) + ',' + qpf::format_double(bloch.az) + '\n';
    };

    const auto direct_task = [&](std::uint64_t index) {
        const std::uint64_t r = periods[index];
        // Task-local seeding: seed + r. In direct mode the post-selected
        // value doubles as the preimage offset (a0 = f(x0) = x0 for the
        // canonical sawtooth).
        const std::uint64_t x0 = a0.sample
                                     ? qpf::sample_preimage_offset(domain, r, *opt.seed + r)
                                     : a0.value.value_or(0);
        if (x0 >= r) {
            throw std::invalid_argument("post-selected value " + std::to_string(x0) +
                                        " has no preimage below r=" + std::to_string(r));
        }
        for (int q = 0; q < opt.n; ++q) {
            qpf::OneQubitRDM rdm;
            rdm.q = q;
            rdm.rho00 = qpf::rho00_direct_offset(domain, r, q, x0);
            rdm.rho11 = 1.0 - rdm.rho00;
            rdm.rho01 = qpf::rho01_direct(domain, r, q, x0);
            emit_row(blocks[index], r, rdm);
        }
    };

    const auto full_task = [&](std::uint64_t index) {
        const std::uint64_t r = periods[index];
        const auto f = qpf::PeriodicFunction::sawtooth(domain, r);
        const qpf::A0Mode mode = a0.sample ? qpf::A0Mode::sample(*opt.seed + r)
                                           : qpf::A0Mode::postselect(a0.value.value_or(f(0)));
        const auto [state, record] = qpf::run_full_circuit(domain, f, mode);
        for (int q = 0; q < opt.n; ++q) {
            emit_row(blocks[index], r, qpf::rdm_from_state(state, q));
        }
    };

    if (full) {
        // Serial: each task owns a 2^{2n} joint vector.
        for (std::uint64_t i = 0; i < periods.size(); ++i) full_task(i);
    } else {
        qpf::parallel_for(periods.size(), qpf::resolve_workers(opt.threads), direct_task);
    }

    std::string payload = kSchemaHeader;
    payload += "n,r,q,rho00,rho01_re,rho01_im,ax,ay,az\n";
    for (const std::string& block : blocks) payload += block;
    write_output(payload, opt.out);
    return kExitOk;
}

struct PatternOptions {
    int n = 0;
    double eps = qpf::kDefaultEpsZero;
    int limit = 10;
    std::string out;
};

int run_pattern(const PatternOptions& opt) {
    if (opt.n > opt.limit) {
        throw CLI::ValidationError("--n", "above the exhaustive limit (" +
                                             std::to_string(opt.limit) +
                                             "); raise --exhaustive-limit to override");
    }
    const qpf::Domain domain(opt.n);
    std::string payload = kSchemaHeader;
    payload += "n,q,r,predicted,observed,match\n";
    bool all_match = true;
    for (int q = 0; q < opt.n; ++q) {
        for (std::uint64_t r = 1; r < domain.size; ++r) {
            const bool predicted = qpf::peak_predicate(opt.n, q, r);
            const bool observed = qpf::rho00_direct(domain, r, q) - 0.5 > opt.eps;
            const bool match = predicted == observed;
            all_match = all_match && match;
            payload += std::to_string(opt.n) + ',' + std::to_string(q) + ',' +
                       std::to_string(r) + ',' + (predicted ? '1' : '0') + ',' +
                       (observed ? '1' : '0') + ',' + (match ? '1' : '0');
            payload += '\n';
        }
    }
    write_output(payload, opt.out);
    return all_match ? kExitOk : kExitPatternMismatch;
}

struct FindPeriodOptions {
    std::string oracle;
    int bits = 0;
    int max_extra = -1; // default: bits
    std::string mode = "direct";
    double eps = qpf::kDefaultEpsZero;
    std::string out;
};

int run_find_period(const FindPeriodOptions& opt) {
    const qpf::Domain domain(opt.bits);
    const qpf::PeriodicFunction f = qpf::parse_oracle(opt.oracle, domain);
    const int max_extra = opt.max_extra >= 0 ? opt.max_extra : opt.bits;
    const qpf::ProfileMode mode = opt.mode == "full" ? qpf::ProfileMode::full_circuit
                                                     : qpf::ProfileMode::direct;
    if (mode == qpf::ProfileMode::full_circuit &&
        opt.bits + max_extra > qpf::kFullCircuitMaxQubits) {
        throw std::length_error("--mode full needs bits + max-extra <= " +
                                std::to_string(qpf::kFullCircuitMaxQubits));
    }
    const qpf::FinderResult result = qpf::find_period(f, opt.bits, max_extra, mode, opt.eps);

    nlohmann::ordered_json doc;
    if (result.period) {
        doc["period"] = *result.period;
    } else {
        doc["period"] = nullptr;
    }
    doc["qubits_used"] = result.qubits_used;
    doc["iterations"] = result.iterations;
    doc["trace"] = result.trace;
    write_output(doc.dump(2) + "\n", opt.out);
    return result.period ? kExitOk : kExitPeriodNotFound;
}

struct AccuracyOptions {
    int bits = 0;
    std::string extra;
    int threads = 0;
    double eps = qpf::kDefaultEpsZero;
    std::string out;
};

std::vector<int> parse_extra_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--extra", "range upper bound below lower");
    std::vector<int> range;
    for (int e = lo; e <= hi; ++e) range.push_back(e);
    return range;
}

int run_accuracy(const AccuracyOptions& opt) {
    const std::vector<int> extras = parse_extra_range(opt.extra);
    const auto reports = qpf::accuracy_sweep(opt.bits, extras, opt.threads, opt.eps);
    std::string payload = kSchemaHeader;
    payload += "bits,extra,total,correct,accuracy\n";
    for (const qpf::AccuracyReport& report : reports) {
        payload += std::to_string(report.bits) + ',' + std::to_string(report.extra) + ',' +
                   std::to_string(report.total_periods) + ',' +
                   std::to_string(report.correct) + ',' +
                   qpf::format_double(report.accuracy) + '\n';
    }
    write_output(payload, opt.out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-qubit marginals of quantum period finding: simulate, verify, invert"};
    app.require_subcommand(1);

    SimulateOptions sim;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Write the per-(r, q) reduced-density-matrix table as CSV");
    simulate->add_option("--n", sim.n, "register width in qubits")->required();
    simulate->add_option("--r", sim.r, "single period (default: sweep 1..2^n-1)");
    simulate->add_option("--mode", sim.mode, "direct | full (two-register circuit)")
        ->check(CLI::IsMember({"direct", "full"}));
    simulate->add_option("--a0", sim.a0_text,
                         "measurement handling: postselect:<int> | sample "
                         "(default postselect of f(0))");
    simulate->add_option("--seed", sim.seed, "RNG seed, required for --a0 sample");
    simulate->add_option("--threads", sim.threads, "worker count (0 = auto)");
    simulate->add_option("--out", sim.out, "output path (default stdout)");

    PatternOptions pat;
    CLI::App* pattern = app.add_subcommand(
        "pattern", "Verify the peak rule against exact marginals; exit 2 on mismatch");
    pattern->add_option("--n", pat.n, "register width in qubits")->required();
    pattern->add_option("--eps-zero", pat.eps, "peak classification threshold");
    pattern->add_option("--exhaustive-limit", pat.limit, "largest allowed n");
    pattern->add_option("--out", pat.out, "output path (default stdout)");

    FindPeriodOptions fnd;
    CLI::App* find = app.add_subcommand(
        "find-period", "Recover the oracle period from its marginal profile (JSON)");
    find->add_option("--oracle", fnd.oracle, "sawtooth:r=<int> | modexp:a=<int>,S=<int>")
        ->required();
    find->add_option("--bits", fnd.bits, "base register width in qubits")->required();
    find->add_option("--max-extra", fnd.max_extra, "extra qubits budget (default: bits)");
    find->add_option("--mode", fnd.mode, "direct | full (two-register circuit)")
        ->check(CLI::IsMember({"direct", "full"}));
    find->add_option("--eps-zero", fnd.eps, "peak classification threshold");
    find->add_option("--out", fnd.out, "output path (default stdout)");

    AccuracyOptions acc;
    CLI::App* accuracy = app.add_subcommand(
        "accuracy", "Recovery rate over all periods vs extra qubits (CSV)");
    accuracy->add_option("--bits", acc.bits, "period width in bits")->required();
    accuracy->add_option("--extra", acc.extra, "extra qubits: <int> or <lo>..<hi>")
        ->required();
    accuracy->add_option("--threads", acc.threads, "worker count (0 = auto)");
    accuracy->add_option("--eps-zero", acc.eps, "peak classification threshold");
    accuracy->add_option("--out", acc.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (pattern->parsed()) return run_pattern(pat);
        if (find->parsed()) return run_find_period(fnd);
        return run_accuracy(acc);
    } catch (const std::exception& e) {
        std::cerr << "qpf-rdm: " << e.what() << "\n";
        return kExitUsage;
    }
}
