#include "qpf/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qpf {

namespace {

void check_qubit_index(const Domain& domain, int q, const char* who) {
    if (q < 0 || q >= domain.n) {
        throw std::out_of_range(std::string(who) + ": qubit index " + std::to_string(q) +
                                " outside [0, " + std::to_string(domain.n) + ")");
    }
}

} // namespace

Domain::Domain(int qubits) : n(qubits) {
    if (qubits < 1 || qubits > 62) {
        throw std::invalid_argument("Domain: qubit count must be in [1, 62], got " +
                                    std::to_string(qubits));
    }
    size = std::uint64_t{1} << qubits;
}

std::uint64_t complement_string(std::uint64_t b, int q) {
    if (q < 0 || q >= 64) {
        throw std::out_of_range("complement_string: qubit index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (b & bit) {
        throw std::invalid_argument("complement_string: bit " + std::to_string(q) +
                                    " of " + std::to_string(b) + " is already 1");
    }
    return b | bit;
}

BetaSet::BetaSet(Domain domain, int q) : q_(q) {
    check_qubit_index(domain, q, "BetaSet");
    count_ = domain.size >> 1;
    low_mask_ = (std::uint64_t{1} << q) - 1;
}

BetaSet beta_members(Domain domain, int q) { return BetaSet(domain, q); }

IntervalRange::IntervalRange(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {}

bool IntervalRange::contains(double x) const {
    if (x < 0) return false;
    // Intervals are sorted by lo; find the last one starting at or before x.
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                               [](double v, const Interval& iv) {
                                   return v < static_cast<double>(iv.lo);
                               });
    if (it == intervals_.begin()) return false;
    return std::prev(it)->contains(x);
}

bool IntervalRange::contains_ratio(std::uint64_t num, std::uint64_t den) const {
    // num/den in [lo, hi)  <=>  lo*den <= num < hi*den
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), num,
                               [den](std::uint64_t v, const Interval& iv) {
                                   return v < iv.lo * den;
                               });
    if (it == intervals_.begin()) return false;
    const Interval& iv = *std::prev(it);
    return num < iv.hi * den;
}

std::uint64_t IntervalRange::measure() const {
    std::uint64_t total = 0;
    for (const Interval& iv : intervals_) total += iv.width();
    return total;
}

IntervalRange beta_range(Domain domain, int q) {
    check_qubit_index(domain, q, "beta_range");
    // Members of beta_q form 2^{n-1-q} runs of 2^q consecutive integers with
    // run starts spaced 2^{q+1} apart.
    const std::uint64_t width = std::uint64_t{1} << q;
    const std::uint64_t spacing = width << 1;
    const std::uint64_t count = domain.size >> (q + 1);
    std::vector<Interval> intervals;
    intervals.reserve(count);
    for (std::uint64_t j = 0; j < count; ++j) {
        intervals.push_back({j * spacing, j * spacing + width});
    }
    return IntervalRange(std::move(intervals));
}

} // namespace qpf
