#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

namespace qpf {

/// Problem size for a register of n qubits addressing the integers [0, 2^n).
///
/// Bit l of an integer is qubit l, so qubit n-1 is the most significant bit.
/// Every module in this library shares that convention.
struct Domain {
    int n = 0;             ///< qubit count, n >= 1
    std::uint64_t size = 0; ///< 2^n

    explicit Domain(int qubits);

    bool contains(std::uint64_t value) const { return value < size; }
};

/// Returns b with bit q flipped from 0 to 1. Throws if bit q is already set.
std::uint64_t complement_string(std::uint64_t b, int q);

/// The 2^{n-1} integers in [0, 2^n) whose bit q is clear, in ascending order.
///
/// Members are produced by inserting a zero bit at position q into an
/// (n-1)-bit counter, so iteration never touches the other half of the
/// domain.
class BetaSet {
public:
    BetaSet(Domain domain, int q);

    std::uint64_t size() const { return count_; }
    int fixed_bit() const { return q_; }

    bool contains(std::uint64_t b) const { return ((b >> q_) & 1u) == 0; }

    /// i-th member in ascending order, 0 <= i < size().
    std::uint64_t member(std::uint64_t i) const {
        return ((i >> q_) << (q_ + 1)) | (i & low_mask_);
    }

    class iterator {
    public:
        using value_type = std::uint64_t;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        iterator(const BetaSet* set, std::uint64_t index) : set_(set), index_(index) {}

        std::uint64_t operator*() const { return set_->member(index_); }
        iterator& operator++() { ++index_; return *this; }
        iterator operator++(int) { iterator old = *this; ++index_; return old; }
        bool operator==(const iterator&) const = default;

    private:
        const BetaSet* set_ = nullptr;
        std::uint64_t index_ = 0;
    };

    iterator begin() const { return {this, 0}; }
    iterator end() const { return {this, count_}; }

private:
    int q_ = 0;
    std::uint64_t count_ = 0;
    std::uint64_t low_mask_ = 0;
};

/// The members of beta_q for the given domain (ascending).
BetaSet beta_members(Domain domain, int q);

/// Half-open interval [lo, hi) on the real line. Endpoints are integers by
/// construction for every range produced by beta_range.
struct Interval {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool contains(double x) const {
        return static_cast<double>(lo) <= x && x < static_cast<double>(hi);
    }
    std::uint64_t width() const { return hi - lo; }
};

/// Ordered union of disjoint half-open intervals covering the integers of a
/// BetaSet. For q' = n-1-q there are 2^{q'} intervals of width 2^q whose
/// starts are spaced 2^{q+1} apart, starting at 0; total measure is 2^{n-1}.
class IntervalRange {
public:
    explicit IntervalRange(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t count() const { return intervals_.size(); }

    bool contains(double x) const;

    /// Exact containment test for the rational point num/den (den > 0),
    /// evaluated in integer arithmetic so boundary points never misclassify.
    bool contains_ratio(std::uint64_t num, std::uint64_t den) const;

    std::uint64_t measure() const;

private:
    std::vector<Interval> intervals_;
};

/// Real-line range spanned by the integers of beta_q (maximal runs of
/// consecutive members, each extended to a half-open unit-grid interval).
IntervalRange beta_range(Domain domain, int q);

} // namespace qpf
