#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qpf/core.hpp"

namespace qpf {

enum class OracleKind { sawtooth, modexp };

/// Periodic function f on [0, 2^n) with f(x) = f(x + r) for the fundamental
/// period r. Two families are supported:
///   sawtooth  f(x) = x mod r           (realizes any period 1 <= r < 2^n)
///   modexp    f(x) = a^x mod S         (period = multiplicative order of a mod S)
///
/// The function is applied as a black-box map on simulator amplitudes; no
/// reversible-circuit compilation happens here.
class PeriodicFunction {
public:
    static PeriodicFunction sawtooth(Domain domain, std::uint64_t period);
    static PeriodicFunction modexp(Domain domain, std::uint64_t base, std::uint64_t modulus);

    std::uint64_t operator()(std::uint64_t x) const;

    /// Smallest r >= 1 with f(x) = f(x+r) everywhere. For modexp this is the
    /// multiplicative order of the base, computed by brute force at
    /// construction time.
    std::uint64_t fundamental_period() const { return period_; }

    /// True iff r reproduces f on sampled points and no proper divisor of r
    /// does. Samples every x when 2^n <= 2^16, otherwise 1024 evenly spaced
    /// points. r outside [1, 2^n) is false, never an error.
    bool validate_period(std::uint64_t r) const;
    bool validate_period(std::uint64_t r, std::uint64_t samples) const;

    Domain domain() const { return domain_; }
    OracleKind kind() const { return kind_; }

    /// Same function over a wider register (used when the finder adds qubits).
    PeriodicFunction with_domain(Domain wider) const;

    /// Round-trips through parse_oracle.
    std::string spec_string() const;

private:
    PeriodicFunction(OracleKind kind, Domain domain) : kind_(kind), domain_(domain) {}

    OracleKind kind_;
    Domain domain_;
    std::uint64_t period_ = 1;
    std::uint64_t base_ = 0;    // modexp only
    std::uint64_t modulus_ = 0; // modexp only
};

/// Parses `sawtooth:r=<int>` or `modexp:a=<int>,S=<int>`.
PeriodicFunction parse_oracle(std::string_view spec, Domain domain);

/// a^e mod m with m >= 1 (m == 1 yields 0).
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

} // namespace qpf
