#include "qpf/oracle.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qpf {

namespace {

// Largest register for which validate_period checks every input.
constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 16;
constexpr std::uint64_t kSampleCount = 1024;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::vector<std::uint64_t> proper_divisors(std::uint64_t r) {
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d * d <= r; ++d) {
        if (r % d != 0) continue;
        if (d < r) divisors.push_back(d);
        const std::uint64_t e = r / d;
        if (e != d && e < r) divisors.push_back(e);
    }
    return divisors;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("oracle spec: bad ") + what + " '" +
                                    std::string(text) + "'");
    }
    return value;
}

} // namespace

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("pow_mod: zero modulus");
    std::uint64_t result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

PeriodicFunction PeriodicFunction::sawtooth(Domain domain, std::uint64_t period) {
    if (period < 1 || period >= domain.size) {
        throw std::invalid_argument("sawtooth: period must be in [1, 2^n), got " +
                                    std::to_string(period));
    }
    PeriodicFunction f(OracleKind::sawtooth, domain);
    f.period_ = period;
    return f;
}

PeriodicFunction PeriodicFunction::modexp(Domain domain, std::uint64_t base,
                                          std::uint64_t modulus) {
    if (modulus < 2) throw std::invalid_argument("modexp: modulus must be >= 2");
    if (modulus > domain.size) {
        // Function values land in the second register, which is n bits wide.
        throw std::invalid_argument("modexp: modulus " + std::to_string(modulus) +
                                    " does not fit an n-bit value register");
    }
    if (std::gcd(base % modulus, modulus) != 1) {
        throw std::invalid_argument("modexp: base and modulus must be coprime");
    }
    PeriodicFunction f(OracleKind::modexp, domain);
    f.base_ = base % modulus;
    f.modulus_ = modulus;
    // Multiplicative order by brute force; it divides phi(S) so it ends.
    std::uint64_t value = f.base_;
    std::uint64_t order = 1;
    while (value != 1) {
        value = mul_mod(value, f.base_, modulus);
        ++order;
    }
    f.period_ = order;
    if (f.period_ >= domain.size) {
        throw std::invalid_argument("modexp: order " + std::to_string(f.period_) +
                                    " is not below 2^n");
    }
    return f;
}

std::uint64_t PeriodicFunction::operator()(std::uint64_t x) const {
    if (!domain_.contains(x)) {
        throw std::out_of_range("PeriodicFunction: input " + std::to_string(x) +
                                " outside [0, 2^n)");
    }
    if (kind_ == OracleKind::sawtooth) return x % period_;
    return pow_mod(base_, x, modulus_);
}

bool PeriodicFunction::validate_period(std::uint64_t r) const {
    const std::uint64_t samples =
        domain_.size <= kExhaustiveLimit ? domain_.size : kSampleCount;
    return validate_period(r, samples);
}

bool PeriodicFunction::validate_period(std::uint64_t r, std::uint64_t samples) const {
    if (r < 1 || r >= domain_.size || samples == 0) return false;

    const auto shifts_match = [&](std::uint64_t shift) {
        const std::uint64_t limit = domain_.size - shift; // x + shift < N
        const std::uint64_t step = std::max<std::uint64_t>(1, limit / samples);
        for (std::uint64_t x = 0; x < limit; x += step) {
            if ((*this)(x) != (*this)(x + shift)) return false;
        }
        return true;
    };

    if (!shifts_match(r)) return false;
    for (std::uint64_t d : proper_divisors(r)) {
        if (shifts_match(d)) return false; // r is a multiple of a shorter period
    }
    return true;
}

PeriodicFunction PeriodicFunction::with_domain(Domain wider) const {
    if (wider.n < domain_.n) {
        throw std::invalid_argument("with_domain: register may only grow");
    }
    if (kind_ == OracleKind::sawtooth) return sawtooth(wider, period_);
    return modexp(wider, base_, modulus_);
}

std::string PeriodicFunction::spec_string() const {
    if (kind_ == OracleKind::sawtooth) {
        return "sawtooth:r=" + std::to_string(period_);
    }
    return "modexp:a=" + std::to_string(base_) + ",S=" + std::to_string(modulus_);
}

PeriodicFunction parse_oracle(std::string_view spec, Domain domain) {
    if (spec.rfind("sawtooth:", 0) == 0) {
        std::string_view rest = spec.substr(9);
        if (rest.rfind("r=", 0) != 0) {
            throw std::invalid_argument("oracle spec: expected sawtooth:r=<int>");
        }
        return PeriodicFunction::sawtooth(domain, parse_u64(rest.substr(2), "period"));
    }
    if (spec.rfind("modexp:", 0) == 0) {
        std::string_view rest = spec.substr(7);
        const auto comma = rest.find(',');
        if (rest.rfind("a=", 0) != 0 || comma == std::string_view::npos ||
            rest.substr(comma + 1).rfind("S=", 0) != 0) {
            throw std::invalid_argument("oracle spec: expected modexp:a=<int>,S=<int>");
        }
        const std::uint64_t a = parse_u64(rest.substr(2, comma - 2), "base");
        const std::uint64_t s = parse_u64(rest.substr(comma + 3), "modulus");
        return PeriodicFunction::modexp(domain, a, s);
    }
    throw std::invalid_argument("oracle spec: unknown kind in '" + std::string(spec) + "'");
}

} // namespace qpf
