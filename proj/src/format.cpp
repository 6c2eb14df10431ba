#include "qpf/format.hpp"

#include <charconv>
#include <system_error>

namespace qpf {

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    (void)ec; // 64 bytes always suffice for a double
    return std::string(buffer, ptr);
}

} // namespace qpf
