#pragma once

#include <string>

namespace qpf {

/// Shortest decimal form of `value` that parses back to the identical double.
/// Used everywhere a floating-point number reaches an output file, so runs
/// are byte-reproducible without precision loss.
std::string format_double(double value);

} // namespace qpf
