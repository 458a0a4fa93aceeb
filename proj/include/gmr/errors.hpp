// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace gmr {

/// Thrown when an argument leaves the documented domain of an operation.
/// The message names the violated constraint (e.g. "x must be > 0").
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown on file-system failures (unwritable path, malformed input file).
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gmr
