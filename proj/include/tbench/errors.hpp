// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tbench {

// Raised when an algorithm fails numerically (search bracket exhausted,
// overflow, non-finite intermediate). Maps to CLI exit code 3, while
// std::invalid_argument (bad configuration/arguments) maps to exit code 2.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tbench
