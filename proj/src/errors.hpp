// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace glame {

// Raised when an iterative scheme exhausts its truncation/iteration budget
// without meeting its accuracy contract.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace glame
