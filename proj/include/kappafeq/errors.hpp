/*
   Copyright 2026 The kappa-feq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kappafeq {

/// Division by a zero field element or zero polynomial.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Argument count does not match the arity of a form or pattern.
struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual input; `position` is a 0-based byte offset into the text.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// A structural precondition failed (wrong equation shape, induction order
/// violated, unsupported input).
struct InvalidInput : std::invalid_argument {
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace kappafeq
