/*
   Copyright 2026 The lsknot Authors

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

#ifndef LSKNOT_ERRORS_HPP
#define LSKNOT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsknot {

/// Syntax or semantic error while parsing an expression. `position()` is the
/// 0-based offset into the input where the offending token starts.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position + 1) +
                             ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when a computation is asked for input outside the scope it is
/// defined on (e.g. a double branched cover of a factor with p >= 3).
class unsupported_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lsknot

#endif // LSKNOT_ERRORS_HPP
