/*
   Copyright 2026 the maxsubfield authors

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

#ifndef MAXSUBFIELD_ERRORS_HPP
#define MAXSUBFIELD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msf {

/// Base class for every error raised by this library.
class error : public std::runtime_error {
   public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated mathematical precondition (singular matrix, zero norm,
/// nonzero trace where zero is required, field too small, ...).
class math_error : public error {
   public:
    explicit math_error(const std::string& what) : error(what) {}
};

/// A randomized search ran out of budget. Not a refutation: over small
/// fields the sought object may genuinely not exist, or sampling missed it.
class search_exhausted : public error {
   public:
    search_exhausted(const std::string& what, std::size_t attempts)
        : error(what + " (attempts: " + std::to_string(attempts) + ")"), attempts_(attempts) {}
    std::size_t attempts() const noexcept { return attempts_; }

   private:
    std::size_t attempts_;
};

/// Expression or literal syntax error; position is a 0-based byte offset.
class parse_error : public error {
   public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace msf

#endif
