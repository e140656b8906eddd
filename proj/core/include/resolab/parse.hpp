/*
   Copyright 2026 the resolab authors

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

#ifndef RESOLAB_PARSE_HPP
#define RESOLAB_PARSE_HPP

#include <string>

#include "resolab/poly.hpp"

namespace resolab {

/// Raised on malformed polynomial text or unknown identifiers.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse plain-text polynomial syntax: named variables, integer or
/// rational coefficients, `+ - * / ^` with explicit `*`, parentheses.
/// Example: "y^2 - x^3".  Unknown identifiers are rejected.
Poly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace resolab

#endif
