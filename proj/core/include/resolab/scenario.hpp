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

#ifndef RESOLAB_SCENARIO_HPP
#define RESOLAB_SCENARIO_HPP

#include "resolab/driver.hpp"
#include "resolab/equivalence.hpp"

namespace resolab {

/// A workbench scenario: the object to work on, plus optional
/// elimination data.  JSON shape:
/// {
///   "field": "Q" | "F<p>",
///   "vars": ["x", "y"],
///   "payload": {"couple": {"gens": ["y^2 - x^3"], "b": 2}}
///            | {"rees":   {"gens": [["y^2 - x^3", 2]]}},
///   "E": [{"name": "H0", "var": "x"}],            // optional boundary
///   "provider": "cusp"                            // optional: builtin name
///             | [{"chart": "root", "step": 0,
///                 "fiber": ["y"], "gens": [["x^3", 2]]}]
/// }
struct Scenario {
    BasicObject object;
    std::optional<EliminationProvider> provider;
};

Scenario parse_scenario_text(const std::string& json_text);
Scenario load_scenario(const std::string& path);

/// Provider table from a standalone JSON array (the --provider file).
EliminationProvider parse_provider_text(const std::string& json_text);
EliminationProvider load_provider(const std::string& path);

/// Deterministic JSON renderings for the command-line tools.
std::string trace_to_json(const ResolutionTrace& trace);
std::string ridge_to_json(const RidgeResult& r);
std::string fuzz_to_json(const FuzzResult& r);
std::string algebra_to_text(const ReesAlgebra& G);

}  // namespace resolab

#endif
