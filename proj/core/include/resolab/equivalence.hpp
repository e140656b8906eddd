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

#ifndef RESOLAB_EQUIVALENCE_HPP
#define RESOLAB_EQUIVALENCE_HPP

#include "resolab/chart.hpp"
#include "resolab/tau.hpp"

namespace resolab {

/// Outcome of the bounded-depth falsifier.  This is a falsifier, never
/// a verifier: absence of a witness only means no violation was found
/// within the explored tree.
struct FuzzResult {
    std::optional<std::vector<StepRecord>> witness;  // first violating sequence
    std::size_t explored = 0;                        // nodes checked
    bool budget_exhausted = false;
};

/// Explore local sequences (coordinate blow-ups inside both singular
/// loci, restrictions to D(x_i) and D(x_i +- 1), one x A^1 pull-back)
/// up to `depth` steps, checking at every node that the two objects
/// keep equal singular loci.
FuzzResult weak_equiv_fuzz(const BasicObject& b1, const BasicObject& b2,
                           std::size_t depth = 2, std::size_t budget = 500);

/// Order of the payload at a point: ord(J at x)/b for couples, the
/// weighted minimum for algebras.
BigRat object_ord(const BasicObject& b, const Point& x);

/// Necessary condition for weak equivalence: equal order functions at
/// the probes.  A false answer certifies non-equivalence.
bool ord_consequence_check(const BasicObject& b1, const BasicObject& b2,
                           const std::vector<Point>& probes);

/// Necessary condition for weak equivalence: equal tau at the probes.
bool tau_consequence_check(const BasicObject& b1, const BasicObject& b2,
                           const std::vector<Point>& probes);

}  // namespace resolab

#endif
