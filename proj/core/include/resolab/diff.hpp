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

#ifndef RESOLAB_DIFF_HPP
#define RESOLAB_DIFF_HPP

#include "resolab/rees.hpp"

namespace resolab {

/// Differential extension: the ideal generated by all Hasse derivatives
/// Delta^alpha(g), g a generator of J, |alpha| <= s.  s = 0 returns J.
IdealGens diff_extend_ideal(const IdealGens& J, std::uint64_t s);

/// Ideal generated by all products of the weighted generators whose
/// weights sum to exactly n.  Throws ResourceError beyond 10^4 products.
IdealGens algebra_degree_part(const ReesAlgebra& G, std::uint64_t n);

/// Smallest algebra containing G that is closed under the Hasse
/// operators lowering the weight by the operator order.  One pass over
/// the original generators suffices: Delta^beta(Delta^alpha g) is a
/// field multiple of Delta^{alpha+beta}(g), which the pass already
/// produced.  Contains G; idempotent; same singular locus.
ReesAlgebra diff_saturate(const ReesAlgebra& G);

/// True iff every generator (f, n) satisfies: f W^{n-1} is a member
/// and Delta^alpha(f) W^{n-|alpha|} is a member for all 0 < |alpha| < n.
bool is_diff_algebra(const ReesAlgebra& G);

/// Same check, but with the multi-index alpha supported only on
/// fiber_vars (the differential operators of a coordinate projection).
bool is_relative_diff_algebra(const ReesAlgebra& G,
                              const std::vector<std::size_t>& fiber_vars);

/// Bounded-degree equality of graded algebras: degree parts agree, as
/// ideals, for every n <= N.
bool algebras_equal_up_to(const ReesAlgebra& G1, const ReesAlgebra& G2,
                          std::uint64_t N);

}  // namespace resolab

#endif
