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

#ifndef RESOLAB_TAU_HPP
#define RESOLAB_TAU_HPP

#include "resolab/diff.hpp"

namespace resolab {

/// A homogeneous generator of the initial (tangent-cone) ideal, tagged
/// with its degree.  The tangent coordinates reuse the chart variable
/// names.
struct GradedGen {
    Poly form;
    std::uint64_t degree;
};

struct InitialIdeal {
    RingPtr ring;
    std::vector<GradedGen> gens;
};

/// Initial ideal of the algebra at a singular point: for each weighted
/// generator (f, n) whose order at x equals n exactly, the degree-n
/// initial form of f after translating x to the origin.  Generators of
/// higher order contribute nothing.
InitialIdeal initial_ideal(const ReesAlgebra& G, const Point& x);

/// Smallest homogeneous ideal containing the input and closed under the
/// graded Hasse operators (degree N generators spawn all derivatives of
/// orders < N).  Idempotent; redundant generators are pruned.
InitialIdeal graded_diff_closure(const InitialIdeal& I);

/// The translation subspace L_C of the cone and its codimension tau.
/// linear_forms: independent degree-1 forms cutting out L_C; in
/// characteristic p, additive generators c1*x1^q + ... (q a power of p)
/// contribute their q-th-root linear forms.  Generators that are
/// neither linear nor additive do not shrink L_C here and are surfaced
/// in `flagged` so callers can see when the extraction was heuristic.
struct RidgeResult {
    InitialIdeal closure;
    std::vector<Poly> linear_forms;
    std::vector<Poly> flagged;
    std::size_t tau = 0;
};

RidgeResult ridge_and_tau(const ReesAlgebra& G, const Point& x);

/// True iff tau >= e at every probe.  Probes must be singular points.
bool codim_type_at_least(const ReesAlgebra& G, std::uint64_t e,
                         const std::vector<Point>& probes);

/// General position of L_C with the coordinate projection that forgets
/// fiber_vars: true iff L_C meets the span of the fiber axes only at 0.
bool transversal(const ReesAlgebra& G, const Point& x,
                 const std::vector<std::size_t>& fiber_vars);

}  // namespace resolab

#endif
