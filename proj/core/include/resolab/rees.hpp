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

#ifndef RESOLAB_REES_HPP
#define RESOLAB_REES_HPP

#include "resolab/groebner.hpp"
#include "resolab/poly.hpp"

namespace resolab {

/// An ideal with a positive weight; its singular locus is the set of
/// points where the ideal has order at least b.
struct Couple {
    IdealGens J;
    std::uint64_t b = 1;

    Couple(IdealGens J_, std::uint64_t b_);
    const RingPtr& ring() const { return J.front().ring(); }
};

/// One weighted generator f·W^n of a graded algebra.
struct WeightedGen {
    Poly f;
    std::uint64_t n = 1;
};

bool weighted_gen_less(const WeightedGen& a, const WeightedGen& b);

/// A finitely generated graded subalgebra of O_V[W], held as weighted
/// generators.  Generators are normalized monic and deduplicated, so
/// structural equality is meaningful for canonical forms.
class ReesAlgebra {
  public:
    ReesAlgebra(RingPtr ring, std::vector<WeightedGen> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<WeightedGen>& gens() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    std::uint64_t max_weight() const;

  private:
    RingPtr ring_;
    std::vector<WeightedGen> gens_;
};

/// A closed set V(defining).  Equality of loci is radical-based, not
/// generator-based.
struct Locus {
    IdealGens defining;

    bool is_empty_over_closure() const;  // defining ideal is the unit ideal
    bool contains_point(const Point& x) const;
};

/// Set-theoretic equality over the algebraic closure, decided by mutual
/// radical membership of generators.
bool same_locus(const Locus& a, const Locus& b);
bool locus_subset(const Locus& a, const Locus& b);  // V(a) ⊆ V(b)

/// Singular locus of a couple: V(Diff^{b-1}(J)), cut out by all Hasse
/// derivatives of the generators up to order b-1.
Locus sing_couple(const Couple& c);

/// Singular locus of an algebra: the intersection over generators of
/// the weight-wise order conditions.
Locus sing_rees(const ReesAlgebra& G);

/// Smallest subalgebra containing both factors: generator-list
/// concatenation.  Sing(G1 ⊙ G2) = Sing(G1) ∩ Sing(G2).
ReesAlgebra odot(const ReesAlgebra& G1, const ReesAlgebra& G2);

/// The algebra O_V[J^b W^b] of a couple: degree-b products of the
/// ideal generators, in weight b.
ReesAlgebra rees_from_couple(const Couple& c);

/// Integrally equivalent single-weight presentation: b = lcm of the
/// generator weights, J_b = all products of generators of total weight
/// exactly b.
Couple normalize_to_couple(const ReesAlgebra& G);

/// ord_G(x) = min over generators of (order of f at x)/n, as an exact
/// rational.
BigRat ord_rees(const ReesAlgebra& G, const Point& x);

/// Probe-based simplicity: ord_G = 1 at every probe, witnessed by a
/// generator of order exactly equal to its weight.  Callers must supply
/// singular probes; a probe outside Sing(G) is an error.
bool is_simple(const ReesAlgebra& G, const std::vector<Point>& probes);

}  // namespace resolab

#endif
