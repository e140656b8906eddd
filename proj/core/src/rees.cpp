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

#include "resolab/rees.hpp"

#include <algorithm>
#include <numeric>

#include "resolab/diff.hpp"

namespace resolab {

Couple::Couple(IdealGens J_, std::uint64_t b_) : J(std::move(J_)), b(b_) {
    if (b == 0) throw ArgumentError("couple weight must be positive");
    bool nonzero = false;
    for (const auto& g : J)
        if (!g.is_zero()) nonzero = true;
    if (J.empty() || !nonzero) throw ArgumentError("couple ideal must be nonzero");
}

bool weighted_gen_less(const WeightedGen& a, const WeightedGen& b) {
    if (a.n != b.n) return a.n < b.n;
    return poly_less(a.f, b.f);
}

namespace {

Poly monic(const Poly& f) {
    const BigRat& lc = f.terms().rbegin()->second;
    return f.scaled(f.ring()->field.inv(lc));
}

}  // namespace

ReesAlgebra::ReesAlgebra(RingPtr ring, std::vector<WeightedGen> gens)
    : ring_(std::move(ring)) {
    for (auto& g : gens) {
        if (g.f.is_zero()) throw ArgumentError("zero generator in Rees algebra");
        if (g.n == 0) throw ArgumentError("generator weight must be positive");
        if (!same_ring(g.f.ring(), ring_))
            throw ArgumentError("generator ring mismatch in Rees algebra");
        gens_.push_back({monic(g.f), g.n});
    }
    std::sort(gens_.begin(), gens_.end(), weighted_gen_less);
    gens_.erase(std::unique(gens_.begin(), gens_.end(),
                            [](const WeightedGen& a, const WeightedGen& b) {
                                return a.n == b.n && a.f == b.f;
                            }),
                gens_.end());
}

std::uint64_t ReesAlgebra::max_weight() const {
    std::uint64_t m = 0;
    for (const auto& g : gens_) m = std::max(m, g.n);
    return m;
}

bool Locus::is_empty_over_closure() const { return ideal_is_trivial(defining); }

bool Locus::contains_point(const Point& x) const {
    for (const auto& g : defining)
        if (g.evaluate(x) != 0) return false;
    return true;
}

bool locus_subset(const Locus& a, const Locus& b) {
    Ideal ia(a.defining);
    for (const auto& g : b.defining)
        if (!ia.radical_contains(g)) return false;
    return true;
}

bool same_locus(const Locus& a, const Locus& b) {
    return locus_subset(a, b) && locus_subset(b, a);
}

Locus sing_couple(const Couple& c) {
    return Locus{diff_extend_ideal(c.J, c.b - 1)};
}

Locus sing_rees(const ReesAlgebra& G) {
    IdealGens defining;
    for (const auto& [f, n] : G.gens())
        for (const auto& d : diff_extend_ideal({f}, n - 1)) defining.push_back(d);
    if (defining.empty())
        defining.push_back(Poly::constant(G.ring(), BigRat(1)));
    return Locus{defining};
}

ReesAlgebra odot(const ReesAlgebra& G1, const ReesAlgebra& G2) {
    if (!same_ring(G1.ring(), G2.ring()))
        throw ArgumentError("ring mismatch in odot");
    std::vector<WeightedGen> gens = G1.gens();
    gens.insert(gens.end(), G2.gens().begin(), G2.gens().end());
    return ReesAlgebra(G1.ring(), std::move(gens));
}

ReesAlgebra rees_from_couple(const Couple& c) {
    // Each ideal generator is placed in weight b, so points of order >= b on
    // every generator are exactly the singular points of the couple.
    std::vector<WeightedGen> out;
    for (const auto& g : c.J)
        if (!g.is_zero()) out.push_back({g, c.b});
    return ReesAlgebra(c.ring(), std::move(out));
}

Couple normalize_to_couple(const ReesAlgebra& G) {
    if (G.empty()) throw ArgumentError("cannot normalize the empty algebra");
    std::uint64_t b = 1;
    for (const auto& g : G.gens()) b = std::lcm(b, g.n);
    return Couple(algebra_degree_part(G, b), b);
}

BigRat ord_rees(const ReesAlgebra& G, const Point& x) {
    if (G.empty()) throw ArgumentError("ord of the empty algebra");
    std::optional<BigRat> best;
    for (const auto& [f, n] : G.gens()) {
        auto o = order_at_point(f, x);
        // generators are nonzero, so the order is finite
        BigRat v = BigRat(BigInt(*o)) / BigRat(BigInt(n));
        if (!best || v < *best) best = v;
    }
    return *best;
}

bool is_simple(const ReesAlgebra& G, const std::vector<Point>& probes) {
    Locus sing = sing_rees(G);
    for (const auto& x : probes) {
        if (!sing.contains_point(x))
            throw ArgumentError("is_simple probe outside the singular locus");
        if (ord_rees(G, x) != 1) return false;
        bool witness = false;
        for (const auto& [f, n] : G.gens())
            if (order_at_point(f, x) == n) { witness = true; break; }
        if (!witness) return false;
    }
    return true;
}

}  // namespace resolab
