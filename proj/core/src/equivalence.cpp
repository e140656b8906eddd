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

#include "resolab/equivalence.hpp"

#include <algorithm>

namespace resolab {

namespace {

struct FuzzCtx {
    std::size_t budget;
    FuzzResult result;
};

/// depth-first exploration; returns true when a witness was found or
/// the budget ran out (both stop the search)
bool explore(FuzzCtx& ctx, const BasicObject& b1, const BasicObject& b2,
             std::size_t depth, std::vector<StepRecord>& path) {
    if (ctx.result.explored >= ctx.budget) {
        ctx.result.budget_exhausted = true;
        return true;
    }
    ++ctx.result.explored;
    if (!same_locus(basic_sing(b1), basic_sing(b2))) {
        ctx.result.witness = path;
        return true;
    }
    if (depth == 0) return false;
    const RingPtr& ring = b1.chart.ring;
    std::size_t n = ring->nvars();

    // blow-ups at coordinate centers inside both singular loci
    std::uint64_t nsub = std::uint64_t(1) << n;
    for (std::uint64_t mask = 1; mask < nsub; ++mask) {
        Center Y;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i)) Y.vars.push_back(i);
        std::vector<BasicObject> c1, c2;
        try {
            c1 = blowup(b1, Y);
            c2 = blowup(b2, Y);
        } catch (const ArgumentError&) {
            continue;  // center not inside one of the singular loci
        } catch (const StateError&) {
            continue;
        }
        StepRecord rec;
        rec.kind = StepRecord::Blowup;
        for (auto i : Y.vars) rec.center_vars.push_back(ring->vars[i]);
        path.push_back(rec);
        for (std::size_t k = 0; k < c1.size(); ++k)
            if (explore(ctx, c1[k], c2[k], depth - 1, path)) return true;
        path.pop_back();
    }

    // restrictions to small principal opens
    std::vector<Poly> opens;
    for (std::size_t i = 0; i < n; ++i) {
        Poly xi = Poly::variable(ring, i);
        Poly one = Poly::constant(ring, BigRat(1));
        opens.push_back(xi);
        opens.push_back(xi - one);
        opens.push_back(xi + one);
    }
    for (const auto& g : opens) {
        StepRecord rec;
        rec.kind = StepRecord::Restrict;
        rec.open_poly = g.str();
        path.push_back(rec);
        if (explore(ctx, restrict_open(b1, g), restrict_open(b2, g), depth - 1, path))
            return true;
        path.pop_back();
    }

    // one cylinder pull-back
    {
        StepRecord rec;
        rec.kind = StepRecord::TimesAffine;
        rec.affine_count = 1;
        path.push_back(rec);
        if (explore(ctx, times_affine(b1, 1), times_affine(b2, 1), depth - 1, path))
            return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

FuzzResult weak_equiv_fuzz(const BasicObject& b1, const BasicObject& b2,
                           std::size_t depth, std::size_t budget) {
    if (!same_ring(b1.chart.ring, b2.chart.ring))
        throw ArgumentError("fuzzing requires objects on the same chart");
    FuzzCtx ctx{budget, {}};
    std::vector<StepRecord> path;
    explore(ctx, b1, b2, depth, path);
    return ctx.result;
}

BigRat object_ord(const BasicObject& b, const Point& x) {
    if (b.is_couple()) {
        auto o = ideal_order_at_point(b.couple().J, x);
        if (!o) throw ArgumentError("order of the zero ideal");
        return BigRat(BigInt(*o)) / BigRat(BigInt(b.couple().b));
    }
    return ord_rees(b.algebra(), x);
}

bool ord_consequence_check(const BasicObject& b1, const BasicObject& b2,
                           const std::vector<Point>& probes) {
    for (const auto& x : probes)
        if (object_ord(b1, x) != object_ord(b2, x)) return false;
    return true;
}

namespace {

ReesAlgebra as_algebra(const BasicObject& b) {
    return b.is_couple() ? rees_from_couple(b.couple()) : b.algebra();
}

}  // namespace

bool tau_consequence_check(const BasicObject& b1, const BasicObject& b2,
                           const std::vector<Point>& probes) {
    ReesAlgebra g1 = as_algebra(b1), g2 = as_algebra(b2);
    for (const auto& x : probes)
        if (ridge_and_tau(g1, x).tau != ridge_and_tau(g2, x).tau) return false;
    return true;
}

}  // namespace resolab
