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

#include "resolab/chart.hpp"

#include <algorithm>
#include <set>

namespace resolab {

int Hypersurface::var_index() const {
    if (defining.terms().size() != 1) return -1;
    const ExpVec& e = defining.terms().begin()->first;
    if (total_degree(e) != 1) return -1;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] == 1) return static_cast<int>(i);
    return -1;
}

BasicObject make_basic(Chart chart, std::variant<Couple, ReesAlgebra> payload,
                       DivisorSet E) {
    BasicObject b{std::move(chart), std::move(payload), std::move(E), {}, {}, {}};
    std::set<std::string> names;
    for (const auto& h : b.E.hypersurfaces) {
        if (!names.insert(h.name).second)
            throw ArgumentError("duplicate hypersurface name: " + h.name);
        if (!h.absent() && h.var_index() < 0)
            throw ArgumentError("hypersurface equation must be a coordinate or a unit");
    }
    if (b.is_couple()) b.total = b.couple().J;
    return b;
}

Locus basic_sing(const BasicObject& b) {
    Locus L = b.is_couple() ? sing_couple(b.couple()) : sing_rees(b.algebra());
    for (const auto& g : b.opens) L.defining = saturate(L.defining, g);
    return L;
}

std::vector<std::pair<std::size_t, int>> exceptional_vars(const BasicObject& b) {
    std::vector<std::pair<std::size_t, int>> out;
    for (const auto& h : b.E.hypersurfaces)
        if (h.is_exceptional() && !h.absent())
            out.emplace_back(static_cast<std::size_t>(h.var_index()), h.origin_step);
    return out;
}

namespace {

Poly subst_var_product(const Poly& f, const std::vector<Poly>& images) {
    return f.substituted(f.ring(), images);
}

}  // namespace

std::vector<BasicObject> blowup(const BasicObject& b, const Center& Y) {
    const RingPtr& ring = b.chart.ring;
    if (Y.vars.empty()) throw ArgumentError("empty blow-up center");
    std::vector<std::size_t> cv = Y.vars;
    std::sort(cv.begin(), cv.end());
    if (std::unique(cv.begin(), cv.end()) != cv.end())
        throw ArgumentError("repeated variable in blow-up center");
    for (auto i : cv)
        if (i >= ring->nvars()) throw ArgumentError("center variable out of range");

    // the center must lie inside the singular locus
    IdealGens cgens;
    for (auto i : cv) cgens.push_back(Poly::variable(ring, i));
    Ideal cideal(cgens);
    for (const auto& g : basic_sing(b).defining)
        if (!cideal.radical_contains(g))
            throw ArgumentError("blow-up center is not inside the singular locus");

    int step = static_cast<int>(b.history.steps.size());
    StepRecord rec;
    rec.kind = StepRecord::Blowup;
    for (auto i : cv) rec.center_vars.push_back(ring->vars[i]);

    std::vector<BasicObject> out;
    for (auto j : cv) {
        std::vector<Poly> images;
        images.reserve(ring->nvars());
        Poly xj = Poly::variable(ring, j);
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            Poly xi = Poly::variable(ring, i);
            bool in_center = std::find(cv.begin(), cv.end(), i) != cv.end();
            images.push_back(in_center && i != j ? xi * xj : xi);
        }

        auto transform_gen = [&](const Poly& f, std::uint64_t n) {
            Poly s = subst_var_product(f, images);
            if (s.min_exponent(j) < n)
                throw StateError(
                    "controlled transform is not divisible by the exceptional power; "
                    "center outside the weighted singular locus");
            return s.divided_by_var_power(j, static_cast<std::uint32_t>(n));
        };

        std::uint64_t weight = 0;
        std::variant<Couple, ReesAlgebra> npayload = [&] {
            if (b.is_couple()) {
                const Couple& c = b.couple();
                weight = c.b;
                IdealGens J1;
                for (const auto& g : c.J) J1.push_back(transform_gen(g, c.b));
                return std::variant<Couple, ReesAlgebra>(Couple(std::move(J1), c.b));
            }
            const ReesAlgebra& G = b.algebra();
            std::vector<WeightedGen> gens;
            for (const auto& [f, n] : G.gens()) gens.push_back({transform_gen(f, n), n});
            return std::variant<Couple, ReesAlgebra>(ReesAlgebra(ring, std::move(gens)));
        }();

        BasicObject nb{Chart{ring, b.chart.label + ":" + ring->vars[j]},
                       std::move(npayload),
                       {},
                       {},
                       b.history,
                       {}};
        nb.history.steps.push_back(rec);
        if (b.is_couple())
            for (const auto& g : b.total)
                nb.total.push_back(subst_var_product(g, images));

        // divisor bookkeeping: strict transforms, then the new divisor
        std::uint64_t carried = 0;
        for (const auto& h : b.E.hypersurfaces) {
            Hypersurface nh = h;
            int v = h.absent() ? -1 : h.var_index();
            if (v >= 0 &&
                std::find(cv.begin(), cv.end(), static_cast<std::size_t>(v)) != cv.end()) {
                if (h.is_exceptional()) carried += h.total_exponent;
                if (static_cast<std::size_t>(v) == j)
                    nh.defining = Poly::constant(ring, BigRat(1));  // misses this chart
                // otherwise the strict transform keeps the equation x_v
            }
            nb.E.hypersurfaces.push_back(nh);
        }

        Hypersurface exc;
        exc.name = "H" + std::to_string(step) + "_" + ring->vars[j];
        exc.defining = xj;
        exc.origin_step = step;
        exc.total_exponent = b.is_couple() ? weight + carried : 0;
        nb.E.hypersurfaces.push_back(exc);

        for (const auto& g : b.opens)
            nb.opens.push_back(subst_var_product(g, images));
        out.push_back(std::move(nb));
    }
    return out;
}

std::vector<std::pair<int, std::uint64_t>> total_transform_exponents(
    const BasicObject& b) {
    if (!b.is_couple())
        throw StateError("total-transform exponents are tracked for couples only");
    const RingPtr& ring = b.chart.ring;
    std::vector<std::pair<int, std::uint64_t>> out;
    Poly m = Poly::constant(ring, BigRat(1));
    for (const auto& h : b.E.hypersurfaces) {
        if (!h.is_exceptional() || h.absent()) continue;
        out.emplace_back(h.origin_step, h.total_exponent);
        m = m * h.defining.pow(h.total_exponent);
    }
    // the factorization must re-multiply to the pulled-back ideal
    const IdealGens& J = b.couple().J;
    if (J.size() != b.total.size())
        throw StateError("total-transform bookkeeping out of sync");
    for (std::size_t k = 0; k < J.size(); ++k)
        if (m * J[k] != b.total[k])
            throw StateError("exceptional factorization fails to re-multiply");
    return out;
}

BasicObject restrict_open(const BasicObject& b, const Poly& g) {
    if (g.is_zero()) throw ArgumentError("restriction to the zero locus complement of 0");
    if (g.is_unit()) return b;
    BasicObject nb = b;
    nb.opens.push_back(g);
    StepRecord rec;
    rec.kind = StepRecord::Restrict;
    rec.open_poly = g.str();
    nb.history.steps.push_back(rec);
    return nb;
}

BasicObject times_affine(const BasicObject& b, std::uint64_t m) {
    if (m == 0) throw ArgumentError("times_affine requires m >= 1");
    const RingPtr& ring = b.chart.ring;
    std::vector<std::string> vars = ring->vars;
    for (std::uint64_t k = 1; k <= m; ++k) {
        std::string u = "u" + std::to_string(k);
        while (std::find(vars.begin(), vars.end(), u) != vars.end()) u += "_";
        vars.push_back(u);
    }
    RingPtr big = make_ring(ring->field, vars);
    std::vector<std::size_t> vmap(ring->nvars());
    for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = i;
    auto lift = [&](const Poly& f) { return promote(f, big, vmap); };

    std::variant<Couple, ReesAlgebra> npayload = [&] {
        if (b.is_couple()) {
            IdealGens J;
            for (const auto& g : b.couple().J) J.push_back(lift(g));
            return std::variant<Couple, ReesAlgebra>(Couple(std::move(J), b.couple().b));
        }
        std::vector<WeightedGen> gens;
        for (const auto& [f, n] : b.algebra().gens()) gens.push_back({lift(f), n});
        return std::variant<Couple, ReesAlgebra>(ReesAlgebra(big, std::move(gens)));
    }();
    BasicObject nb{Chart{big, b.chart.label}, std::move(npayload), {}, {}, b.history, {}};
    StepRecord rec;
    rec.kind = StepRecord::TimesAffine;
    rec.affine_count = m;
    nb.history.steps.push_back(rec);
    for (const auto& h : b.E.hypersurfaces) {
        Hypersurface nh = h;
        nh.defining = lift(h.defining);
        nb.E.hypersurfaces.push_back(nh);
    }
    for (const auto& g : b.opens) nb.opens.push_back(lift(g));
    for (const auto& g : b.total) nb.total.push_back(lift(g));
    return nb;
}

}  // namespace resolab
