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

#include "resolab/driver.hpp"

#include <algorithm>
#include <sstream>

#include "resolab/parse.hpp"

namespace resolab {

std::string GammaEntry::str() const {
    if (infinite) return "inf";
    std::ostringstream os;
    os << "(" << w.str() << ", " << n << ")";
    return os.str();
}

std::string GammaValue::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << entries[i].str();
    }
    os << "]";
    return os.str();
}

void EliminationProvider::add(const std::string& chart_label, std::size_t step,
                              ProviderEntry e) {
    table_[{chart_label, step}] = std::move(e);
}

const ProviderEntry* EliminationProvider::find(const std::string& chart_label,
                                               std::size_t step) const {
    auto it = table_.find({chart_label, step});
    return it == table_.end() ? nullptr : &it->second;
}

EliminationProvider builtin_provider(const std::string& name) {
    EliminationProvider p;
    if (name == "cusp" || name == "cusp-p") {
        p.add("root", 0, ProviderEntry{{"y"}, {{"x^3", 2}}});
    } else if (name == "umbrella") {
        p.add("root", 0, ProviderEntry{{"x"}, {{"y^2*z", 2}}});
    } else {
        throw ArgumentError("unknown builtin provider table: " + name);
    }
    return p;
}

namespace {

/// Largest m with {nu >= m} ∩ V(sing) nonempty over the closure; 0 when
/// the ideal has a nonvanishing element everywhere on the locus.
std::uint64_t max_order_on(const IdealGens& I, const IdealGens& sing) {
    std::uint64_t cap = 0;
    for (const auto& g : I) cap = std::max(cap, g.degree());
    std::uint64_t d = 0;
    for (std::uint64_t m = 1; m <= cap; ++m) {
        IdealGens both = diff_extend_ideal(I, m - 1);
        for (const auto& g : sing) both.push_back(g);
        if (ideal_is_trivial(both)) break;
        d = m;
    }
    return d;
}

/// Is x_i identically zero on V(sing)?
std::vector<std::size_t> vanishing_vars(const RingPtr& ring, const IdealGens& sing) {
    std::vector<std::size_t> out;
    Ideal si(sing);
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        if (si.radical_contains(Poly::variable(ring, i))) out.push_back(i);
    return out;
}

/// Does V(vars) equal V(sing)?
bool locus_is_coordinate(const RingPtr& ring, const IdealGens& sing,
                         const std::vector<std::size_t>& vars) {
    IdealGens vgens;
    for (auto i : vars) vgens.push_back(Poly::variable(ring, i));
    Ideal vi(vgens);
    for (const auto& g : sing)
        if (!vi.radical_contains(g)) return false;
    return true;
}

Point origin_point(const RingPtr& ring) {
    return Point{std::vector<BigRat>(ring->nvars(), BigRat(0))};
}

std::vector<std::size_t> fiber_indices(const RingPtr& ring,
                                       const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    for (const auto& n : names) {
        int i = ring->var_index(n);
        if (i < 0) throw ArgumentError("unknown fiber variable: " + n);
        out.push_back(static_cast<std::size_t>(i));
    }
    return out;
}

ReesAlgebra parse_elim(const RingPtr& ring, const ProviderEntry& e) {
    std::vector<WeightedGen> gens;
    for (const auto& [text, n] : e.gens) gens.push_back({parse_poly(ring, text), n});
    return ReesAlgebra(ring, std::move(gens));
}

}  // namespace

EliminationDiagnostics elimination_checks(const ReesAlgebra& G,
                                          const ProviderEntry& entry,
                                          const Point& probe) {
    EliminationDiagnostics d;
    const RingPtr& ring = G.ring();
    std::vector<std::size_t> fiber;
    ReesAlgebra elim(ring, {});
    try {
        fiber = fiber_indices(ring, entry.fiber_vars);
        elim = parse_elim(ring, entry);
    } catch (const std::exception& ex) {
        d.detail = ex.what();
        return d;
    }
    // generators must avoid the fiber variables entirely
    for (const auto& [f, n] : elim.gens())
        for (const auto& [e, c] : f.terms())
            for (auto i : fiber)
                if (e[i] != 0) {
                    d.detail = "elimination generator involves a fiber variable";
                    return d;
                }

    d.relative_diff_ok = is_relative_diff_algebra(G, fiber);
    if (!d.relative_diff_ok) d.detail = "source is not a relative Diff-algebra";

    d.pullback_ok = true;
    for (const auto& [f, n] : elim.gens())
        if (!ideal_member(f, algebra_degree_part(G, n))) {
            d.pullback_ok = false;
            d.detail = "elimination generator misses the source degree part";
            break;
        }

    Locus sing = sing_rees(G);
    if (sing.contains_point(probe)) {
        try {
            d.transversal_ok = transversal(G, probe, fiber);
        } catch (const std::exception& ex) {
            d.detail = ex.what();
        }
        d.sing_image_ok = sing_rees(elim).contains_point(probe);
        if (!d.sing_image_ok) d.detail = "probe image escapes the elimination locus";
    } else {
        // no usable probe: the pointwise checks pass vacuously
        d.transversal_ok = true;
        d.sing_image_ok = true;
        if (d.detail.empty()) d.detail = "probe not singular; pointwise checks skipped";
    }
    return d;
}

GammaStep gamma_step(const BasicObject& b, const EliminationProvider& provider,
                     std::size_t step, const DivisorSet& e_minus) {
    if (!b.is_couple())
        throw ArgumentError("stratification works on couple payloads");
    const RingPtr& ring = b.chart.ring;
    const Couple& c = b.couple();
    IdealGens sing0 = basic_sing(b).defining;
    if (ideal_is_trivial(sing0))
        throw StateError("stratification step on an empty singular locus");

    FactoredTransform ft = factor_exceptional(c.J, b.E);
    std::uint64_t d = max_order_on(ft.residual, sing0);
    if (d == 0)
        throw StateError("monomial state: use the combinatorial resolver");

    Couple j2 = simple_from_word(ft.residual, c.J, c.b, d);
    IdealGens maxw_locus = diff_extend_ideal(j2.J, j2.b - 1);

    // h = largest number of old divisors through a point of the max locus
    std::vector<std::size_t> evars;
    for (const auto& h : e_minus.hypersurfaces)
        if (!h.absent()) evars.push_back(static_cast<std::size_t>(h.var_index()));
    std::uint64_t hmax = 0;
    std::uint64_t nsub = std::uint64_t(1) << evars.size();
    for (std::uint64_t mask = 0; mask < nsub; ++mask) {
        std::uint64_t k = static_cast<std::uint64_t>(__builtin_popcountll(mask));
        if (k <= hmax) continue;
        IdealGens cut = maxw_locus;
        for (std::size_t i = 0; i < evars.size(); ++i)
            if (mask & (std::uint64_t(1) << i))
                cut.push_back(Poly::variable(ring, evars[i]));
        if (!ideal_is_trivial(cut)) hmax = k;
    }

    BigRat alpha1 = BigRat(BigInt(d)) / BigRat(BigInt(c.b));
    TValue tmax;
    tmax.w = alpha1;
    tmax.n = hmax;
    Couple j1 = simple_from_t(j2, e_minus, tmax, c.b);

    GammaStep out;
    out.gamma.entries.push_back(
        GammaEntry{false, alpha1, static_cast<std::int64_t>(hmax)});

    ReesAlgebra A = diff_saturate(rees_from_couple(j1));
    bool provider_used = false;
    std::size_t nvars = ring->nvars();
    for (std::size_t e = 1; e <= nvars; ++e) {
        IdealGens singA = sing_rees(A).defining;
        if (ideal_is_trivial(singA))
            throw StateError("attached algebra lost its singular locus");
        std::vector<std::size_t> vars = vanishing_vars(ring, singA);
        if (vars.size() == e && locus_is_coordinate(ring, singA, vars)) {
            out.center.vars = vars;
            while (out.gamma.entries.size() < nvars)
                out.gamma.entries.push_back(GammaEntry{});
            return out;
        }
        if (e == nvars) break;
        const ProviderEntry* entry =
            provider_used ? nullptr : provider.find(b.chart.label, step);
        if (!entry)
            throw ProviderGapError("no elimination data for chart '" + b.chart.label +
                                   "' at step " + std::to_string(step));
        EliminationDiagnostics diag = elimination_checks(A, *entry, origin_point(ring));
        if (!diag.ok())
            throw ProviderGapError("elimination data rejected: " + diag.detail);
        provider_used = true;
        ReesAlgebra elim = parse_elim(ring, *entry);

        // invariant carried by the lower level
        Couple ec = normalize_to_couple(elim);
        FactoredTransform eft = factor_exceptional(ec.J, b.E);
        IdealGens esing = diff_extend_ideal(ec.J, ec.b - 1);
        std::uint64_t ed = max_order_on(eft.residual, esing);
        if (ed == 0) {
            out.e_monomial_level = static_cast<int>(e);
            while (out.gamma.entries.size() < nvars)
                out.gamma.entries.push_back(GammaEntry{});
            return out;
        }
        out.gamma.entries.push_back(
            GammaEntry{false, BigRat(BigInt(ed)) / BigRat(BigInt(ec.b)), 0});

        A = diff_saturate(odot(A, elim));
    }
    throw ProviderGapError("no pure-codimension center within the ambient dimension");
}

namespace {

struct ChartAssessment {
    bool total_live = false;     // Sing(total, b) nonempty
    std::uint64_t d = 0;         // max residual order there
    BigRat word = 0;
    FactoredTransform ft;        // of the total transform
    IdealGens sing_total;
};

ChartAssessment assess(const BasicObject& b) {
    ChartAssessment a;
    const Couple& c = b.couple();
    a.sing_total = diff_extend_ideal(b.total, c.b - 1);
    for (const auto& g : b.opens) a.sing_total = saturate(a.sing_total, g);
    if (ideal_is_trivial(a.sing_total)) return a;
    a.total_live = true;
    a.ft = factor_exceptional(b.total, b.E);
    a.d = max_order_on(a.ft.residual, a.sing_total);
    a.word = BigRat(BigInt(a.d)) / BigRat(BigInt(c.b));
    return a;
}

DivisorSet e_minus_of(const BasicObject& b, std::size_t s0) {
    DivisorSet out;
    for (const auto& h : b.E.hypersurfaces) {
        if (h.absent()) continue;
        bool old = !h.is_exceptional() ||
                   static_cast<std::size_t>(h.origin_step) + 1 < s0;
        if (old) out.hypersurfaces.push_back(h);
    }
    return out;
}

/// largest number of E- divisors through a point of the max w-ord locus
std::uint64_t count_h(const BasicObject& b, const ChartAssessment& a,
                      const DivisorSet& e_minus) {
    IdealGens locus;
    if (a.d > 0) {
        Couple j2 = simple_from_word(a.ft.residual, b.total, b.couple().b, a.d);
        locus = diff_extend_ideal(j2.J, j2.b - 1);
    } else {
        locus = a.sing_total;
    }
    std::vector<std::size_t> evars;
    for (const auto& h : e_minus.hypersurfaces)
        if (!h.absent()) evars.push_back(static_cast<std::size_t>(h.var_index()));
    std::uint64_t hmax = 0;
    std::uint64_t nsub = std::uint64_t(1) << evars.size();
    for (std::uint64_t mask = 0; mask < nsub; ++mask) {
        std::uint64_t k = static_cast<std::uint64_t>(__builtin_popcountll(mask));
        if (k <= hmax) continue;
        IdealGens cut = locus;
        for (std::size_t i = 0; i < evars.size(); ++i)
            if (mask & (std::uint64_t(1) << i))
                cut.push_back(Poly::variable(b.chart.ring, evars[i]));
        if (!ideal_is_trivial(cut)) hmax = k;
    }
    return hmax;
}

}  // namespace

ResolutionTrace resolve(const BasicObject& b0, const EliminationProvider& provider,
                        std::size_t max_steps) {
    if (max_steps == 0) throw ArgumentError("max_steps must be at least 1");
    BasicObject root = b0;
    if (!root.is_couple())
        root = make_basic(root.chart, normalize_to_couple(root.algebra()), root.E);

    ResolutionTrace trace;
    std::vector<BasicObject> charts{root};
    std::vector<std::optional<BigRat>> word_history;

    for (;;) {
        std::sort(charts.begin(), charts.end(),
                  [](const BasicObject& a, const BasicObject& b) {
                      return a.chart.label < b.chart.label;
                  });

        TraceStep rec;
        rec.step = trace.steps.size();

        // assess every chart on the total transform
        std::vector<ChartAssessment> as;
        std::optional<BigRat> wmax;
        for (const auto& c : charts) {
            as.push_back(assess(c));
            rec.exponents[c.chart.label] = total_transform_exponents(c);
            if (as.back().total_live && (!wmax || as.back().word > *wmax))
                wmax = as.back().word;
        }
        rec.max_word = wmax;
        word_history.push_back(wmax);

        // birth step of the current max value
        std::size_t s0 = word_history.size() - 1;
        while (s0 > 0 && word_history[s0 - 1] == wmax) --s0;

        if (wmax && *wmax > 0) {
            TValue t;
            t.w = *wmax;
            for (std::size_t i = 0; i < charts.size(); ++i) {
                if (!as[i].total_live || as[i].word != *wmax) continue;
                DivisorSet em = e_minus_of(charts[i], s0);
                t.n = std::max(t.n, count_h(charts[i], as[i], em));
                if (rec.e_minus.empty())
                    for (const auto& h : em.hypersurfaces)
                        rec.e_minus.push_back(h.name);
            }
            rec.max_t = t;
        }

        // charts still live for the controlled transform
        std::vector<std::size_t> live;
        for (std::size_t i = 0; i < charts.size(); ++i)
            if (!ideal_is_trivial(basic_sing(charts[i]).defining)) live.push_back(i);

        if (live.empty()) {
            trace.steps.push_back(std::move(rec));
            trace.terminal = Terminal::Resolved;
            return trace;
        }
        if (trace.blowups >= max_steps) {
            trace.steps.push_back(std::move(rec));
            trace.terminal = Terminal::Budget;
            return trace;
        }

        std::size_t cur = live.front();
        BasicObject acting = charts[cur];
        rec.chart = acting.chart.label;

        FactoredTransform ctrl = factor_exceptional(acting.couple().J, acting.E);
        std::uint64_t dctrl =
            max_order_on(ctrl.residual, basic_sing(acting).defining);

        if (dctrl == 0) {
            // monomial state: the combinatorial resolver finishes this chart
            MonomialResolution mres = monomial_resolve(acting);
            trace.blowups += mres.steps.size();
            trace.steps.push_back(std::move(rec));
            for (const auto& ms : mres.steps) {
                TraceStep mstep;
                mstep.step = trace.steps.size();
                mstep.chart = ms.chart;
                mstep.center_vars = ms.center_vars;
                mstep.max_word = BigRat(0);
                trace.steps.push_back(std::move(mstep));
            }
            charts.erase(charts.begin() + static_cast<std::ptrdiff_t>(cur));
            for (auto& f : mres.final_objects) charts.push_back(std::move(f));
            continue;
        }

        std::size_t local_step = 0;
        for (const auto& s : acting.history.steps)
            if (s.kind == StepRecord::Blowup) ++local_step;
        GammaStep gs;
        try {
            gs = gamma_step(acting, provider, local_step, e_minus_of(acting, s0));
        } catch (const ProviderGapError&) {
            trace.steps.push_back(std::move(rec));
            trace.terminal = Terminal::ProviderGap;
            return trace;
        }
        rec.gamma = gs.gamma;
        if (gs.e_monomial_level >= 0) {
            trace.steps.push_back(std::move(rec));
            trace.terminal = Terminal::EMonomial;
            return trace;
        }
        for (auto i : gs.center.vars)
            rec.center_vars.push_back(acting.chart.ring->vars[i]);
        trace.steps.push_back(std::move(rec));

        std::vector<BasicObject> children = blowup(acting, gs.center);
        ++trace.blowups;
        charts.erase(charts.begin() + static_cast<std::ptrdiff_t>(cur));
        for (auto& ch : children) charts.push_back(std::move(ch));
    }
}

}  // namespace resolab
