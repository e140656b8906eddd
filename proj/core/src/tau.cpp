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

#include "resolab/tau.hpp"

#include <algorithm>

namespace resolab {

namespace {

Poly monic(const Poly& f) {
    const BigRat& lc = f.terms().rbegin()->second;
    return f.scaled(f.ring()->field.inv(lc));
}

}  // namespace

InitialIdeal initial_ideal(const ReesAlgebra& G, const Point& x) {
    InitialIdeal out{G.ring(), {}};
    for (const auto& [f, n] : G.gens()) {
        Poly t = f.translated_to_origin(x);
        auto o = t.order_at_origin();
        if (!o || *o < n)
            throw ArgumentError("initial ideal requires a singular point");
        if (*o == n) out.gens.push_back({monic(t.initial_form()), n});
    }
    std::sort(out.gens.begin(), out.gens.end(),
              [](const GradedGen& a, const GradedGen& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  return poly_less(a.form, b.form);
              });
    out.gens.erase(std::unique(out.gens.begin(), out.gens.end(),
                               [](const GradedGen& a, const GradedGen& b) {
                                   return a.degree == b.degree && a.form == b.form;
                               }),
                   out.gens.end());
    return out;
}

InitialIdeal graded_diff_closure(const InitialIdeal& I) {
    std::vector<GradedGen> gens = I.gens;
    for (const auto& g : gens)
        if (!g.form.is_homogeneous() || g.form.degree() != g.degree)
            throw ArgumentError("closure input must be homogeneous of its tagged degree");
    std::size_t nvars = I.ring->nvars();

    bool grew = true;
    while (grew) {
        grew = false;
        IdealGens flat;
        for (const auto& g : gens) flat.push_back(g.form);
        Ideal cur(flat);
        std::vector<GradedGen> fresh;
        for (const auto& g : gens) {
            if (g.degree <= 1) continue;
            // all Hasse operators of order 1 .. degree-1
            ExpVec alpha(nvars, 0);
            auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
                if (pos == nvars) {
                    std::uint64_t amt = total_degree(alpha);
                    if (amt == 0 || amt >= g.degree) return;
                    Poly d = g.form.hasse(alpha);
                    if (d.is_zero() || cur.contains(d)) return;
                    fresh.push_back({monic(d), g.degree - amt});
                    return;
                }
                for (std::uint64_t k = 0; k <= left; ++k) {
                    alpha[pos] = static_cast<std::uint32_t>(k);
                    self(self, pos + 1, left - k);
                }
                alpha[pos] = 0;
            };
            rec(rec, 0, g.degree - 1);
        }
        if (!fresh.empty()) {
            // add one round of new forms, dedup, and iterate to the fixed point
            for (auto& f : fresh) gens.push_back(std::move(f));
            std::sort(gens.begin(), gens.end(), [](const GradedGen& a, const GradedGen& b) {
                if (a.degree != b.degree) return a.degree < b.degree;
                return poly_less(a.form, b.form);
            });
            gens.erase(std::unique(gens.begin(), gens.end(),
                                   [](const GradedGen& a, const GradedGen& b) {
                                       return a.degree == b.degree && a.form == b.form;
                                   }),
                       gens.end());
            grew = true;
        }
    }

    // prune generators that are redundant in the ideal they span
    std::vector<GradedGen> pruned;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        IdealGens others;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (j == i) continue;
            bool kept = j < i
                            ? std::any_of(pruned.begin(), pruned.end(),
                                          [&](const GradedGen& p) {
                                              return p.degree == gens[j].degree &&
                                                     p.form == gens[j].form;
                                          })
                            : true;
            if (kept) others.push_back(gens[j].form);
        }
        if (others.empty() || !ideal_member(gens[i].form, others))
            pruned.push_back(gens[i]);
    }
    return InitialIdeal{I.ring, std::move(pruned)};
}

namespace {

/// q = p^e with e >= 1 and q <= n, or 0 if n is not such a power.
bool is_p_power(std::uint64_t n, std::int64_t p) {
    if (p <= 1 || n < static_cast<std::uint64_t>(p)) return false;
    while (n % static_cast<std::uint64_t>(p) == 0) n /= static_cast<std::uint64_t>(p);
    return n == 1;
}

/// If f is c1*x1^q + ... + ck*xk^q with q a power of the (prime)
/// characteristic, return the linear form c1*x1 + ... + ck*xk (q-th
/// roots are trivial in the prime field).
std::optional<Poly> additive_root(const Poly& f) {
    const FieldSpec& F = f.ring()->field;
    if (!F.is_prime_field()) return std::nullopt;
    std::uint64_t q = f.degree();
    if (!is_p_power(q, F.characteristic())) return std::nullopt;
    Poly lin = Poly::zero(f.ring());
    for (const auto& [e, c] : f.terms()) {
        int support = -1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (support >= 0 || e[i] != q) return std::nullopt;
            support = static_cast<int>(i);
        }
        if (support < 0) return std::nullopt;
        lin = lin + Poly::variable(f.ring(), static_cast<std::size_t>(support)).scaled(c);
    }
    return lin;
}

/// Row-reduce linear forms over the coefficient field; returns the
/// independent ones.
std::vector<Poly> independent_forms(const RingPtr& ring, std::vector<Poly> forms) {
    const FieldSpec& F = ring->field;
    std::size_t n = ring->nvars();
    std::vector<std::vector<BigRat>> rows;
    std::vector<Poly> kept;
    for (const auto& f : forms) {
        std::vector<BigRat> row(n, BigRat(0));
        for (const auto& [e, c] : f.terms())
            for (std::size_t i = 0; i < n; ++i)
                if (e[i] == 1) row[i] = c;
        // eliminate against the kept rows
        for (const auto& r : rows) {
            std::size_t piv = 0;
            while (piv < n && r[piv] == 0) ++piv;
            if (piv < n && row[piv] != 0) {
                BigRat k = F.div(row[piv], r[piv]);
                for (std::size_t i = 0; i < n; ++i)
                    row[i] = F.sub(row[i], F.mul(k, r[i]));
            }
        }
        bool nonzero = std::any_of(row.begin(), row.end(),
                                   [](const BigRat& c) { return c != 0; });
        if (nonzero) {
            rows.push_back(row);
            kept.push_back(f);
        }
    }
    return kept;
}

RidgeResult ridge_core(const ReesAlgebra& G, const Point& x) {
    RidgeResult r;
    r.closure = graded_diff_closure(initial_ideal(G, x));
    std::vector<Poly> forms;
    for (const auto& g : r.closure.gens) {
        if (g.degree == 1) {
            forms.push_back(g.form);
            continue;
        }
        if (auto lin = additive_root(g.form)) {
            forms.push_back(monic(*lin));
            continue;
        }
        r.flagged.push_back(g.form);
    }
    r.linear_forms = independent_forms(G.ring(), std::move(forms));
    r.tau = r.linear_forms.size();
    return r;
}

}  // namespace

RidgeResult ridge_and_tau(const ReesAlgebra& G, const Point& x) {
    RidgeResult r = ridge_core(G, x);
    // the saturated algebra must report the same invariant
    RidgeResult rs = ridge_core(diff_saturate(G), x);
    if (r.tau != rs.tau)
        throw StateError("tau differs between the algebra and its saturation");
    return r;
}

bool codim_type_at_least(const ReesAlgebra& G, std::uint64_t e,
                         const std::vector<Point>& probes) {
    Locus sing = sing_rees(G);
    for (const auto& x : probes) {
        if (!sing.contains_point(x))
            throw ArgumentError("codimensional-type probe outside the singular locus");
        if (ridge_and_tau(G, x).tau < e) return false;
    }
    return true;
}

bool transversal(const ReesAlgebra& G, const Point& x,
                 const std::vector<std::size_t>& fiber_vars) {
    RidgeResult r = ridge_and_tau(G, x);
    if (fiber_vars.empty()) return true;
    if (fiber_vars.size() > r.tau) return false;
    // L_C ∩ span(fiber axes) = 0 iff the forms restricted to the fiber
    // columns have full column rank
    const FieldSpec& F = G.ring()->field;
    std::size_t m = fiber_vars.size();
    std::vector<std::vector<BigRat>> rows;
    for (const auto& f : r.linear_forms) {
        std::vector<BigRat> row(m, BigRat(0));
        for (const auto& [e, c] : f.terms())
            for (std::size_t k = 0; k < m; ++k)
                if (e[fiber_vars[k]] == 1) row[k] = c;
        rows.push_back(row);
    }
    // column rank by Gaussian elimination
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            BigRat k = F.div(rows[i][col], rows[rank][col]);
            for (std::size_t j = 0; j < m; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(k, rows[rank][j]));
        }
        ++rank;
    }
    return rank == m;
}

}  // namespace resolab
