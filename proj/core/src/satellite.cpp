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

#include "resolab/satellite.hpp"

#include <algorithm>
#include <sstream>

namespace resolab {

FactoredTransform factor_exceptional(const IdealGens& J, const DivisorSet& E) {
    FactoredTransform ft;
    ft.residual = J;
    for (const auto& h : E.hypersurfaces) {
        if (!h.is_exceptional() || h.absent()) continue;
        std::size_t v = static_cast<std::size_t>(h.var_index());
        std::uint32_t p = UINT32_MAX;
        for (const auto& g : ft.residual) {
            if (g.is_zero()) continue;
            p = std::min(p, g.min_exponent(v));
        }
        if (p == UINT32_MAX) p = 0;
        if (p > 0)
            for (auto& g : ft.residual)
                if (!g.is_zero()) g = g.divided_by_var_power(v, p);
        ft.factors.push_back({v, h.origin_step, p});
    }
    // exactness: multiply the factors back and compare
    if (!J.empty()) {
        const RingPtr& ring = J.front().ring();
        Poly m = Poly::constant(ring, BigRat(1));
        for (const auto& f : ft.factors)
            m = m * Poly::variable(ring, f.var).pow(f.power);
        for (std::size_t k = 0; k < J.size(); ++k)
            if (m * ft.residual[k] != J[k])
                throw StateError("exceptional factorization fails to re-multiply");
    }
    return ft;
}

namespace {

Poly remultiplied(const FactoredTransform& ft, std::size_t k) {
    Poly g = ft.residual[k];
    for (const auto& f : ft.factors)
        g = g * Poly::variable(g.ring(), f.var).pow(f.power);
    return g;
}

void require_singular(const FactoredTransform& ft, std::uint64_t b, const Point& x) {
    IdealGens J;
    for (std::size_t k = 0; k < ft.residual.size(); ++k)
        J.push_back(remultiplied(ft, k));
    auto o = ideal_order_at_point(J, x);
    if (o && *o < b)
        throw ArgumentError("point is outside the weighted singular locus");
}

}  // namespace

BigRat w_ord(const FactoredTransform& ft, std::uint64_t b, const Point& x) {
    if (b == 0) throw ArgumentError("weight must be positive");
    require_singular(ft, b, x);
    auto nu = ideal_order_at_point(ft.residual, x);
    if (!nu) throw ArgumentError("w-ord of the zero ideal");
    return BigRat(BigInt(*nu)) / BigRat(BigInt(b));
}

std::vector<BigRat> exc_exponents_at(const FactoredTransform& ft, std::uint64_t b,
                                     const Point& x) {
    std::vector<BigRat> out;
    for (const auto& f : ft.factors) {
        bool through = x.coords.at(f.var) == 0;
        out.push_back(through ? BigRat(BigInt(f.power)) / BigRat(BigInt(b)) : BigRat(0));
    }
    return out;
}

bool TValue::operator==(const TValue& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return w == o.w && n == o.n;
}

bool TValue::operator<(const TValue& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    if (w != o.w) return w < o.w;
    return n < o.n;
}

std::string TValue::str() const {
    if (infinite) return "inf";
    std::ostringstream os;
    os << "(" << w.str() << ", " << n << ")";
    return os.str();
}

TValue t_value(const TState& ts, const FactoredTransform& ft, std::uint64_t b,
               const Point& x) {
    if (ideal_is_trivial(ft.residual))
        throw StateError("t-value is undefined in the monomial case");
    TValue t;
    t.w = w_ord(ft, b, x);
    for (const auto& h : ts.e_minus.hypersurfaces) {
        if (h.absent()) continue;
        if (h.defining.evaluate(x) == 0) ++t.n;
    }
    return t;
}

std::size_t birth_index(const std::vector<TValue>& max_history) {
    if (max_history.empty()) throw ArgumentError("empty max-value history");
    std::size_t s = max_history.size() - 1;
    const TValue& last = max_history[s];
    if (!last.infinite && last.w == 0) {
        // first step at which max w-ord became 0
        std::size_t r = s;
        while (r > 0 && !max_history[r - 1].infinite && max_history[r - 1].w == 0) --r;
        return r;
    }
    std::size_t r = s;
    while (r > 0 && max_history[r - 1] == last) --r;
    return r;
}

namespace {

IdealGens ideal_power(const IdealGens& J, std::uint64_t d) {
    constexpr std::size_t kCap = 10000;
    IdealGens out;
    std::size_t count = 0;
    auto rec = [&](auto&& self, std::size_t start, std::uint64_t left,
                   const Poly& acc) -> void {
        if (left == 0) {
            if (++count > kCap) throw ResourceError("ideal power exceeds product cap");
            out.push_back(acc);
            return;
        }
        for (std::size_t i = start; i < J.size(); ++i) {
            if (J[i].is_zero()) continue;
            self(self, i, left - 1, acc * J[i]);
        }
    };
    if (J.empty()) return out;
    rec(rec, 0, d, Poly::constant(J.front().ring(), BigRat(1)));
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Couple simple_from_word(const IdealGens& Jbar, const IdealGens& J, std::uint64_t b,
                        std::uint64_t d_num) {
    if (d_num == 0)
        throw StateError("max w-ord is 0: the monomial case has no attached couple");
    if (d_num >= b) return Couple(Jbar, d_num);
    IdealGens gens = ideal_power(J, d_num);
    for (auto& g : ideal_power(Jbar, b)) gens.push_back(std::move(g));
    return Couple(std::move(gens), b * d_num);
}

IdealGens h_product(const DivisorSet& e_minus, std::uint64_t h, std::uint64_t m) {
    std::vector<std::size_t> vars;
    RingPtr ring;
    for (const auto& hy : e_minus.hypersurfaces) {
        if (hy.absent()) continue;
        vars.push_back(static_cast<std::size_t>(hy.var_index()));
        ring = hy.defining.ring();
    }
    if (h > vars.size())
        throw ArgumentError("subset size exceeds the number of divisors");
    if (h == 0 || !ring) return {};
    // factor ideals: for each h-subset F, the ideal (x_v^m : v in F);
    // the product ideal is generated by one choice of generator per factor
    IdealGens acc;
    bool first = true;
    std::uint64_t nsub = std::uint64_t(1) << vars.size();
    for (std::uint64_t mask = 0; mask < nsub; ++mask) {
        if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != h) continue;
        IdealGens factor;
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (mask & (std::uint64_t(1) << i))
                factor.push_back(Poly::variable(ring, vars[i]).pow(m));
        if (first) {
            acc = factor;
            first = false;
        } else {
            IdealGens next;
            for (const auto& a : acc)
                for (const auto& f : factor) next.push_back(a * f);
            acc = std::move(next);
        }
    }
    std::sort(acc.begin(), acc.end(), poly_less);
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    return acc;
}

Couple simple_from_t(const Couple& J_dd, const DivisorSet& e_minus, const TValue& t,
                     std::uint64_t b) {
    if (t.infinite || t.w == 0)
        throw StateError("t-attached couple requires a finite positive max w-ord");
    BigRat d_rat = t.w * BigRat(BigInt(b));
    if (boost::multiprecision::denominator(d_rat) != 1)
        throw ArgumentError("b * max w-ord must be an integer");
    std::uint64_t d =
        boost::multiprecision::numerator(d_rat).convert_to<std::uint64_t>();
    std::uint64_t m = d >= b ? d : b * d;
    if (J_dd.b != m)
        throw ArgumentError("weight mismatch between the attached couple and t");
    IdealGens gens = J_dd.J;
    for (auto& g : h_product(e_minus, t.n, m)) gens.push_back(std::move(g));
    return Couple(std::move(gens), m);
}

namespace {

/// The divisor subset of the combinatorial rule, or empty when the
/// weighted singular locus is already empty.
std::vector<ExcFactor> pick_center(const std::vector<ExcFactor>& factors,
                                   std::uint64_t b) {
    std::vector<ExcFactor> nonzero;
    for (const auto& f : factors)
        if (f.power > 0) nonzero.push_back(f);
    std::vector<std::size_t> best;
    std::uint64_t best_sum = 0;
    std::uint64_t nsub = std::uint64_t(1) << nonzero.size();
    for (std::uint64_t mask = 1; mask < nsub; ++mask) {
        std::uint64_t sum = 0;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < nonzero.size(); ++i)
            if (mask & (std::uint64_t(1) << i)) {
                sum += nonzero[i].power;
                idx.push_back(i);
            }
        if (sum < b) continue;
        bool better = false;
        if (best.empty() || idx.size() < best.size()) {
            better = true;
        } else if (idx.size() == best.size()) {
            if (sum > best_sum) better = true;
            else if (sum == best_sum) {
                // most recent divisors first: compare creation steps,
                // descending, lexicographically
                auto steps = [&](const std::vector<std::size_t>& v) {
                    std::vector<int> s;
                    for (auto i : v) s.push_back(nonzero[i].step);
                    std::sort(s.rbegin(), s.rend());
                    return s;
                };
                if (steps(idx) > steps(best)) better = true;
            }
        }
        if (better) {
            best = idx;
            best_sum = sum;
        }
    }
    std::vector<ExcFactor> out;
    for (auto i : best) out.push_back(nonzero[i]);
    return out;
}

}  // namespace

MonomialResolution monomial_resolve(const BasicObject& b0, std::size_t max_steps) {
    if (!b0.is_couple())
        throw ArgumentError("the combinatorial resolver expects a couple payload");
    MonomialResolution res;
    // Each work item carries the number of blow-ups applied along its own
    // chart lineage; the budget bounds that depth, since every chart of a
    // blow-up strictly lowers the exceptional exponent sum.
    std::vector<std::pair<BasicObject, std::size_t>> work;
    work.emplace_back(b0, 0);
    while (!work.empty()) {
        // deterministic chart order
        std::sort(work.begin(), work.end(), [](const auto& a, const auto& c) {
            return a.first.chart.label < c.first.chart.label;
        });
        auto [cur, depth] = std::move(work.front());
        work.erase(work.begin());

        FactoredTransform ft = factor_exceptional(cur.couple().J, cur.E);
        if (!ideal_is_trivial(ft.residual))
            throw StateError("combinatorial resolver requires a trivial residual");
        std::vector<ExcFactor> F = pick_center(ft.factors, cur.couple().b);
        if (F.empty()) {
            res.final_objects.push_back(std::move(cur));
            continue;  // this chart is resolved
        }
        if (depth >= max_steps)
            throw ResourceError("combinatorial resolution exceeded the step budget");
        Center Y;
        MonomialStep rec;
        rec.chart = cur.chart.label;
        for (const auto& f : F) {
            Y.vars.push_back(f.var);
            rec.center_vars.push_back(cur.chart.ring->vars[f.var]);
        }
        res.steps.push_back(std::move(rec));
        for (auto& nb : blowup(cur, Y)) work.emplace_back(std::move(nb), depth + 1);
    }
    return res;
}

}  // namespace resolab
