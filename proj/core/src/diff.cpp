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

#include "resolab/diff.hpp"

#include <algorithm>

namespace resolab {

namespace {

Poly monic(const Poly& f) {
    const BigRat& lc = f.terms().rbegin()->second;
    return f.scaled(f.ring()->field.inv(lc));
}

/// All multi-indices with 1 <= |alpha| <= max_total, restricted to the
/// given variable positions, in a fixed deterministic order.
std::vector<ExpVec> multi_indices(std::size_t nvars, std::uint64_t max_total,
                                  const std::vector<std::size_t>& support) {
    std::vector<ExpVec> out;
    ExpVec cur(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
        if (pos == support.size()) {
            if (total_degree(cur) > 0) out.push_back(cur);
            return;
        }
        for (std::uint64_t k = 0; k <= left; ++k) {
            cur[support[pos]] = static_cast<std::uint32_t>(k);
            self(self, pos + 1, left - k);
        }
        cur[support[pos]] = 0;
    };
    rec(rec, 0, max_total);
    std::sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& b) {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

std::vector<std::size_t> all_vars(std::size_t nvars) {
    std::vector<std::size_t> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i) v[i] = i;
    return v;
}

}  // namespace

IdealGens diff_extend_ideal(const IdealGens& J, std::uint64_t s) {
    IdealGens out;
    for (const auto& g : J)
        if (!g.is_zero()) out.push_back(monic(g));
    if (out.empty() || s == 0) {
        std::sort(out.begin(), out.end(), poly_less);
        return out;
    }
    std::size_t nvars = out.front().nvars();
    std::uint64_t cap = 0;
    for (const auto& g : J) cap = std::max(cap, g.degree());
    auto alphas = multi_indices(nvars, std::min(s, cap), all_vars(nvars));
    for (const auto& g : J) {
        if (g.is_zero()) continue;
        for (const auto& a : alphas) {
            Poly d = g.hasse(a);
            if (!d.is_zero()) out.push_back(monic(d));
        }
    }
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IdealGens algebra_degree_part(const ReesAlgebra& G, std::uint64_t n) {
    if (n == 0) throw ArgumentError("degree part requires n >= 1");
    constexpr std::size_t kCap = 10000;
    IdealGens out;
    std::size_t count = 0;
    const auto& gens = G.gens();
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left,
                   const Poly& acc) -> void {
        if (left == 0) {
            if (++count > kCap)
                throw ResourceError("degree part exceeds the product cap");
            out.push_back(acc);
            return;
        }
        if (i == gens.size()) return;
        // exponent of generator i: 0 .. left/n_i
        self(self, i + 1, left, acc);
        if (gens[i].n <= left)
            self(self, i, left - gens[i].n, acc * gens[i].f);
    };
    rec(rec, 0, n, Poly::constant(G.ring(), BigRat(1)));
    std::sort(out.begin(), out.end(), poly_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ReesAlgebra diff_saturate(const ReesAlgebra& G) {
    std::vector<WeightedGen> gens = G.gens();
    std::size_t nvars = G.ring()->nvars();
    std::vector<WeightedGen> candidates;
    for (const auto& [f, n] : G.gens()) {
        // weight-lowering copies of f itself
        for (std::uint64_t m = 1; m < n; ++m) candidates.push_back({f, m});
        std::uint64_t cap = std::min<std::uint64_t>(n - 1, f.degree());
        for (const auto& a : multi_indices(nvars, cap, all_vars(nvars))) {
            Poly d = f.hasse(a);
            if (d.is_zero()) continue;
            std::uint64_t amt = total_degree(a);
            for (std::uint64_t m = 1; m + amt <= n; ++m)
                candidates.push_back({d, m});
        }
    }
    std::sort(candidates.begin(), candidates.end(), weighted_gen_less);
    for (const auto& c : candidates) {
        ReesAlgebra cur(G.ring(), gens);
        if (ideal_member(c.f, algebra_degree_part(cur, c.n))) continue;
        gens.push_back(c);
    }
    return ReesAlgebra(G.ring(), std::move(gens));
}

namespace {

bool relative_diff_check(const ReesAlgebra& G,
                         const std::vector<std::size_t>& support) {
    for (const auto& [f, n] : G.gens()) {
        if (n >= 2 && !ideal_member(f, algebra_degree_part(G, n - 1)))
            return false;
        std::uint64_t cap = std::min<std::uint64_t>(n - 1, f.degree());
        for (const auto& a : multi_indices(G.ring()->nvars(), cap, support)) {
            Poly d = f.hasse(a);
            if (d.is_zero()) continue;
            std::uint64_t m = n - total_degree(a);
            if (!ideal_member(d, algebra_degree_part(G, m))) return false;
        }
    }
    return true;
}

}  // namespace

bool is_diff_algebra(const ReesAlgebra& G) {
    return relative_diff_check(G, all_vars(G.ring()->nvars()));
}

bool is_relative_diff_algebra(const ReesAlgebra& G,
                              const std::vector<std::size_t>& fiber_vars) {
    if (fiber_vars.empty() || fiber_vars.size() >= G.ring()->nvars())
        throw ArgumentError("fiber variables must be a nonempty proper subset");
    for (auto i : fiber_vars)
        if (i >= G.ring()->nvars())
            throw ArgumentError("fiber variable index out of range");
    return relative_diff_check(G, fiber_vars);
}

bool algebras_equal_up_to(const ReesAlgebra& G1, const ReesAlgebra& G2,
                          std::uint64_t N) {
    for (std::uint64_t n = 1; n <= N; ++n) {
        IdealGens p1 = algebra_degree_part(G1, n);
        IdealGens p2 = algebra_degree_part(G2, n);
        Ideal i1(p1), i2(p2);
        for (const auto& f : p1)
            if (!i2.contains(f)) return false;
        for (const auto& f : p2)
            if (!i1.contains(f)) return false;
    }
    return true;
}

}  // namespace resolab
