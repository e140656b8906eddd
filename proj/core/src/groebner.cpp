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

#include "resolab/groebner.hpp"

#include <algorithm>
#include <deque>

namespace resolab {

namespace {

bool degrevlex_less(const ExpVec& a, const ExpVec& b) {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Poly make_monic(const Poly& f) {
    if (f.is_zero()) return f;
    const FieldSpec& F = f.ring()->field;
    // leading coefficient under any order works for normalization as
    // long as it is deterministic; use the lex-largest term.
    const BigRat& lc = f.terms().rbegin()->second;
    return f.scaled(F.inv(lc));
}

}  // namespace

bool MonomialOrder::less(const ExpVec& a, const ExpVec& b) const {
    if (kind == ElimLast && elim > 0) {
        std::uint64_t ba = 0, bb = 0;
        for (std::size_t i = a.size() - std::min(elim, a.size()); i < a.size(); ++i) {
            ba += a[i];
            bb += b[i];
        }
        if (ba != bb) return ba < bb;
    }
    return degrevlex_less(a, b);
}

const ExpVec& leading_exponent(const Poly& f, const MonomialOrder& ord) {
    if (f.is_zero()) throw ArgumentError("leading exponent of the zero polynomial");
    auto it = f.terms().begin();
    auto best = it;
    for (++it; it != f.terms().end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return best->first;
}

Poly normal_form(const Poly& f, const IdealGens& gs, const MonomialOrder& ord) {
    const FieldSpec& F = f.ring()->field;
    std::vector<ExpVec> lead;
    std::vector<BigRat> lc;
    lead.reserve(gs.size());
    for (const auto& g : gs) {
        if (g.is_zero()) throw ArgumentError("zero divisor polynomial in normal_form");
        lead.push_back(leading_exponent(g, ord));
        lc.push_back(g.terms().at(lead.back()));
    }
    Poly p = f;
    Poly r = Poly::zero(f.ring());
    while (!p.is_zero()) {
        const ExpVec& lm = leading_exponent(p, ord);
        bool reduced = false;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            if (!divides(lead[i], lm)) continue;
            BigRat c = F.div(p.terms().at(lm), lc[i]);
            p = p - gs[i].shifted_up(exp_sub(lm, lead[i])).scaled(c);
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly t = Poly::monomial(p.ring(), lm, p.terms().at(lm));
            r = r + t;
            p = p - t;
        }
    }
    return r;
}

IdealGens groebner_basis(const IdealGens& J, const MonomialOrder& ord) {
    IdealGens G;
    for (const auto& f : J)
        if (!f.is_zero()) G.push_back(f);
    if (G.empty()) return G;
    const RingPtr& ring = G.front().ring();
    const FieldSpec& F = ring->field;

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const ExpVec li = leading_exponent(G[i], ord);
        const ExpVec lj = leading_exponent(G[j], ord);
        ExpVec l = exp_lcm(li, lj);
        // Buchberger's first criterion: coprime leading monomials.
        if (total_degree(l) == total_degree(li) + total_degree(lj)) continue;
        BigRat ci = G[i].terms().at(li);
        BigRat cj = G[j].terms().at(lj);
        Poly s = G[i].shifted_up(exp_sub(l, li)).scaled(F.inv(ci)) -
                 G[j].shifted_up(exp_sub(l, lj)).scaled(F.inv(cj));
        Poly h = normal_form(s, G, ord);
        if (h.is_zero()) continue;
        for (std::size_t k = 0; k < G.size(); ++k) pairs.emplace_back(k, G.size());
        G.push_back(make_monic(h));
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.
    IdealGens minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const ExpVec li = leading_exponent(G[i], ord);
        bool redundant = false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const ExpVec lj = leading_exponent(G[j], ord);
            if (divides(lj, li) && (lj != li || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Fully reduce each element against the others and normalize.
    IdealGens reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        IdealGens rest;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) rest.push_back(minimal[j]);
        Poly h = rest.empty() ? minimal[i] : normal_form(minimal[i], rest, ord);
        if (!h.is_zero()) {
            const ExpVec& lm = leading_exponent(h, ord);
            reduced.push_back(h.scaled(F.inv(h.terms().at(lm))));
        }
    }
    std::sort(reduced.begin(), reduced.end(), poly_less);
    return reduced;
}

Ideal::Ideal(IdealGens gens, MonomialOrder ord)
    : gens_(std::move(gens)), ord_(ord) {}

const IdealGens& Ideal::basis() const {
    if (!have_basis_) {
        basis_ = groebner_basis(gens_, ord_);
        have_basis_ = true;
    }
    return basis_;
}

bool Ideal::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    const IdealGens& B = basis();
    if (B.empty()) return false;
    return normal_form(f, B, ord_).is_zero();
}

bool Ideal::is_trivial() const {
    const IdealGens& B = basis();
    return B.size() == 1 && B.front().is_unit();
}

bool Ideal::radical_contains(const Poly& f) const {
    if (f.is_zero()) return true;
    if (f.is_unit()) return is_trivial();
    const RingPtr& ring = f.ring();
    std::vector<std::string> vars = ring->vars;
    std::string z = "z";
    while (ring->var_index(z) >= 0) z += "_";
    vars.push_back(z);
    RingPtr big = make_ring(ring->field, vars);
    std::vector<std::size_t> vmap(ring->nvars());
    for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = i;
    IdealGens J;
    for (const auto& g : gens_) J.push_back(promote(g, big, vmap));
    Poly zf = promote(f, big, vmap) * Poly::variable(big, big->nvars() - 1);
    J.push_back(Poly::constant(big, BigRat(1)) - zf);
    return Ideal(J).is_trivial();
}

bool ideal_member(const Poly& f, const IdealGens& J) { return Ideal(J).contains(f); }

bool radical_member(const Poly& f, const IdealGens& J) {
    return Ideal(J).radical_contains(f);
}

bool ideal_is_trivial(const IdealGens& J) { return Ideal(J).is_trivial(); }

IdealGens saturate(const IdealGens& I, const Poly& g) {
    if (g.is_zero()) throw ArgumentError("saturation by zero");
    if (I.empty()) return I;
    const RingPtr& ring = g.ring();
    if (g.is_unit()) return groebner_basis(I);
    std::vector<std::string> vars = ring->vars;
    std::string z = "z";
    while (ring->var_index(z) >= 0) z += "_";
    vars.push_back(z);
    RingPtr big = make_ring(ring->field, vars);
    std::vector<std::size_t> vmap(ring->nvars());
    for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = i;
    IdealGens J;
    for (const auto& f : I) J.push_back(promote(f, big, vmap));
    Poly zg = promote(g, big, vmap) * Poly::variable(big, big->nvars() - 1);
    J.push_back(Poly::constant(big, BigRat(1)) - zg);
    IdealGens B = groebner_basis(J, MonomialOrder::elim_last(1));
    IdealGens out;
    std::size_t zi = big->nvars() - 1;
    for (const auto& f : B) {
        bool zfree = true;
        for (const auto& [e, c] : f.terms())
            if (e[zi] != 0) { zfree = false; break; }
        if (!zfree) continue;
        Poly back = Poly::zero(ring);
        for (const auto& [e, c] : f.terms()) {
            ExpVec e2(e.begin(), e.end() - 1);
            back = back + Poly::monomial(ring, e2, c);
        }
        out.push_back(back);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

namespace {

/// I ∩ J = eliminate t from t·I + (1-t)·J.
IdealGens ideal_intersection(const IdealGens& I, const IdealGens& J) {
    if (I.empty() || J.empty()) return {};
    const RingPtr& ring = I.front().ring();
    std::vector<std::string> vars = ring->vars;
    std::string t = "t";
    while (ring->var_index(t) >= 0) t += "_";
    vars.push_back(t);
    RingPtr big = make_ring(ring->field, vars);
    std::vector<std::size_t> vmap(ring->nvars());
    for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = i;
    Poly tv = Poly::variable(big, big->nvars() - 1);
    Poly one = Poly::constant(big, BigRat(1));
    IdealGens K;
    for (const auto& f : I) K.push_back(tv * promote(f, big, vmap));
    for (const auto& f : J) K.push_back((one - tv) * promote(f, big, vmap));
    IdealGens B = groebner_basis(K, MonomialOrder::elim_last(1));
    IdealGens out;
    std::size_t ti = big->nvars() - 1;
    for (const auto& f : B) {
        bool tfree = true;
        for (const auto& [e, c] : f.terms())
            if (e[ti] != 0) { tfree = false; break; }
        if (!tfree) continue;
        Poly back = Poly::zero(ring);
        for (const auto& [e, c] : f.terms()) {
            ExpVec e2(e.begin(), e.end() - 1);
            back = back + Poly::monomial(ring, e2, c);
        }
        out.push_back(back);
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

}  // namespace

IdealGens saturate(const IdealGens& I, const IdealGens& gs) {
    // I : (g1,...,gk)^inf is the intersection of the I : gi^inf.
    std::optional<IdealGens> acc;
    for (const auto& g : gs) {
        if (g.is_zero()) continue;
        IdealGens s = saturate(I, g);
        acc = acc ? ideal_intersection(*acc, s) : std::move(s);
    }
    return acc ? groebner_basis(*acc) : groebner_basis(I);
}

}  // namespace resolab
