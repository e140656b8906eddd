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

#include "resolab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace resolab {

std::uint64_t total_degree(const ExpVec& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j])
                throw ArgumentError("duplicate variable name: " + vars[i]);
    return std::make_shared<Ring>(Ring{field, std::move(vars)});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->vars == b->vars;
}

void Poly::insert_term(const ExpVec& e, const BigRat& c) {
    BigRat r = ring_->field.reduce(c);
    if (r == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, r);
    } else {
        it->second = ring_->field.add(it->second, r);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::zero(RingPtr ring) {
    Poly p;
    p.ring_ = std::move(ring);
    return p;
}

Poly Poly::constant(RingPtr ring, const BigRat& c) {
    Poly p = zero(std::move(ring));
    p.insert_term(ExpVec(p.ring_->nvars(), 0), c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
    Poly p = zero(std::move(ring));
    if (i >= p.ring_->nvars()) throw ArgumentError("variable index out of range");
    ExpVec e(p.ring_->nvars(), 0);
    e[i] = 1;
    p.insert_term(e, BigRat(1));
    return p;
}

Poly Poly::monomial(RingPtr ring, const ExpVec& e, const BigRat& c) {
    Poly p = zero(std::move(ring));
    if (e.size() != p.ring_->nvars()) throw ArgumentError("exponent vector length mismatch");
    p.insert_term(e, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

bool Poly::is_unit() const { return !terms_.empty() && is_constant(); }

std::uint64_t Poly::degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw ArgumentError("ring mismatch in +");
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = ring_->field.neg(c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw ArgumentError("ring mismatch in *");
    Poly r = zero(ring_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.insert_term(e, ring_->field.mul(c1, c2));
        }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Poly Poly::scaled(const BigRat& c) const {
    Poly r = zero(ring_);
    for (const auto& [e, k] : terms_) r.insert_term(e, ring_->field.mul(k, c));
    return r;
}

Poly Poly::pow(std::uint64_t n) const {
    Poly r = constant(ring_, BigRat(1));
    Poly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::shifted_up(const ExpVec& e) const {
    Poly r = zero(ring_);
    for (const auto& [e1, c] : terms_) {
        ExpVec e2(e1.size());
        for (std::size_t i = 0; i < e2.size(); ++i) e2[i] = e1[i] + e[i];
        r.insert_term(e2, c);
    }
    return r;
}

std::uint32_t Poly::min_exponent(std::size_t var) const {
    if (terms_.empty()) return 0;
    std::uint32_t m = UINT32_MAX;
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
}

Poly Poly::divided_by_var_power(std::size_t var, std::uint32_t n) const {
    Poly r = zero(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < n)
            throw ArgumentError("inexact division by variable power");
        ExpVec e2 = e;
        e2[var] -= n;
        r.insert_term(e2, c);
    }
    return r;
}

Poly Poly::hasse(const ExpVec& alpha) const {
    if (alpha.size() != nvars())
        throw ArgumentError("Hasse derivative: multi-index length mismatch");
    Poly r = zero(ring_);
    for (const auto& [e, c] : terms_) {
        BigRat k = c;
        bool dead = false;
        ExpVec e2(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < alpha[i]) { dead = true; break; }
            e2[i] = e[i] - alpha[i];
            if (alpha[i] > 0) k = ring_->field.mul(k, ring_->field.binomial(e[i], alpha[i]));
        }
        if (!dead) r.insert_term(e2, k);
    }
    return r;
}

Poly Poly::substituted(RingPtr target, const std::vector<Poly>& images) const {
    if (images.size() != nvars())
        throw ArgumentError("substitution needs one image per variable");
    // powers of each image, grown on demand
    std::vector<std::vector<Poly>> powers(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(Poly::constant(target, BigRat(1)));
    auto power = [&](std::size_t i, std::uint32_t n) -> const Poly& {
        while (powers[i].size() <= n)
            powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][n];
    };
    Poly r = Poly::zero(target);
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        r = r + t;
    }
    return r;
}

BigRat Poly::evaluate(const Point& x) const {
    if (x.coords.size() != nvars())
        throw ArgumentError("point dimension mismatch");
    const FieldSpec& F = ring_->field;
    BigRat acc(0);
    for (const auto& [e, c] : terms_) {
        BigRat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t = F.mul(t, x.coords[i]);
        acc = F.add(acc, t);
    }
    return acc;
}

Poly Poly::translated_to_origin(const Point& c) const {
    if (c.coords.size() != nvars())
        throw ArgumentError("point dimension mismatch");
    std::vector<Poly> images;
    images.reserve(nvars());
    for (std::size_t i = 0; i < nvars(); ++i)
        images.push_back(Poly::variable(ring_, i) + Poly::constant(ring_, c.coords[i]));
    return substituted(ring_, images);
}

std::optional<std::uint64_t> Poly::order_at_origin() const {
    if (terms_.empty()) return std::nullopt;
    std::uint64_t m = UINT64_MAX;
    for (const auto& [e, k] : terms_) m = std::min(m, total_degree(e));
    return m;
}

Poly Poly::initial_form() const {
    auto ord = order_at_origin();
    Poly r = zero(ring_);
    if (!ord) return r;
    for (const auto& [e, k] : terms_)
        if (total_degree(e) == *ord) r.insert_term(e, k);
    return r;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = total_degree(terms_.begin()->first);
    for (const auto& [e, k] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads better
    std::vector<const std::pair<const ExpVec, BigRat>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        auto da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    for (auto* t : ts) {
        const auto& [e, c] = *t;
        BigRat k = c;
        bool neg = k < 0;
        if (neg) k = -k;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool has_vars = total_degree(e) > 0;
        if (k != 1 || !has_vars) {
            os << k.str();
            if (has_vars) os << "*";
        }
        bool fv = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!fv) os << "*";
            fv = false;
            os << ring_->vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::optional<std::uint64_t> order_at_point(const Poly& f, const Point& x) {
    return f.translated_to_origin(x).order_at_origin();
}

std::optional<std::uint64_t> ideal_order_at_point(const IdealGens& J, const Point& x) {
    std::optional<std::uint64_t> best;
    for (const auto& g : J) {
        auto o = order_at_point(g, x);
        if (o && (!best || *o < *best)) best = o;
    }
    return best;
}

RingPtr taylor_ring(const RingPtr& ring) {
    std::vector<std::string> vars = ring->vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        std::string t = "t" + std::to_string(i + 1);
        while (std::find(vars.begin(), vars.end(), t) != vars.end()) t += "_";
        vars.push_back(t);
    }
    return make_ring(ring->field, std::move(vars));
}

Poly taylor_shift(const Poly& f) {
    RingPtr big = taylor_ring(f.ring());
    std::size_t n = f.nvars();
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(Poly::variable(big, i) + Poly::variable(big, n + i));
    return f.substituted(big, images);
}

Poly promote(const Poly& f, RingPtr target, const std::vector<std::size_t>& var_map) {
    if (var_map.size() != f.nvars())
        throw ArgumentError("promote: variable map length mismatch");
    Poly r = Poly::zero(target);
    for (const auto& [e, c] : f.terms()) {
        ExpVec e2(target->nvars(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) e2[var_map[i]] = e[i];
        r = r + Poly::monomial(target, e2, c);
    }
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    return a.terms() < b.terms();
}

}  // namespace resolab
