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

#ifndef RESOLAB_SATELLITE_HPP
#define RESOLAB_SATELLITE_HPP

#include "resolab/chart.hpp"

namespace resolab {

/// One peeled-off exceptional factor x_var^power.
struct ExcFactor {
    std::size_t var;
    int step;  // creating blow-up step of the divisor
    std::uint64_t power;
};

/// J = prod x_var^power * residual, with the residual divisible by no
/// exceptional coordinate.
struct FactoredTransform {
    std::vector<ExcFactor> factors;
    IdealGens residual;
};

/// Peel the maximal common exceptional powers off every generator.
/// Re-multiplication is checked exactly.
FactoredTransform factor_exceptional(const IdealGens& J, const DivisorSet& E);

/// w-ord at x: order of the residual at x divided by b.  Requires the
/// re-multiplied ideal to have order >= b at x.
BigRat w_ord(const FactoredTransform& ft, std::uint64_t b, const Point& x);

/// The satellite exponents exp_i(x) = power_i / b for the factors whose
/// divisor passes through x (0 contribution otherwise), in factor order.
std::vector<BigRat> exc_exponents_at(const FactoredTransform& ft, std::uint64_t b,
                                     const Point& x);

/// E+/E- split: E- holds the divisors born before the current max
/// w-ord value was first attained (step s0), plus the boundary.
struct TState {
    std::size_t s0 = 0;
    DivisorSet e_minus;
};

/// Lexicographic pair (w-ord, number of E- divisors through the point),
/// with a distinguished top element for the infinite value.
struct TValue {
    BigRat w = 0;
    std::uint64_t n = 0;
    bool infinite = false;

    bool operator==(const TValue& o) const;
    bool operator<(const TValue& o) const;
    bool operator<=(const TValue& o) const { return *this < o || *this == o; }
    std::string str() const;
};

TValue t_value(const TState& ts, const FactoredTransform& ft, std::uint64_t b,
               const Point& x);

/// The birth index r of the terminal max value: the smallest r with
/// max_r = ... = max_last (or, when the last max w-ord is 0, the first
/// step where it became 0).
std::size_t birth_index(const std::vector<TValue>& max_history);

/// The couple (J'', b'') whose singular locus is the max w-ord locus:
/// (Jbar, d) when d >= b, else (J^d + Jbar^b, b*d), where d = b * max
/// w-ord.  d = 0 (monomial case) is a state error.
Couple simple_from_word(const IdealGens& Jbar, const IdealGens& J, std::uint64_t b,
                        std::uint64_t d_num);

/// H_h(m): the product over all h-element subsets F of the given
/// divisors of the ideal sum_{H in F} I(H)^m.  h = 0 yields the unit
/// ideal (empty product).
IdealGens h_product(const DivisorSet& e_minus, std::uint64_t h, std::uint64_t m);

/// The couple (J', b') whose singular locus is the max-t locus:
/// J'' + H_h(d) in weight d (d >= b), or J'' + H_h(b*d) in weight b*d.
Couple simple_from_t(const Couple& J_dd, const DivisorSet& e_minus, const TValue& t,
                     std::uint64_t b);

struct MonomialStep {
    std::string chart;
    std::vector<std::string> center_vars;
};

struct MonomialResolution {
    std::vector<MonomialStep> steps;
    std::vector<BasicObject> final_objects;  // all with empty singular locus
};

/// Combinatorial resolution of a monomial couple (residual trivial):
/// repeatedly blow up the intersection of the subset of exceptional
/// divisors chosen by the rule: smallest subset with exponent sum >= b;
/// ties broken by largest exponent sum, then by most recent divisors.
/// max_steps bounds the number of blow-ups along any single chart
/// lineage (the exponent sum of the input is always enough).
MonomialResolution monomial_resolve(const BasicObject& b, std::size_t max_steps = 64);

}  // namespace resolab

#endif
