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

#include <doctest.h>

#include <algorithm>

#include "resolab/satellite.hpp"
#include "test_util.hpp"

using namespace resolab;
using namespace resolab::testutil;

namespace {

DivisorSet one_divisor(const RingPtr& r, const char* var, int step) {
    DivisorSet E;
    E.hypersurfaces.push_back({std::string("E") + std::to_string(step),
                               P(r, var), step, 0});
    return E;
}

}  // namespace

TEST_CASE("peeling exceptional powers off a transform") {
    RingPtr r = ring_xy();
    DivisorSet E = one_divisor(r, "x", 0);

    FactoredTransform f1 = factor_exceptional({P(r, "x^2*(y^2 - x)")}, E);
    REQUIRE(f1.factors.size() == 1);
    CHECK(f1.factors[0].power == 2);
    CHECK(f1.residual == IdealGens{P(r, "y^2 - x")});

    FactoredTransform f2 = factor_exceptional({P(r, "y")}, E);
    CHECK(f2.factors[0].power == 0);
    CHECK(f2.residual == IdealGens{P(r, "y")});

    // the common power is the minimum over generators
    FactoredTransform f3 = factor_exceptional({P(r, "x^3"), P(r, "x^2*y")}, E);
    CHECK(f3.factors[0].power == 2);
    CHECK(f3.residual == IdealGens{P(r, "x"), P(r, "y")});
}

TEST_CASE("weighted order of the residual") {
    RingPtr r = ring_xy();
    Point o = pt(r, {0, 0});

    // before any blow-up the two notions agree
    FactoredTransform f0 = factor_exceptional({P(r, "y^2 - x^3")}, {});
    CHECK(w_ord(f0, 2, o) == BigRat(1));

    DivisorSet E = one_divisor(r, "x", 0);
    FactoredTransform f1 = factor_exceptional({P(r, "x^2*(y^2 - x)")}, E);
    CHECK(w_ord(f1, 2, o) == BigRat(1, 2));

    // points outside the weighted singular locus are rejected
    CHECK_THROWS_AS(w_ord(f1, 2, pt(r, {1, 1})), ArgumentError);

    // residual (1): zero everywhere on the locus
    FactoredTransform fm = factor_exceptional({P(r, "x^2")}, E);
    CHECK(w_ord(fm, 2, o) == BigRat(0));
}

TEST_CASE("divisor exponents and the order identity") {
    RingPtr r = ring_xy();
    DivisorSet E = one_divisor(r, "x", 0);
    IdealGens J = {P(r, "x^2*(y^2 - x)")};
    FactoredTransform ft = factor_exceptional(J, E);
    Point o = pt(r, {0, 0});

    auto exps = exc_exponents_at(ft, 2, o);
    REQUIRE(exps.size() == 1);
    CHECK(exps[0] == BigRat(1));                  // 2/2 through the divisor
    CHECK(exc_exponents_at(ft, 2, pt(r, {1, 0}))[0] == BigRat(0));

    // w-ord = ord - sum of exponents at the probe
    BigRat total_ord(BigInt(*ideal_order_at_point(J, o)), BigInt(2));
    BigRat s = 0;
    for (const auto& e : exps) s += e;
    CHECK(w_ord(ft, 2, o) == total_ord - s);
}

TEST_CASE("the t pair counts old divisors through the point") {
    RingPtr r = ring_xy();
    DivisorSet E = one_divisor(r, "x", 0);
    FactoredTransform ft = factor_exceptional({P(r, "x^2*(y^2 - x)")}, E);
    Point o = pt(r, {0, 0});

    TState fresh;  // nothing older than the current value
    TValue t0 = t_value(fresh, ft, 2, o);
    CHECK(t0.w == BigRat(1, 2));
    CHECK(t0.n == 0);

    TState older;
    older.s0 = 0;
    older.e_minus = E;
    TValue t1 = t_value(older, ft, 2, o);
    CHECK(t1.n == 1);
    CHECK(t0 < t1);

    // undefined once the residual is trivial
    FactoredTransform fm = factor_exceptional({P(r, "x^2")}, E);
    CHECK_THROWS_AS(t_value(fresh, fm, 2, o), StateError);
}

TEST_CASE("lexicographic comparison of t-values") {
    TValue a{BigRat(1, 2), 0, false};
    TValue b{BigRat(1, 2), 1, false};
    TValue c{BigRat(1), 0, false};
    TValue inf{0, 0, true};
    CHECK(a < b);
    CHECK(b < c);
    CHECK(c < inf);
    CHECK(!(inf < inf));
    CHECK(inf == inf);
    CHECK(a.str() == "(1/2, 0)");
    CHECK(inf.str() == "inf");
}

TEST_CASE("birth index of the terminal value") {
    auto tv = [](int num, int den, std::uint64_t n) {
        return TValue{BigRat(num, den), n, false};
    };
    CHECK(birth_index({tv(1, 1, 1), tv(1, 1, 1)}) == 0);
    CHECK(birth_index({tv(1, 1, 1), tv(1, 1, 0), tv(1, 1, 0)}) == 1);
    // when the terminal w-ord is 0, the index is its first occurrence
    CHECK(birth_index({tv(1, 1, 0), tv(1, 2, 0), tv(0, 1, 0)}) == 2);
    CHECK(birth_index({tv(0, 1, 0), tv(0, 1, 1)}) == 0);
    CHECK_THROWS_AS(birth_index({}), ArgumentError);
}

TEST_CASE("couple attached to the max w-ord value") {
    RingPtr r = ring_xy();
    // at the start the residual is the ideal itself and d = b
    Couple c0 = simple_from_word({P(r, "y^2 - x^3")}, {P(r, "y^2 - x^3")}, 2, 2);
    CHECK(c0.b == 2);
    REQUIRE(c0.J.size() == 1);
    CHECK(c0.J[0] == P(r, "y^2 - x^3"));

    CHECK_THROWS_AS(
        simple_from_word({Poly::constant(r, 1)}, {P(r, "x^2")}, 2, 0), StateError);

    // fractional value d < b: (J^d + residual^b, b*d)
    IdealGens Jbar = {P(r, "y^2 - x")};
    IdealGens J = {P(r, "x^2*(y^2 - x)")};
    Couple c1 = simple_from_word(Jbar, J, 2, 1);
    CHECK(c1.b == 2);
    CHECK(ideal_member(P(r, "x^2*(y^2 - x)"), c1.J));
    CHECK(ideal_member(P(r, "(y^2 - x)^2"), c1.J));

    // its singular locus is exactly the max w-ord locus: F5 point scan
    RingPtr r5 = ring_xy(FieldSpec::prime_field(5));
    DivisorSet E5 = one_divisor(r5, "x", 0);
    IdealGens J5 = {P(r5, "x^2*(y^2 - x)")};
    FactoredTransform ft5 = factor_exceptional(J5, E5);
    BigRat maxw = 0;
    std::map<std::vector<std::int64_t>, BigRat> word_at;
    for (const auto& x : all_points(r5)) {
        auto o = ideal_order_at_point(J5, x);
        if (o && *o < 2) continue;
        BigRat w = w_ord(ft5, 2, x);
        word_at[{static_cast<std::int64_t>(numerator(x.coords[0])),
                 static_cast<std::int64_t>(numerator(x.coords[1]))}] = w;
        maxw = std::max(maxw, w);
    }
    Couple c5 = simple_from_word({P(r5, "y^2 - x")}, J5, 2, 1);
    std::set<std::vector<std::int64_t>> expect;
    for (const auto& [p, w] : word_at)
        if (w == maxw) expect.insert(p);
    CHECK(locus_points(sing_couple(c5), r5) == expect);
}

TEST_CASE("products of divisor power sums") {
    RingPtr r = ring_xy();
    DivisorSet Ex = one_divisor(r, "x", 0);
    IdealGens h1 = h_product(Ex, 1, 2);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0] == P(r, "x^2"));

    DivisorSet Exy = one_divisor(r, "x", 0);
    Exy.hypersurfaces.push_back({"E1", P(r, "y"), 1, 0});
    IdealGens h2 = h_product(Exy, 1, 1);  // (x)*(y)
    REQUIRE(h2.size() == 1);
    CHECK(h2[0] == P(r, "x*y"));

    IdealGens h3 = h_product(Exy, 2, 1);  // single 2-subset: (x, y)
    REQUIRE(h3.size() == 2);
    CHECK(ideal_member(P(r, "x"), h3));
    CHECK(ideal_member(P(r, "y"), h3));

    CHECK(h_product(Exy, 0, 3).empty());
    CHECK_THROWS_AS(h_product(Exy, 3, 1), ArgumentError);
}

TEST_CASE("couple attached to the max t value") {
    RingPtr r = ring_xy();
    Couple J_dd({P(r, "y^2 - x^3")}, 2);

    // no old divisors through the max point: nothing is added
    Couple c0 = simple_from_t(J_dd, {}, TValue{BigRat(1), 0, false}, 2);
    CHECK(c0.b == 2);
    CHECK(c0.J == J_dd.J);

    // d = 1 < b = 2 with one old divisor: weight 2, plus (x^2)
    DivisorSet E = one_divisor(r, "x", 0);
    IdealGens gens = {P(r, "x^2*(y^2 - x)"), P(r, "(y^2 - x)^2")};
    Couple J_frac(gens, 2);
    Couple c1 = simple_from_t(J_frac, E, TValue{BigRat(1, 2), 1, false}, 2);
    CHECK(c1.b == 2);
    CHECK(ideal_member(P(r, "x^2"), c1.J));

    // weight coherence between t and the attached couple is enforced
    CHECK_THROWS_AS(
        simple_from_t(Couple({P(r, "x")}, 1), E, TValue{BigRat(1, 2), 1, false}, 2),
        ArgumentError);
    CHECK_THROWS_AS(simple_from_t(J_dd, E, TValue{BigRat(0), 0, false}, 2),
                    StateError);

    // the singular locus is the max-t locus: F5 scan on the d < b example
    RingPtr r5 = ring_xy(FieldSpec::prime_field(5));
    DivisorSet E5 = one_divisor(r5, "x", 0);
    IdealGens J5 = {P(r5, "x^2*(y^2 - x)")};
    FactoredTransform ft5 = factor_exceptional(J5, E5);
    TState ts;
    ts.e_minus = E5;
    TValue maxt;
    std::map<std::vector<std::int64_t>, TValue> t_at;
    for (const auto& x : all_points(r5)) {
        auto o = ideal_order_at_point(J5, x);
        if (o && *o < 2) continue;
        TValue t = t_value(ts, ft5, 2, x);
        t_at[{static_cast<std::int64_t>(numerator(x.coords[0])),
              static_cast<std::int64_t>(numerator(x.coords[1]))}] = t;
        if (maxt < t) maxt = t;
    }
    Couple J5_dd = simple_from_word({P(r5, "y^2 - x")}, J5, 2, 1);
    Couple c5 = simple_from_t(J5_dd, E5, maxt, 2);
    std::set<std::vector<std::int64_t>> expect;
    for (const auto& [p, t] : t_at)
        if (t == maxt) expect.insert(p);
    CHECK(locus_points(sing_couple(c5), r5) == expect);
}

namespace {

BasicObject monomial_object(const RingPtr& r, const std::vector<std::uint32_t>& exps,
                            std::uint64_t b) {
    DivisorSet E;
    Poly gen = Poly::constant(r, 1);
    for (std::size_t i = 0; i < exps.size(); ++i) {
        E.hypersurfaces.push_back({std::string("E") + std::to_string(i),
                                   Poly::variable(r, i), static_cast<int>(i), 0});
        gen = gen * Poly::variable(r, i).pow(exps[i]);
    }
    return make_basic(Chart{r, "root"}, Couple({gen}, b), E);
}

}  // namespace

TEST_CASE("combinatorial resolution of monomial transforms") {
    RingPtr r = ring_xy();

    // (x^2), weight 2: one codimension-one blow-up makes it trivial
    MonomialResolution m1 = monomial_resolve(monomial_object(r, {2}, 2));
    REQUIRE(m1.steps.size() == 1);
    CHECK(m1.steps[0].center_vars == std::vector<std::string>{"x"});
    for (const auto& f : m1.final_objects)
        CHECK(basic_sing(f).is_empty_over_closure());

    // (x*y), weight 2: the corner is the only admissible center
    MonomialResolution m2 = monomial_resolve(monomial_object(r, {1, 1}, 2));
    REQUIRE(m2.steps.size() == 1);
    CHECK(m2.steps[0].center_vars == std::vector<std::string>{"x", "y"});
    CHECK(m2.final_objects.size() == 2);
    for (const auto& f : m2.final_objects)
        CHECK(basic_sing(f).is_empty_over_closure());

    // (x), weight 2: nothing to do
    MonomialResolution m3 = monomial_resolve(monomial_object(r, {1}, 2));
    CHECK(m3.steps.empty());
    REQUIRE(m3.final_objects.size() == 1);
    CHECK(basic_sing(m3.final_objects[0]).is_empty_over_closure());

    // non-trivial residual is a precondition violation
    BasicObject bad = make_basic(Chart{r, "root"},
                                 Couple({P(r, "y^2 - x^3")}, 2), {});
    CHECK_THROWS_AS(monomial_resolve(bad), StateError);
}

TEST_CASE("the combinatorial resolver terminates within the exponent sum") {
    std::mt19937 rng(41);
    RingPtr r = ring_xyz();
    for (int i = 0; i < 20; ++i) {
        std::vector<std::uint32_t> exps = {
            static_cast<std::uint32_t>(1 + rng() % 5),
            static_cast<std::uint32_t>(1 + rng() % 5),
            static_cast<std::uint32_t>(1 + rng() % 5)};
        std::uint64_t b = 2 + rng() % 3;
        std::size_t budget = exps[0] + exps[1] + exps[2];
        BasicObject obj = monomial_object(r, exps, b);
        MonomialResolution res = monomial_resolve(obj, budget);
        for (const auto& f : res.final_objects) {
            // chart labels grow one ":<var>" segment per blow-up, so the
            // colon count is the sequence length along that lineage
            std::size_t depth = static_cast<std::size_t>(
                std::count(f.chart.label.begin(), f.chart.label.end(), ':'));
            CHECK(depth <= budget);
            CHECK(basic_sing(f).is_empty_over_closure());
        }
        // center choice is deterministic: a second run replays exactly
        MonomialResolution again = monomial_resolve(obj, budget);
        REQUIRE(again.steps.size() == res.steps.size());
        for (std::size_t k = 0; k < res.steps.size(); ++k) {
            CHECK(again.steps[k].chart == res.steps[k].chart);
            CHECK(again.steps[k].center_vars == res.steps[k].center_vars);
        }
    }
}
