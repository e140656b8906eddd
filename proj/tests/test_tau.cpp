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

#include "resolab/tau.hpp"
#include "test_util.hpp"

using namespace resolab;
using namespace resolab::testutil;

namespace {

ReesAlgebra alg(const RingPtr& r,
                std::vector<std::pair<std::string, std::uint64_t>> gens) {
    std::vector<WeightedGen> ws;
    for (auto& [t, n] : gens) ws.push_back({P(r, t), n});
    return ReesAlgebra(r, std::move(ws));
}

bool has_form(const InitialIdeal& I, const Poly& f, std::uint64_t d) {
    for (const auto& g : I.gens)
        if (g.degree == d && g.form == f) return true;
    return false;
}

}  // namespace

TEST_CASE("initial forms at a singular point") {
    RingPtr r = ring_xy();
    Point o = pt(r, {0, 0});

    InitialIdeal i1 = initial_ideal(alg(r, {{"y^2 - x^3", 2}}), o);
    REQUIRE(i1.gens.size() == 1);
    CHECK(i1.gens[0].degree == 2);
    CHECK(i1.gens[0].form == P(r, "y^2"));

    InitialIdeal i2 = initial_ideal(alg(r, {{"x", 1}}), o);
    REQUIRE(i2.gens.size() == 1);
    CHECK(i2.gens[0].form == P(r, "x"));

    // order strictly above the weight contributes nothing
    CHECK(initial_ideal(alg(r, {{"x^3", 2}}), o).gens.empty());

    // the point must lie in the singular locus
    CHECK_THROWS_AS(initial_ideal(alg(r, {{"y^2 - x^3", 2}}), pt(r, {1, 1})),
                    ArgumentError);

    // away from the origin the translation is applied first
    InitialIdeal i3 = initial_ideal(alg(r, {{"(y-1)^2 - x^3", 2}}), pt(r, {0, 1}));
    REQUIRE(i3.gens.size() == 1);
    CHECK(i3.gens[0].form == P(r, "y^2"));
}

TEST_CASE("graded closure under homogeneous derivative operators") {
    RingPtr r = ring_xy();

    InitialIdeal I{r, {{P(r, "y^2"), 2}}};
    InitialIdeal C = graded_diff_closure(I);
    CHECK(has_form(C, P(r, "y"), 1));

    RingPtr r2 = ring_xy(FieldSpec::prime_field(2));
    InitialIdeal C2 = graded_diff_closure(InitialIdeal{r2, {{P(r2, "y^2"), 2}}});
    CHECK(has_form(C2, P(r2, "y^2"), 2));
    for (const auto& g : C2.gens) CHECK(g.degree == 2);  // no degree-1 escape

    InitialIdeal Cxy = graded_diff_closure(InitialIdeal{r, {{P(r, "x*y"), 2}}});
    CHECK(has_form(Cxy, P(r, "x"), 1));
    CHECK(has_form(Cxy, P(r, "y"), 1));

    // idempotence; the input y^2 is absorbed by the derived generator y
    InitialIdeal CC = graded_diff_closure(C);
    CHECK(CC.gens.size() == C.gens.size());
    CHECK(!has_form(C, P(r, "y^2"), 2));
    CHECK(has_form(C, P(r, "y"), 1));

    // inhomogeneous generators are rejected
    CHECK_THROWS_AS(graded_diff_closure(InitialIdeal{r, {{P(r, "x + x^2"), 2}}}),
                    ArgumentError);
}

TEST_CASE("ridge and tau of the product of two hyperplanes") {
    RingPtr r = ring_xyz();
    RidgeResult res = ridge_and_tau(alg(r, {{"x*y", 2}}), pt(r, {0, 0, 0}));
    CHECK(res.tau == 2);
    CHECK(res.flagged.empty());
    REQUIRE(res.linear_forms.size() >= 2);
    // the translation subspace is exactly the z-axis
    for (const auto& f : res.linear_forms) {
        CHECK(f.evaluate(pt(r, {0, 0, 1})) == 0);
        CHECK(f.evaluate(pt(r, {0, 0, -3})) == 0);
    }
    bool cuts_x = false, cuts_y = false;
    for (const auto& f : res.linear_forms) {
        if (f.evaluate(pt(r, {1, 0, 0})) != 0) cuts_x = true;
        if (f.evaluate(pt(r, {0, 1, 0})) != 0) cuts_y = true;
    }
    CHECK(cuts_x);
    CHECK(cuts_y);
}

TEST_CASE("tau of the cusp is 1 in characteristic 0 and 2") {
    RingPtr r = ring_xy();
    RidgeResult res = ridge_and_tau(alg(r, {{"y^2 - x^3", 2}}), pt(r, {0, 0}));
    CHECK(res.tau == 1);
    REQUIRE(res.linear_forms.size() == 1);
    CHECK(res.linear_forms[0].evaluate(pt(r, {1, 0})) == 0);  // L = x-axis

    // in characteristic 2 the form y^2 is an additive power: same tau
    RingPtr r2 = ring_xy(FieldSpec::prime_field(2));
    RidgeResult res2 = ridge_and_tau(alg(r2, {{"y^2 - x^3", 2}}), pt(r2, {0, 0}));
    CHECK(res2.tau == 1);
    CHECK(res2.flagged.empty());
    REQUIRE(res2.linear_forms.size() == 1);
    CHECK(res2.linear_forms[0].evaluate(pt(r2, {1, 0})) == 0);
}

TEST_CASE("tau 0: every generator has order above its weight") {
    RingPtr r = ring_xy();
    RidgeResult res = ridge_and_tau(alg(r, {{"x^3", 2}}), pt(r, {0, 0}));
    CHECK(res.tau == 0);
    CHECK(res.linear_forms.empty());
}

TEST_CASE("the cone is invariant under ridge translations, by F5 scan") {
    RingPtr r5 = ring_xyz(FieldSpec::prime_field(5));
    RidgeResult res = ridge_and_tau(alg(r5, {{"x*y", 2}}), pt(r5, {0, 0, 0}));
    auto in_cone = [&](const Point& p) {
        for (const auto& g : res.closure.gens)
            if (g.form.evaluate(p) != 0) return false;
        return true;
    };
    auto in_ridge = [&](const Point& p) {
        for (const auto& f : res.linear_forms)
            if (f.evaluate(p) != 0) return false;
        return true;
    };
    std::size_t cone_count = 0, ridge_count = 0;
    for (const auto& c : all_points(r5)) {
        if (!in_cone(c)) continue;
        ++cone_count;
        for (const auto& v : all_points(r5)) {
            if (!in_ridge(v)) continue;
            std::vector<std::int64_t> sum;
            for (std::size_t i = 0; i < 3; ++i)
                sum.push_back(static_cast<std::int64_t>(
                    (numerator(c.coords[i]) + numerator(v.coords[i])) % 5));
            CHECK(in_cone(pt(r5, {sum[0], sum[1], sum[2]})));
        }
    }
    for (const auto& v : all_points(r5))
        if (in_ridge(v)) ++ridge_count;
    // the closure of (XY) already contains X and Y, so its zero set is
    // the z-axis, which coincides with the ridge here
    CHECK(cone_count == 5);
    CHECK(ridge_count == 5);
}

TEST_CASE("codimension-type lower bound at probes") {
    RingPtr r = ring_xy();
    ReesAlgebra line = alg(r, {{"x", 1}});
    CHECK(codim_type_at_least(line, 1, {pt(r, {0, 0}), pt(r, {0, 3})}));

    ReesAlgebra cusp = alg(r, {{"y^2 - x^3", 2}});
    CHECK(codim_type_at_least(cusp, 1, {pt(r, {0, 0})}));
    CHECK(!codim_type_at_least(cusp, 2, {pt(r, {0, 0})}));

    CHECK_THROWS_AS(codim_type_at_least(line, 1, {pt(r, {1, 0})}), ArgumentError);
}

TEST_CASE("general position of the ridge with a coordinate projection") {
    RingPtr r = ring_xy();
    ReesAlgebra S = diff_saturate(alg(r, {{"y^2 - x^3", 2}}));
    Point o = pt(r, {0, 0});
    // ridge = x-axis: transversal to the y-fiber, not to the x-fiber
    CHECK(transversal(S, o, {1}));
    CHECK(!transversal(S, o, {0}));

    // tau = 0 admits no fiber directions at all
    CHECK(!transversal(alg(r, {{"x^3", 2}}), o, {1}));
}
