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

#include "resolab/groebner.hpp"
#include "test_util.hpp"

using namespace resolab;
using namespace resolab::testutil;

TEST_CASE("reduced bases of simple ideals") {
    RingPtr r = ring_xy();
    IdealGens g1 = groebner_basis({P(r, "x"), P(r, "y")});
    REQUIRE(g1.size() == 2);
    CHECK(ideal_member(P(r, "x"), g1));
    CHECK(ideal_member(P(r, "y"), g1));

    // x^2-1 and x-1 generate (x-1): check by exact division oracle
    IdealGens g2 = groebner_basis({P(r, "x^2 - 1"), P(r, "x - 1")});
    REQUIRE(g2.size() == 1);
    CHECK(g2[0] == P(r, "x - 1"));
    CHECK(P(r, "x^2 - 1") == P(r, "x + 1") * g2[0]);

    IdealGens g3 = groebner_basis({P(r, "1 + x"), P(r, "x")});
    REQUIRE(g3.size() == 1);
    CHECK(g3[0].is_unit());

    CHECK(groebner_basis({}).empty());
}

TEST_CASE("groebner_basis is idempotent and generates the same ideal") {
    std::mt19937 rng(23);
    for (FieldSpec F : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        RingPtr r = ring_xy(F);
        for (int i = 0; i < 10; ++i) {
            IdealGens J = {random_poly(rng, r, 3, 3), random_poly(rng, r, 3, 3)};
            IdealGens G = groebner_basis(J);
            CHECK(groebner_basis(G) == G);
            for (const auto& f : J) CHECK(ideal_member(f, G));
            for (const auto& f : G) CHECK(ideal_member(f, J));
        }
    }
}

TEST_CASE("membership agrees with zero normal form") {
    std::mt19937 rng(29);
    RingPtr r = ring_xy();
    for (int i = 0; i < 15; ++i) {
        IdealGens J = {random_poly(rng, r, 3, 3), random_poly(rng, r, 2, 2)};
        IdealGens G = groebner_basis(J);
        Poly f = random_poly(rng, r, 3, 3);
        bool in = ideal_member(f, J);
        bool nf_zero = G.empty() ? f.is_zero()
                                 : normal_form(f, G, MonomialOrder::degrevlex())
                                       .is_zero();
        CHECK(in == nf_zero);
    }
}

TEST_CASE("radical membership via the auxiliary variable trick") {
    RingPtr r = ring_xy();
    CHECK(!ideal_member(P(r, "x"), {P(r, "x^2")}));
    CHECK(radical_member(P(r, "x"), {P(r, "x^2")}));
    CHECK(ideal_member(Poly::constant(r, 1), {P(r, "x"), P(r, "1 - x")}));
    CHECK(ideal_is_trivial({P(r, "x"), P(r, "1 - x")}));
    CHECK(!ideal_is_trivial({P(r, "x"), P(r, "y")}));

    // y is in the radical because y^2 = (y^2 - x^3) + x*x^2
    IdealGens J = {P(r, "y^2 - x^3"), P(r, "x")};
    CHECK(radical_member(P(r, "y"), J));
    CHECK(P(r, "y^2") == J[0] + P(r, "x^2") * J[1]);
}

TEST_CASE("saturation by a polynomial removes its divisor component") {
    RingPtr r = ring_xy();
    // (x*y) : x^inf = (y)
    IdealGens S = saturate({P(r, "x*y")}, P(r, "x"));
    CHECK(ideal_member(P(r, "y"), S));
    CHECK(!ideal_member(P(r, "x"), S));

    // (x, y) : x^inf = (1): every point of V(x,y) has x = 0
    CHECK(ideal_is_trivial(saturate({P(r, "x"), P(r, "y")}, P(r, "x"))));

    // saturating by a unit at the locus changes nothing
    IdealGens S2 = saturate({P(r, "x"), P(r, "y")}, P(r, "x - 1"));
    CHECK(ideal_member(P(r, "x"), S2));
    CHECK(ideal_member(P(r, "y"), S2));
    CHECK(!ideal_is_trivial(S2));
}

TEST_CASE("saturation by an ideal strips components inside its zero set") {
    RingPtr r = ring_xy();
    // (x^2*y, x*y^2) = x*y*(x, y); saturating by (x, y) leaves (x*y)
    IdealGens S = saturate({P(r, "x^2*y"), P(r, "x*y^2")},
                           IdealGens{P(r, "x"), P(r, "y")});
    CHECK(ideal_member(P(r, "x*y"), S));
    CHECK(!ideal_member(P(r, "x"), S));
    CHECK(!ideal_member(P(r, "y"), S));

    // nothing supported at the origin: saturation changes nothing
    IdealGens T = saturate({P(r, "x^2*y")}, IdealGens{P(r, "x"), P(r, "y")});
    CHECK(ideal_member(P(r, "x^2*y"), T));
    CHECK(!ideal_member(P(r, "x*y"), T));
}

TEST_CASE("elimination order separates the trailing block") {
    RingPtr r = make_ring(FieldSpec::rationals(), {"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::elim_last(1);
    // z > any x,y monomial under the elimination block order
    CHECK(ord.less(ExpVec{5, 5, 0}, ExpVec{0, 0, 1}));
    CHECK(ord.less(ExpVec{0, 1, 0}, ExpVec{1, 1, 0}));
    IdealGens G = groebner_basis({P(r, "z - x*y"), P(r, "z^2 - x")}, ord);
    // the z-free part must contain x^2*y^2 - x = (xy)^2 - x
    bool found = false;
    for (const auto& g : G)
        if (g.min_exponent(2) == 0 && g.degree() > 0 &&
            ideal_member(g, {P(r, "x^2*y^2 - x")}))
            found = true;
    CHECK(found);
}
