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

#include "resolab/rees.hpp"
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

}  // namespace

TEST_CASE("couple validation") {
    RingPtr r = ring_xy();
    CHECK_THROWS_AS(Couple({}, 2), ArgumentError);
    CHECK_THROWS_AS(Couple({P(r, "x")}, 0), ArgumentError);
    Couple c({P(r, "x")}, 1);
    CHECK(c.b == 1);
}

TEST_CASE("singular locus of a couple") {
    RingPtr r = ring_xy();
    Locus l1 = sing_couple(Couple({P(r, "x")}, 1));
    CHECK(l1.contains_point(pt(r, {0, 3})));
    CHECK(!l1.contains_point(pt(r, {1, 0})));

    // weight 2 on a smooth hypersurface: empty (the derivative is a unit)
    CHECK(sing_couple(Couple({P(r, "x")}, 2)).is_empty_over_closure());

    // cusp at weight 2: just the origin
    Locus l3 = sing_couple(Couple({P(r, "y^2 - x^3")}, 2));
    CHECK(l3.contains_point(pt(r, {0, 0})));
    CHECK(!l3.contains_point(pt(r, {1, 1})));
    CHECK(same_locus(l3, Locus{{P(r, "x"), P(r, "y")}}));

    // cross-check over F7: the locus points are exactly the points of
    // order >= 2
    RingPtr r7 = ring_xy(FieldSpec::prime_field(7));
    Poly f7 = P(r7, "y^2 - x^3");
    Locus l7 = sing_couple(Couple({f7}, 2));
    std::set<std::vector<std::int64_t>> expect;
    for (const auto& x : all_points(r7)) {
        auto o = order_at_point(f7, x);
        if (!o || *o >= 2)
            expect.insert({static_cast<std::int64_t>(numerator(x.coords[0])),
                           static_cast<std::int64_t>(numerator(x.coords[1]))});
    }
    CHECK(locus_points(l7, r7) == expect);
}

TEST_CASE("singular locus of an algebra intersects the generator conditions") {
    RingPtr r = ring_xy();
    CHECK(same_locus(sing_rees(alg(r, {{"x", 1}})), Locus{{P(r, "x")}}));
    CHECK(same_locus(sing_rees(alg(r, {{"x", 1}, {"y^2", 2}})),
                     Locus{{P(r, "x"), P(r, "y")}}));
    CHECK(same_locus(sing_rees(alg(r, {{"y^2 - x^3", 2}})),
                     Locus{{P(r, "x"), P(r, "y")}}));

    RingPtr r5 = ring_xy(FieldSpec::prime_field(5));
    ReesAlgebra G5 = alg(r5, {{"x", 1}, {"y", 2}});
    CHECK(locus_points(sing_rees(G5), r5) == sing_points_brute(G5, r5));
}

TEST_CASE("smallest containing algebra via generator union") {
    RingPtr r = ring_xy();
    ReesAlgebra G = alg(r, {{"x", 1}});
    CHECK(odot(G, G).gens().size() == 1);  // dedup

    ReesAlgebra GH = odot(alg(r, {{"x", 1}}), alg(r, {{"y", 1}}));
    CHECK(GH.gens().size() == 2);
    CHECK(same_locus(sing_rees(GH), Locus{{P(r, "x"), P(r, "y")}}));

    // intersection of loci, brute-forced over F5
    RingPtr r5 = ring_xy(FieldSpec::prime_field(5));
    ReesAlgebra A = alg(r5, {{"y^2 - x^3", 2}});
    ReesAlgebra B = alg(r5, {{"x", 1}});
    auto lhs = locus_points(sing_rees(odot(A, B)), r5);
    std::set<std::vector<std::int64_t>> rhs;
    auto la = locus_points(sing_rees(A), r5);
    auto lb = locus_points(sing_rees(B), r5);
    for (const auto& p : la)
        if (lb.count(p)) rhs.insert(p);
    CHECK(lhs == rhs);
}

TEST_CASE("algebra of a couple: generators in weight b, same singular locus") {
    RingPtr r = ring_xy();
    ReesAlgebra G1 = rees_from_couple(Couple({P(r, "x")}, 2));
    REQUIRE(G1.gens().size() == 1);
    CHECK(G1.gens()[0].f == P(r, "x"));
    CHECK(G1.gens()[0].n == 2);

    ReesAlgebra G2 = rees_from_couple(Couple({P(r, "x"), P(r, "y")}, 2));
    REQUIRE(G2.gens().size() == 2);

    Couple cusp({P(r, "y^2 - x^3")}, 2);
    ReesAlgebra G3 = rees_from_couple(cusp);
    CHECK(same_locus(sing_rees(G3), sing_couple(cusp)));
}

TEST_CASE("single-weight presentation preserves the singular locus") {
    RingPtr r = ring_xy();
    Couple c1 = normalize_to_couple(alg(r, {{"x", 1}}));
    CHECK(c1.b == 1);
    REQUIRE(c1.J.size() == 1);
    CHECK(c1.J[0] == P(r, "x"));

    Couple c2 = normalize_to_couple(alg(r, {{"x", 1}, {"y", 2}}));
    CHECK(c2.b == 2);
    CHECK(ideal_member(P(r, "x^2"), c2.J));
    CHECK(ideal_member(P(r, "y"), c2.J));
    CHECK(!ideal_member(P(r, "x"), c2.J));

    Couple c3 = normalize_to_couple(alg(r, {{"y^2 - x^3", 2}}));
    CHECK(c3.b == 2);
    REQUIRE(c3.J.size() == 1);
    CHECK(ideal_member(P(r, "y^2 - x^3"), c3.J));
    CHECK(ideal_member(c3.J[0], {P(r, "y^2 - x^3")}));

    // locus equality after a round trip, over F5 by point scan
    RingPtr r5 = ring_xy(FieldSpec::prime_field(5));
    using Spec = std::vector<std::pair<std::string, std::uint64_t>>;
    std::vector<Spec> specs = {Spec{{"x", 1}, {"y", 2}},
                               Spec{{"y^2 - x^3", 2}, {"x*y", 3}},
                               Spec{{"x^2", 2}, {"y^3", 2}}};
    for (const auto& spec : specs) {
        ReesAlgebra G = alg(r5, spec);
        ReesAlgebra R = rees_from_couple(normalize_to_couple(G));
        CHECK(same_locus(sing_rees(G), sing_rees(R)));
        CHECK(locus_points(sing_rees(G), r5) == locus_points(sing_rees(R), r5));
    }
}

TEST_CASE("weighted order function") {
    RingPtr r = ring_xy();
    Point o = pt(r, {0, 0});
    CHECK(ord_rees(alg(r, {{"y^2 - x^3", 2}}), o) == BigRat(1));
    CHECK(ord_rees(alg(r, {{"x^3", 2}}), o) == BigRat(3, 2));
    CHECK(ord_rees(alg(r, {{"x^3", 2}, {"y^5", 3}}), o) == BigRat(3, 2));

    // invariant under adjoining the algebra to itself and under
    // renormalization
    ReesAlgebra G = alg(r, {{"x^3", 2}, {"y^5", 3}});
    CHECK(ord_rees(odot(G, G), o) == ord_rees(G, o));
    CHECK(ord_rees(rees_from_couple(normalize_to_couple(G)), o) == ord_rees(G, o));
}

TEST_CASE("probe-based simplicity") {
    RingPtr r = ring_xy();
    Point o = pt(r, {0, 0});
    CHECK(is_simple(alg(r, {{"y^2 - x^3", 2}}), {o}));
    CHECK(!is_simple(alg(r, {{"x^3", 2}}), {o}));
    CHECK(is_simple(alg(r, {{"x", 1}}), {pt(r, {0, 5})}));
    CHECK_THROWS_AS(is_simple(alg(r, {{"x", 1}}), {pt(r, {1, 0})}), ArgumentError);
}

TEST_CASE("a couple and its square cut the same singular locus") {
    RingPtr r = ring_xy();
    Couple c({P(r, "y^2 - x^3")}, 2);
    Couple c2({P(r, "(y^2 - x^3)^2")}, 4);
    CHECK(same_locus(sing_couple(c), sing_couple(c2)));
}
