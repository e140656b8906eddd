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

#include <benchmark/benchmark.h>

#include "resolab/driver.hpp"
#include "resolab/parse.hpp"

using namespace resolab;

namespace {

void bm_groebner(benchmark::State& state) {
    RingPtr r = make_ring(FieldSpec::rationals(), {"x", "y", "z"});
    IdealGens J = {parse_poly(r, "x^2 + y^2 + z^2 - 1"),
                   parse_poly(r, "x*y - z"), parse_poly(r, "y*z - x")};
    for (auto _ : state) {
        IdealGens G = groebner_basis(J);
        benchmark::DoNotOptimize(G);
    }
}
BENCHMARK(bm_groebner);

void bm_diff_saturate(benchmark::State& state) {
    RingPtr r = make_ring(FieldSpec::rationals(), {"x", "y"});
    ReesAlgebra G(r, {{parse_poly(r, "y^2 - x^3"), 2},
                      {parse_poly(r, "x*y^3 - x^4"), 3}});
    for (auto _ : state) {
        ReesAlgebra S = diff_saturate(G);
        benchmark::DoNotOptimize(S);
    }
}
BENCHMARK(bm_diff_saturate);

void bm_resolve_cusp(benchmark::State& state) {
    RingPtr r = make_ring(FieldSpec::rationals(), {"x", "y"});
    BasicObject b = make_basic(Chart{r, "root"},
                               Couple({parse_poly(r, "y^2 - x^3")}, 2), {});
    EliminationProvider p = builtin_provider("cusp");
    for (auto _ : state) {
        ResolutionTrace t = resolve(b, p, 10);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(bm_resolve_cusp);

}  // namespace

BENCHMARK_MAIN();
