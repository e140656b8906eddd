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

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resolab/scenario.hpp"

namespace {

using namespace resolab;

EliminationProvider pick_provider(const Scenario& s, const std::string& provider_file) {
    if (!provider_file.empty()) return load_provider(provider_file);
    if (s.provider) return *s.provider;
    return EliminationProvider{};
}

Point parse_point(const RingPtr& ring, const std::string& text) {
    Point p;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
        if (!tok.empty()) p.coords.push_back(ring->field.reduce(BigRat(BigInt(tok))));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (p.coords.size() != ring->nvars())
        throw ArgumentError("point has wrong number of coordinates");
    return p;
}

ReesAlgebra scenario_algebra(const Scenario& s) {
    return s.object.is_couple() ? rees_from_couple(s.object.couple())
                                : s.object.algebra();
}

int run_resolve(const std::string& file, const std::string& provider_file,
                std::size_t max_steps, bool steps_only) {
    Scenario s = load_scenario(file);
    ResolutionTrace trace =
        resolve(s.object, pick_provider(s, provider_file), max_steps);
    std::string out = trace_to_json(trace);
    if (steps_only) {
        auto j = nlohmann::ordered_json::parse(out);
        std::cout << j.at("steps").dump(2) << "\n";
    } else {
        std::cout << out << "\n";
    }
    switch (trace.terminal) {
        case Terminal::Resolved:
        case Terminal::EMonomial: return 0;
        case Terminal::Budget: return 2;
        case Terminal::ProviderGap: return 3;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chart-level workbench for weighted singular loci"};
    app.require_subcommand(1);

    std::string scenario_file, provider_file, point_text = "0,0";
    std::size_t max_steps = 32, depth = 2, budget = 500;

    auto* cresolve = app.add_subcommand("resolve", "run the full stratification loop");
    cresolve->add_option("scenario", scenario_file)->required();
    cresolve->add_option("--provider", provider_file);
    cresolve->add_option("--max-steps", max_steps);

    auto* ctrace = app.add_subcommand("trace", "print the per-step invariant records");
    ctrace->add_option("scenario", scenario_file)->required();
    ctrace->add_option("--provider", provider_file);
    ctrace->add_option("--max-steps", max_steps);

    auto* cdiffsat = app.add_subcommand("diffsat", "print the Diff-saturated generators");
    cdiffsat->add_option("scenario", scenario_file)->required();

    auto* ctau = app.add_subcommand("tau", "ridge data and tau at a point");
    ctau->add_option("scenario", scenario_file)->required();
    ctau->add_option("--point", point_text);

    auto* cfuzz = app.add_subcommand("equiv-fuzz",
                                     "fuzz the object against its canonical companion");
    cfuzz->add_option("scenario", scenario_file)->required();
    cfuzz->add_option("--depth", depth);
    cfuzz->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace resolab;
        if (cresolve->parsed())
            return run_resolve(scenario_file, provider_file, max_steps, false);
        if (ctrace->parsed())
            return run_resolve(scenario_file, provider_file, max_steps, true);
        if (cdiffsat->parsed()) {
            Scenario s = load_scenario(scenario_file);
            std::cout << algebra_to_text(diff_saturate(scenario_algebra(s)));
            return 0;
        }
        if (ctau->parsed()) {
            Scenario s = load_scenario(scenario_file);
            Point x = parse_point(s.object.chart.ring, point_text);
            std::cout << ridge_to_json(ridge_and_tau(scenario_algebra(s), x)) << "\n";
            return 0;
        }
        if (cfuzz->parsed()) {
            Scenario s = load_scenario(scenario_file);
            // companion pair with the same expected singular behaviour:
            // couples against their squared form, algebras against their
            // Diff-saturation
            BasicObject b1 = s.object;
            BasicObject b2 = [&] {
                if (b1.is_couple()) {
                    const Couple& c = b1.couple();
                    IdealGens sq;
                    for (const auto& f : c.J)
                        for (const auto& g : c.J) sq.push_back(f * g);
                    return make_basic(b1.chart, Couple(sq, 2 * c.b), b1.E);
                }
                return make_basic(b1.chart, diff_saturate(b1.algebra()), b1.E);
            }();
            FuzzResult r = weak_equiv_fuzz(b1, b2, depth, budget);
            std::cout << fuzz_to_json(r) << "\n";
            return r.witness ? 1 : 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
