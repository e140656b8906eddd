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

#include "resolab/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "resolab/parse.hpp"

namespace resolab {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

FieldSpec parse_field(const json& j) {
    if (j.is_number_integer()) {
        std::int64_t p = j.get<std::int64_t>();
        return p == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p);
    }
    std::string s = j.get<std::string>();
    if (s == "Q" || s == "QQ" || s == "rationals") return FieldSpec::rationals();
    if (!s.empty() && (s[0] == 'F' || s[0] == 'f'))
        return FieldSpec::prime_field(std::stoll(s.substr(1)));
    throw ArgumentError("unrecognized field spec: " + s);
}

ProviderEntry parse_provider_entry(const json& j) {
    ProviderEntry e;
    for (const auto& v : j.at("fiber")) e.fiber_vars.push_back(v.get<std::string>());
    for (const auto& g : j.at("gens"))
        e.gens.emplace_back(g.at(0).get<std::string>(), g.at(1).get<std::uint64_t>());
    return e;
}

EliminationProvider parse_provider_json(const json& j) {
    if (j.is_string()) return builtin_provider(j.get<std::string>());
    EliminationProvider p;
    for (const auto& entry : j)
        p.add(entry.at("chart").get<std::string>(),
              entry.at("step").get<std::size_t>(), parse_provider_entry(entry));
    return p;
}

}  // namespace

Scenario parse_scenario_text(const std::string& json_text) {
    json j = json::parse(json_text);
    FieldSpec field = parse_field(j.at("field"));
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    RingPtr ring = make_ring(field, vars);

    const json& pj = j.at("payload");
    std::variant<Couple, ReesAlgebra> payload = [&] {
        if (pj.contains("couple")) {
            const json& cj = pj.at("couple");
            IdealGens gens;
            for (const auto& g : cj.at("gens"))
                gens.push_back(parse_poly(ring, g.get<std::string>()));
            return std::variant<Couple, ReesAlgebra>(
                Couple(std::move(gens), cj.at("b").get<std::uint64_t>()));
        }
        if (pj.contains("rees")) {
            std::vector<WeightedGen> gens;
            for (const auto& g : pj.at("rees").at("gens"))
                gens.push_back({parse_poly(ring, g.at(0).get<std::string>()),
                                g.at(1).get<std::uint64_t>()});
            return std::variant<Couple, ReesAlgebra>(
                ReesAlgebra(ring, std::move(gens)));
        }
        throw ArgumentError("payload must be a couple or a rees algebra");
    }();

    DivisorSet E;
    if (j.contains("E")) {
        for (const auto& h : j.at("E")) {
            Hypersurface hs;
            hs.name = h.at("name").get<std::string>();
            int vi = ring->var_index(h.at("var").get<std::string>());
            if (vi < 0) throw ArgumentError("unknown divisor variable");
            hs.defining = Poly::variable(ring, static_cast<std::size_t>(vi));
            hs.origin_step = -1;
            E.hypersurfaces.push_back(std::move(hs));
        }
    }

    Scenario s{make_basic(Chart{ring, "root"}, std::move(payload), std::move(E)),
               std::nullopt};
    if (j.contains("provider")) s.provider = parse_provider_json(j.at("provider"));
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open scenario file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario_text(ss.str());
}

EliminationProvider parse_provider_text(const std::string& json_text) {
    return parse_provider_json(json::parse(json_text));
}

EliminationProvider load_provider(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open provider file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_provider_text(ss.str());
}

namespace {

const char* terminal_name(Terminal t) {
    switch (t) {
        case Terminal::Resolved: return "resolved";
        case Terminal::EMonomial: return "e_monomial";
        case Terminal::Budget: return "budget";
        case Terminal::ProviderGap: return "provider_gap";
    }
    return "unknown";
}

std::string tvalue_str(const TValue& t) { return t.str(); }

}  // namespace

std::string trace_to_json(const ResolutionTrace& trace) {
    ordered out;
    out["terminal"] = terminal_name(trace.terminal);
    out["blowups"] = trace.blowups;
    ordered steps = ordered::array();
    for (const auto& s : trace.steps) {
        ordered rec;
        rec["step"] = s.step;
        rec["chart"] = s.chart;
        rec["center"] = s.center_vars;
        rec["max_word"] = s.max_word ? s.max_word->str() : "empty";
        rec["max_t"] = s.max_t ? tvalue_str(*s.max_t) : "none";
        rec["gamma"] = s.gamma.str();
        rec["E_minus"] = s.e_minus;
        ordered ex = ordered::object();
        for (const auto& [label, exps] : s.exponents) {
            ordered arr = ordered::array();
            for (const auto& [step, c] : exps) {
                ordered pair = ordered::array();
                pair.push_back(step);
                pair.push_back(c);
                arr.push_back(pair);
            }
            ex[label] = arr;
        }
        rec["exponents"] = ex;
        steps.push_back(rec);
    }
    out["steps"] = steps;
    return out.dump(2);
}

std::string ridge_to_json(const RidgeResult& r) {
    ordered out;
    out["tau"] = r.tau;
    ordered lf = ordered::array();
    for (const auto& f : r.linear_forms) lf.push_back(f.str());
    out["linear_forms"] = lf;
    ordered fl = ordered::array();
    for (const auto& f : r.flagged) fl.push_back(f.str());
    out["flagged_generators"] = fl;
    ordered cl = ordered::array();
    for (const auto& g : r.closure.gens) {
        ordered rec;
        rec["degree"] = g.degree;
        rec["form"] = g.form.str();
        cl.push_back(rec);
    }
    out["closure"] = cl;
    return out.dump(2);
}

std::string fuzz_to_json(const FuzzResult& r) {
    ordered out;
    out["explored"] = r.explored;
    out["budget_exhausted"] = r.budget_exhausted;
    if (r.witness) {
        ordered w = ordered::array();
        for (const auto& s : *r.witness) {
            ordered rec;
            switch (s.kind) {
                case StepRecord::Blowup:
                    rec["kind"] = "blowup";
                    rec["center"] = s.center_vars;
                    break;
                case StepRecord::Restrict:
                    rec["kind"] = "restrict";
                    rec["open"] = s.open_poly;
                    break;
                case StepRecord::TimesAffine:
                    rec["kind"] = "times_affine";
                    rec["m"] = s.affine_count;
                    break;
            }
            w.push_back(rec);
        }
        out["verdict"] = "witness";
        out["witness"] = w;
    } else {
        out["verdict"] = "no_violation";
    }
    return out.dump(2);
}

std::string algebra_to_text(const ReesAlgebra& G) {
    std::ostringstream os;
    for (const auto& [f, n] : G.gens())
        os << "(" << f.str() << ") W^" << n << "\n";
    return os.str();
}

}  // namespace resolab
