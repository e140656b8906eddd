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

#ifndef RESOLAB_CHART_HPP
#define RESOLAB_CHART_HPP

#include <variant>

#include "resolab/rees.hpp"

namespace resolab {

/// One affine chart of the blow-up tree.  Labels are deterministic
/// tree addresses: parent label + ":" + chart variable.
struct Chart {
    RingPtr ring;
    std::string label;
};

/// A tracked hypersurface of the boundary/exceptional set E.  By
/// construction its equation in a chart is either a coordinate variable
/// or a unit; a unit means the strict transform misses this chart.
struct Hypersurface {
    std::string name;
    Poly defining;
    int origin_step = -1;  // -1 = boundary; otherwise creating blow-up step
    // exponent of this divisor in the total-transform factorization of
    // a couple payload; 0 for boundary divisors
    std::uint64_t total_exponent = 0;

    bool is_exceptional() const { return origin_step >= 0; }
    bool absent() const { return defining.is_constant(); }
    /// variable index of the defining coordinate; -1 when absent
    int var_index() const;
};

/// Ordered normal-crossings divisor set; order of introduction is
/// preserved.
struct DivisorSet {
    std::vector<Hypersurface> hypersurfaces;
};

/// A smooth coordinate center V(x_{i1}, ..., x_{ie}).
struct Center {
    std::vector<std::size_t> vars;
};

/// One step of a local sequence.
struct StepRecord {
    enum Kind { Blowup, Restrict, TimesAffine } kind = Blowup;
    std::vector<std::string> center_vars;  // Blowup
    std::string open_poly;                 // Restrict (printable form)
    std::uint64_t affine_count = 0;        // TimesAffine
};

struct History {
    std::vector<StepRecord> steps;
};

/// A chart together with a weighted payload and the divisor record.
/// `total` tracks the pull-back of the original ideal (couple payloads
/// only), so the exceptional factorization can be re-checked exactly.
struct BasicObject {
    Chart chart;
    std::variant<Couple, ReesAlgebra> payload;
    DivisorSet E;
    std::vector<Poly> opens;  // principal-open restrictions applied so far
    History history;
    IdealGens total;

    bool is_couple() const { return std::holds_alternative<Couple>(payload); }
    const Couple& couple() const { return std::get<Couple>(payload); }
    const ReesAlgebra& algebra() const { return std::get<ReesAlgebra>(payload); }
};

BasicObject make_basic(Chart chart, std::variant<Couple, ReesAlgebra> payload,
                       DivisorSet E);

/// Singular locus of the payload, saturated by the applied principal
/// opens (points where some open's equation vanishes are excluded).
Locus basic_sing(const BasicObject& b);

/// Variable indices of the exceptional divisors present in the chart,
/// paired with their creating step.
std::vector<std::pair<std::size_t, int>> exceptional_vars(const BasicObject& b);

/// Monoidal transformation at a coordinate center inside the singular
/// locus: one output object per center variable (its standard chart).
/// Payload pieces of weight n are divided exactly by the n-th power of
/// the exceptional equation (controlled transform); inexact division
/// signals a bad center and is an error.
std::vector<BasicObject> blowup(const BasicObject& b, const Center& Y);

/// The exponents c_i with J·O = prod I(H_i)^{c_i} · J_k for a couple
/// payload, as (creating step, c_i) per present exceptional divisor.
/// The factorization is re-multiplied and checked before returning.
std::vector<std::pair<int, std::uint64_t>> total_transform_exponents(
    const BasicObject& b);

/// Pull-back to the principal open D(g).
BasicObject restrict_open(const BasicObject& b, const Poly& g);

/// Pull-back along V x A^m -> V: m fresh variables are appended.
BasicObject times_affine(const BasicObject& b, std::uint64_t m);

}  // namespace resolab

#endif
