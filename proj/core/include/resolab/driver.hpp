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

#ifndef RESOLAB_DRIVER_HPP
#define RESOLAB_DRIVER_HPP

#include <map>

#include "resolab/satellite.hpp"
#include "resolab/tau.hpp"

namespace resolab {

/// Raised when the stratification loop needs elimination data that the
/// provider table does not contain.
struct ProviderGapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One lexicographic entry of the stratifying invariant: a (rational,
/// integer) pair or the distinguished top element.
struct GammaEntry {
    bool infinite = true;
    BigRat w = 0;
    std::int64_t n = 0;

    std::string str() const;
};

struct GammaValue {
    std::vector<GammaEntry> entries;

    std::string str() const;
};

/// Elimination data for one descent: the fiber variables of the
/// coordinate projection, and the weighted generators (as polynomial
/// text in the remaining variables) of the lower-dimensional algebra.
/// Elimination algebras are supplied as data, with their admissibility
/// conditions checked, rather than computed.
struct ProviderEntry {
    std::vector<std::string> fiber_vars;
    std::vector<std::pair<std::string, std::uint64_t>> gens;
};

class EliminationProvider {
  public:
    void add(const std::string& chart_label, std::size_t step, ProviderEntry e);
    const ProviderEntry* find(const std::string& chart_label, std::size_t step) const;

  private:
    std::map<std::pair<std::string, std::size_t>, ProviderEntry> table_;
};

/// Tables shipped for the worked examples, keyed by name:
/// "cusp", "umbrella", "cusp-p" (the positive-characteristic variant).
EliminationProvider builtin_provider(const std::string& name);

/// Results of the admissibility checks on one provider entry at a
/// singular probe point.
struct EliminationDiagnostics {
    bool transversal_ok = false;
    bool relative_diff_ok = false;
    bool pullback_ok = false;
    bool sing_image_ok = false;
    std::string detail;

    bool ok() const {
        return transversal_ok && relative_diff_ok && pullback_ok && sing_image_ok;
    }
};

EliminationDiagnostics elimination_checks(const ReesAlgebra& G,
                                          const ProviderEntry& entry,
                                          const Point& probe);

enum class Terminal { Resolved, EMonomial, Budget, ProviderGap };

struct TraceStep {
    std::size_t step = 0;
    std::string chart;                      // chart acted on ("" for the final record)
    std::vector<std::string> center_vars;   // chosen center, if any
    std::optional<BigRat> max_word;         // global max w-ord (empty: all resolved)
    std::optional<TValue> max_t;
    GammaValue gamma;
    std::vector<std::string> e_minus;       // divisor names
    // per-chart exceptional exponents, label -> (creating step, c_i)
    std::map<std::string, std::vector<std::pair<int, std::uint64_t>>> exponents;
};

struct ResolutionTrace {
    std::vector<TraceStep> steps;
    Terminal terminal = Terminal::Resolved;
    std::size_t blowups = 0;
};

/// The center selection of one stratification step: descend through
/// attached simple algebras (pulling in provider data as needed) until
/// the singular locus of the deepest algebra is a coordinate subspace
/// of pure codimension equal to its level.
struct GammaStep {
    Center center;  // empty vars: no center (e-monomial state)
    GammaValue gamma;
    int e_monomial_level = -1;
};

GammaStep gamma_step(const BasicObject& b, const EliminationProvider& provider,
                     std::size_t step, const DivisorSet& e_minus);

/// Iterate stratification steps and blow-ups over all charts until
/// every chart has empty singular locus, the state is monomial (then
/// the combinatorial resolver finishes), or the budget runs out.
ResolutionTrace resolve(const BasicObject& b, const EliminationProvider& provider,
                        std::size_t max_steps);

}  // namespace resolab

#endif
