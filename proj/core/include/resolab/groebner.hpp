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

#ifndef RESOLAB_GROEBNER_HPP
#define RESOLAB_GROEBNER_HPP

#include "resolab/poly.hpp"

namespace resolab {

/// Monomial orders: degree-reverse-lexicographic (the default), and a
/// block order eliminating the last `elim` variables (used for
/// saturation via the auxiliary-variable trick).
struct MonomialOrder {
    enum Kind { Degrevlex, ElimLast } kind = Degrevlex;
    std::size_t elim = 0;

    bool less(const ExpVec& a, const ExpVec& b) const;

    static MonomialOrder degrevlex() { return {}; }
    static MonomialOrder elim_last(std::size_t k) { return {ElimLast, k}; }
};

/// Leading (largest) exponent vector of f; f must be nonzero.
const ExpVec& leading_exponent(const Poly& f, const MonomialOrder& ord);

/// Remainder of multivariate division of f by the (preferably Groebner)
/// list gs.
Poly normal_form(const Poly& f, const IdealGens& gs, const MonomialOrder& ord);

/// Reduced Groebner basis by Buchberger's algorithm.  Idempotent; the
/// unit ideal yields {1}; the zero ideal yields {}.
IdealGens groebner_basis(const IdealGens& J,
                         const MonomialOrder& ord = MonomialOrder::degrevlex());

/// An ideal with a cached reduced Groebner basis.  Construction is
/// cheap; the basis is computed on first use.
class Ideal {
  public:
    explicit Ideal(IdealGens gens, MonomialOrder ord = MonomialOrder::degrevlex());

    const IdealGens& gens() const { return gens_; }
    const IdealGens& basis() const;

    bool contains(const Poly& f) const;
    bool is_trivial() const;
    /// Rabinowitsch trick: f in radical(I) iff 1 in I + (1 - z f).
    bool radical_contains(const Poly& f) const;

  private:
    IdealGens gens_;
    MonomialOrder ord_;
    mutable IdealGens basis_;
    mutable bool have_basis_ = false;
};

bool ideal_member(const Poly& f, const IdealGens& J);
bool radical_member(const Poly& f, const IdealGens& J);
bool ideal_is_trivial(const IdealGens& J);

/// Ideal saturation I : g^infinity via elimination.
IdealGens saturate(const IdealGens& I, const Poly& g);
IdealGens saturate(const IdealGens& I, const IdealGens& gs);

}  // namespace resolab

#endif
