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

#ifndef RESOLAB_POLY_HPP
#define RESOLAB_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "resolab/field.hpp"

namespace resolab {

/// Exponent vector in N^nvars.
using ExpVec = std::vector<std::uint32_t>;

std::uint64_t total_degree(const ExpVec& e);

/// Polynomial ring data: coefficient field plus named variables.
struct Ring {
    FieldSpec field;
    std::vector<std::string> vars;

    std::size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;  // -1 if absent
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Rational point of the ambient chart: coordinates in the base field.
struct Point {
    std::vector<BigRat> coords;
};

/// Sparse exact multivariate polynomial.  Immutable in spirit: all
/// operations return new values.  No zero coefficients are stored and
/// terms are kept in a canonical (lex on exponent vectors) map, so
/// operator== is structural equality.
class Poly {
  public:
    Poly() = default;
    static Poly zero(RingPtr ring);
    static Poly constant(RingPtr ring, const BigRat& c);
    static Poly variable(RingPtr ring, std::size_t i);
    static Poly monomial(RingPtr ring, const ExpVec& e, const BigRat& c);

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_->nvars(); }
    const std::map<ExpVec, BigRat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_unit() const;  // nonzero constant
    std::uint64_t degree() const;  // total degree; 0 for the zero poly

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly scaled(const BigRat& c) const;
    Poly pow(std::uint64_t n) const;

    /// Multiply by the monomial x^e.
    Poly shifted_up(const ExpVec& e) const;

    /// Smallest exponent of variable `var` over all terms (0 for the
    /// zero polynomial).
    std::uint32_t min_exponent(std::size_t var) const;
    /// Divide exactly by x_var^n; throws ArgumentError if not divisible.
    Poly divided_by_var_power(std::size_t var, std::uint32_t n) const;

    /// Hasse derivative Delta^alpha: the T^alpha coefficient of the
    /// Taylor shift x -> x + T.  Characteristic-free.
    Poly hasse(const ExpVec& alpha) const;

    /// Image under x_i -> images[i], as an element of `target`.
    Poly substituted(RingPtr target, const std::vector<Poly>& images) const;

    BigRat evaluate(const Point& x) const;

    /// f(x + c): the translation taking the point c to the origin.
    Poly translated_to_origin(const Point& c) const;

    /// Order at the origin: smallest total degree of a term; nullopt
    /// (infinity) for the zero polynomial.
    std::optional<std::uint64_t> order_at_origin() const;

    /// Lowest-degree homogeneous part (the initial form at the origin).
    Poly initial_form() const;
    bool is_homogeneous() const;

    std::string str() const;

  private:
    RingPtr ring_;
    std::map<ExpVec, BigRat> terms_;

    void insert_term(const ExpVec& e, const BigRat& c);
    friend class PolyBuilder;
};

/// Order of f at the point x: min{|alpha| : Delta^alpha(f)(x) != 0},
/// realized by translation; nullopt means infinity (f = 0).
std::optional<std::uint64_t> order_at_point(const Poly& f, const Point& x);

/// Finite generator list for an ideal; the zero ideal is {}.
using IdealGens = std::vector<Poly>;

/// min over generators of order_at_point; nullopt for the zero ideal.
std::optional<std::uint64_t> ideal_order_at_point(const IdealGens& J, const Point& x);

/// Taylor shift f(x1 + t1, ..., xn + tn) in the doubled ring; the shift
/// variables are appended after the original ones.
Poly taylor_shift(const Poly& f);
/// The doubled ring used by taylor_shift, with its shift-variable names.
RingPtr taylor_ring(const RingPtr& ring);

/// Promote f into a super-ring; `var_map[i]` is the index in `target`
/// of variable i of f's ring.
Poly promote(const Poly& f, RingPtr target, const std::vector<std::size_t>& var_map);

/// Deterministic ordering used when canonicalizing generator lists.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace resolab

#endif
