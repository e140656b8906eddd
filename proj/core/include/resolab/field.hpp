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

#ifndef RESOLAB_FIELD_HPP
#define RESOLAB_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace resolab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Raised on contract violations (mismatched rings, bad arguments).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a combinatorial construction exceeds its configured cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation is called in a state it does not support
/// (e.g. the t-function in the monomial case).
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Exact coefficient field: the rationals, or a prime field F_p with
/// p < 2^31.  Elements are stored as exact rationals; in F_p they are
/// kept reduced to the residue range [0, p).
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime_field(std::int64_t p);

    std::int64_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }

    BigRat reduce(const BigRat& a) const;
    BigRat from_int(std::int64_t n) const { return reduce(BigRat(n)); }

    BigRat add(const BigRat& a, const BigRat& b) const { return reduce(a + b); }
    BigRat sub(const BigRat& a, const BigRat& b) const { return reduce(a - b); }
    BigRat mul(const BigRat& a, const BigRat& b) const { return reduce(a * b); }
    BigRat neg(const BigRat& a) const { return reduce(-a); }
    BigRat inv(const BigRat& a) const;
    BigRat div(const BigRat& a, const BigRat& b) const { return mul(a, inv(b)); }

    /// Binomial coefficient C(n, k) as a field element, computed by the
    /// Pascal recurrence in the field (correct mod-p behaviour for free).
    BigRat binomial(std::uint64_t n, std::uint64_t k) const;

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

    std::string str() const;

  private:
    explicit FieldSpec(std::int64_t p) : p_(p) {}
    std::int64_t p_;
};

}  // namespace resolab

#endif
