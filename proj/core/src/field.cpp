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

#include "resolab/field.hpp"

#include <vector>

namespace resolab {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31))
        throw ArgumentError("prime field characteristic must be < 2^31");
    if (!is_prime(p))
        throw ArgumentError("prime field characteristic must be prime: " + std::to_string(p));
    return FieldSpec(p);
}

BigRat FieldSpec::reduce(const BigRat& a) const {
    if (p_ == 0) return a;
    BigInt num = numerator(a);
    BigInt den = denominator(a);
    BigInt p(p_);
    num %= p;
    if (num < 0) num += p;
    den %= p;
    if (den < 0) den += p;
    if (den == 0)
        throw ArgumentError("denominator not invertible mod " + std::to_string(p_));
    if (den != 1) {
        // extended Euclid for den^{-1} mod p
        BigInt t0 = 0, t1 = 1, r0 = p, r1 = den;
        while (r1 != 0) {
            BigInt q = r0 / r1;
            BigInt r2 = r0 - q * r1;
            r0 = r1; r1 = r2;
            BigInt t2 = t0 - q * t1;
            t0 = t1; t1 = t2;
        }
        BigInt inv = t0 % p;
        if (inv < 0) inv += p;
        num = (num * inv) % p;
    }
    return BigRat(num);
}

BigRat FieldSpec::inv(const BigRat& a) const {
    BigRat r = reduce(a);
    if (r == 0) throw ArgumentError("division by zero in the coefficient field");
    if (p_ == 0) return BigRat(1) / r;
    return reduce(BigRat(1, numerator(r)));
}

BigRat FieldSpec::binomial(std::uint64_t n, std::uint64_t k) const {
    if (k > n) return BigRat(0);
    k = std::min(k, n - k);
    std::vector<BigRat> row(k + 1, BigRat(0));
    row[0] = from_int(1);
    for (std::uint64_t i = 1; i <= n; ++i)
        for (std::uint64_t j = std::min<std::uint64_t>(i, k); j >= 1; --j)
            row[j] = add(row[j], row[j - 1]);
    return row[k];
}

std::string FieldSpec::str() const {
    return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")";
}

}  // namespace resolab
