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

#include "resolab/parse.hpp"

#include <cctype>

namespace resolab {

namespace {

struct Parser {
    const RingPtr& ring;
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(pos) + " in '" + s + "'");
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') { ++pos; acc = acc + parse_term(); }
            else if (c == '-') { ++pos; acc = acc - parse_term(); }
            else break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_signed_factor();
        for (;;) {
            char c = peek();
            if (c == '*') { ++pos; acc = acc * parse_signed_factor(); }
            else if (c == '/') {
                ++pos;
                Poly d = parse_signed_factor();
                if (!d.is_unit()) fail("division only by nonzero constants");
                acc = acc.scaled(ring->field.inv(d.terms().begin()->second));
            } else break;
        }
        return acc;
    }

    Poly parse_signed_factor() {
        char c = peek();
        if (c == '-') { ++pos; return -parse_signed_factor(); }
        if (c == '+') { ++pos; return parse_signed_factor(); }
        return parse_power();
    }

    Poly parse_power() {
        Poly base = parse_atom();
        while (peek() == '^') {
            ++pos;
            base = base.pow(parse_nat());
        }
        return base;
    }

    std::uint64_t parse_nat() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a non-negative integer exponent");
        std::uint64_t n = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            n = n * 10 + static_cast<std::uint64_t>(s[pos++] - '0');
        return n;
    }

    Poly parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++pos;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt n(0);
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                n = n * 10 + (s[pos++] - '0');
            return Poly::constant(ring, BigRat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int i = ring->var_index(name);
            if (i < 0) fail("unknown identifier '" + name + "'");
            return Poly::variable(ring, static_cast<std::size_t>(i));
        }
        fail("unexpected character");
    }
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    Parser p{ring, text};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace resolab
