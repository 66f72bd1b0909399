#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "drmod/convert.hpp"
#include "drmod/errors.hpp"
#include "drmod/mpoly.hpp"
#include "drmod/upoly.hpp"

namespace drmod {

namespace detail {

struct PolyLexer {
    std::string_view s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    uint64_t integer() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw InvalidInput("expected a number at position " + std::to_string(pos));
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            uint64_t d = static_cast<uint64_t>(s[pos] - '0');
            if (v > (std::numeric_limits<uint64_t>::max() - d) / 10)
                throw InvalidInput("number too large");
            v = v * 10 + d;
            ++pos;
        }
        return v;
    }
    std::string name() {
        skip();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }
};

} // namespace detail

// Parses sums of monomials like "T^2*X + 2*T + 1"; factors are integers or
// declared ring variables with optional ^exponent, joined by '*', terms by
// '+' or '-'.
inline MPoly parse_mpoly(const RingPtr& ring, std::string_view text) {
    detail::PolyLexer lx{text};
    if (lx.done()) throw InvalidInput("empty polynomial");
    MPoly out = MPoly::zero(ring);
    bool negate = lx.eat('-');
    while (true) {
        MPoly term = MPoly::from_int(ring, 1);
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term = term * MPoly::from_int(ring, static_cast<int64_t>(lx.integer() %
                                                                         ring->field->p));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string v = lx.name();
                uint64_t k = 1;
                if (lx.eat('^')) k = lx.integer();
                term = term * MPoly::variable(ring, ring->var_index(v), k);
            } else {
                throw InvalidInput("unexpected character at position " + std::to_string(lx.pos));
            }
            if (!lx.eat('*')) break;
        }
        out = negate ? out - term : out + term;
        if (lx.done()) break;
        if (lx.eat('+'))
            negate = false;
        else if (lx.eat('-'))
            negate = true;
        else
            throw InvalidInput("expected '+' or '-' at position " + std::to_string(lx.pos));
    }
    return out;
}

// Univariate convenience: parses over F_q[T].
inline APoly parse_apoly(const FieldCtx* F, std::string_view text) {
    RingPtr ring = make_ring(F, {"T"});
    return mpoly_to_apoly(parse_mpoly(ring, text), 0);
}

} // namespace drmod
