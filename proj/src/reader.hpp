#pragma once

// Shared cursor for the small hand-written grammars (scalars, vectors, operator expressions).

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "sfm/scalar.hpp"

namespace sfm::detail {

struct Reader {
    std::string_view s;
    std::size_t pos = 0;

    explicit Reader(std::string_view text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    bool at_ident() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    // Identifier at the cursor without consuming it.
    std::string_view peek_ident() {
        skip_ws();
        std::size_t e = pos;
        while (e < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[e])) || s[e] == '_'))
            ++e;
        return s.substr(pos, e - pos);
    }
    std::string read_ident() {
        auto id = peek_ident();
        if (id.empty()) fail("expected identifier");
        pos += id.size();
        return std::string(id);
    }
    std::string read_digits() {
        skip_ws();
        std::size_t b = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (b == pos) fail("expected digits");
        return std::string(s.substr(b, pos - b));
    }
    // Optionally signed integer.
    long read_int() {
        skip_ws();
        std::size_t b = pos;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            pos = b;
            fail("expected integer");
        }
        std::string d = read_digits();
        if (d.size() > 9) {
            pos = b;
            fail("integer out of range");
        }
        long v = std::stol(d);
        return neg ? -v : v;
    }
};

// Returns true when the identifier at the cursor ends a scalar term (e.g. an operator keyword).
using StopPredicate = std::function<bool(Reader&)>;

Scalar read_scalar_term(Reader& r, const SymbolContext* ctx, const StopPredicate& stop);
Scalar read_scalar_sum(Reader& r, const SymbolContext* ctx, const StopPredicate& stop);

}  // namespace sfm::detail
