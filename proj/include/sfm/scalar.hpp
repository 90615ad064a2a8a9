#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sfm {

using Rational = mpq_class;
using Integer = mpz_class;

// Thrown for malformed textual input; column is 0-based into the parsed text.
class parse_error : public std::invalid_argument {
  public:
    parse_error(const std::string& what, std::size_t column)
        : std::invalid_argument(what), column_(column) {}
    std::size_t column() const { return column_; }

  private:
    std::size_t column_;
};

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Symbols are interned process-wide; ids are stable for the process lifetime.
int symbol_id(std::string_view name);
const std::string& symbol_name(int id);

// Names a parser may accept. An empty context accepts no symbols.
class SymbolContext {
  public:
    SymbolContext() = default;
    explicit SymbolContext(std::vector<std::string> names);

    bool contains(std::string_view name) const;
    const std::vector<std::string>& names() const& { return names_; }
    std::vector<std::string> names() && { return std::move(names_); }

  private:
    std::vector<std::string> names_;
};

// Sparse multivariate polynomial with exact rational coefficients.
class Scalar {
  public:
    // (symbol id, exponent > 0), sorted by id
    using Monomial = std::vector<std::pair<int, int>>;
    using Terms = std::map<Monomial, Rational>;

    Scalar() = default;
    Scalar(long v);  // NOLINT: implicit on purpose, integers are scalars
    Scalar(const Rational& q);  // NOLINT

    static Scalar symbol(std::string_view name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the empty monomial.
    Rational constant_term() const;
    // Requires is_constant().
    Rational value() const;
    int total_degree() const;
    std::set<std::string> symbols() const;
    const Terms& terms() const& { return terms_; }
    Terms terms() && { return std::move(terms_); }  // safe in range-for over a temporary

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator*=(const Rational& q);
    Scalar& operator/=(const Rational& q);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(Scalar a, const Rational& q) { return a /= q; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Rational eval(const std::map<std::string, Rational>& assignment) const;
    // Substitutes the given symbols, leaving the others symbolic.
    Scalar substitute(const std::map<std::string, Rational>& assignment) const;

    // Canonical text form; terms ordered by degree (descending) then by symbol names.
    std::string str() const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    Terms terms_;
};

// Grammar: sum of terms `coef*sym1^e1*...`; coef is an integer or p/q.
// Factors may be juxtaposed; `^1` is optional. With a null context any identifier is accepted.
Scalar parse_scalar(std::string_view text, const SymbolContext* ctx = nullptr);

}  // namespace sfm
