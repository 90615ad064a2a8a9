#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfm/clifford.hpp"
#include "sfm/connection.hpp"

namespace sfm {

// Module vector text: `0`, or terms `coef*psi-[n] ... psi+[m]` / `coef*<vacuum>` joined by + or -.
// Monomials must be written in canonical order. A compound coefficient needs parentheses.
Vector parse_vector(std::string_view text, const SymbolContext* ctx = nullptr);

enum class OpKind { L, PsiPlus, PsiMinus, Shift };

struct OpFactor {
    OpKind kind;
    int n;
    friend bool operator==(const OpFactor& a, const OpFactor& b) {
        return a.kind == b.kind && a.n == b.n;
    }
};

struct OpTerm {
    Scalar coef{1};
    std::vector<OpFactor> factors;  // juxtaposition = composition, rightmost acts first
    friend bool operator==(const OpTerm& a, const OpTerm& b) {
        return a.coef == b.coef && a.factors == b.factors;
    }
};

struct ExprAst {
    std::vector<OpTerm> terms;
    friend bool operator==(const ExprAst& a, const ExprAst& b) { return a.terms == b.terms; }
};

ExprAst parse_expr(std::string_view text, const SymbolContext* ctx = nullptr);
std::string expr_str(const ExprAst& e);
Vector apply_expr(const ExprAst& e, const Vector& v, const CliffordParams& C);

struct Config {
    SymbolContext symbols;
    std::optional<Connection> A;  // present when the file used the "A" form
    CliffordParams C;
};

// {"symbols":[...], "A":[{"k":1,"m":[["xi","0"],["0","-xi"]]}, ...]} or the same with "C".
Config parse_config(std::string_view json_text);
Config load_config(const std::string& path);
// Serializes a connection in the "A" form.
std::string connection_json(const Connection& A, const SymbolContext& symbols);

// {"F":[["1","z^2"],["0","1"]]}
GaugeElement parse_gauge(std::string_view json_text, const SymbolContext* ctx = nullptr);
GaugeElement load_gauge(const std::string& path, const SymbolContext* ctx = nullptr);

// Message with the offending line and a caret under the column.
std::string caret_message(std::string_view text, const parse_error& e);

}  // namespace sfm
