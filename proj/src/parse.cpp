#include "sfm/parse.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "reader.hpp"
#include "sfm/fockmod.hpp"
#include "sfm/virasoro.hpp"

namespace sfm {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

bool at_keyword(detail::Reader& r) {
    auto id = r.peek_ident();
    return id == "psi" || id == "L" || id == "Shift";
}

Scalar read_coefficient(detail::Reader& r, const SymbolContext* ctx) {
    if (r.accept('(')) {
        Scalar c = detail::read_scalar_sum(r, ctx, at_keyword);
        r.expect(')');
        r.accept('*');
        return c;
    }
    if (r.at_digit() || (r.at_ident() && !at_keyword(r))) {
        Scalar c = detail::read_scalar_term(r, ctx, at_keyword);
        r.accept('*');
        return c;
    }
    return Scalar(1);
}

int read_bracket_int(detail::Reader& r) {
    if (r.pos >= r.s.size() || r.s[r.pos] != '[') r.fail("expected '['");
    ++r.pos;
    int n = static_cast<int>(r.read_int());
    r.expect(']');
    return n;
}

Species read_species(detail::Reader& r) {
    // the sign must follow "psi" immediately
    if (r.pos < r.s.size() && r.s[r.pos] == '+') {
        ++r.pos;
        return Species::Plus;
    }
    if (r.pos < r.s.size() && r.s[r.pos] == '-') {
        ++r.pos;
        return Species::Minus;
    }
    r.fail("expected '+' or '-' after psi");
}

std::string read_all(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        std::string msg = e.what();
        auto p = msg.find("syntax error");
        throw parse_error("invalid JSON: " + (p == std::string::npos ? msg : msg.substr(p)), at);
    }
}

Scalar entry_scalar(const json& v, const std::string& where, const SymbolContext& ctx) {
    std::string text;
    if (v.is_string())
        text = v.get<std::string>();
    else if (v.is_number_integer())
        text = std::to_string(v.get<long long>());
    else
        throw std::invalid_argument(where + ": expected a scalar literal string");
    try {
        return parse_scalar(text, &ctx);
    } catch (const parse_error& e) {
        throw std::invalid_argument(where + ": " + e.what() + " at column " +
                                    std::to_string(e.column()) + " in \"" + text + "\"");
    }
}

}  // namespace

Vector parse_vector(std::string_view text, const SymbolContext* ctx) {
    detail::Reader r(text);
    if (r.eof()) r.fail("empty vector");
    {
        detail::Reader z(text);
        if (z.accept('0') && z.eof()) return Vector{};
    }
    Vector out;
    bool first = true;
    while (!r.eof()) {
        int sign = 1;
        if (r.accept('-'))
            sign = -1;
        else if (!r.accept('+') && !first)
            r.fail("expected '+' or '-'");
        first = false;
        while (r.accept('-')) sign = -sign;  // printed form writes "+ -c*..."
        Scalar coef = read_coefficient(r, ctx);
        Monomial m;
        if (r.peek() == '<') {
            std::size_t at = r.pos;
            if (r.s.substr(r.pos, 8) != "<vacuum>")
                throw parse_error("expected <vacuum>", at);
            r.pos += 8;
        } else {
            if (r.peek_ident() != "psi") r.fail("expected psi+[n], psi-[n] or <vacuum>");
            while (r.peek_ident() == "psi") {
                std::size_t at = r.pos;
                r.read_ident();
                Species s = read_species(r);
                int n = read_bracket_int(r);
                if (n > 0) throw parse_error("module vectors only contain indices <= 0", at);
                Generator g{s, n};
                if (!m.empty() && !(m.back() < g))
                    throw parse_error("generators must be distinct and in canonical order "
                                      "(psi- before psi+, increasing index)",
                                      at);
                m.push_back(g);
            }
        }
        out.add(m, sign < 0 ? -coef : coef);
    }
    return out;
}

ExprAst parse_expr(std::string_view text, const SymbolContext* ctx) {
    detail::Reader r(text);
    if (r.eof()) r.fail("empty expression");
    ExprAst e;
    bool first = true;
    while (!r.eof()) {
        int sign = 1;
        if (r.accept('-'))
            sign = -1;
        else if (!r.accept('+') && !first)
            r.fail("expected '+' or '-' between terms");
        first = false;
        while (r.accept('-')) sign = -sign;
        OpTerm t;
        t.coef = read_coefficient(r, ctx);
        if (sign < 0) t.coef = -t.coef;
        while (r.at_ident()) {
            auto id = r.peek_ident();
            if (id == "L") {
                r.read_ident();
                t.factors.push_back({OpKind::L, read_bracket_int(r)});
            } else if (id == "Shift") {
                r.read_ident();
                t.factors.push_back({OpKind::Shift, read_bracket_int(r)});
            } else if (id == "psi") {
                r.read_ident();
                Species s = read_species(r);
                t.factors.push_back(
                    {s == Species::Plus ? OpKind::PsiPlus : OpKind::PsiMinus, read_bracket_int(r)});
            } else {
                r.fail("unknown operator '" + std::string(id) + "'");
            }
        }
        if (!r.eof() && r.peek() != '+' && r.peek() != '-') r.fail("unexpected character");
        e.terms.push_back(std::move(t));
    }
    return e;
}

std::string expr_str(const ExprAst& e) {
    std::string out;
    for (const auto& t : e.terms) {
        if (!out.empty()) out += " + ";
        std::string body;
        for (const auto& f : t.factors) {
            if (!body.empty()) body += " ";
            switch (f.kind) {
                case OpKind::L: body += "L[" + std::to_string(f.n) + "]"; break;
                case OpKind::Shift: body += "Shift[" + std::to_string(f.n) + "]"; break;
                case OpKind::PsiPlus: body += "psi+[" + std::to_string(f.n) + "]"; break;
                case OpKind::PsiMinus: body += "psi-[" + std::to_string(f.n) + "]"; break;
            }
        }
        if (t.coef == Scalar(1) && !body.empty())
            out += body;
        else
            out += "(" + t.coef.str() + ")" + (body.empty() ? "" : "*" + body);
    }
    return out;
}

Vector apply_expr(const ExprAst& e, const Vector& v, const CliffordParams& C) {
    Vector out;
    for (const auto& t : e.terms) {
        Vector x = v;
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
            switch (it->kind) {
                case OpKind::L: x = act_L(it->n, x, C); break;
                case OpKind::Shift: x = shift(it->n, x); break;
                case OpKind::PsiPlus: x = act_psi(psi_plus(it->n), x, C); break;
                case OpKind::PsiMinus: x = act_psi(psi_minus(it->n), x, C); break;
            }
        }
        out.add(x, t.coef);
    }
    return out;
}

Config parse_config(std::string_view json_text) {
    json j = parse_json(json_text);
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    for (const auto& [key, val] : j.items())
        if (key != "symbols" && key != "A" && key != "C")
            throw std::invalid_argument("config: unknown key '" + key + "'");
    Config cfg;
    std::vector<std::string> names;
    if (j.contains("symbols")) {
        if (!j["symbols"].is_array()) throw std::invalid_argument("config: 'symbols' must be an array");
        for (const auto& s : j["symbols"]) {
            if (!s.is_string()) throw std::invalid_argument("config: symbol names must be strings");
            names.push_back(s.get<std::string>());
        }
    }
    cfg.symbols = SymbolContext(names);
    const bool hasA = j.contains("A"), hasC = j.contains("C");
    if (hasA == hasC) throw std::invalid_argument("config: exactly one of 'A' or 'C' is required");
    const std::string key = hasA ? "A" : "C";
    const json& arr = j[key];
    if (!arr.is_array()) throw std::invalid_argument("config: '" + key + "' must be an array");
    std::map<int, Sl2Matrix> amap;
    std::map<int, SymMatrix2> cmap;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& ent = arr[i];
        const std::string where = key + "[" + std::to_string(i) + "]";
        if (!ent.is_object() || !ent.contains("k") || !ent.contains("m"))
            throw std::invalid_argument(where + ": expected {\"k\": int, \"m\": 2x2 matrix}");
        if (!ent["k"].is_number_integer()) throw std::invalid_argument(where + ".k: expected an integer");
        const int k = ent["k"].get<int>();
        const json& m = ent["m"];
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
            m[0].size() != 2 || m[1].size() != 2)
            throw std::invalid_argument(where + ".m: expected a 2x2 array");
        Scalar e[2][2];
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                e[r][c] = entry_scalar(m[r][c], where + ".m[" + std::to_string(r) + "][" +
                                                    std::to_string(c) + "]",
                                       cfg.symbols);
        if (amap.count(k) || cmap.count(k))
            throw std::invalid_argument(where + ": duplicate k = " + std::to_string(k));
        if (hasA) {
            if (!(e[0][0] + e[1][1]).is_zero())
                throw std::invalid_argument(where + " (k=" + std::to_string(k) +
                                            "): A_k must be traceless, trace is " +
                                            (e[0][0] + e[1][1]).str());
            amap[k] = Sl2Matrix{e[0][0], e[0][1], e[1][0], e[1][1]};
        } else {
            if (e[0][1] != e[1][0])
                throw std::invalid_argument(where + " (k=" + std::to_string(k) +
                                            "): C_k must be symmetric");
            cmap[k] = SymMatrix2{e[0][0], e[0][1], e[1][1]};
        }
    }
    if (hasA) {
        cfg.A = Connection(amap);
        cfg.C = a_to_c(*cfg.A);
    } else {
        cfg.C = CliffordParams(cmap);
    }
    return cfg;
}

Config load_config(const std::string& path) { return parse_config(read_all(path)); }

std::string connection_json(const Connection& A, const SymbolContext& symbols) {
    ordered_json j;
    j["symbols"] = symbols.names();
    ordered_json arr = ordered_json::array();
    for (const auto& [k, a] : A.coeffs()) {
        ordered_json e;
        e["k"] = k;
        e["m"] = ordered_json::array({ordered_json::array({a.pp.str(), a.pm.str()}),
                                      ordered_json::array({a.mp.str(), a.mm.str()})});
        arr.push_back(e);
    }
    j["A"] = arr;
    return j.dump(2);
}

GaugeElement parse_gauge(std::string_view json_text, const SymbolContext* ctx) {
    json j = parse_json(json_text);
    if (!j.is_object() || !j.contains("F"))
        throw std::invalid_argument("gauge: expected an object with key 'F'");
    const json& f = j["F"];
    if (!f.is_array() || f.size() != 2 || !f[0].is_array() || !f[1].is_array() ||
        f[0].size() != 2 || f[1].size() != 2)
        throw std::invalid_argument("gauge: 'F' must be a 2x2 array");
    LaurentMatrix m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const std::string where = "F[" + std::to_string(r) + "][" + std::to_string(c) + "]";
            const json& v = f[r][c];
            std::string text = v.is_string() ? v.get<std::string>()
                               : v.is_number_integer() ? std::to_string(v.get<long long>())
                                                       : throw std::invalid_argument(where + ": expected a string");
            try {
                m[r][c] = parse_laurent(text, ctx);
            } catch (const parse_error& e) {
                throw std::invalid_argument(where + ": " + e.what() + " at column " +
                                            std::to_string(e.column()) + " in \"" + text + "\"");
            }
        }
    return GaugeElement(m);
}

GaugeElement load_gauge(const std::string& path, const SymbolContext* ctx) {
    return parse_gauge(read_all(path), ctx);
}

std::string caret_message(std::string_view text, const parse_error& e) {
    std::size_t at = std::min(e.column(), text.size());
    std::size_t ls = text.rfind('\n', at == 0 ? 0 : at - 1);
    ls = (ls == std::string_view::npos || at == 0) ? 0 : ls + 1;
    if (at > 0 && text[at - 1] == '\n') ls = at;
    std::size_t le = text.find('\n', at);
    if (le == std::string_view::npos) le = text.size();
    std::size_t line = 1;
    for (std::size_t i = 0; i < ls; ++i)
        if (text[i] == '\n') ++line;
    std::string out = std::string("error: ") + e.what() + " (line " + std::to_string(line) +
                      ", column " + std::to_string(at - ls + 1) + ")\n";
    out += "  " + std::string(text.substr(ls, le - ls)) + "\n";
    out += "  " + std::string(at - ls, ' ') + "^\n";
    return out;
}

}  // namespace sfm
