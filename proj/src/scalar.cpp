#include "sfm/scalar.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "reader.hpp"

namespace sfm {

namespace {

struct SymbolTable {
    std::shared_mutex mu;
    std::unordered_map<std::string, int> ids;
    std::deque<std::string> names;  // deque: references stay valid on growth
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

Scalar::Monomial mono_mul(const Scalar::Monomial& a, const Scalar::Monomial& b) {
    Scalar::Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

int symbol_id(std::string_view name) {
    auto& t = table();
    std::string key(name);
    {
        std::shared_lock lk(t.mu);
        auto it = t.ids.find(key);
        if (it != t.ids.end()) return it->second;
    }
    std::unique_lock lk(t.mu);
    auto [it, fresh] = t.ids.emplace(key, static_cast<int>(t.names.size()));
    if (fresh) t.names.push_back(key);
    return it->second;
}

const std::string& symbol_name(int id) {
    auto& t = table();
    std::shared_lock lk(t.mu);
    return t.names.at(static_cast<std::size_t>(id));
}

SymbolContext::SymbolContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
            throw std::invalid_argument("invalid symbol name '" + n + "'");
        for (char c : n)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument("invalid symbol name '" + n + "'");
        if (n == "z" || n == "psi" || n == "L" || n == "Shift")
            throw std::invalid_argument("symbol name '" + n + "' is reserved");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate symbol '" + n + "'");
    }
}

bool SymbolContext::contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Rational parse_rational(std::string_view text) {
    detail::Reader r(text);
    bool neg = false;
    if (r.accept('-'))
        neg = true;
    else
        r.accept('+');
    Integer num(r.read_digits());
    Integer den(1);
    if (r.accept('/')) {
        den = Integer(r.read_digits());
        if (den == 0) r.fail("zero denominator");
    }
    if (!r.eof()) r.fail("trailing characters in rational");
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Scalar::Scalar(long v) {
    if (v != 0) terms_.emplace(Monomial{}, Rational(v));
}

Scalar::Scalar(const Rational& q) {
    if (q != 0) {
        Rational c(q);
        c.canonicalize();
        terms_.emplace(Monomial{}, c);
    }
}

Scalar Scalar::symbol(std::string_view name) {
    Scalar s;
    s.terms_.emplace(Monomial{{symbol_id(name), 1}}, Rational(1));
    return s;
}

bool Scalar::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Scalar::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Scalar::value() const {
    if (!is_constant()) throw std::domain_error("scalar '" + str() + "' is not a constant");
    return constant_term();
}

int Scalar::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int e = 0;
        for (const auto& p : m) e += p.second;
        d = std::max(d, e);
    }
    return d;
}

std::set<std::string> Scalar::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& p : m) out.insert(symbol_name(p.first));
    return out;
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator*=(const Rational& q) {
    if (q == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= q;
    return *this;
}

Scalar& Scalar::operator/=(const Rational& q) {
    if (q == 0) throw std::domain_error("division by zero");
    for (auto& [m, c] : terms_) c /= q;
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Rational Scalar::eval(const std::map<std::string, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t(c);
        for (const auto& [id, e] : m) {
            auto it = assignment.find(symbol_name(id));
            if (it == assignment.end())
                throw std::invalid_argument("no value for symbol '" + symbol_name(id) + "'");
            Rational p(1);
            for (int k = 0; k < e; ++k) p *= it->second;
            t *= p;
        }
        total += t;
    }
    return total;
}

Scalar Scalar::substitute(const std::map<std::string, Rational>& assignment) const {
    Scalar out;
    for (const auto& [m, c] : terms_) {
        Rational t(c);
        Monomial rest;
        for (const auto& [id, e] : m) {
            auto it = assignment.find(symbol_name(id));
            if (it == assignment.end()) {
                rest.emplace_back(id, e);
                continue;
            }
            for (int k = 0; k < e; ++k) t *= it->second;
        }
        out.add_term(rest, t);
    }
    return out;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    struct Item {
        int degree;
        std::vector<std::pair<std::string, int>> key;
        Rational coef;
    };
    std::vector<Item> items;
    for (const auto& [m, c] : terms_) {
        Item it{0, {}, c};
        for (const auto& [id, e] : m) {
            it.degree += e;
            it.key.emplace_back(symbol_name(id), e);
        }
        std::sort(it.key.begin(), it.key.end());
        items.push_back(std::move(it));
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.key < b.key;
    });
    std::string out;
    bool first = true;
    for (const auto& it : items) {
        Rational c = it.coef;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string body;
        if (c != 1 || it.key.empty()) body = to_string(c);
        for (const auto& [name, e] : it.key) {
            if (!body.empty()) body += "*";
            body += name;
            if (e != 1) body += "^" + std::to_string(e);
        }
        out += body;
    }
    return out;
}

namespace detail {

Scalar read_scalar_term(Reader& r, const SymbolContext* ctx, const StopPredicate& stop) {
    Scalar acc(1);
    int factors = 0;
    while (true) {
        if (factors > 0) {
            // '*' is optional between factors; a '*' that precedes a stop token belongs to the caller.
            std::size_t save = r.pos;
            if (r.accept('*')) {
                if ((r.at_ident() && stop && stop(r)) || !(r.at_ident() || r.at_digit())) {
                    r.pos = save;
                    break;
                }
            } else if (!(r.at_digit() || (r.at_ident() && !(stop && stop(r))))) {
                break;
            }
        }
        if (r.at_digit()) {
            Integer num(r.read_digits());
            Integer den(1);
            std::size_t save = r.pos;
            if (r.accept('/')) {
                if (!r.at_digit()) {
                    r.pos = save;
                } else {
                    std::size_t at = r.pos;
                    den = Integer(r.read_digits());
                    if (den == 0) throw parse_error("zero denominator", at);
                }
            }
            Rational q(num, den);
            q.canonicalize();
            acc *= q;
        } else if (r.at_ident() && !(stop && stop(r))) {
            std::size_t at = r.pos;
            std::string name = r.read_ident();
            if (ctx && !ctx->contains(name)) throw parse_error("unknown symbol '" + name + "'", at);
            if (!ctx && (name == "z" || name == "psi" || name == "L" || name == "Shift"))
                throw parse_error("reserved name '" + name + "' in scalar", at);
            int e = 1;
            if (r.accept('^')) {
                std::size_t eat = r.pos;
                std::string d = r.read_digits();
                if (d.size() > 6 || std::stol(d) == 0) throw parse_error("bad exponent", eat);
                e = static_cast<int>(std::stol(d));
            }
            Scalar s = Scalar::symbol(name);
            for (int k = 0; k < e; ++k) acc *= s;
        } else {
            r.fail(factors == 0 ? "expected number or symbol" : "unexpected token");
        }
        ++factors;
    }
    return acc;
}

Scalar read_scalar_sum(Reader& r, const SymbolContext* ctx, const StopPredicate& stop) {
    Scalar total;
    bool first = true;
    while (true) {
        int sign = 1;
        if (r.accept('-'))
            sign = -1;
        else if (r.accept('+'))
            sign = 1;
        else if (!first)
            break;
        Scalar t = read_scalar_term(r, ctx, stop);
        if (sign < 0) t = -t;
        total += t;
        first = false;
        char c = r.peek();
        if (c != '+' && c != '-') break;
    }
    return total;
}

}  // namespace detail

Scalar parse_scalar(std::string_view text, const SymbolContext* ctx) {
    detail::Reader r(text);
    if (r.eof()) r.fail("empty scalar");
    Scalar s = detail::read_scalar_sum(r, ctx, nullptr);
    if (!r.eof()) r.fail("unexpected character");
    return s;
}

}  // namespace sfm
