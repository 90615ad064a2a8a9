#include "sfm/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfm {

namespace {

// (e^a, e^b): symplectic pairing of the fiber basis.
int pairing(Species a, Species b) {
    if (a == b) return 0;
    return a == Species::Plus ? 1 : -1;
}

Scalar pair_sections(const SectionCoeff& u, const SectionCoeff& v) {
    return u.plus * v.minus - u.minus * v.plus;
}

}  // namespace

bool is_canonical(const Monomial& m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (!(m[i - 1] < m[i])) return false;
    return true;
}

Vector Vector::unit() { return of(Monomial{}); }

Vector Vector::of(const Monomial& m, const Scalar& c) {
    if (!is_canonical(m)) throw std::invalid_argument("monomial is not in canonical order");
    Vector v;
    v.add(m, c);
    return v;
}

void Vector::add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void Vector::add(const Vector& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [m, x] : v.t_) add(m, x * c);
}

Scalar Vector::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar{} : it->second;
}

Vector& Vector::operator+=(const Vector& o) {
    for (const auto& [m, c] : o.t_) add(m, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    for (const auto& [m, c] : o.t_) add(m, -c);
    return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto it = t_.begin(); it != t_.end();) {
        it->second *= c;
        if (it->second.is_zero())
            it = t_.erase(it);
        else
            ++it;
    }
    return *this;
}

Vector Vector::substitute(const std::map<std::string, Rational>& assignment) const {
    Vector out;
    for (const auto& [m, c] : t_) out.add(m, c.substitute(assignment));
    return out;
}

Scalar anticommutator(const Generator& g, const Generator& h, const CliffordParams& C) {
    Scalar out = C.at(g.index + h.index, g.species, h.species);
    if (g.index + h.index == 0) {
        int p = g.index * pairing(g.species, h.species);
        if (p != 0) out += Scalar(static_cast<long>(p));
    }
    return out;
}

LaurentSection basis_section(const Generator& g) {
    LaurentSection s;
    if (g.species == Species::Plus)
        s[g.index] = SectionCoeff{Scalar(1), Scalar{}};
    else
        s[g.index] = SectionCoeff{Scalar{}, Scalar(1)};
    return s;
}

Scalar residue_bracket(const LaurentSection& f, const LaurentSection& g, const Connection& A) {
    // (d + A) f as a section
    LaurentSection df;
    for (const auto& [n, c] : f) {
        if (n != 0) {
            auto& slot = df[n - 1];
            slot.plus += c.plus * Scalar(static_cast<long>(n));
            slot.minus += c.minus * Scalar(static_cast<long>(n));
        }
        for (const auto& [k, a] : A.coeffs()) {
            auto& slot = df[n - k - 1];
            slot.plus += a.pp * c.plus + a.pm * c.minus;
            slot.minus += a.mp * c.plus + a.mm * c.minus;
        }
    }
    Scalar res;
    for (const auto& [p, u] : df) {
        auto it = g.find(-1 - p);
        if (it != g.end()) res += pair_sections(u, it->second);
    }
    return res;
}

Vector left_multiply(const Generator& g, const Vector& v, const CliffordParams& C) {
    Vector out;
    for (const auto& [m, coef] : v.terms()) {
        // g h_1 ... h_r: move g right past every h_i < g, collecting {g,h_i} contractions.
        std::size_t p = 0;
        int sign = 1;
        for (; p < m.size() && m[p] < g; ++p) {
            Scalar ac = anticommutator(g, m[p], C);
            if (!ac.is_zero()) {
                Monomial rest(m);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
                out.add(rest, sign > 0 ? ac * coef : -(ac * coef));
            }
            sign = -sign;
        }
        if (p < m.size() && m[p] == g) {
            // g g = {g,g}/2
            Scalar half = anticommutator(g, g, C) / Rational(2);
            if (!half.is_zero()) {
                Monomial rest(m);
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
                out.add(rest, sign > 0 ? half * coef : -(half * coef));
            }
        } else {
            Monomial ins(m);
            ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(p), g);
            out.add(ins, sign > 0 ? coef : -coef);
        }
    }
    return out;
}

std::string generator_str(const Generator& g) {
    return std::string("psi") + species_char(g.species) + "[" + std::to_string(g.index) + "]";
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "<vacuum>";
    std::string out;
    for (const auto& g : m) {
        if (!out.empty()) out += " ";
        out += generator_str(g);
    }
    return out;
}

std::string vector_str(const Vector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : v.terms()) {
        if (!out.empty()) out += " + ";
        std::string cs = c.str();
        out += c.terms().size() > 1 ? "(" + cs + ")" : cs;
        out += "*" + monomial_str(m);
    }
    return out;
}

}  // namespace sfm
