#include "sfm/fockmod.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace sfm {

namespace {

Species flip(Species s) { return s == Species::Plus ? Species::Minus : Species::Plus; }

void require_order_le_one(const CliffordParams& C) {
    if (C.max_k() >= 2)
        throw std::invalid_argument("module action needs Poisson order <= 1 (C_" +
                                    std::to_string(C.max_k()) + " != 0)");
}

}  // namespace

bool is_module_vector(const Vector& v) {
    for (const auto& [m, c] : v.terms())
        for (const auto& g : m)
            if (g.index > 0) return false;
    return true;
}

void require_module_vector(const Vector& v) {
    if (!is_module_vector(v))
        throw std::invalid_argument("module vectors only contain generators of index <= 0");
}

std::optional<SignedMonomial> wedge(const Generator& g, const Monomial& m) {
    auto it = std::lower_bound(m.begin(), m.end(), g);
    if (it != m.end() && *it == g) return std::nullopt;
    auto p = it - m.begin();
    Monomial out(m);
    out.insert(out.begin() + p, g);
    return SignedMonomial{std::move(out), (p % 2 == 0) ? 1 : -1};
}

std::optional<SignedMonomial> contract(const Generator& g, const Monomial& m) {
    auto it = std::lower_bound(m.begin(), m.end(), g);
    if (it == m.end() || !(*it == g)) return std::nullopt;
    auto p = it - m.begin();
    Monomial out(m);
    out.erase(out.begin() + p);
    return SignedMonomial{std::move(out), (p % 2 == 0) ? 1 : -1};
}

Vector act_psi(const Generator& g, const Vector& v, const CliffordParams& C) {
    require_order_le_one(C);
    require_module_vector(v);
    if (g.index <= 0) return left_multiply(g, v, C);
    Vector out;
    for (const auto& [m, coef] : v.terms()) {
        int sign = 1;
        for (std::size_t i = 0; i < m.size(); ++i, sign = -sign) {
            Scalar ac = anticommutator(g, m[i], C);
            if (ac.is_zero()) continue;
            Monomial rest(m);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            out.add(rest, sign > 0 ? ac * coef : -(ac * coef));
        }
    }
    return out;
}

Vector act_psi_derivative_form(const Generator& g, const Vector& v, const CliffordParams& C) {
    if (g.index < 1) throw std::invalid_argument("derivative form needs a positive mode");
    require_order_le_one(C);
    require_module_vector(v);
    if (!C.at(1, Species::Plus, Species::Plus).is_zero() ||
        !C.at(1, Species::Minus, Species::Minus).is_zero())
        throw std::invalid_argument("derivative form needs C_1 = [[0,xi],[xi,0]]");
    const Species a = g.species;
    const Species b = flip(a);
    const int m = g.index;
    const long pm = a == Species::Plus ? m : -m;
    const Scalar xi = C.at(1, Species::Plus, Species::Minus);
    const Scalar eps = C.at(0, Species::Plus, Species::Minus);
    const Scalar tau = C.at(0, a, a);

    // (coefficient, generator differentiated)
    std::vector<std::pair<Scalar, Generator>> parts;
    parts.emplace_back(xi, Generator{b, 1 - m});
    parts.emplace_back(Scalar(pm) + eps, Generator{b, -m});
    parts.emplace_back(tau, Generator{a, -m});
    for (const auto& [k, ck] : C.coeffs()) {
        if (k >= 0) continue;
        parts.emplace_back(ck.at(a, b), Generator{b, k - m});
        parts.emplace_back(ck.at(a, a), Generator{a, k - m});
    }
    Vector out;
    for (const auto& [mono, coef] : v.terms())
        for (const auto& [c, d] : parts) {
            if (c.is_zero()) continue;
            auto r = contract(d, mono);
            if (!r) continue;
            out.add(r->m, r->sign > 0 ? c * coef : -(c * coef));
        }
    return out;
}

Vector shift(int m, const Vector& v) {
    require_module_vector(v);
    Vector out;
    for (const auto& [mono, coef] : v.terms()) {
        for (std::size_t i = 0; i < mono.size(); ++i) {
            Generator g{mono[i].species, mono[i].index + m};
            if (g.index > 0) continue;
            Monomial rest(mono);
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            // removing at i and re-inserting: sign (-1)^i * (-1)^p
            auto w = wedge(g, rest);
            if (!w) continue;
            int sign = w->sign * ((i % 2 == 0) ? 1 : -1);
            if (g.species == Species::Plus) sign = -sign;
            out.add(w->m, sign > 0 ? coef : -coef);
        }
    }
    return out;
}

Degrees degrees(const Monomial& m) {
    Degrees d;
    for (const auto& g : m) {
        d.vert += -g.index;
        d.horiz += g.species == Species::Minus ? 1 : -1;
        d.fine2 += 1;
    }
    d.total2 = 2 * d.vert + d.fine2;
    return d;
}

Monomial v_k(int k) {
    Monomial m;
    Species s = k >= 0 ? Species::Minus : Species::Plus;
    int n = k >= 0 ? k : -k;
    for (int i = n - 1; i >= 0; --i) m.push_back(Generator{s, -i});
    return m;
}

int total2_of_v(int k) { return k * k; }

std::vector<Monomial> basis_enumerate(int total2_max, const std::set<int>& horiz) {
    if (total2_max < 0) throw std::invalid_argument("total2_max must be >= 0");
    // generators in canonical order with their total2 cost 2i+1
    std::vector<Generator> gens;
    int imax = (total2_max - 1) / 2;
    for (Species s : {Species::Minus, Species::Plus})
        for (int i = imax; i >= 0; --i)
            if (2 * i + 1 <= total2_max) gens.push_back(Generator{s, -i});
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
        if (horiz.empty() || horiz.count(degrees(cur).horiz)) out.push_back(cur);
        for (std::size_t i = from; i < gens.size(); ++i) {
            int cost = 2 * (-gens[i].index) + 1;
            if (cost > budget) continue;
            cur.push_back(gens[i]);
            rec(i + 1, budget - cost);
            cur.pop_back();
        }
    };
    rec(0, total2_max);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        Degrees da = degrees(a), db = degrees(b);
        return std::tie(da.total2, da.horiz, a) < std::tie(db.total2, db.horiz, b);
    });
    return out;
}

}  // namespace sfm
