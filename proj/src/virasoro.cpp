#include "sfm/virasoro.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "sfm/linalg.hpp"

namespace sfm {

namespace {

int depth(const Monomial& m) {
    int d = 0;
    for (const auto& g : m) d = std::max(d, -g.index);
    return d;
}

Vector act_L_monomial(int n, const Monomial& mono, const Scalar& coef, const CliffordParams& C,
                      int bound) {
    Vector b = Vector::of(mono, coef);
    Vector out;
    if (n <= 0)
        for (int i = n; i <= 0; ++i) out += act_normal_ordered(i, n - i, b, C);
    for (int j = std::max(1, n); j <= bound; ++j) out += act_normal_ordered(n - j, j, b, C);
    for (int i = std::max(1, n); i <= bound; ++i) out += act_normal_ordered(i, n - i, b, C);
    for (int i = 1; i <= n - 1; ++i) out += act_normal_ordered(i, n - i, b, C);
    return out;
}

// --- exterior-algebra primitives for the term-by-term Birkhoff operator ---

struct Prim {
    bool is_wedge;
    Generator g;
};
Prim e(Species s, int i) { return Prim{true, Generator{s, i}}; }
Prim d(Species s, int i) { return Prim{false, Generator{s, i}}; }
constexpr Species M = Species::Minus;
constexpr Species P = Species::Plus;

// Applies ops in the listed order (first listed acts first) and accumulates c * result.
void apply_ops(Vector& out, const Scalar& c, const Monomial& m, std::initializer_list<Prim> ops) {
    if (c.is_zero()) return;
    Monomial cur = m;
    int sign = 1;
    for (const auto& op : ops) {
        if (op.is_wedge && op.g.index > 0) return;
        auto r = op.is_wedge ? wedge(op.g, cur) : contract(op.g, cur);
        if (!r) return;
        cur = std::move(r->m);
        sign *= r->sign;
    }
    out.add(cur, sign > 0 ? c : -c);
}

Scalar integer(long v) { return Scalar(v); }

}  // namespace

Scalar c_const(int n, const CliffordParams& C) {
    Scalar s;
    for (const auto& [i, ci] : C.coeffs()) {
        int j = n - i;
        if (!C.coeffs().count(j)) continue;
        s += C.at(i, M, P) * C.at(j, P, M) - C.at(i, P, P) * C.at(j, M, M);
    }
    return s / Rational(2);
}

Vector act_normal_ordered(int i, int j, const Vector& v, const CliffordParams& C) {
    if (i < j) return act_psi(psi_minus(i), act_psi(psi_plus(j), v, C), C);
    if (i > j) {
        Vector r = act_psi(psi_plus(j), act_psi(psi_minus(i), v, C), C);
        return Scalar(-1) * r;
    }
    Vector a = act_psi(psi_minus(i), act_psi(psi_plus(i), v, C), C);
    Vector b = act_psi(psi_plus(i), act_psi(psi_minus(i), v, C), C);
    return Scalar(Rational(1, 2)) * (a - b);
}

Vector act_L(int n, const Vector& v, const CliffordParams& C, bool check_truncation) {
    if (C.max_k() >= 2) throw std::invalid_argument("L_n needs Poisson order <= 1");
    require_module_vector(v);
    Vector out;
    out.add(v, c_const(n, C));
    for (const auto& [mono, coef] : v.terms()) {
        int bound = depth(mono) + 1;
        Vector part = act_L_monomial(n, mono, coef, C, bound);
        if (check_truncation) {
            Vector wide = act_L_monomial(n, mono, coef, C, 2 * bound);
            if (wide != part)
                throw std::logic_error("L_" + std::to_string(n) +
                                       " truncation lost terms on " + monomial_str(mono));
        }
        out += part;
    }
    return out;
}

Vector act_L_birkhoff(int n, const Vector& v, const Scalar& xi, const Scalar& eps) {
    require_module_vector(v);
    const Scalar half(Rational(1, 2));
    Vector out;
    // constant
    Scalar cn;
    if (n == 2) cn = half * xi * xi;
    if (n == 1) cn = xi * eps;
    if (n == 0) cn = half * eps * eps;
    out.add(v, cn);
    // shift terms
    out.add(shift(n - 1, v), xi);
    out.add(shift(n, v), eps);
    for (const auto& [m, c] : v.terms()) {
        const int bound = depth(m) + 1;
        // two annihilators: psi^-_i psi^+_j, i,j >= 1
        for (int i = 1; i <= n - 1; ++i) {
            const int j = n - i;
            apply_ops(out, c * xi * xi, m, {d(M, 1 - j), d(P, 1 - i)});
            apply_ops(out, c * xi * integer(j), m, {d(M, -j), d(P, 1 - i)});
            apply_ops(out, c * xi * integer(-i), m, {d(M, 1 - j), d(P, -i)});
            apply_ops(out, c * xi * eps, m, {d(M, -j), d(P, 1 - i)});
            apply_ops(out, c * xi * eps, m, {d(M, 1 - j), d(P, -i)});
            apply_ops(out, c * (eps * eps + eps * integer(j - i)), m, {d(M, -j), d(P, -i)});
        }
        // untwisted L_n
        if (n <= 0)
            for (int i = n; i <= 0; ++i) apply_ops(out, c, m, {e(P, n - i), e(M, i)});
        for (int j = std::max(1, n); j <= bound; ++j)
            apply_ops(out, c * integer(j), m, {d(M, -j), e(M, n - j)});
        for (int i = std::max(1, n); i <= bound; ++i)
            apply_ops(out, c * integer(i), m, {d(P, -i), e(P, n - i)});
        for (int i = 1; i <= n - 1; ++i)
            apply_ops(out, c * integer(-static_cast<long>(i) * (n - i)), m, {d(M, -(n - i)), d(P, -i)});
        // psi^+_0 source of eps Shift_n is cancelled by the normal ordering of the regular part
        if (n <= 0) apply_ops(out, c * eps, m, {d(P, 0), e(P, n)});
        if (n == 0) out.add(m, -(c * half * eps));
        // psi^+_0 left multiplication contracts psi^-_0 with weight eps
        if (n >= 1) {
            apply_ops(out, -(c * eps * xi), m, {d(P, 1 - n), d(M, 0)});
            apply_ops(out, -(c * eps * (eps - integer(n))), m, {d(P, -n), d(M, 0)});
        }
    }
    return out;
}

CheckReport virasoro_commutator_check(int m, int n, int cutoff_total2, const CliffordParams& C) {
    CheckReport rep;
    const Scalar central(Rational(-(static_cast<long>(m) * m * m - m), 6));
    for (const auto& b : basis_enumerate(cutoff_total2)) {
        Vector v = Vector::of(b);
        Vector lhs = act_L(m, act_L(n, v, C), C) - act_L(n, act_L(m, v, C), C);
        Vector rhs = Scalar(static_cast<long>(m - n)) * act_L(m + n, v, C);
        if (m + n == 0) rhs.add(v, central);
        ++rep.checked;
        if (lhs != rhs) {
            rep.ok = false;
            rep.where = b;
            rep.detail = "[L_" + std::to_string(m) + ", L_" + std::to_string(n) + "] fails on " +
                         monomial_str(b);
            rep.lhs = lhs;
            rep.rhs = rhs;
            return rep;
        }
    }
    return rep;
}

CheckReport l_psi_commutator_check(int n, const Generator& g, int cutoff_total2,
                                   const CliffordParams& C) {
    CheckReport rep;
    const Species c = g.species;
    const int k = g.index;
    for (const auto& b : basis_enumerate(cutoff_total2)) {
        Vector v = Vector::of(b);
        Vector lhs = act_L(n, act_psi(g, v, C), C) - act_psi(g, act_L(n, v, C), C);
        Vector rhs;
        rhs.add(act_psi(Generator{c, n + k}, v, C), Scalar(static_cast<long>(-k)));
        for (const auto& [s, cs] : C.coeffs()) {
            int i = n + k - s;
            rhs.add(act_psi(psi_minus(i), v, C), C.at(s, P, c));
            rhs.add(act_psi(psi_plus(i), v, C), -C.at(s, M, c));
        }
        ++rep.checked;
        if (lhs != rhs) {
            rep.ok = false;
            rep.where = b;
            rep.detail = "[L_" + std::to_string(n) + ", " + generator_str(g) + "] fails on " +
                         monomial_str(b);
            rep.lhs = lhs;
            rep.rhs = rhs;
            return rep;
        }
    }
    return rep;
}

Scalar whittaker_a1(int k, const CliffordParams& C) {
    return C.at(1, P, M) * Scalar(static_cast<long>(k)) + c_const(1, C);
}

namespace {

// Module monomials with vertical degree <= vmax.
std::vector<Monomial> monomials_by_vert(int vmax) {
    std::vector<Generator> gens;
    for (Species s : {M, P})
        for (int i = vmax; i >= 0; --i) gens.push_back(Generator{s, -i});
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int budget) {
        out.push_back(cur);
        for (std::size_t i = from; i < gens.size(); ++i) {
            int cost = -gens[i].index;
            if (cost > budget) continue;
            cur.push_back(gens[i]);
            rec(i + 1, budget - cost);
            cur.pop_back();
        }
    };
    rec(0, vmax);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WhittakerData whittaker_solve(int k, const CliffordParams& C) {
    if (!C.all_constant()) throw std::invalid_argument("whittaker_solve needs rational parameters");
    if (C.max_k() != 1) throw std::invalid_argument("whittaker_solve needs Poisson order exactly 1");
    if (!C.at(1, P, P).is_zero() || !C.at(1, M, M).is_zero())
        throw std::invalid_argument("whittaker_solve needs C_1 = [[0,xi],[xi,0]]");
    const Scalar xi = C.at(1, P, M);
    if (xi.is_zero()) throw std::invalid_argument("whittaker_solve needs xi != 0");

    WhittakerData out;
    out.k = k;
    out.a1 = whittaker_a1(k, C);
    out.a2 = c_const(2, C);
    const Monomial lead = v_k(k);
    const int V = degrees(lead).vert;
    std::vector<Monomial> unknowns = V > 0 ? monomials_by_vert(V - 1) : std::vector<Monomial>{};
    out.unknowns = unknowns.size();

    auto residual = [&](int n, const Vector& v) {
        Vector r = act_L(n, v, C);
        if (n == 1) r.add(v, -out.a1);
        if (n == 2) r.add(v, -out.a2);
        return r;
    };

    std::map<std::pair<int, Monomial>, std::size_t> row_of;
    std::vector<std::map<std::size_t, Rational>> rows;
    std::vector<Rational> rhs;
    auto row = [&](int n, const Monomial& m) -> std::size_t {
        auto [it, fresh] = row_of.emplace(std::make_pair(n, m), rows.size());
        if (fresh) {
            rows.emplace_back();
            rhs.emplace_back(0);
        }
        return it->second;
    };
    for (int n = 1; n <= V + 2; ++n) {
        const Vector r0 = residual(n, Vector::of(lead));
        for (const auto& [m, c] : r0.terms()) rhs[row(n, m)] -= c.value();
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
            const Vector ru = residual(n, Vector::of(unknowns[u]));
            for (const auto& [m, c] : ru.terms()) rows[row(n, m)][u] += c.value();
        }
    }
    RatMatrix A(rows.size(), std::vector<Rational>(unknowns.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [u, c] : rows[r]) A[r][u] = c;
    SolveResult s = solve(A, rhs, unknowns.size());
    if (!s.consistent)
        throw std::domain_error("no Whittaker vector with leading term v_" + std::to_string(k));
    if (s.nullity != 0)
        throw std::domain_error("Whittaker vector not unique: solution space dimension " +
                                std::to_string(s.nullity));
    out.w = Vector::of(lead);
    for (std::size_t u = 0; u < unknowns.size(); ++u) out.w.add(unknowns[u], Scalar(s.x[u]));
    return out;
}

std::vector<std::vector<int>> vir_monomials(int deg_max) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;  // parts p = 1 - n, non-increasing
    std::function<void(int, int)> rec = [&](int maxpart, int budget) {
        std::vector<int> ns;
        for (int p : cur) ns.push_back(1 - p);
        out.push_back(ns);
        for (int p = std::min(maxpart, budget); p >= 1; --p) {
            cur.push_back(p);
            rec(p, budget - p);
            cur.pop_back();
        }
    };
    rec(deg_max, deg_max);
    return out;
}

RankReport descendant_rank_check(int k, int vir_deg_max, const CliffordParams& C) {
    if (!C.horizontal())
        throw std::invalid_argument("descendant_rank_check needs a diagonal (horizontal) connection");
    RankReport rep;
    rep.k = k;
    rep.vir_deg_max = vir_deg_max;
    const Vector w = whittaker_solve(k, C).w;
    const int cap = total2_of_v(k) + 2 * vir_deg_max;
    std::vector<Monomial> basis = basis_enumerate(cap, {k});
    rep.module_dim = basis.size();
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < basis.size(); ++i) col[basis[i]] = i;

    auto mons = vir_monomials(vir_deg_max);
    rep.monomials = mons.size();
    RatMatrix mat;
    for (const auto& ns : mons) {
        Vector x = w;
        for (auto it = ns.rbegin(); it != ns.rend(); ++it) x = act_L(*it, x, C);
        std::vector<Rational> r(basis.size());
        for (const auto& [m, c] : x.terms()) {
            auto f = col.find(m);
            if (f == col.end()) {
                rep.ok = false;
                rep.detail = "descendant leaves the filtration piece: " + monomial_str(m);
                return rep;
            }
            r[f->second] = c.value();
        }
        mat.push_back(std::move(r));
    }
    rep.rank = rank(mat);
    rep.ok = rep.rank == rep.monomials && rep.monomials == rep.module_dim;
    if (!rep.ok)
        rep.detail = "rank " + std::to_string(rep.rank) + ", descendants " +
                     std::to_string(rep.monomials) + ", module dimension " +
                     std::to_string(rep.module_dim);
    return rep;
}

}  // namespace sfm
