#pragma once

// Test-only helpers: seeded random inputs and reference computations that do not reuse
// the library's enumeration or elimination code.

#include <algorithm>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "sfm/clifford.hpp"
#include "sfm/connection.hpp"
#include "sfm/fockmod.hpp"
#include "sfm/virasoro.hpp"

namespace sfm {
// readable gtest failure output
inline void PrintTo(const Vector& v, std::ostream* os) { *os << vector_str(v); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.str(); }
}  // namespace sfm

namespace oracle {

using sfm::Rational;
using sfm::Scalar;

inline Rational random_rational(std::mt19937& rng, int num = 5, int den = 4) {
    std::uniform_int_distribution<int> n(-num, num), d(1, den);
    Rational q(n(rng), d(rng));
    q.canonicalize();
    return q;
}

// Random traceless A_k for k in [kmin, kmax].
inline sfm::Connection random_connection(std::mt19937& rng, int kmin, int kmax) {
    std::map<int, sfm::Sl2Matrix> m;
    for (int k = kmin; k <= kmax; ++k) {
        Scalar a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        m[k] = sfm::Sl2Matrix{a, b, c, -a};
    }
    return sfm::Connection(m);
}

inline sfm::Laurent random_laurent(std::mt19937& rng, int emin, int emax) {
    sfm::Laurent l;
    for (int e = emin; e <= emax; ++e) l.add(e, random_rational(rng, 3, 2));
    return l;
}

// Determinant-one Laurent matrix as a product of elementary factors.
inline sfm::GaugeElement random_gauge(std::mt19937& rng) {
    using sfm::Laurent;
    using sfm::LaurentMatrix;
    LaurentMatrix upper{{{Laurent(1), random_laurent(rng, -1, 2)}, {Laurent(), Laurent(1)}}};
    LaurentMatrix lower{{{Laurent(1), Laurent()}, {random_laurent(rng, -2, 1), Laurent(1)}}};
    std::uniform_int_distribution<int> e(-1, 1);
    const int s = e(rng);
    LaurentMatrix flow{{{Laurent::monomial(s, 1), Laurent()}, {Laurent(), Laurent::monomial(-s, 1)}}};
    return sfm::GaugeElement(upper * flow * lower);
}

inline std::map<std::string, Rational> random_point(std::mt19937& rng,
                                                    const std::vector<std::string>& names) {
    std::map<std::string, Rational> p;
    for (const auto& n : names) p[n] = random_rational(rng, 9, 7);
    return p;
}

// All module monomials with vertical degree <= vmax, generated as subsets of
// {psi^a_i : -vmax <= i <= 0} by brute force.
inline std::vector<sfm::Monomial> monomials_vert_le(int vmax) {
    std::vector<sfm::Generator> gens;
    for (int i = -vmax; i <= 0; ++i) {
        gens.push_back(sfm::psi_minus(i));
        gens.push_back(sfm::psi_plus(i));
    }
    std::sort(gens.begin(), gens.end());
    std::vector<sfm::Monomial> out;
    sfm::Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int vert) {
        out.push_back(cur);
        for (std::size_t i = from; i < gens.size(); ++i) {
            int v = vert - gens[i].index;
            if (v > vmax) continue;
            cur.push_back(gens[i]);
            rec(i + 1, v);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

// Plain dense Gaussian elimination over Q; returns nullopt when inconsistent, and the
// nullity through the out-parameter.
inline std::optional<std::vector<Rational>> dense_solve(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> b, std::size_t ncols,
                                                        std::size_t& nullity) {
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    nullity = ncols - r;
    std::vector<Rational> x(ncols);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

struct DenseWhittaker {
    bool exists = false;
    std::size_t nullity = 0;
    sfm::Vector w;
    Rational a1, a2;
};

// Whittaker vector v_k + (lower vertical degree) for rational C. The eigenvalues are read off
// as the v_k-coefficients of L_1 v_k and L_2 v_k; L_n for n = 1..V+5 are imposed.
inline DenseWhittaker dense_whittaker(int k, const sfm::CliffordParams& C) {
    DenseWhittaker out;
    const sfm::Monomial lead = sfm::v_k(k);
    int V = 0;
    for (const auto& g : lead) V -= g.index;
    out.a1 = sfm::act_L(1, sfm::Vector::of(lead), C).coefficient(lead).value();
    out.a2 = sfm::act_L(2, sfm::Vector::of(lead), C).coefficient(lead).value();
    std::vector<sfm::Monomial> unk = V > 0 ? monomials_vert_le(V - 1) : std::vector<sfm::Monomial>{};

    std::vector<std::vector<sfm::Vector>> cols;  // [n][u], u = 0 is the leading vector
    std::map<std::pair<int, sfm::Monomial>, std::size_t> row_of;
    std::vector<sfm::Monomial> all = unk;
    all.insert(all.begin(), lead);
    for (int n = 1; n <= V + 5; ++n) {
        std::vector<sfm::Vector> c;
        for (const auto& m : all) {
            sfm::Vector r = sfm::act_L(n, sfm::Vector::of(m), C);
            if (n == 1) r.add(m, Scalar(-out.a1));
            if (n == 2) r.add(m, Scalar(-out.a2));
            for (const auto& [mm, cc] : r.terms()) row_of.emplace(std::make_pair(n, mm), row_of.size());
            c.push_back(std::move(r));
        }
        cols.push_back(std::move(c));
    }
    std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(unk.size()));
    std::vector<Rational> b(row_of.size());
    for (int n = 1; n <= V + 5; ++n)
        for (std::size_t u = 0; u < all.size(); ++u)
            for (const auto& [m, c] : cols[n - 1][u].terms()) {
                std::size_t r = row_of.at({n, m});
                if (u == 0)
                    b[r] -= c.value();
                else
                    a[r][u - 1] += c.value();
            }
    auto x = dense_solve(a, b, unk.size(), out.nullity);
    if (!x) return out;
    out.exists = true;
    out.w = sfm::Vector::of(lead);
    for (std::size_t u = 0; u < unk.size(); ++u) out.w.add(unk[u], Scalar((*x)[u]));
    return out;
}

}  // namespace oracle
