#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfm/fockmod.hpp"

namespace sfm {

// c_n = 1/2 sum_{i+j=n} (C_i^{-+} C_j^{+-} - C_i^{++} C_j^{--}) = -1/2 [z^{-n-2}] det A(z).
// The minus sign on the C^{++} C^{--} term is forced by the Virasoro relations.
Scalar c_const(int n, const CliffordParams& C);

// Lifted to a single normal-ordered pair :psi^-_i psi^+_j: applied to v.
Vector act_normal_ordered(int i, int j, const Vector& v, const CliffordParams& C);

// L_n = sum_{i+j=n} :psi^-_i psi^+_j: + c_n. With check_truncation the annihilation
// bound is doubled and the result compared, throwing std::logic_error on any difference.
Vector act_L(int n, const Vector& v, const CliffordParams& C, bool check_truncation = false);

// The same operator for C = C(birkhoff(xi, eps)), evaluated term by term on the exterior
// algebra: wedge/contraction operators instead of Clifford straightening.
Vector act_L_birkhoff(int n, const Vector& v, const Scalar& xi, const Scalar& eps);

struct CheckReport {
    bool ok = true;
    std::size_t checked = 0;
    std::string detail;            // first failure
    std::optional<Monomial> where; // basis element of the first failure
    Vector lhs, rhs;
};

// [L_m, L_n] b = (m-n) L_{m+n} b - (m^3-m)/6 [m+n=0] b on every basis b with total2 <= cutoff.
CheckReport virasoro_commutator_check(int m, int n, int cutoff_total2, const CliffordParams& C);

// [L_n, psi^c_k] = -k psi^c_{n+k} + sum_i (psi^-_i C^{+c}_{n-i+k} - psi^+_i C^{-c}_{n-i+k}).
CheckReport l_psi_commutator_check(int n, const Generator& g, int cutoff_total2,
                                   const CliffordParams& C);

struct WhittakerData {
    int k = 0;
    Scalar a1, a2;  // L_1 w = a1 w, L_2 w = a2 w, L_{n>=3} w = 0
    Vector w;
    std::size_t unknowns = 0;
};

// Eigenvalue of L_1 on the leading vector v_k: xi k + c_1.
Scalar whittaker_a1(int k, const CliffordParams& C);

// w = v_k + (terms of strictly smaller vertical degree), all C entries rational.
// Throws std::domain_error carrying "no solution" or the solution-space dimension.
WhittakerData whittaker_solve(int k, const CliffordParams& C);

struct RankReport {
    bool ok = true;
    int k = 0;
    int vir_deg_max = 0;
    std::size_t monomials = 0;
    std::size_t rank = 0;
    std::size_t module_dim = 0;
    std::string detail;
};

// Products L_{n_1} ... L_{n_t}, n_1 <= ... <= n_t <= 0, with sum(1 - n_i) <= deg_max.
std::vector<std::vector<int>> vir_monomials(int deg_max);

RankReport descendant_rank_check(int k, int vir_deg_max, const CliffordParams& C);

}  // namespace sfm
