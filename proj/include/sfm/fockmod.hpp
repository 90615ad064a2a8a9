#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sfm/clifford.hpp"

namespace sfm {

// Vectors of the induced module: all generator indices <= 0.
bool is_module_vector(const Vector& v);
void require_module_vector(const Vector& v);

// Indices <= 0 act by left multiplication, indices >= 1 as anti-derivations killing the vacuum.
// Requires C_k = 0 for k >= 2.
Vector act_psi(const Generator& g, const Vector& v, const CliffordParams& C);

// Anti-derivation written out as a sum of contractions: psi^{+/-}_m acts as
// xi d/dpsi^{-/+}_{1-m} + (+/-m + eps) d/dpsi^{-/+}_{-m} + sum_k C_k-terms.
// Requires C_1 = [[0,xi],[xi,0]] and C_k = 0 for k >= 2.
Vector act_psi_derivative_form(const Generator& g, const Vector& v, const CliffordParams& C);

// Derivation psi^{+/-}_j -> -/+ psi^{+/-}_{j+m}; summands leaving the module (index > 0) are dropped.
Vector shift(int m, const Vector& v);

struct Degrees {
    int vert = 0;   // sum of -index
    int horiz = 0;  // #psi^- - #psi^+
    int fine2 = 0;  // number of generators
    int total2 = 0; // 2 vert + fine2
};

Degrees degrees(const Monomial& m);

// v_k = psi^-_{-(k-1)} ... psi^-_0 for k > 0, psi^+ analogue for k < 0, vacuum for k = 0.
Monomial v_k(int k);
int total2_of_v(int k);

// All canonical module monomials with total2 <= total2_max and horiz in the set (all if empty),
// ordered by total2, horiz, then lexicographically.
std::vector<Monomial> basis_enumerate(int total2_max, const std::set<int>& horiz = {});

// Exterior-algebra primitives on canonical monomials: returns the sign-carrying result or nothing.
struct SignedMonomial {
    Monomial m;
    int sign;
};
std::optional<SignedMonomial> wedge(const Generator& g, const Monomial& m);
std::optional<SignedMonomial> contract(const Generator& g, const Monomial& m);

}  // namespace sfm
