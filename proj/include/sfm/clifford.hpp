#pragma once

#include <map>
#include <string>
#include <vector>

#include "sfm/connection.hpp"
#include "sfm/scalar.hpp"

namespace sfm {

struct Generator {
    Species species;
    int index;

    // Canonical order: all psi^- before all psi^+, increasing index within a species.
    friend bool operator<(const Generator& a, const Generator& b) {
        if (a.species != b.species) return a.species == Species::Minus;
        return a.index < b.index;
    }
    friend bool operator==(const Generator& a, const Generator& b) {
        return a.species == b.species && a.index == b.index;
    }
    friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
};

inline Generator psi_minus(int n) { return Generator{Species::Minus, n}; }
inline Generator psi_plus(int n) { return Generator{Species::Plus, n}; }

// Strictly increasing in canonical order; empty is the unit (vacuum).
using Monomial = std::vector<Generator>;

bool is_canonical(const Monomial& m);

// Finite Scalar-linear combination of canonical monomials; zero coefficients never stored.
class Vector {
  public:
    using Terms = std::map<Monomial, Scalar>;

    Vector() = default;
    static Vector unit();  // the vacuum / algebra unit
    static Vector of(const Monomial& m, const Scalar& c = Scalar(1));

    void add(const Monomial& m, const Scalar& c);
    void add(const Vector& v, const Scalar& c);
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Terms& terms() const& { return t_; }
    Terms terms() && { return std::move(t_); }  // safe in range-for over a temporary
    Scalar coefficient(const Monomial& m) const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Scalar& c);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& c, Vector v) { return v *= c; }
    friend bool operator==(const Vector& a, const Vector& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    Vector substitute(const std::map<std::string, Rational>& assignment) const;

  private:
    Terms t_;
};

// {psi^a_m, psi^b_n} = m (e^a,e^b) [m+n=0] + C^{ab}_{m+n}
Scalar anticommutator(const Generator& g, const Generator& h, const CliffordParams& C);

// f(z) = sum_n (f^+_n e^+ + f^-_n e^-) z^n
struct SectionCoeff {
    Scalar plus, minus;
};
using LaurentSection = std::map<int, SectionCoeff>;

LaurentSection basis_section(const Generator& g);

// Res_z ( (d + A) f , g ) with (e^+,e^-) = 1 = -(e^-,e^+).
Scalar residue_bracket(const LaurentSection& f, const LaurentSection& g, const Connection& A);

// Product g * v in the deformed Clifford algebra, straightened to canonical form.
Vector left_multiply(const Generator& g, const Vector& v, const CliffordParams& C);

// Text form: `1*psi-[-1] psi+[0] + -1*psi-[0] psi+[-1]`, `1*<vacuum>`, or `0`.
std::string monomial_str(const Monomial& m);
std::string vector_str(const Vector& v);
std::string generator_str(const Generator& g);

}  // namespace sfm
