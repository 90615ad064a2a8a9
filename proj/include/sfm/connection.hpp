#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "sfm/scalar.hpp"

namespace sfm {

enum class Species : signed char { Minus = -1, Plus = 1 };

inline char species_char(Species s) { return s == Species::Plus ? '+' : '-'; }

// Entries a^{ab}, rows and columns indexed by {+,-}.
struct Sl2Matrix {
    Scalar pp, pm, mp, mm;

    const Scalar& at(Species row, Species col) const;
    bool is_zero() const { return pp.is_zero() && pm.is_zero() && mp.is_zero() && mm.is_zero(); }
    bool is_traceless() const { return (pp + mm).is_zero(); }
    friend bool operator==(const Sl2Matrix& a, const Sl2Matrix& b) {
        return a.pp == b.pp && a.pm == b.pm && a.mp == b.mp && a.mm == b.mm;
    }
};

// c^{-+} is c^{+-}.
struct SymMatrix2 {
    Scalar pp, pm, mm;

    const Scalar& at(Species a, Species b) const;
    bool is_zero() const { return pp.is_zero() && pm.is_zero() && mm.is_zero(); }
    friend bool operator==(const SymMatrix2& a, const SymMatrix2& b) {
        return a.pp == b.pp && a.pm == b.pm && a.mm == b.mm;
    }
};

// d/dz + sum_k A_k z^{-k-1}; only nonzero, traceless A_k are stored.
class Connection {
  public:
    Connection() = default;
    explicit Connection(const std::map<int, Sl2Matrix>& coeffs);

    const std::map<int, Sl2Matrix>& coeffs() const& { return a_; }
    std::map<int, Sl2Matrix> coeffs() && { return std::move(a_); }
    Sl2Matrix at(int k) const;
    bool is_zero() const { return a_.empty(); }
    friend bool operator==(const Connection& a, const Connection& b) { return a.a_ == b.a_; }

  private:
    std::map<int, Sl2Matrix> a_;
};

class CliffordParams {
  public:
    CliffordParams() = default;
    explicit CliffordParams(const std::map<int, SymMatrix2>& coeffs);

    const std::map<int, SymMatrix2>& coeffs() const& { return c_; }
    std::map<int, SymMatrix2> coeffs() && { return std::move(c_); }
    // C_k^{ab}; zero outside the support.
    const Scalar& at(int k, Species a, Species b) const;
    bool empty() const { return c_.empty(); }
    // Largest k with C_k != 0 (0 when the support is in k <= 0).
    int max_k() const;
    bool all_constant() const;
    // No C^{++} or C^{--} anywhere: horizontal degree is a grading.
    bool horizontal() const;
    CliffordParams substitute(const std::map<std::string, Rational>& assignment) const;
    friend bool operator==(const CliffordParams& a, const CliffordParams& b) { return a.c_ == b.c_; }

  private:
    std::map<int, SymMatrix2> c_;
};

struct FormalType {
    Scalar xi, eps;
};

CliffordParams a_to_c(const Connection& A);
Connection c_to_a(const CliffordParams& C);

Connection birkhoff(const Scalar& xi, const Scalar& eps);
// max{k : A_k != 0}; 0 for regular or zero connections.
int poisson_order(const Connection& A);
bool is_regular(const Connection& A);
FormalType formal_type(const Connection& A);

// Finite Laurent polynomial in z.
class Laurent {
  public:
    Laurent() = default;
    Laurent(const Scalar& c) { add(0, c); }  // NOLINT
    static Laurent monomial(int e, const Scalar& c);

    void add(int e, const Scalar& c);
    const std::map<int, Scalar>& coeffs() const& { return c_; }
    std::map<int, Scalar> coeffs() && { return std::move(c_); }
    Scalar at(int e) const;
    bool is_zero() const { return c_.empty(); }
    Laurent derivative() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }

    std::string str() const;

  private:
    std::map<int, Scalar> c_;
};

// Grammar: sum of `coef*z^e` terms, e any integer; the coefficient may be a scalar monomial.
Laurent parse_laurent(std::string_view text, const SymbolContext* ctx = nullptr);

// 2x2 matrix over Laurent polynomials, rows/columns ordered (+,-).
using LaurentMatrix = std::array<std::array<Laurent, 2>, 2>;

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
Laurent determinant(const LaurentMatrix& m);
LaurentMatrix identity_matrix();

class GaugeElement {
  public:
    explicit GaugeElement(const LaurentMatrix& f);  // throws unless det f == 1

    const LaurentMatrix& matrix() const& { return f_; }
    LaurentMatrix matrix() && { return std::move(f_); }
    // Adjugate, which is the inverse since det = 1.
    LaurentMatrix inverse() const;
    friend GaugeElement operator*(const GaugeElement& a, const GaugeElement& b) {
        return GaugeElement(a.f_ * b.f_);
    }

  private:
    LaurentMatrix f_;
};

// Matrix-valued A(z) = sum_k A_k z^{-k-1}, and back.
LaurentMatrix connection_matrix(const Connection& A);
Connection connection_from_matrix(const LaurentMatrix& m);

// F[d + A] = d - (dF)F^{-1} + F A F^{-1}
Connection gauge_transform(const GaugeElement& F, const Connection& A);

struct GeneratorTerm {
    Species species;
    int index;
    Scalar coef;
};

// F^{-1} applied to the section e^{species} z^{index}, re-expanded in the basis e^a z^n.
std::vector<GeneratorTerm> gauge_on_generators(const GaugeElement& F, Species species, int index);

}  // namespace sfm
