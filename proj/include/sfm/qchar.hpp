#pragma once

#include <map>
#include <string>
#include <vector>

#include "sfm/clifford.hpp"
#include "sfm/scalar.hpp"

namespace sfm {

// Integer polynomial in q, dense, no trailing zeros.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Integer> c);
    static QPoly one() { return monomial(0); }
    static QPoly monomial(int e, const Integer& c = 1);

    const std::vector<Integer>& coeffs() const& { return c_; }
    std::vector<Integer> coeffs() && { return std::move(c_); }
    Integer at(std::size_t e) const { return e < c_.size() ? c_[e] : Integer(0); }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly shifted(int e) const;  // times q^e, e >= 0
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    std::string str() const;

  private:
    void trim();
    std::vector<Integer> c_;
};

// (T choose K)_q via q-Pascal; requires 0 <= K <= T.
QPoly gauss_binomial(int T, int K);

struct IdentityReport {
    bool pass = false;
    QPoly lhs, rhs, diff;
};

// q^{k(k-1)/2} (M+N choose M-k)_q
//   = sum_x q^{(k+x)(k+x-1)/2} (M choose k+x)_q q^{x(x-1)/2} (N choose x)_q q^x
IdentityReport identity_sum_check(int k, int M, int N);
// q^{k(k-1)/2} (M+N-1 choose M-k)_q + q^{(k+1)k/2} (M+N-1 choose M-k-1)_q
//   = sum_x q^{(k+x)(k+x-1)/2} (M choose k+x)_q q^{x(x-1)/2} (N choose x)_q
IdentityReport identity_split_check(int k, int M, int N);

using Partition = std::vector<int>;  // non-increasing positive parts

bool is_partition(const Partition& p);
int weight(const Partition& p);
std::vector<Partition> partitions_of(int n);
// Partitions of n with at most `parts` parts, each at most `largest`.
std::vector<Partition> partitions_in_box(int n, int parts, int largest);
std::string partition_str(const Partition& p);

struct Split {
    int x = 0;
    Partition left;   // <= M-k-x parts, each <= k+x
    Partition right;  // <= x parts, each <= N-x (already shifted down by k+x)
};

// X with <= M-k parts, each <= N+k. The x largest parts lose k+x each and form `right`.
Split bijection_forward(const Partition& X, int k, int M, int N);
Partition bijection_inverse(const Split& s, int k, int M, int N);

// (horiz k, offset d) -> number of basis monomials; offset d = (total2 - k^2)/2.
using CharacterTable = std::map<std::pair<int, int>, std::size_t>;
CharacterTable module_character(const CliffordParams& C, int k_min, int k_max, int d_max);
// Partition numbers p(0..d_max): graded dimension of C[L_0, L_-1, ...].
std::vector<std::size_t> whittaker_character(int k, int d_max);

// Linear combination of power-sum products p_mu (mu as a partition).
using SymmetricExpr = std::map<Partition, Rational>;

SymmetricExpr schur_to_power_sums(const Partition& lambda);
SymmetricExpr elementary_to_power_sums(int j);
// chi^lambda(mu) via Murnaghan-Nakayama.
Integer mn_character(const Partition& lambda, const Partition& mu);
Integer z_mu(const Partition& mu);
std::string symmetric_str(const SymmetricExpr& e);

// p_n acts as Shift_{-n}.
Vector apply_symmetric(const SymmetricExpr& expr, const Vector& v);

}  // namespace sfm
