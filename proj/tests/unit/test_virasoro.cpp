#include <gtest/gtest.h>

#include <random>

#include "../common/oracles.hpp"
#include "sfm/virasoro.hpp"

using namespace sfm;

namespace {
const Scalar xi = Scalar::symbol("xi");
const Scalar eps = Scalar::symbol("eps");

Vector mono(std::initializer_list<Generator> g, const Scalar& c = Scalar(1)) { return Vector::of(Monomial(g), c); }

// A_1 = diag(1,-1), A_0 = [[1/3, 2], [0, -1/3]]
CliffordParams triangular() {
    std::map<int, Sl2Matrix> a;
    a[1] = Sl2Matrix{1, 0, 0, -1};
    a[0] = Sl2Matrix{Rational(1, 3), 2, 0, Rational(-1, 3)};
    return a_to_c(Connection(a));
}
}  // namespace

TEST(Virasoro, ConstantExamples) {
    const CliffordParams B = a_to_c(birkhoff(xi, eps));
    EXPECT_EQ(c_const(2, B), Scalar(Rational(1, 2)) * xi * xi);
    // both orderings (i,j) = (1,0), (0,1) contribute xi*eps/2
    EXPECT_EQ(c_const(1, B), xi * eps);
    EXPECT_EQ(c_const(0, B), Scalar(Rational(1, 2)) * eps * eps);
    EXPECT_TRUE(c_const(3, B).is_zero());
    for (int n = -5; n <= 5; ++n) EXPECT_TRUE(c_const(n, CliffordParams{}).is_zero());
}

TEST(Virasoro, ActionExamples) {
    const CliffordParams B = a_to_c(birkhoff(xi, 0));
    const Vector vac = Vector::unit();
    EXPECT_EQ(act_L(2, vac, B), Scalar(Rational(1, 2)) * xi * xi * vac);
    EXPECT_TRUE(act_L(1, vac, B).is_zero());
    EXPECT_EQ(act_L(0, vac, B), mono({psi_minus(0), psi_plus(0)}));
    EXPECT_EQ(act_L(0, mono({psi_minus(0)}), B), mono({psi_minus(-1)}, xi));
    EXPECT_EQ(act_L(1, mono({psi_minus(0)}), B), mono({psi_minus(0)}, xi));
    Vector want = mono({psi_minus(-1), psi_plus(0)}, xi);
    want.add({psi_minus(0), psi_plus(-1)}, -xi);
    EXPECT_EQ(act_L(0, act_L(0, vac, B), B), want);

    Vector lm1 = mono({psi_minus(-1), psi_plus(0)});
    lm1.add({psi_minus(0), psi_plus(-1)}, 1);
    EXPECT_EQ(act_L(-1, vac, CliffordParams{}), lm1);

    std::map<int, SymMatrix2> big;
    big[2] = SymMatrix2{0, 1, 0};
    EXPECT_THROW(act_L(0, vac, CliffordParams(big)), std::invalid_argument);
}

TEST(Virasoro, ExteriorFormulaMatchesGeneral) {
    const CliffordParams B = a_to_c(birkhoff(xi, eps));
    for (const auto& b : basis_enumerate(6))
        for (int n = -3; n <= 3; ++n) {
            const Vector v = Vector::of(b);
            EXPECT_EQ(act_L_birkhoff(n, v, xi, eps), act_L(n, v, B)) << "n=" << n << " on " << monomial_str(b);
        }
    // xi = eps = 0 is the untwisted operator
    for (const auto& b : basis_enumerate(6))
        for (int n = -2; n <= 2; ++n)
            EXPECT_EQ(act_L_birkhoff(n, Vector::of(b), 0, 0), act_L(n, Vector::of(b), CliffordParams{}));
}

// For n < 0: xi Shift_{n-1} + L_n + eps Shift_n + eps psi^+_n d/dpsi^+_0. The last term only
// sees monomials containing psi^+_0, so the short form holds on the rest.
TEST(Virasoro, NegativeModesOnBirkhoffAreShiftsPlusUntwisted) {
    std::size_t with_zero_mode = 0;
    for (const auto& b : basis_enumerate(8))
        for (int n = -3; n < 0; ++n) {
            const Vector v = Vector::of(b);
            Vector want = act_L(n, v, CliffordParams{});
            want.add(shift(n - 1, v), xi);
            want.add(shift(n, v), eps);
            if (auto c = contract(psi_plus(0), b)) {
                ++with_zero_mode;
                if (auto w = wedge(psi_plus(n), c->m)) want.add(w->m, Scalar(c->sign * w->sign) * eps);
            }
            EXPECT_EQ(act_L_birkhoff(n, v, xi, eps), want) << "n=" << n << " on " << monomial_str(b);
        }
    EXPECT_GT(with_zero_mode, 0u);
}

TEST(Virasoro, FiltrationContract) {
    std::mt19937 rng(31);
    const CliffordParams C = a_to_c(oracle::random_connection(rng, -2, 1));
    for (const auto& b : basis_enumerate(8))
        for (int n = -4; n <= 0; ++n) {
            const int bound = degrees(b).total2 + 2 * (-n + 1);
            for (const auto& [m, c] : act_L(n, Vector::of(b), C).terms()) EXPECT_LE(degrees(m).total2, bound);
        }
}

TEST(Virasoro, TruncationDebugModeAgrees) {
    std::mt19937 rng(32);
    const CliffordParams C = a_to_c(oracle::random_connection(rng, -2, 1));
    for (const auto& b : basis_enumerate(6))
        for (int n = -3; n <= 4; ++n) {
            const Vector v = Vector::of(b);
            Vector checked;
            EXPECT_NO_THROW(checked = act_L(n, v, C, true));
            EXPECT_EQ(checked, act_L(n, v, C));
        }
}

TEST(Virasoro, CommutatorRelationsSampled) {
    std::mt19937 rng(33);
    const CliffordParams profiles[] = {CliffordParams{}, a_to_c(birkhoff(Rational(1), Rational(1, 3))),
                                       a_to_c(oracle::random_connection(rng, -2, 1))};
    for (const auto& C : profiles) {
        auto r = virasoro_commutator_check(2, -2, 8, C);
        EXPECT_TRUE(r.ok) << r.detail;
        r = virasoro_commutator_check(1, -1, 8, C);
        EXPECT_TRUE(r.ok) << r.detail;
        r = virasoro_commutator_check(-1, -2, 6, C);
        EXPECT_TRUE(r.ok) << r.detail;
        EXPECT_GT(r.checked, 0u);
    }
}

TEST(Virasoro, CentralTermIsNotOptional) {
    // [L_2, L_-2] on the vacuum for C = 0 is 4 L_0 - 1; dropping the -1 would leave a residue
    const Vector vac = Vector::unit();
    const CliffordParams C;
    Vector lhs = act_L(2, act_L(-2, vac, C), C) - act_L(-2, act_L(2, vac, C), C);
    Vector rhs = Scalar(4) * act_L(0, vac, C) - vac;
    EXPECT_EQ(lhs, rhs);
}

TEST(Virasoro, ConnectionActionOnGenerators) {
    std::mt19937 rng(34);
    const CliffordParams profiles[] = {CliffordParams{}, a_to_c(birkhoff(xi, eps)),
                                       a_to_c(oracle::random_connection(rng, -2, 1))};
    for (const auto& C : profiles)
        for (int n = -2; n <= 2; ++n)
            for (int k = -2; k <= 2; ++k)
                for (Species s : {Species::Minus, Species::Plus}) {
                    auto r = l_psi_commutator_check(n, {s, k}, 6, C);
                    EXPECT_TRUE(r.ok) << r.detail;
                }
}

TEST(Whittaker, BirkhoffLeadingVectorsAreEigenvectorsSymbolically) {
    const CliffordParams B = a_to_c(birkhoff(xi, 0));
    for (int k = -3; k <= 3; ++k) {
        const Vector v = Vector::of(v_k(k));
        EXPECT_EQ(act_L(2, v, B), Scalar(Rational(1, 2)) * xi * xi * v) << k;
        EXPECT_EQ(act_L(1, v, B), Scalar(k) * xi * v) << k;
        for (int n = 3; n <= 6; ++n) EXPECT_TRUE(act_L(n, v, B).is_zero()) << k << " " << n;
    }
}

// [L_1, L_0] = L_1, so the L_1 eigenvalue on v_k is xi k + c_1 = xi (k + eps).
TEST(Whittaker, FirstEigenvalueFollowsFromTheAlgebra) {
    const CliffordParams B = a_to_c(birkhoff(xi, eps));
    for (int k = -2; k <= 2; ++k) {
        const Vector v = Vector::of(v_k(k));
        EXPECT_EQ(act_L(1, v, B), xi * (Scalar(k) + eps) * v);
        EXPECT_EQ(whittaker_a1(k, B), xi * (Scalar(k) + eps));
    }
}

TEST(Whittaker, SolverAgreesWithDenseOracle) {
    const CliffordParams profiles[] = {triangular(), a_to_c(birkhoff(Rational(2), Rational(1, 5)))};
    for (const auto& C : profiles)
        for (int k = -3; k <= 3; ++k) {
            WhittakerData w = whittaker_solve(k, C);
            oracle::DenseWhittaker d = oracle::dense_whittaker(k, C);
            ASSERT_TRUE(d.exists) << k;
            EXPECT_EQ(d.nullity, 0u) << k;
            EXPECT_EQ(w.w, d.w) << k;
            EXPECT_EQ(w.a1, Scalar(d.a1));
            EXPECT_EQ(w.a2, Scalar(d.a2));
            EXPECT_EQ(w.w.coefficient(v_k(k)), Scalar(1));
        }
}

TEST(Whittaker, BirkhoffNeedsNoCorrection) {
    const CliffordParams B = a_to_c(birkhoff(Rational(1), Rational(1, 3)));
    for (int k = -3; k <= 3; ++k) EXPECT_EQ(whittaker_solve(k, B).w, Vector::of(v_k(k)));
    EXPECT_EQ(whittaker_solve(0, triangular()).w, Vector::unit());
}

TEST(Whittaker, TriangularConnectionHasNontrivialCorrections) {
    bool any = false;
    for (int k = 2; k <= 3; ++k) any |= whittaker_solve(k, triangular()).w != Vector::of(v_k(k));
    EXPECT_TRUE(any);
}

TEST(Whittaker, RejectsSymbolicAndRegularInput) {
    EXPECT_THROW(whittaker_solve(1, a_to_c(birkhoff(xi, 0))), std::invalid_argument);
    std::map<int, Sl2Matrix> a;
    a[0] = Sl2Matrix{1, 0, 0, -1};
    EXPECT_THROW(whittaker_solve(1, a_to_c(Connection(a))), std::invalid_argument);
}

TEST(Descendants, VirMonomialCountsArePartitionSums) {
    const std::vector<std::size_t> cumulative{1, 2, 4, 7, 12, 19};
    for (int d = 0; d <= 5; ++d) EXPECT_EQ(vir_monomials(d).size(), cumulative[d]) << d;
    auto two = vir_monomials(2);
    std::set<std::vector<int>> got(two.begin(), two.end());
    EXPECT_EQ(got, (std::set<std::vector<int>>{{}, {0}, {0, 0}, {-1}}));
}

TEST(Descendants, RankMatchesModuleDimension) {
    const CliffordParams B = a_to_c(birkhoff(Rational(1), Rational(0)));
    RankReport r = descendant_rank_check(0, 2, B);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.monomials, 4u);
    EXPECT_EQ(r.rank, 4u);
    EXPECT_EQ(r.module_dim, 4u);
    r = descendant_rank_check(0, 4, B);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.rank, 12u);
    r = descendant_rank_check(1, 0, B);
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_EQ(r.rank, 1u);
    r = descendant_rank_check(-2, 3, a_to_c(birkhoff(Rational(1), Rational(1, 3))));
    EXPECT_TRUE(r.ok) << r.detail;
}
