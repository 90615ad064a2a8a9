#include <gtest/gtest.h>

#include <random>

#include "../common/oracles.hpp"
#include "sfm/connection.hpp"
#include "sfm/virasoro.hpp"

using namespace sfm;

namespace {
const Scalar xi = Scalar::symbol("xi");
const Scalar eps = Scalar::symbol("eps");
const Scalar tau_p = Scalar::symbol("taup");
const Scalar tau_m = Scalar::symbol("taum");

LaurentMatrix upper(int N) {
    return {{{Laurent(1), Laurent::monomial(N, 1)}, {Laurent(), Laurent(1)}}};
}
}  // namespace

TEST(Connection, CliffordDictionaryExamples) {
    std::map<int, Sl2Matrix> a;
    a[1] = Sl2Matrix{xi, 0, 0, -xi};
    a[0] = Sl2Matrix{eps, tau_m, -tau_p, -eps};
    CliffordParams C = a_to_c(Connection(a));
    EXPECT_EQ(C.coeffs().at(1), (SymMatrix2{0, xi, 0}));
    EXPECT_EQ(C.coeffs().at(0), (SymMatrix2{tau_p, eps, tau_m}));
    EXPECT_EQ(c_to_a(C), Connection(a));
    EXPECT_TRUE(a_to_c(Connection{}).empty());
    EXPECT_TRUE(c_to_a(CliffordParams{}).is_zero());
}

TEST(Connection, DictionaryRoundTripsOnRandomInput) {
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        Connection A = oracle::random_connection(rng, -3, 2);
        EXPECT_EQ(c_to_a(a_to_c(A)), A);
        CliffordParams C = a_to_c(A);
        EXPECT_EQ(a_to_c(c_to_a(C)), C);
    }
}

TEST(Connection, RejectsTraceful) {
    std::map<int, Sl2Matrix> a;
    a[0] = Sl2Matrix{1, 0, 0, 1};
    EXPECT_THROW(Connection{a}, std::invalid_argument);
}

TEST(Connection, BirkhoffOrderAndType) {
    Connection B = birkhoff(xi, eps);
    EXPECT_EQ(poisson_order(B), 1);
    EXPECT_FALSE(is_regular(B));
    FormalType f = formal_type(B);
    EXPECT_EQ(f.xi, xi);
    EXPECT_EQ(f.eps, eps);
    std::map<int, Sl2Matrix> a;
    a[0] = Sl2Matrix{eps, 0, 0, -eps};
    EXPECT_EQ(poisson_order(Connection(a)), 0);
    EXPECT_EQ(poisson_order(Connection{}), 0);
    a[0].pm = 1;
    EXPECT_THROW(formal_type(Connection(a)), std::invalid_argument);
}

TEST(Laurent, ParseArithmeticAndPrint) {
    SymbolContext ctx({"xi"});
    Laurent l = parse_laurent("2*z^2 - xi*z^(-1) + 3", &ctx);
    EXPECT_EQ(l.at(2), Scalar(2));
    EXPECT_EQ(l.at(-1), -xi);
    EXPECT_EQ(l.at(0), Scalar(3));
    EXPECT_EQ(parse_laurent(l.str(), &ctx), l);
    EXPECT_EQ(l.derivative().at(1), Scalar(4));
    EXPECT_EQ(l.derivative().at(-2), xi);
    EXPECT_EQ((Laurent::monomial(2, 1) * Laurent::monomial(-3, 1)), Laurent::monomial(-1, 1));
    EXPECT_THROW(parse_laurent("z^", &ctx), parse_error);
}

TEST(Gauge, DeterminantOneRequired) {
    LaurentMatrix f{{{Laurent(2), Laurent()}, {Laurent(), Laurent(1)}}};
    EXPECT_THROW(GaugeElement{f}, std::invalid_argument);
    GaugeElement F(upper(2));
    LaurentMatrix id = F.matrix() * F.inverse();
    EXPECT_EQ(id, identity_matrix());
}

TEST(Gauge, UpperTriangularExample) {
    const Connection A = birkhoff(xi, eps);
    for (int N = 1; N <= 4; ++N) {
        Connection B = gauge_transform(GaugeElement(upper(N)), A);
        // [[xi, -2 xi z^N],[0,-xi]]/z^2 + [[eps, -2 eps z^N],[0,-eps]]/z - [[0, N z^{N-1}],[0,0]]
        LaurentMatrix want = connection_matrix(A);
        want[0][1] = Laurent::monomial(N - 2, -2 * xi) + Laurent::monomial(N - 1, -2 * eps) +
                     Laurent::monomial(N - 1, Scalar(-N));
        EXPECT_EQ(connection_matrix(B), want) << "N=" << N;
    }
}

TEST(Gauge, SpectralFlowExample) {
    const Connection A = birkhoff(xi, eps);
    LaurentMatrix f{{{Laurent::monomial(1, 1), Laurent()}, {Laurent(), Laurent::monomial(-1, 1)}}};
    Connection B = gauge_transform(GaugeElement(f), A);
    EXPECT_EQ(B, birkhoff(xi, eps - 1));
}

TEST(Gauge, IdentityAndGeneratorImages) {
    const Connection A = birkhoff(xi, eps);
    GaugeElement I(identity_matrix());
    EXPECT_EQ(gauge_transform(I, A), A);
    auto im = gauge_on_generators(I, Species::Minus, -2);
    ASSERT_EQ(im.size(), 1u);
    EXPECT_EQ(im[0].index, -2);

    auto u = gauge_on_generators(GaugeElement(upper(2)), Species::Minus, -1);
    ASSERT_EQ(u.size(), 2u);
    std::map<std::pair<int, int>, Scalar> got;
    for (const auto& t : u) got[{static_cast<int>(t.species), t.index}] = t.coef;
    EXPECT_EQ((got[{-1, -1}]), Scalar(1));
    EXPECT_EQ((got[{1, 1}]), Scalar(-1));
}

TEST(Gauge, CompositionLawAndTracelessness) {
    std::mt19937 rng(17);
    for (int t = 0; t < 15; ++t) {
        GaugeElement F = oracle::random_gauge(rng), G = oracle::random_gauge(rng);
        Connection A = oracle::random_connection(rng, -2, 1);
        Connection lhs = gauge_transform(F * G, A);
        EXPECT_EQ(lhs, gauge_transform(F, gauge_transform(G, A)));
        for (const auto& [k, a] : lhs.coeffs()) EXPECT_TRUE(a.is_traceless());
    }
}

// c_n = -1/2 [z^{-n-2}] det A(z): the normal-ordering constant is a residue of the determinant.
TEST(Connection, DeterminantBridge) {
    std::mt19937 rng(23);
    for (int t = 0; t < 10; ++t) {
        Connection A = oracle::random_connection(rng, -2, 1);
        Laurent det = determinant(connection_matrix(A));
        CliffordParams C = a_to_c(A);
        for (int n = -6; n <= 4; ++n) EXPECT_EQ(c_const(n, C), det.at(-n - 2) / Rational(-2)) << n;
    }
    // symbolic: Birkhoff with an off-diagonal regular part
    std::map<int, Sl2Matrix> a;
    a[1] = Sl2Matrix{xi, 0, 0, -xi};
    a[0] = Sl2Matrix{eps, tau_m, -tau_p, -eps};
    Connection A(a);
    Laurent det = determinant(connection_matrix(A));
    for (int n = -2; n <= 2; ++n) EXPECT_EQ(c_const(n, a_to_c(A)), det.at(-n - 2) / Rational(-2));
    EXPECT_EQ(c_const(0, a_to_c(A)), Scalar(Rational(1, 2)) * (eps * eps - tau_p * tau_m));
}
