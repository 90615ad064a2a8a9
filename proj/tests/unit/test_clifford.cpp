#include <gtest/gtest.h>

#include <random>

#include "../common/oracles.hpp"
#include "sfm/clifford.hpp"

using namespace sfm;

namespace {
const Scalar xi = Scalar::symbol("xi");
const Scalar eps = Scalar::symbol("eps");
const Scalar tau_p = Scalar::symbol("taup");
const Scalar tau_m = Scalar::symbol("taum");

CliffordParams example_params() {
    std::map<int, SymMatrix2> c;
    c[1] = SymMatrix2{0, xi, 0};
    c[0] = SymMatrix2{tau_p, eps, tau_m};
    return CliffordParams(c);
}

Scalar bilinear(const std::vector<GeneratorTerm>& f, const std::vector<GeneratorTerm>& g,
                const CliffordParams& C) {
    Scalar s;
    for (const auto& a : f)
        for (const auto& b : g)
            s += a.coef * b.coef * anticommutator({a.species, a.index}, {b.species, b.index}, C);
    return s;
}
}  // namespace

TEST(Clifford, AnticommutatorExamples) {
    const CliffordParams C = example_params();
    EXPECT_EQ(anticommutator(psi_plus(1), psi_minus(0), C), xi);
    EXPECT_EQ(anticommutator(psi_minus(1), psi_plus(0), C), xi);
    // the definition gives C_0^{++}; the square is half of it
    EXPECT_EQ(anticommutator(psi_plus(0), psi_plus(0), C), tau_p);
    EXPECT_EQ(anticommutator(psi_minus(0), psi_minus(0), C), tau_m);
    for (int m = -4; m <= 4; ++m) {
        EXPECT_EQ(anticommutator(psi_plus(m), psi_minus(-m), CliffordParams{}), Scalar(m));
        EXPECT_EQ(anticommutator(psi_minus(m), psi_plus(-m), CliffordParams{}), Scalar(-m));
    }
}

TEST(Clifford, AnticommutatorIsSymmetric) {
    std::mt19937 rng(1);
    CliffordParams C = a_to_c(oracle::random_connection(rng, -2, 1));
    for (Species a : {Species::Minus, Species::Plus})
        for (Species b : {Species::Minus, Species::Plus})
            for (int m = -10; m <= 10; ++m)
                for (int n = -10; n <= 10; ++n)
                    EXPECT_EQ(anticommutator({a, m}, {b, n}, C), anticommutator({b, n}, {a, m}, C));
}

TEST(Clifford, ResidueBracketExamples) {
    std::mt19937 rng(2);
    Connection A = oracle::random_connection(rng, -2, 1);
    for (int m = -3; m <= 3; ++m) {
        Scalar got = residue_bracket(basis_section(psi_plus(m)), basis_section(psi_minus(-m)), A);
        EXPECT_EQ(got, Scalar(m) + A.at(0).pp);  // (A_0 e+, e-) = a^{++}
        for (int n = -3; n <= 3; ++n) {
            int k = m + n;
            Scalar want = (k == 0 ? Scalar(m) : Scalar(0)) + A.at(k).pp;
            EXPECT_EQ(residue_bracket(basis_section(psi_plus(m)), basis_section(psi_minus(n)), A), want);
        }
    }
    EXPECT_TRUE(residue_bracket(basis_section(psi_plus(0)), basis_section(psi_plus(0)), Connection{}).is_zero());
}

TEST(Clifford, ResidueMatchesAnticommutator) {
    std::mt19937 rng(3);
    for (int t = 0; t < 3; ++t) {
        Connection A = oracle::random_connection(rng, -2, 1);
        CliffordParams C = a_to_c(A);
        for (Species a : {Species::Minus, Species::Plus})
            for (Species b : {Species::Minus, Species::Plus})
                for (int m = -10; m <= 10; ++m)
                    for (int n = -10; n <= 10; ++n)
                        EXPECT_EQ(residue_bracket(basis_section({a, m}), basis_section({b, n}), A),
                                  anticommutator({a, m}, {b, n}, C));
    }
}

TEST(Clifford, LeftMultiplicationExamples) {
    const CliffordParams C = example_params();
    const Vector vac = Vector::unit();
    EXPECT_EQ(left_multiply(psi_plus(0), Vector::of({psi_plus(0)}), C), Scalar(Rational(1, 2)) * tau_p * vac);
    Vector want = eps * vac;
    want.add({psi_minus(0), psi_plus(0)}, -1);
    EXPECT_EQ(left_multiply(psi_plus(0), Vector::of({psi_minus(0)}), C), want);
    EXPECT_EQ(left_multiply(psi_minus(-2), vac, C), Vector::of({psi_minus(-2)}));
}

// Sampled products of generators with indices in [-3,0]: anticommutation and associativity.
TEST(Clifford, AlgebraRelationsOnSampledWords) {
    std::mt19937 rng(4);
    CliffordParams C = a_to_c(oracle::random_connection(rng, -2, 1));
    std::vector<Generator> gens;
    for (int i = -3; i <= 0; ++i) {
        gens.push_back(psi_minus(i));
        gens.push_back(psi_plus(i));
    }
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(0, 4);
    for (int t = 0; t < 60; ++t) {
        // w as a product of random generators, built by left multiplication
        Vector w = Vector::unit();
        for (int l = len(rng); l > 0; --l) w = left_multiply(gens[pick(rng)], w, C);
        const Generator g = gens[pick(rng)], h = gens[pick(rng)];
        Vector lhs = left_multiply(g, left_multiply(h, w, C), C) + left_multiply(h, left_multiply(g, w, C), C);
        EXPECT_EQ(lhs, anticommutator(g, h, C) * w);
        // (g h) w = g (h w): multiply the product gh into w term by term
        Vector gh = left_multiply(g, Vector::of({h}), C);
        Vector grouped;
        for (const auto& [m, c] : gh.terms()) {
            Vector x = w;
            for (auto it = m.rbegin(); it != m.rend(); ++it) x = left_multiply(*it, x, C);
            grouped.add(x, c);
        }
        EXPECT_EQ(grouped, left_multiply(g, left_multiply(h, w, C), C));
    }
}

TEST(Clifford, GaugeCovariance) {
    const Connection A = birkhoff(xi, eps);
    std::vector<GaugeElement> Fs;
    for (int N = 1; N <= 3; ++N)
        Fs.emplace_back(LaurentMatrix{{{Laurent(1), Laurent::monomial(N, 1)}, {Laurent(), Laurent(1)}}});
    Fs.emplace_back(LaurentMatrix{{{Laurent::monomial(1, 1), Laurent()}, {Laurent(), Laurent::monomial(-1, 1)}}});
    std::mt19937 rng(6);
    Fs.push_back(oracle::random_gauge(rng));
    for (const auto& F : Fs) {
        const CliffordParams CA = a_to_c(A), CB = a_to_c(gauge_transform(F, A));
        for (Species a : {Species::Minus, Species::Plus})
            for (Species b : {Species::Minus, Species::Plus})
                for (int m = -4; m <= 4; ++m)
                    for (int n = -4; n <= 4; ++n)
                        EXPECT_EQ(bilinear(gauge_on_generators(F, a, m), gauge_on_generators(F, b, n), CA),
                                  anticommutator({a, m}, {b, n}, CB));
    }
}

TEST(Clifford, TextForms) {
    EXPECT_EQ(vector_str(Vector{}), "0");
    EXPECT_EQ(vector_str(Vector::unit()), "1*<vacuum>");
    Vector v = Vector::of({psi_minus(-1), psi_plus(0)}, xi + Scalar(1));
    v.add({psi_minus(0)}, Scalar(Rational(-1, 2)));
    EXPECT_EQ(vector_str(v), "(xi + 1)*psi-[-1] psi+[0] + -1/2*psi-[0]");
    EXPECT_THROW(Vector::of({psi_plus(0), psi_minus(0)}), std::invalid_argument);
}
