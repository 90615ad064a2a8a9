#pragma once

#include <array>
#include <complex>
#include <vector>

#include "sfm/scalar.hpp"

namespace sfm {

// Phi = (A B; C D)
struct Mat2Rat {
    Rational a, b, c, d;
    friend bool operator==(const Mat2Rat& x, const Mat2Rat& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

// Phi_0 .. Phi_{n_max} of the formal gauge series for
// d + diag(xi,-xi)/z^2 + [[eps,tau],[0,-eps]]/z.
std::vector<Mat2Rat> phi_recursion(int n_max, const Rational& xi, const Rational& eps,
                                   const Rational& tau);

// B_n = tau (2eps+1)(2eps+2)...(2eps+n-1) (-2xi)^{-n}, all other entries zero.
Mat2Rat phi_closed_form(int n, const Rational& xi, const Rational& eps, const Rational& tau);

struct ProbeResult {
    std::array<std::array<double, 2>, 2> m{};  // only the (1,2) entry is nonzero
    bool overflow = false;
};

// tau (2eps+1)_{n-1} n^{-2eps} / (n-1)!, evaluated as a sum of logarithms with sign tracking.
ProbeResult stokes_limit_probe(long n, double xi, double eps, double tau);

// 1/Gamma(x), zero at the poles.
double rgamma(double x);
// Limit of the probe: tau / Gamma(2 eps + 1).
double stokes_reference(double eps, double tau);

// Upper incomplete Gamma for real s and x > 0.
double inc_gamma_upper(double s, double x);
// e^x x^{-s} Gamma(s, x), finite for large x.
double inc_gamma_upper_scaled(double s, double x);

// B(z) = -tau exp(2xi/z) (z/2xi)^{-2eps} Gamma(-2eps, 2xi/z)
double solution_B(double z, double xi, double eps, double tau);
// B'(z) + 2(xi/z^2 + eps/z) B(z) + tau/z with B' from dGamma(s,x)/dx = -x^{s-1} e^{-x}.
double ode_residual_B(double z, double xi, double eps, double tau);

// Gamma(s, x e^{2 pi i m}) by continuing the lower-series branch of x^s; identity checks only.
std::complex<double> inc_gamma_upper_rotated(double s, double x, int m);
// e^{2 pi i m s} Gamma(s,x) + (1 - e^{2 pi i m s}) Gamma(s)
std::complex<double> inc_gamma_monodromy_formula(double s, double x, int m);

}  // namespace sfm
