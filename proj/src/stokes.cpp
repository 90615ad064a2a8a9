#include "sfm/stokes.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sfm {

std::vector<Mat2Rat> phi_recursion(int n_max, const Rational& xi, const Rational& eps,
                                   const Rational& tau) {
    if (xi == 0) throw std::domain_error("phi_recursion needs xi != 0");
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    std::vector<Mat2Rat> phi;
    phi.push_back(Mat2Rat{1, 0, 0, 1});
    const Rational two_xi = 2 * xi;
    for (int n = 0; n < n_max; ++n) {
        const Mat2Rat& cur = phi.back();
        Mat2Rat next;
        // off-diagonal entries of order n+1 from order n
        next.b = (-(n + 2 * eps) * cur.b - tau * cur.d) / two_xi;
        next.c = ((n - 2 * eps) * cur.c) / two_xi;
        // diagonal entries: (n+1) A + tau C = 0, (n+1) D = 0
        next.a = -tau * next.c / (n + 1);
        next.d = 0;
        next.a.canonicalize();
        next.b.canonicalize();
        next.c.canonicalize();
        phi.push_back(next);
    }
    return phi;
}

Mat2Rat phi_closed_form(int n, const Rational& xi, const Rational& eps, const Rational& tau) {
    if (n < 1) throw std::invalid_argument("closed form needs n >= 1");
    if (xi == 0) throw std::domain_error("closed form needs xi != 0");
    Rational b = tau;
    for (int i = 1; i <= n - 1; ++i) b *= 2 * eps + i;
    const Rational m2xi = -2 * xi;
    for (int i = 0; i < n; ++i) b /= m2xi;
    b.canonicalize();
    return Mat2Rat{0, b, 0, 0};
}

ProbeResult stokes_limit_probe(long n, double xi, double eps, double tau) {
    if (n < 2) throw std::invalid_argument("probe needs n >= 2");
    if (xi == 0) throw std::domain_error("probe needs xi != 0");
    ProbeResult r;
    // log|(2eps+1)_{n-1}| with compensated summation
    long double sum = 0, comp = 0;
    int sign = 1;
    for (long i = 1; i <= n - 1; ++i) {
        long double f = 2.0L * eps + static_cast<long double>(i);
        if (f == 0) return r;  // the product vanishes exactly
        if (f < 0) sign = -sign;
        long double y = std::log(std::fabs(f)) - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    long double logv = sum - std::lgamma(static_cast<long double>(n)) -
                       2.0L * eps * std::log(static_cast<long double>(n));
    if (logv > std::log(std::numeric_limits<double>::max())) {
        r.overflow = true;
        r.m[0][1] = sign * tau * std::numeric_limits<double>::infinity();
        return r;
    }
    r.m[0][1] = static_cast<double>(sign * tau * std::exp(logv));
    return r;
}

double rgamma(double x) {
    if (x <= 0 && x == std::floor(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

double stokes_reference(double eps, double tau) { return tau * rgamma(2 * eps + 1); }

namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// Lower series: sum_n x^n / (s (s+1) ... (s+n)); gamma(s,x) = x^s e^{-x} * series.
double lower_series(double s, double x) {
    double term = 1.0 / s, sum = term;
    for (int n = 1; n < 100000; ++n) {
        term *= x / (s + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) return sum;
    }
    throw std::runtime_error("incomplete gamma series did not converge");
}

// Legendre continued fraction for e^x x^{-s} Gamma(s,x) (modified Lentz).
double upper_cf_scaled(double s, double x) {
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = std::fabs(b) < kTiny ? 1.0 / kTiny : 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

bool use_cf(double s, double x) { return s > 0 ? x >= s + 1 : x >= 1.0; }

// E1(x) = Gamma(0, x) for 0 < x < 1.
double e1_series(double x) {
    double sum = 0, term = 1;
    for (int k = 1; k < 1000; ++k) {
        term *= -x / k;
        double t = term / k;
        sum += t;
        if (std::fabs(t) < kEps * std::fabs(sum)) break;
    }
    return -std::numbers::egamma - std::log(x) - sum;
}

}  // namespace

double inc_gamma_upper(double s, double x) {
    if (!(x >= 0) || !std::isfinite(s)) throw std::domain_error("inc_gamma_upper needs x >= 0");
    if (x == 0) {
        if (s > 0) return std::tgamma(s);
        throw std::domain_error("Gamma(s, 0) diverges for s <= 0");
    }
    if (use_cf(s, x)) return std::exp(-x + s * std::log(x)) * upper_cf_scaled(s, x);
    if (s > 0) return std::tgamma(s) - std::exp(-x + s * std::log(x)) * lower_series(s, x);
    // s <= 0, 0 < x < 1: climb to (0,1] and recur down with
    // Gamma(a-1,x) = (Gamma(a,x) - x^{a-1} e^{-x}) / (a-1)
    double a = s;
    int steps = 0;
    while (a <= 0) {
        a += 1;
        ++steps;
    }
    double g;
    if (a == 1.0) {  // integer s: start from Gamma(0,x)
        a = 0;
        --steps;
        g = e1_series(x);
    } else {
        g = std::tgamma(a) - std::exp(-x + a * std::log(x)) * lower_series(a, x);
    }
    for (int i = 0; i < steps; ++i) {
        g = (g - std::exp(-x + (a - 1) * std::log(x))) / (a - 1);
        a -= 1;
    }
    return g;
}

double inc_gamma_upper_scaled(double s, double x) {
    if (x > 0 && use_cf(s, x)) return upper_cf_scaled(s, x);
    return std::exp(x - s * std::log(x)) * inc_gamma_upper(s, x);
}

double solution_B(double z, double xi, double eps, double tau) {
    if (!(z > 0) || !(xi > 0)) throw std::domain_error("solution_B needs z > 0 and xi > 0");
    const double x = 2 * xi / z;
    return -tau * inc_gamma_upper_scaled(-2 * eps, x);
}

double ode_residual_B(double z, double xi, double eps, double tau) {
    const double x = 2 * xi / z;
    const double s = -2 * eps;
    const double B = solution_B(z, xi, eps, tau);
    // B = -tau e^x x^{-s} Gamma(s,x)  =>  dB/dx = B (1 - s/x) + tau/x
    const double dBdx = B * (1 - s / x) + tau / x;
    const double dB = dBdx * (-2 * xi / (z * z));
    return dB + 2 * (xi / (z * z) + eps / z) * B + tau / z;
}

std::complex<double> inc_gamma_upper_rotated(double s, double x, int m) {
    if (!(x > 0)) throw std::domain_error("rotation needs x > 0");
    if (s == std::floor(s)) throw std::domain_error("rotation identity needs non-integer s");
    const std::complex<double> phase = std::polar(1.0, 2 * std::numbers::pi * m * s);
    const double lower = std::exp(-x + s * std::log(x)) * lower_series(s, x);
    return std::tgamma(s) - phase * lower;
}

std::complex<double> inc_gamma_monodromy_formula(double s, double x, int m) {
    const std::complex<double> phase = std::polar(1.0, 2 * std::numbers::pi * m * s);
    return phase * inc_gamma_upper(s, x) + (1.0 - phase) * std::tgamma(s);
}

}  // namespace sfm
