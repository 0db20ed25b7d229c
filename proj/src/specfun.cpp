#include "rnls/specfun.hpp"

#include <cmath>
#include <vector>

namespace rnls::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.5772156649015328606065120900824024310;

bool near_integer(double x, double tol = 1e-9) {
    return std::abs(x - std::round(x)) < tol;
}

double digamma_int(int j) {
    // psi(j) for j >= 1
    double s = -kEulerGamma;
    for (int i = 1; i < j; ++i) s += 1.0 / i;
    return s;
}

double factorial(int j) {
    double f = 1.0;
    for (int i = 2; i <= j; ++i) f *= i;
    return f;
}

// ---- J and I power series --------------------------------------------------

double bessel_j_series(double nu, double x) {
    double t = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    double q = 0.25 * x * x;
    KahanSum s;
    s.add(t);
    for (int m = 0; m < 400; ++m) {
        t *= -q / ((m + 1.0) * (nu + m + 1.0));
        s.add(t);
        if (std::abs(t) < 1e-18 * (std::abs(s.value()) + 1e-300)) break;
    }
    return s.value().real();
}

double bessel_i_series(double nu, double x) {
    double t = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    double q = 0.25 * x * x;
    KahanSum s;
    s.add(t);
    for (int m = 0; m < 600; ++m) {
        t *= q / ((m + 1.0) * (nu + m + 1.0));
        s.add(t);
        if (std::abs(t) < 1e-18 * std::abs(s.value())) break;
    }
    return s.value().real();
}

// ---- large-argument asymptotics for J/Y -------------------------------------

void jy_asymptotic(double nu, double x, double* jv, double* yv) {
    double mu = 4.0 * nu * nu;
    double P = 1.0, Q = 0.0;
    double term = 1.0;
    double prev = 1e300;
    for (int j = 1; j < 40; ++j) {
        term *= (mu - (2.0 * j - 1.0) * (2.0 * j - 1.0)) / (j * 8.0 * x);
        if (std::abs(term) > prev) break;  // asymptotic tail started growing
        prev = std::abs(term);
        double signed_term =
            ((j / 2) % 2 == 0 ? term : -term);  // (-1)^{floor(j/2)}
        if (j % 2 == 1)
            Q += signed_term;
        else
            P += signed_term;
        if (std::abs(term) < 1e-17) break;
    }
    double chi = x - (0.5 * nu + 0.25) * kPi;
    double amp = std::sqrt(2.0 / (kPi * x));
    if (jv) *jv = amp * (P * std::cos(chi) - Q * std::sin(chi));
    if (yv) *yv = amp * (P * std::sin(chi) + Q * std::cos(chi));
}

double bessel_y_int_series(int n, double x) {
    // log series for integer order n >= 0
    double xh = 0.5 * x;
    double jn = bessel_j_series(double(n), x);
    double sum1 = 0.0;
    for (int m = 0; m < n; ++m)
        sum1 += factorial(n - m - 1) / factorial(m) * std::pow(xh, 2 * m - n);
    KahanSum s2;
    double t = std::pow(xh, n) / factorial(n);
    double q = xh * xh;
    for (int m = 0; m < 400; ++m) {
        double c = digamma_int(m + 1) + digamma_int(n + m + 1);
        s2.add(t * c);
        t *= -q / ((m + 1.0) * (n + m + 1.0));
        if (std::abs(t) * (std::abs(c) + 2.0) <
            1e-18 * (std::abs(s2.value()) + 1e-300))
            break;
    }
    return (2.0 / kPi) * std::log(xh) * jn - sum1 / kPi -
           s2.value().real() / kPi;
}

}  // namespace

double bessel_j(double nu, double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::domain, "bessel_j: x must be > 0");
    if (near_integer(nu) && nu < 0.0) {
        int n = int(std::lround(-nu));
        return (n % 2 == 0 ? 1.0 : -1.0) * bessel_j(-nu, x);
    }
    if (x > 12.0) {
        double jv;
        jy_asymptotic(nu, x, &jv, nullptr);
        return jv;
    }
    return bessel_j_series(nu, x);
}

double bessel_y(double nu, double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::domain, "bessel_y: x must be > 0");
    if (x > 12.0) {
        double yv;
        jy_asymptotic(nu, x, nullptr, &yv);
        return yv;
    }
    if (near_integer(nu)) {
        int n = int(std::lround(nu));
        double y = bessel_y_int_series(std::abs(n), x);
        return (n < 0 && std::abs(n) % 2 == 1) ? -y : y;
    }
    double c = std::cos(nu * kPi), s = std::sin(nu * kPi);
    return (bessel_j_series(nu, x) * c - bessel_j_series(-nu, x)) / s;
}

double bessel_i(double nu, double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::domain, "bessel_i: x must be > 0");
    if (x > 300.0) throw Error(ErrorKind::numeric, "bessel_i: x too large");
    if (near_integer(nu) && nu < 0.0) return bessel_i(-nu, x);
    return bessel_i_series(nu, x);
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::domain, "bessel_k: x must be > 0");
    if (x > 600.0) return 0.0;  // below double underflow for the scales used
    nu = std::abs(nu);
    // cutoff T with x cosh T - nu T > 46 (integrand below ~1e-20 relative)
    double T = 5.0;
    for (int it = 0; it < 8; ++it)
        T = std::acosh(std::max(1.0 + 1e-12, (46.0 + nu * T + x) / x));
    auto f = [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(nu * t); };
    double coarse = 0.0;
    int nc = 64;
    for (int i = 0; i <= nc; ++i) {
        double t = T * i / nc;
        double w = (i == 0 || i == nc) ? 0.5 : 1.0;
        coarse += w * f(t);
    }
    coarse *= T / nc;
    double tol = std::max(1e-300, 1e-13 * std::abs(coarse));
    return integrate_real(f, 0.0, T, tol, 48);
}

// ---- confluent hypergeometric ------------------------------------------------

Complex hyp1f1(Complex a, Complex b, Complex z) {
    if (std::abs(z) > 60.0)
        throw Error(ErrorKind::numeric, "hyp1f1: |z| > 60 outside series regime");
    bool b_pole = near_integer(b.real()) && std::abs(b.imag()) < 1e-9 &&
                  b.real() < 0.5;
    int terminate_at = -1;
    if (b_pole) {
        bool a_term = near_integer(a.real()) && std::abs(a.imag()) < 1e-9 &&
                      a.real() < 0.5;
        int M = int(std::lround(-b.real()));
        int J = a_term ? int(std::lround(-a.real())) : -1;
        if (!a_term || J > M)
            throw Error(ErrorKind::domain,
                        "hyp1f1: b is a non-positive integer (series pole)");
        terminate_at = J;  // numerator zero from m = J+1 on, before the pole
    }
    KahanSum s;
    Complex t{1.0, 0.0};
    s.add(t);
    int quiet = 0;
    for (int m = 0; m < 700; ++m) {
        if (terminate_at >= 0 && m >= terminate_at) return s.value();
        t *= (a + double(m)) / ((b + double(m)) * double(m + 1)) * z;
        s.add(t);
        if (std::abs(t) <= 1e-18 * std::abs(s.value())) {
            if (++quiet >= 2) return s.value();
        } else {
            quiet = 0;
        }
    }
    throw Error(ErrorKind::numeric, "hyp1f1: no convergence within 700 terms");
}

Complex whittaker_m(Complex kappa, Complex mu, Complex z) {
    Complex b = 1.0 + 2.0 * mu;
    if (near_integer(b.real()) && std::abs(b.imag()) < 1e-9 && b.real() < 0.5) {
        Complex a = mu - kappa + 0.5;
        bool a_term = near_integer(a.real()) && std::abs(a.imag()) < 1e-9 &&
                      a.real() < 0.5 && -a.real() <= -b.real();
        if (!a_term)
            throw Error(ErrorKind::domain,
                        "whittaker_m: 1+2mu is a non-positive integer");
    }
    return std::exp(-0.5 * z) * std::pow(z, mu + 0.5) *
           hyp1f1(mu - kappa + 0.5, b, z);
}

Complex whittaker_second(Complex kappa, Complex z) {
    if (std::abs(z) > 60.0)
        throw Error(ErrorKind::numeric,
                    "whittaker_second: |z| > 60 outside series regime");
    if (std::abs(z) == 0.0)
        throw Error(ErrorKind::domain, "whittaker_second: z = 0");
    int n = std::max(80, int(3.0 * std::abs(z)) + 40);
    // Reduced equation z^2 w'' + (-z^2/4 + kappa z - 2) w = 0.
    // b: regular Frobenius root z^2 (this is M_{kappa,3/2} up to exp(-z/2)
    // refactoring -- it IS the full solution, the series solves the same ODE).
    std::vector<Complex> bc(n), ac(n);
    bc[0] = 1.0;
    for (int j = 1; j < n; ++j) {
        Complex prev2 = j >= 2 ? bc[j - 2] : Complex{0.0};
        bc[j] = (prev2 * 0.25 - kappa * bc[j - 1]) / double(j * (j + 3));
    }
    ac[0] = 1.0;
    ac[1] = 0.5 * kappa;
    ac[2] = 0.25 * kappa * kappa - 0.125;
    ac[3] = 0.0;  // resonance: free coefficient, fixed to zero
    Complex C = (0.25 * ac[1] - kappa * ac[2]) / 3.0;
    for (int j = 4; j < n; ++j)
        ac[j] = (0.25 * ac[j - 2] - kappa * ac[j - 1] -
                 C * double(2 * j - 3) * bc[j - 3]) /
                double(j * (j - 3));
    KahanSum ser, reg;
    Complex zp = 1.0 / z;
    for (int j = 0; j < n; ++j) {
        ser.add(ac[j] * zp);
        zp *= z;
    }
    zp = z * z;
    for (int j = 0; j < n; ++j) {
        reg.add(bc[j] * zp);
        zp *= z;
    }
    return ser.value() + C * std::log(z) * reg.value();
}

// ---- adaptive Simpson ---------------------------------------------------------

namespace {

Complex simpson_step(const std::function<Complex(double)>& f, double a,
                     double b, Complex fa, Complex fm, Complex fb, Complex whole,
                     double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    Complex flm = f(lm), frm = f(rm);
    Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    Complex delta = left + right - whole;
    if (depth <= 0)
        throw Error(ErrorKind::numeric, "integrate: max recursion depth");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  double tol, int max_depth) {
    if (a == b) return {0.0, 0.0};
    Complex fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double integrate_real(const std::function<double(double)>& f, double a,
                      double b, double tol, int max_depth) {
    return integrate([&](double x) { return Complex{f(x), 0.0}; }, a, b, tol,
                     max_depth)
        .real();
}

}  // namespace rnls::specfun
