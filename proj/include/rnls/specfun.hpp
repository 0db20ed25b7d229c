#ifndef RNLS_SPECFUN_HPP
#define RNLS_SPECFUN_HPP

#include <functional>

#include "rnls/core.hpp"

// Special functions needed by the closed-form solution families: Bessel
// J/Y/I/K of real order, the confluent hypergeometric series, Whittaker M
// (plus a companion second solution for the degenerate order used by the
// similarity solutions), and adaptive Simpson quadrature.

namespace rnls::specfun {

// Compensated (Kahan) accumulator for long alternating series.
class KahanSum {
  public:
    void add(Complex x) {
        Complex y = x - carry_;
        Complex t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    Complex value() const { return sum_; }

  private:
    Complex sum_{0.0, 0.0};
    Complex carry_{0.0, 0.0};
};

// Bessel functions of real order nu and argument x > 0.
// Power/log series for moderate x, large-argument asymptotics beyond;
// K uses the integral representation int_0^inf exp(-x cosh t) cosh(nu t) dt.
double bessel_j(double nu, double x);
double bessel_y(double nu, double x);
double bessel_i(double nu, double x);
double bessel_k(double nu, double x);

// Confluent hypergeometric 1F1(a; b; z) by Maclaurin series with compensated
// summation.  Throws Error(domain) if b is a non-positive integer that the
// numerator does not terminate before, and Error(numeric) if |z| > 60 or the
// series fails to converge within 700 terms.
Complex hyp1f1(Complex a, Complex b, Complex z);

// Whittaker M_{kappa,mu}(z) = exp(-z/2) z^{mu+1/2} 1F1(mu-kappa+1/2; 1+2mu; z),
// principal branch of z^{mu+1/2}.  Requires 1+2mu not a non-positive integer.
Complex whittaker_m(Complex kappa, Complex mu, Complex z);

// Companion second solution of the Whittaker equation for mu = 3/2 (where
// M_{kappa,-3/2} does not exist classically): Frobenius series at the root
// z^{-1} with a log term, normalized so that the Wronskian against
// M_{kappa,3/2} is -3, the value the M pair takes when defined.  The
// variation-of-parameters formulas built on the pair are invariant under the
// residual freedom (adding multiples of M_{kappa,3/2}).
Complex whittaker_second(Complex kappa, Complex z);

// Adaptive Simpson quadrature of a complex integrand over a real interval.
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  double tol = 1e-10, int max_depth = 40);
double integrate_real(const std::function<double(double)>& f, double a,
                      double b, double tol = 1e-10, int max_depth = 40);

}  // namespace rnls::specfun

#endif
