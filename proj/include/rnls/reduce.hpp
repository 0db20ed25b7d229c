#ifndef RNLS_REDUCE_HPP
#define RNLS_REDUCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "rnls/core.hpp"
#include "rnls/symmetry.hpp"

// Reduced ODEs obtained from the one-dimensional subgroups, their polar and
// first-integral (level-set) forms, canonical variable changes, an adaptive
// embedded Runge-Kutta integrator, and the self-similar blow-up reductions.

namespace rnls::reduce {

using symmetry::Frame;
using symmetry::ReductionFrame;

// |U|^p U with the p = -1 guard: the quotient U/|U| is left undefined
// below amplitude 1e-13.
Complex power_nonlinearity(Complex U, double p);

// Second derivative U'' = f(xi, U, U') of the reduced equation in each frame:
//   trans_phase: U'' + (n-1)/xi U' + nu U + k|U|^p U = 0
//   scal_phase:  4 xi^2 U'' + ((8-2n+8/p) xi - i(1+4 mu xi)) U'
//                  + ((4-2n)/p + 4/p^2 - mu^2 + i mu (n-2-4/p)) U + k|U|^p U = 0
//   conf_phase:  4 xi^2 U'' + 8 xi U' + (kap/xi - 1/(4 xi^2) + n(1-n/4)) U
//                  + k|U|^{4/n} U = 0
Complex ode_rhs(const ReductionFrame& fr, double xi, Complex U, Complex Up);

// First integral of the polar form (C1 labels the phase-quadrature level set):
//   trans_phase: C1 = (i/2) xi^{n-1} (U Ubar' - U' Ubar)
//   scal_phase:  C1 = 2 i xi^2 (U Ubar' - U' Ubar) - (1/2 + 2 mu xi)|U|^2
//                  (valid at the critical power p = 4/n)
//   conf_phase:  C1 = 2 i xi^2 (U Ubar' - U' Ubar)
double first_integral_C1(const ReductionFrame& fr, double xi, Complex U,
                         Complex Up);

// Phase slope Phi'(xi) on the C1 level set, amplitude A = |U|.
double phase_slope(const ReductionFrame& fr, double xi, double A, double C1);

// Amplitude equation on the level set: A'' = g(xi, A, A'; C1).  Linear in A
// exactly when C1 = 0 and p = -1.
double level_set_rhs(const ReductionFrame& fr, double xi, double A, double Ap,
                     double C1);

// ---- adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) -----------------------

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_step = 1e-3;
    int max_steps = 2000000;
};

using State = std::vector<Complex>;
using OdeRhs = std::function<State(double x, const State& y)>;

// Integrate y' = f(x, y) from samples.front() to samples.back(), landing on
// every requested sample exactly; returns the states at the samples.  The
// sample sequence must be strictly monotone and must not cross x = 0 when
// the right-hand side is singular there (callers enforce sign-definite xi).
std::vector<State> integrate_ode(const OdeRhs& f, const State& y0,
                                 const std::vector<double>& samples,
                                 const OdeOptions& opts = {});

// Convenience wrapper for the second-order reduced equation.
std::vector<State> integrate_profile(const ReductionFrame& fr, Complex U0,
                                     Complex Up0,
                                     const std::vector<double>& samples,
                                     const OdeOptions& opts = {});

// ---- canonical variable changes -------------------------------------------------

// A chart maps the trans_phase (nu = 0) reduced equation to an autonomous
// target form via z = z(xi) and a profile substitution.
//   scaling:  z = ln xi,       V = xi^{2/p} U       (any n, p)
//   dilation: z = xi^{n-2},    V = xi^{n-2} U,       p = 2(3-n)/(n-2)
// Amplitude-level hidden charts for the level-set equation (B from A):
//   hidden_p1_n16:  z = -1/(2 xi^2), B = xi^6 A - (24/k) xi^4,  p=1, n=16, C1=0
//   hidden_p1_n13_3: z = xi^{1/3}/3, B = xi^{4/3} A - 2/(3k) xi^{-2/3}, p=1, n=13/3
struct CanonicalChart {
    std::string name;
    std::function<double(double)> z_of_xi;
    std::function<double(double)> xi_of_z;
    // complex profile charts (scaling/dilation)
    std::function<Complex(double xi, Complex U)> to_profile;
    std::function<Complex(double xi, Complex V)> from_profile;
};

CanonicalChart chart_scaling(const Parameters& params);
CanonicalChart chart_dilation(const Parameters& params);

struct AmplitudeChart {
    std::string name;
    std::function<double(double)> z_of_xi;
    std::function<double(double xi, double A)> to_profile;    // B(xi, A)
    std::function<double(double xi, double B)> from_profile;  // A(xi, B)
    // target equation B'' = c2 B^2 ... recorded as B''(z) rhs for checks
    std::function<double(double B)> target_rhs;
};

AmplitudeChart chart_hidden_p1_n16(double k);
AmplitudeChart chart_hidden_p1_n13_3(double k);

// ---- self-similar blow-up reductions ---------------------------------------------

enum class BlowupKind { critical, supercritical };

// Profile equations:
//   critical (p=4/n):  U'' + (n-1)/xi U' + omega U + k|U|^{4/n} U = 0,
//       u = (T-t)^{-n/2} U(xi) exp(i(omega + r^2/4)/(T-t)), xi = r/(T-t)
//   supercritical:     U'' + ((n-1)/xi - i xi/2) U' - (omega + i/p) U
//                        + k|U|^p U = 0,
//       u = (T-t)^{-1/p} U(xi) exp(i omega ln((T-t)/T)), xi = r/sqrt(T-t)
Complex blowup_rhs(BlowupKind kind, const Parameters& params, double omega,
                   double xi, Complex U, Complex Up);

Solution blowup_reconstruct(BlowupKind kind, const Parameters& params,
                            double omega, double T,
                            std::function<Complex(double)> profile,
                            std::function<bool(double)> xi_domain = {});

}  // namespace rnls::reduce

#endif
