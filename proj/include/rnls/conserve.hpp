#ifndef RNLS_CONSERVE_HPP
#define RNLS_CONSERVE_HPP

#include <functional>
#include <string>
#include <vector>

#include "rnls/core.hpp"

// Local conservation laws d_t T + d_r X = 0 of the radial equation, their
// integrated (global) balances, and the radial modulation identity for the
// windowed first moment of the field.

namespace rnls::conserve {

// Pointwise values of u and its derivatives at (t, r), obtained by finite
// differences of a Solution.
struct Jet {
    Complex u, u_t, u_r;
};

Jet jet_at(const Solution& s, double t, double r, double h0 = 1e-4,
           int levels = 1);

struct CurrentPair {
    std::string name;
    std::function<double(const Parameters&, const Jet&, double, double)> T;
    std::function<double(const Parameters&, const Jet&, double, double)> X;
    bool critical_only = false;
};

const CurrentPair& charge();
const CurrentPair& energy();
const CurrentPair& dilation_energy();         // valid only when p = 4/n
const CurrentPair& pseudoconformal_energy();  // valid only when p = 4/n

// All currents admissible for the given parameters (2 generic, 4 critical).
std::vector<const CurrentPair*> currents(const Parameters& params);

// |d_t T + d_r X| / scale at one point, with the T/X derivatives taken by an
// outer finite difference (step h_outer) around inner-difference jets.
struct LocalDefect {
    double defect;  // |d_t T + d_r X|
    double scale;   // |d_t T| + |d_r X| + 1
};
LocalDefect local_defect(const CurrentPair& cur, const Solution& s, double t,
                         double r, double h_outer = 1e-3);

// integral of T over [r_lo, r_hi] at fixed t (composite Simpson)
double global_quantity(const CurrentPair& cur, const Solution& s, double t,
                       double r_lo, double r_hi, int panels = 200);

// d/dt integral(T) + X(r_hi) - X(r_lo), which vanishes for exact solutions
struct GlobalBalance {
    double defect;
    double scale;  // |flux terms| + |quantity| + 1
};
GlobalBalance global_balance(const CurrentPair& cur, const Solution& s,
                             double t, double r_lo, double r_hi,
                             int panels = 200);

// Windowed first-moment identity.  With C(t) = integral_0^R u r dr,
// S = i k integral_0^R u |u|^p r dr and m = 2 - n,
//   dC/dt = -S - i m u(t, 0+) - i (R u_r(t, R) - m u(t, R)).
// u(0+) is obtained by quadratic extrapolation from r = h, 2h, 4h.
struct ModulationBalance {
    Complex lhs;      // dC/dt by finite differences
    Complex rhs;      // the right side above
    double defect;    // |lhs - rhs|
    double scale;     // |lhs| + |rhs| + 1
};
ModulationBalance modulation_balance(const Solution& s, double t, double R,
                                     int panels = 200);

Complex boundary_correction(const Solution& s, double t, double R,
                            double h0 = 1e-4);

}  // namespace rnls::conserve

#endif
