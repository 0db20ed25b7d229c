#ifndef RNLS_SYMMETRY_HPP
#define RNLS_SYMMETRY_HPP

#include <array>
#include <string>

#include "rnls/core.hpp"

// Point symmetries of the radial equation.  Every admitted generator has the
// form X = tau(t,r) d_t + rho(t,r) d_r + h(t,r) u d_u + conj., with tau, rho
// and h polynomial in (t, r), so vector fields are stored as exact bivariate
// polynomials and Lie brackets are computed exactly.

namespace rnls::symmetry {

class Poly2 {
  public:
    static constexpr int kMaxDeg = 7;  // enough for nested brackets

    Poly2() { c_.fill({}); }
    static Poly2 constant(Complex v);
    static Poly2 monomial(int dt, int dr, Complex v);

    Complex coeff(int dt, int dr) const { return c_[idx(dt, dr)]; }
    void set(int dt, int dr, Complex v) { c_[idx(dt, dr)] = v; }

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(Complex s) const;
    bool operator==(const Poly2& o) const;  // exact coefficient equality
    bool is_zero() const;

    Poly2 d_t() const;
    Poly2 d_r() const;
    Complex eval(double t, double r) const;

  private:
    static int idx(int dt, int dr);
    std::array<Complex, (kMaxDeg + 1) * (kMaxDeg + 1)> c_;
};

struct VectorField {
    Poly2 tau, rho, h;  // infinitesimals; eta = h(t,r) * u
    std::string label;

    bool operator==(const VectorField& o) const {
        return tau == o.tau && rho == o.rho && h == o.h;
    }
};

// The four generators: phase rotation, time translation, scaling, and (for
// the critical power p = 4/n) inversion.
VectorField gen_phase();
VectorField gen_trans();
VectorField gen_scal(double p);
VectorField gen_inver(const Parameters& params);  // requires p = 4/n

VectorField lie_bracket(const VectorField& a, const VectorField& b);
VectorField scale_field(const VectorField& a, Complex s);
VectorField add_fields(const VectorField& a, const VectorField& b);

// Linearized-symmetry defect  h*u - tau*u_t - rho*u_r  evaluated with finite
// differences; vanishes identically when s is invariant under X.
Complex invariance_defect(const VectorField& X, const Solution& s, double t,
                          double r, double h0 = 1e-4);

// ---- finite group actions ----------------------------------------------------

enum class ActionKind { phase, translate, scale, invert };

// Push a solution along the one-parameter group:
//   phase:     u -> exp(i eps) u(t, r)
//   translate: u -> u(t - eps, r)
//   scale:     u -> lambda^{-2/p} u(lambda^{-2} t, lambda^{-1} r), eps = lambda > 0
//   invert:    u -> (1+eps t)^{-2/p} exp(-i eps r^2/(4(1+eps t)))
//                     u(t/(1+eps t), r/(1+eps t)),  requires p = 4/n
Solution apply_group(ActionKind kind, double eps, const Solution& s);

// ---- symmetry reduction frames -------------------------------------------------

enum class Frame { trans_phase, scal_phase, conf_phase };

// Invariant coordinate and reconstruction multiplier for the optimal
// one-dimensional subgroups.  In every frame u(t,r) = w(t,r) * U(xi(t,r)),
// where w carries the whole phase/power prefactor:
//   trans_phase(nu):  xi = r,           w = exp(i nu t)
//   scal_phase(mu):   xi = t/r^2,       w = r^{-2/p} exp(i mu ln r)
//   conf_phase(kap):  xi = (1+t^2)/r^2, w = r^{-2/p} exp(-i kap arctan(1/t)
//                                              - i r^2 t/(4(1+t^2)))
// arctan(1/t) is taken continuous from t > 0, with value pi/2 at t = 0.
struct ReductionFrame {
    Frame frame;
    Parameters params;
    double sub = 0.0;  // nu, mu, or kappa

    double xi(double t, double r) const;
    Complex prefactor(double t, double r) const;
    // invariant U = u / prefactor evaluated on a solution
    Complex invariant(const Solution& s, double t, double r) const;
};

// Lift a profile U(xi) defined on an interval back to a Solution.
Solution reconstruct(const ReductionFrame& frame,
                     std::function<Complex(double)> profile,
                     std::function<bool(double)> xi_domain = {});

double arctan_recip(double t);  // arctan(1/t), = pi/2 at t = 0

}  // namespace rnls::symmetry

#endif
