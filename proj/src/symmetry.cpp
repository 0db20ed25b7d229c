#include "rnls/symmetry.hpp"

#include <cmath>

namespace rnls::symmetry {

// ---- Poly2 ---------------------------------------------------------------------

int Poly2::idx(int dt, int dr) {
    if (dt < 0 || dr < 0 || dt > kMaxDeg || dr > kMaxDeg)
        throw Error(ErrorKind::numeric, "Poly2: degree overflow");
    return dt * (kMaxDeg + 1) + dr;
}

Poly2 Poly2::constant(Complex v) { return monomial(0, 0, v); }

Poly2 Poly2::monomial(int dt, int dr, Complex v) {
    Poly2 p;
    p.set(dt, dr, v);
    return p;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 out;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

Poly2 Poly2::operator*(Complex s) const {
    Poly2 out;
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] * s;
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (int a = 0; a <= kMaxDeg; ++a)
        for (int b = 0; b <= kMaxDeg; ++b) {
            if (c_[idx(a, b)] == Complex{}) continue;
            for (int c = 0; c <= kMaxDeg; ++c)
                for (int d = 0; d <= kMaxDeg; ++d) {
                    if (o.c_[idx(c, d)] == Complex{}) continue;
                    out.set(a + c, b + d, out.coeff(a + c, b + d) +
                                              c_[idx(a, b)] * o.c_[idx(c, d)]);
                }
        }
    return out;
}

bool Poly2::operator==(const Poly2& o) const { return c_ == o.c_; }

bool Poly2::is_zero() const {
    for (const auto& v : c_)
        if (v != Complex{}) return false;
    return true;
}

Poly2 Poly2::d_t() const {
    Poly2 out;
    for (int a = 1; a <= kMaxDeg; ++a)
        for (int b = 0; b <= kMaxDeg; ++b)
            out.set(a - 1, b, c_[idx(a, b)] * double(a));
    return out;
}

Poly2 Poly2::d_r() const {
    Poly2 out;
    for (int a = 0; a <= kMaxDeg; ++a)
        for (int b = 1; b <= kMaxDeg; ++b)
            out.set(a, b - 1, c_[idx(a, b)] * double(b));
    return out;
}

Complex Poly2::eval(double t, double r) const {
    Complex v = 0.0;
    for (int a = kMaxDeg; a >= 0; --a) {
        Complex row = 0.0;
        for (int b = kMaxDeg; b >= 0; --b) row = row * r + c_[idx(a, b)];
        v = v * t + row;
    }
    return v;
}

// ---- generators ----------------------------------------------------------------

VectorField gen_phase() {
    VectorField X;
    X.h = Poly2::constant({0.0, 1.0});
    X.label = "phase";
    return X;
}

VectorField gen_trans() {
    VectorField X;
    X.tau = Poly2::constant(1.0);
    X.label = "trans";
    return X;
}

VectorField gen_scal(double p) {
    if (p == 0.0) throw Error(ErrorKind::constraint, "gen_scal: p = 0");
    VectorField X;
    X.tau = Poly2::monomial(1, 0, 2.0);
    X.rho = Poly2::monomial(0, 1, 1.0);
    X.h = Poly2::constant(-2.0 / p);
    X.label = "scal";
    return X;
}

VectorField gen_inver(const Parameters& params) {
    if (!params.critical())
        throw Error(ErrorKind::constraint,
                    "gen_inver: inversion requires the critical power p=4/n");
    VectorField X;
    X.tau = Poly2::monomial(2, 0, 1.0);
    X.rho = Poly2::monomial(1, 1, 1.0);
    X.h = Poly2::monomial(1, 0, -2.0 / params.p) +
          Poly2::monomial(0, 2, Complex{0.0, -0.25});
    X.label = "inver";
    return X;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
    auto advect = [](const VectorField& X, const Poly2& f) {
        return X.tau * f.d_t() + X.rho * f.d_r();
    };
    VectorField out;
    out.tau = advect(a, b.tau) - advect(b, a.tau);
    out.rho = advect(a, b.rho) - advect(b, a.rho);
    // eta = h(t,r) u closes under brackets: the h_a h_b cross terms cancel.
    out.h = advect(a, b.h) - advect(b, a.h);
    out.label = "[" + a.label + "," + b.label + "]";
    return out;
}

VectorField scale_field(const VectorField& a, Complex s) {
    return {a.tau * s, a.rho * s, a.h * s, a.label};
}

VectorField add_fields(const VectorField& a, const VectorField& b) {
    return {a.tau + b.tau, a.rho + b.rho, a.h + b.h, a.label + "+" + b.label};
}

Complex invariance_defect(const VectorField& X, const Solution& s, double t,
                          double r, double h0) {
    Complex u = s.eval(t, r);
    Complex ut = diff_t(s, t, r, h0);
    Complex ur = diff_r(s, t, r, h0);
    return X.h.eval(t, r) * u - X.tau.eval(t, r) * ut - X.rho.eval(t, r) * ur;
}

// ---- finite actions -------------------------------------------------------------

Solution apply_group(ActionKind kind, double eps, const Solution& s) {
    Solution out = s;
    auto base_eval = s.eval;
    auto base_dom = [s](double t, double r) { return s.valid_at(t, r); };
    switch (kind) {
        case ActionKind::phase:
            out.eval = [=](double t, double r) {
                return std::exp(Complex{0.0, eps}) * base_eval(t, r);
            };
            out.in_domain = base_dom;
            out.label = s.label + "|phase";
            return out;
        case ActionKind::translate:
            out.eval = [=](double t, double r) { return base_eval(t - eps, r); };
            out.in_domain = [=](double t, double r) { return base_dom(t - eps, r); };
            out.label = s.label + "|translate";
            return out;
        case ActionKind::scale: {
            if (!(eps > 0.0))
                throw Error(ErrorKind::constraint, "apply_group: scale needs lambda > 0");
            double lm2 = 1.0 / (eps * eps), lm1 = 1.0 / eps;
            double pw = -2.0 / s.params.p;
            out.eval = [=](double t, double r) {
                return std::pow(eps, pw) * base_eval(lm2 * t, lm1 * r);
            };
            out.in_domain = [=](double t, double r) {
                return base_dom(lm2 * t, lm1 * r);
            };
            out.label = s.label + "|scale";
            return out;
        }
        case ActionKind::invert: {
            if (!s.params.critical())
                throw Error(ErrorKind::constraint,
                            "apply_group: inversion requires p = 4/n");
            double p = s.params.p;
            out.eval = [=](double t, double r) {
                double w = 1.0 + eps * t;
                return std::pow(w, -2.0 / p) *
                       std::exp(Complex{0.0, -eps * r * r / (4.0 * w)}) *
                       base_eval(t / w, r / w);
            };
            out.in_domain = [=](double t, double r) {
                double w = 1.0 + eps * t;
                return w > 0.0 && base_dom(t / w, r / w);
            };
            out.label = s.label + "|invert";
            return out;
        }
    }
    throw Error(ErrorKind::constraint, "apply_group: unknown action");
}

// ---- reduction frames ------------------------------------------------------------

double arctan_recip(double t) {
    if (t == 0.0) return 1.5707963267948966;
    double a = std::atan(1.0 / t);
    // continuous continuation from t > 0 across the origin
    return t < 0.0 ? a + 3.141592653589793 : a;
}

double ReductionFrame::xi(double t, double r) const {
    switch (frame) {
        case Frame::trans_phase: return r;
        case Frame::scal_phase: return t / (r * r);
        case Frame::conf_phase: return (1.0 + t * t) / (r * r);
    }
    throw Error(ErrorKind::constraint, "bad frame");
}

Complex ReductionFrame::prefactor(double t, double r) const {
    double p = params.p;
    switch (frame) {
        case Frame::trans_phase:
            return std::exp(Complex{0.0, sub * t});
        case Frame::scal_phase:
            return std::pow(r, -2.0 / p) *
                   std::exp(Complex{0.0, sub * std::log(r)});
        case Frame::conf_phase: {
            double ph = -sub * arctan_recip(t) -
                        r * r * t / (4.0 * (1.0 + t * t));
            return std::pow(r, -2.0 / p) * std::exp(Complex{0.0, ph});
        }
    }
    throw Error(ErrorKind::constraint, "bad frame");
}

Complex ReductionFrame::invariant(const Solution& s, double t, double r) const {
    return s.eval(t, r) / prefactor(t, r);
}

Solution reconstruct(const ReductionFrame& frame,
                     std::function<Complex(double)> profile,
                     std::function<bool(double)> xi_domain) {
    Solution out;
    out.params = frame.params;
    ReductionFrame fr = frame;
    out.eval = [fr, profile](double t, double r) {
        return fr.prefactor(t, r) * profile(fr.xi(t, r));
    };
    out.in_domain = [fr, xi_domain](double t, double r) {
        if (r <= 0.0) return false;
        return !xi_domain || xi_domain(fr.xi(t, r));
    };
    out.label = "reconstructed";
    return out;
}

}  // namespace rnls::symmetry
