#include "rnls/conserve.hpp"

#include <cmath>

namespace rnls::conserve {

namespace {

constexpr Complex kI{0.0, 1.0};

double pw(double r, double e) { return std::pow(r, e); }

// energy density shared by rows 2-4
double edens(const Parameters& pr, const Jet& j, double r) {
    double a = std::abs(j.u);
    return pw(r, pr.n - 1.0) * (std::norm(j.u_r) -
                                2.0 / (pr.p + 2.0) * pr.k * std::pow(a, 2.0 + pr.p));
}

// flux block -r^n (|u_r|^2 + (2/(p+2)) k |u|^{2+p}) common to rows 3-4
double eflux(const Parameters& pr, const Jet& j, double r) {
    double a = std::abs(j.u);
    return -pw(r, pr.n) * (std::norm(j.u_r) +
                           2.0 / (pr.p + 2.0) * pr.k * std::pow(a, 2.0 + pr.p));
}

Complex simpson(const std::function<Complex(double)>& f, double a, double b,
                int panels) {
    if (panels < 1) throw Error(ErrorKind::constraint, "panels < 1");
    double h = (b - a) / (2.0 * panels);
    Complex acc = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i)
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + h * i);
    return acc * (h / 3.0);
}

double t_value(const CurrentPair& cur, const Solution& s, double t, double r) {
    return cur.T(s.params, jet_at(s, t, r), t, r);
}

double x_value(const CurrentPair& cur, const Solution& s, double t, double r) {
    return cur.X(s.params, jet_at(s, t, r), t, r);
}

}  // namespace

Jet jet_at(const Solution& s, double t, double r, double h0, int levels) {
    return Jet{s.eval(t, r), diff_t(s, t, r, h0, levels),
               diff_r(s, t, r, h0, levels)};
}

const CurrentPair& charge() {
    static const CurrentPair c{
        "charge",
        [](const Parameters& pr, const Jet& j, double, double r) {
            return -pw(r, pr.n - 1.0) * std::norm(j.u);
        },
        [](const Parameters& pr, const Jet& j, double, double r) {
            return -2.0 * pw(r, pr.n - 1.0) * std::imag(j.u * std::conj(j.u_r));
        },
        false};
    return c;
}

const CurrentPair& energy() {
    static const CurrentPair c{
        "energy",
        [](const Parameters& pr, const Jet& j, double, double r) {
            return edens(pr, j, r);
        },
        [](const Parameters& pr, const Jet& j, double, double r) {
            return -2.0 * pw(r, pr.n - 1.0) * std::real(j.u_t * std::conj(j.u_r));
        },
        false};
    return c;
}

const CurrentPair& dilation_energy() {
    static const CurrentPair c{
        "dilation_energy",
        [](const Parameters& pr, const Jet& j, double t, double r) {
            return 2.0 * t * edens(pr, j, r) -
                   pw(r, pr.n) * std::imag(j.u * std::conj(j.u_r));
        },
        [](const Parameters& pr, const Jet& j, double t, double r) {
            return eflux(pr, j, r) +
                   pw(r, pr.n) * std::imag(j.u * std::conj(j.u_t)) -
                   (4.0 / pr.p) * pw(r, pr.n - 1.0) *
                       std::real(j.u * std::conj(j.u_r)) -
                   4.0 * t * pw(r, pr.n - 1.0) *
                       std::real(j.u_t * std::conj(j.u_r));
        },
        true};
    return c;
}

const CurrentPair& pseudoconformal_energy() {
    static const CurrentPair c{
        "pseudoconformal_energy",
        [](const Parameters& pr, const Jet& j, double t, double r) {
            return t * t * edens(pr, j, r) -
                   t * pw(r, pr.n) * std::imag(j.u * std::conj(j.u_r)) +
                   0.25 * pw(r, pr.n + 1.0) * std::norm(j.u);
        },
        [](const Parameters& pr, const Jet& j, double t, double r) {
            return -(4.0 / pr.p) * t * pw(r, pr.n - 1.0) *
                       std::real(j.u * std::conj(j.u_r)) -
                   2.0 * t * t * pw(r, pr.n - 1.0) *
                       std::real(j.u_t * std::conj(j.u_r)) +
                   t * eflux(pr, j, r) +
                   t * pw(r, pr.n) * std::imag(j.u * std::conj(j.u_t)) +
                   0.5 * pw(r, pr.n + 1.0) * std::imag(j.u * std::conj(j.u_r));
        },
        true};
    return c;
}

std::vector<const CurrentPair*> currents(const Parameters& params) {
    std::vector<const CurrentPair*> out{&charge(), &energy()};
    if (params.critical()) {
        out.push_back(&dilation_energy());
        out.push_back(&pseudoconformal_energy());
    }
    return out;
}

LocalDefect local_defect(const CurrentPair& cur, const Solution& s, double t,
                         double r, double h_outer) {
    if (cur.critical_only && !s.params.critical())
        throw Error(ErrorKind::constraint,
                    cur.name + " requires the critical power p = 4/n");
    double ht = h_outer * std::max(1.0, std::abs(t));
    double hr = h_outer * std::max(1.0, std::abs(r));
    double Tp = t_value(cur, s, t + ht, r), Tm = t_value(cur, s, t - ht, r);
    double Xp = x_value(cur, s, t, r + hr), Xm = x_value(cur, s, t, r - hr);
    double dT = (Tp - Tm) / (2.0 * ht);
    double dX = (Xp - Xm) / (2.0 * hr);
    // defect is judged against the size of the currents themselves, not
    // their derivatives: both derivatives vanish for static families while
    // the r^{n-1} weight still amplifies differencing noise.
    double scale = 0.5 * (std::abs(Tp) + std::abs(Tm)) +
                   0.5 * (std::abs(Xp) + std::abs(Xm)) + 1.0;
    return LocalDefect{std::abs(dT + dX), scale};
}

double global_quantity(const CurrentPair& cur, const Solution& s, double t,
                       double r_lo, double r_hi, int panels) {
    return simpson([&](double r) { return Complex{t_value(cur, s, t, r), 0.0}; },
                   r_lo, r_hi, panels)
        .real();
}

GlobalBalance global_balance(const CurrentPair& cur, const Solution& s,
                             double t, double r_lo, double r_hi, int panels) {
    double ht = 1e-3 * std::max(1.0, std::abs(t));
    double dQ = (global_quantity(cur, s, t + ht, r_lo, r_hi, panels) -
                 global_quantity(cur, s, t - ht, r_lo, r_hi, panels)) /
                (2.0 * ht);
    double x_hi = x_value(cur, s, t, r_hi);
    double x_lo = x_value(cur, s, t, r_lo);
    double defect = std::abs(dQ + x_hi - x_lo);
    double scale = std::abs(dQ) + std::abs(x_hi) + std::abs(x_lo) + 1.0;
    return GlobalBalance{defect, scale};
}

Complex boundary_correction(const Solution& s, double t, double R, double h0) {
    double m = s.params.m();
    return kI * (R * diff_r(s, t, R, h0) - m * s.eval(t, R));
}

ModulationBalance modulation_balance(const Solution& s, double t, double R,
                                     int panels) {
    const double eps = 1e-6;
    auto moment = [&](double tt) {
        return simpson([&](double r) { return s.eval(tt, r) * r; }, eps, R,
                       panels);
    };
    double ht = 1e-3 * std::max(1.0, std::abs(t));
    Complex lhs = (moment(t + ht) - moment(t - ht)) / (2.0 * ht);

    double p = s.params.p, k = s.params.k, m = s.params.m();
    Complex S = kI * k *
                simpson(
                    [&](double r) {
                        Complex u = s.eval(t, r);
                        return u * std::pow(std::abs(u), p) * r;
                    },
                    eps, R, panels);
    Complex u0 = limit_r_to_zero([&](double r) { return s.eval(t, r); });
    Complex rhs = -S - kI * m * u0 - boundary_correction(s, t, R);
    return ModulationBalance{lhs, rhs, std::abs(lhs - rhs),
                             std::abs(lhs) + std::abs(rhs) + 1.0};
}

}  // namespace rnls::conserve
