#include "rnls/reduce.hpp"

#include <cmath>

namespace rnls::reduce {

Complex power_nonlinearity(Complex U, double p) {
    double a = std::abs(U);
    if (p < 0.0 && a < 1e-13)
        throw Error(ErrorKind::numeric,
                    "power nonlinearity: |U| below 1e-13 with p < 0");
    return std::pow(a, p) * U;
}

Complex ode_rhs(const ReductionFrame& fr, double xi, Complex U, Complex Up) {
    const double n = fr.params.n, p = fr.params.p, k = fr.params.k;
    const Complex i{0.0, 1.0};
    switch (fr.frame) {
        case Frame::trans_phase:
            if (xi == 0.0) throw Error(ErrorKind::domain, "ode_rhs: xi = 0");
            return -(n - 1.0) / xi * Up - fr.sub * U -
                   k * power_nonlinearity(U, p);
        case Frame::scal_phase: {
            if (xi == 0.0) throw Error(ErrorKind::domain, "ode_rhs: xi = 0");
            double mu = fr.sub;
            Complex c1 = (8.0 - 2.0 * n + 8.0 / p) * xi -
                         i * (1.0 + 4.0 * mu * xi);
            Complex c0 = (4.0 - 2.0 * n) / p + 4.0 / (p * p) - mu * mu +
                         i * mu * (n - 2.0 - 4.0 / p);
            return (-c1 * Up - c0 * U - k * power_nonlinearity(U, p)) /
                   (4.0 * xi * xi);
        }
        case Frame::conf_phase: {
            if (!fr.params.critical())
                throw Error(ErrorKind::constraint,
                            "ode_rhs: conf frame requires p = 4/n");
            if (xi == 0.0) throw Error(ErrorKind::domain, "ode_rhs: xi = 0");
            double kap = fr.sub;
            double c0 = kap / xi - 0.25 / (xi * xi) + n * (1.0 - 0.25 * n);
            return (-8.0 * xi * Up - c0 * U - k * power_nonlinearity(U, p)) /
                   (4.0 * xi * xi);
        }
    }
    throw Error(ErrorKind::constraint, "ode_rhs: bad frame");
}

double first_integral_C1(const ReductionFrame& fr, double xi, Complex U,
                         Complex Up) {
    // i (U Ubar' - U' Ubar) = 2 A^2 Phi' is real for any U.
    double w = (Complex{0.0, 1.0} * (U * std::conj(Up) - Up * std::conj(U)))
                   .real();
    double a2 = std::norm(U);
    switch (fr.frame) {
        case Frame::trans_phase:
            return 0.5 * std::pow(xi, fr.params.n - 1.0) * w;
        case Frame::scal_phase:
            return 2.0 * xi * xi * w - (0.5 + 2.0 * fr.sub * xi) * a2;
        case Frame::conf_phase:
            return 2.0 * xi * xi * w;
    }
    throw Error(ErrorKind::constraint, "first_integral_C1: bad frame");
}

double phase_slope(const ReductionFrame& fr, double xi, double A, double C1) {
    if (A <= 0.0) throw Error(ErrorKind::domain, "phase_slope: A must be > 0");
    switch (fr.frame) {
        case Frame::trans_phase:
            return C1 * std::pow(xi, 1.0 - fr.params.n) / (A * A);
        case Frame::scal_phase:
            // The C1 of the level-set invariant; the quadrature reads
            // Phi' = C1/(4 xi^2 A^2) + 1/(8 xi^2) + mu/(2 xi).
            return 0.25 * C1 / (xi * xi * A * A) + 0.125 / (xi * xi) +
                   0.5 * fr.sub / xi;
        case Frame::conf_phase:
            return 0.25 * C1 / (xi * xi * A * A);
    }
    throw Error(ErrorKind::constraint, "phase_slope: bad frame");
}

double level_set_rhs(const ReductionFrame& fr, double xi, double A, double Ap,
                     double C1) {
    if (A <= 0.0) throw Error(ErrorKind::domain, "level_set_rhs: A must be > 0");
    const double n = fr.params.n, p = fr.params.p, k = fr.params.k;
    switch (fr.frame) {
        case Frame::trans_phase:
            return -(n - 1.0) / xi * Ap - fr.sub * A -
                   k * std::pow(A, 1.0 + p) +
                   C1 * C1 * std::pow(xi, 2.0 - 2.0 * n) / (A * A * A);
        case Frame::scal_phase: {
            if (!fr.params.critical())
                throw Error(ErrorKind::constraint,
                            "level_set_rhs: scal level set requires p = 4/n");
            double mu = fr.sub;
            double lin = 0.0625 / (xi * xi) + 0.5 * mu / xi +
                         4.0 * (p - 1.0) / (p * p);
            return (-8.0 * xi * Ap + 0.25 * C1 * C1 / (xi * xi * A * A * A) -
                    lin * A - k * std::pow(A, 1.0 + p)) /
                   (4.0 * xi * xi);
        }
        case Frame::conf_phase: {
            if (!fr.params.critical())
                throw Error(ErrorKind::constraint,
                            "level_set_rhs: conf level set requires p = 4/n");
            double kap = fr.sub;
            double lin = kap / xi - 0.25 / (xi * xi) + n * (1.0 - 0.25 * n);
            return (-8.0 * xi * Ap + 0.25 * C1 * C1 / (xi * xi * A * A * A) -
                    lin * A - k * std::pow(A, 1.0 + p)) /
                   (4.0 * xi * xi);
        }
    }
    throw Error(ErrorKind::constraint, "level_set_rhs: bad frame");
}

// ---- Dormand-Prince 5(4) ---------------------------------------------------------

namespace {

constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,     0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,           7571.0 / 16695,
                           393.0 / 640,     -92097.0 / 339200,
                           187.0 / 2100,    1.0 / 40};

double state_norm(const State& y) {
    double m = 0.0;
    for (const auto& v : y) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace

std::vector<State> integrate_ode(const OdeRhs& f, const State& y0,
                                 const std::vector<double>& samples,
                                 const OdeOptions& opts) {
    if (samples.size() < 2)
        throw Error(ErrorKind::constraint, "integrate_ode: need >= 2 samples");
    double dir = samples[1] > samples[0] ? 1.0 : -1.0;
    for (size_t i = 1; i < samples.size(); ++i)
        if ((samples[i] - samples[i - 1]) * dir <= 0.0)
            throw Error(ErrorKind::constraint,
                        "integrate_ode: samples must be strictly monotone");

    std::vector<State> out;
    out.reserve(samples.size());
    out.push_back(y0);

    State y = y0;
    double x = samples.front();
    double h = dir * std::abs(opts.initial_step);
    State ks[7];
    int steps = 0;

    for (size_t target = 1; target < samples.size(); ++target) {
        double xend = samples[target];
        while (dir * (xend - x) > 0.0) {
            if (++steps > opts.max_steps)
                throw Error(ErrorKind::numeric, "integrate_ode: step limit");
            if (dir * (x + h - xend) > 0.0) h = xend - x;
            for (int s = 0; s < 7; ++s) {
                State ys = y;
                for (int j = 0; j < s; ++j)
                    if (kA[s][j] != 0.0)
                        for (size_t q = 0; q < y.size(); ++q)
                            ys[q] += h * kA[s][j] * ks[j][q];
                ks[s] = f(x + kC[s] * h, ys);
            }
            State y5 = y;
            double err = 0.0;
            for (size_t q = 0; q < y.size(); ++q) {
                Complex d5{0.0}, d4{0.0};
                for (int s = 0; s < 7; ++s) {
                    d5 += kB5[s] * ks[s][q];
                    d4 += kB4[s] * ks[s][q];
                }
                y5[q] += h * d5;
                double sc = opts.abs_tol +
                            opts.rel_tol *
                                std::max(std::abs(y[q]), std::abs(y5[q]));
                err = std::max(err, std::abs(h * (d5 - d4)) / sc);
            }
            if (err <= 1.0) {
                x += h;
                y = y5;
            }
            double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
            fac = std::min(5.0, std::max(0.2, fac));
            h *= fac;
            if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(x)))
                throw Error(ErrorKind::numeric, "integrate_ode: step underflow");
        }
        out.push_back(y);
        x = xend;  // guard against accumulated round-off
    }
    return out;
}

std::vector<State> integrate_profile(const ReductionFrame& fr, Complex U0,
                                     Complex Up0,
                                     const std::vector<double>& samples,
                                     const OdeOptions& opts) {
    for (double s : samples)
        if (s == 0.0 || s * samples.front() < 0.0)
            throw Error(ErrorKind::domain,
                        "integrate_profile: samples must not reach xi = 0");
    OdeRhs f = [fr](double xi, const State& y) {
        return State{y[1], ode_rhs(fr, xi, y[0], y[1])};
    };
    return integrate_ode(f, State{U0, Up0}, samples, opts);
}

// ---- canonical charts ---------------------------------------------------------------

CanonicalChart chart_scaling(const Parameters& params) {
    double p = params.p;
    if (p == 0.0) throw Error(ErrorKind::constraint, "chart_scaling: p = 0");
    CanonicalChart ch;
    ch.name = "scaling";
    ch.z_of_xi = [](double xi) {
        if (xi <= 0.0) throw Error(ErrorKind::domain, "chart: xi <= 0");
        return std::log(xi);
    };
    ch.xi_of_z = [](double z) { return std::exp(z); };
    ch.to_profile = [p](double xi, Complex U) {
        return std::pow(xi, 2.0 / p) * U;
    };
    ch.from_profile = [p](double xi, Complex V) {
        return std::pow(xi, -2.0 / p) * V;
    };
    return ch;
}

CanonicalChart chart_dilation(const Parameters& params) {
    double n = params.n;
    double want = 2.0 * (3.0 - n) / (n - 2.0);
    if (n == 2.0 || std::abs(params.p - want) > 1e-12 * std::max(1.0, std::abs(want)))
        throw Error(ErrorKind::constraint,
                    "chart_dilation: requires p = 2(3-n)/(n-2)");
    CanonicalChart ch;
    ch.name = "dilation";
    ch.z_of_xi = [n](double xi) {
        if (xi <= 0.0) throw Error(ErrorKind::domain, "chart: xi <= 0");
        return std::pow(xi, n - 2.0);
    };
    ch.xi_of_z = [n](double z) { return std::pow(z, 1.0 / (n - 2.0)); };
    ch.to_profile = [n](double xi, Complex U) {
        return std::pow(xi, n - 2.0) * U;
    };
    ch.from_profile = [n](double xi, Complex V) {
        return std::pow(xi, 2.0 - n) * V;
    };
    return ch;
}

AmplitudeChart chart_hidden_p1_n16(double k) {
    AmplitudeChart ch;
    ch.name = "hidden-p1-n16";
    ch.z_of_xi = [](double xi) { return -0.5 / (xi * xi); };
    ch.to_profile = [k](double xi, double A) {
        return std::pow(xi, 6.0) * A - (24.0 / k) * std::pow(xi, 4.0);
    };
    ch.from_profile = [k](double xi, double B) {
        return (B + (24.0 / k) * std::pow(xi, 4.0)) / std::pow(xi, 6.0);
    };
    ch.target_rhs = [k](double B) { return -k * B * B; };
    return ch;
}

AmplitudeChart chart_hidden_p1_n13_3(double k) {
    AmplitudeChart ch;
    ch.name = "hidden-p1-n13/3";
    ch.z_of_xi = [](double xi) { return std::cbrt(xi) / 3.0; };
    ch.to_profile = [k](double xi, double A) {
        return std::pow(xi, 4.0 / 3.0) * A -
               2.0 / (3.0 * k) * std::pow(xi, -2.0 / 3.0);
    };
    ch.from_profile = [k](double xi, double B) {
        return (B + 2.0 / (3.0 * k) * std::pow(xi, -2.0 / 3.0)) /
               std::pow(xi, 4.0 / 3.0);
    };
    ch.target_rhs = [k](double B) { return -81.0 * k * B * B; };
    return ch;
}

// ---- blow-up reductions ---------------------------------------------------------------

Complex blowup_rhs(BlowupKind kind, const Parameters& params, double omega,
                   double xi, Complex U, Complex Up) {
    const double n = params.n, p = params.p, k = params.k;
    if (xi == 0.0) throw Error(ErrorKind::domain, "blowup_rhs: xi = 0");
    switch (kind) {
        case BlowupKind::critical:
            if (!params.critical())
                throw Error(ErrorKind::constraint,
                            "blowup_rhs: critical reduction requires p = 4/n");
            return -(n - 1.0) / xi * Up - omega * U -
                   k * power_nonlinearity(U, p);
        case BlowupKind::supercritical: {
            Complex coef = (n - 1.0) / xi - Complex{0.0, 0.5} * xi;
            return -coef * Up + (omega + Complex{0.0, 1.0} / p) * U -
                   k * power_nonlinearity(U, p);
        }
    }
    throw Error(ErrorKind::constraint, "blowup_rhs: bad kind");
}

Solution blowup_reconstruct(BlowupKind kind, const Parameters& params,
                            double omega, double T,
                            std::function<Complex(double)> profile,
                            std::function<bool(double)> xi_domain) {
    params.validate();
    Solution out;
    out.params = params;
    out.label = kind == BlowupKind::critical ? "blowup-critical"
                                             : "blowup-supercritical";
    double n = params.n, p = params.p;
    if (kind == BlowupKind::critical) {
        if (!params.critical())
            throw Error(ErrorKind::constraint,
                        "blowup_reconstruct: critical requires p = 4/n");
        out.eval = [=](double t, double r) {
            double s = T - t;
            double xi = r / s;
            return std::pow(s, -0.5 * n) * profile(xi) *
                   std::exp(Complex{0.0, (omega + 0.25 * r * r) / s});
        };
        out.in_domain = [=](double t, double r) {
            if (!(t < T) || r <= 0.0) return false;
            return !xi_domain || xi_domain(r / (T - t));
        };
    } else {
        if (!(T > 0.0))
            throw Error(ErrorKind::constraint,
                        "blowup_reconstruct: supercritical requires T > 0");
        out.eval = [=](double t, double r) {
            double s = T - t;
            double xi = r / std::sqrt(s);
            return std::pow(s, -1.0 / p) * profile(xi) *
                   std::exp(Complex{0.0, omega * std::log(s / T)});
        };
        out.in_domain = [=](double t, double r) {
            if (!(t < T) || r <= 0.0) return false;
            return !xi_domain || xi_domain(r / std::sqrt(T - t));
        };
    }
    return out;
}

}  // namespace rnls::reduce
