#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rnls/catalog.hpp"
#include "rnls/reduce.hpp"
#include "rnls/verify.hpp"

using namespace rnls;
using namespace rnls::reduce;

namespace {

ReductionFrame frame(Frame f, Parameters pr, double sub) {
    ReductionFrame fr;
    fr.frame = f;
    fr.params = pr;
    fr.sub = sub;
    return fr;
}

std::vector<double> grid(double a, double b, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = a + (b - a) * i / (n - 1.0);
    return g;
}

}  // namespace

TEST_CASE("power nonlinearity guards the p < 0 quotient") {
    CHECK(std::abs(power_nonlinearity(Complex{2.0, 0.0}, 2.0) -
                   Complex{8.0, 0.0}) < 1e-14);
    CHECK(std::abs(power_nonlinearity(Complex{0.0, 4.0}, -1.0) -
                   Complex{0.0, 1.0}) < 1e-14);
    CHECK_THROWS_AS(power_nonlinearity(Complex{1e-14, 0.0}, -1.0), Error);
    CHECK_NOTHROW(power_nonlinearity(Complex{0.0, 0.0}, 2.0));
}

TEST_CASE("reduced equations agree with closed-form profiles") {
    // static bright profile: trans frame with nu = 0
    catalog::FamilyConstants c;
    c.values["c1"] = 0.0;
    c.values["c2"] = 1.0;
    c.values["sign"] = 1.0;
    Parameters pr{3.0, 4.0, 3.0};
    Solution s = catalog::instantiate("T02", pr, c);
    ReductionFrame fr = frame(Frame::trans_phase, pr, 0.0);
    auto U = [&](double xi) { return fr.invariant(s, 0.0, xi); };
    for (double xi : {0.7, 1.2, 2.0}) {
        Complex rhs = ode_rhs(fr, xi, U(xi), fd_first(U, xi, 1e-3, 2));
        Complex upp = fd_second(U, xi, 5e-3, 2);
        CHECK(std::abs(upp - rhs) < 1e-8 * (std::abs(upp) + 1.0));
    }

    // similarity frame: G01 lives on xi = t/r^2
    catalog::FamilyConstants cg;
    cg.values["c1"] = 0.3;
    cg.values["c2"] = 1.5;
    cg.values["c3"] = 0.3;
    cg.values["mu"] = 0.0;
    Parameters pg{-4.0, -1.0, 1.0};
    Solution g = catalog::instantiate("G01", pg, cg);
    ReductionFrame fg = frame(Frame::scal_phase, pg, 0.0);
    auto Ug = [&](double xi) { return fg.invariant(g, xi, 1.0); };  // r = 1
    for (double xi : {0.4, 0.6, 0.9}) {
        Complex rhs = ode_rhs(fg, xi, Ug(xi), fd_first(Ug, xi, 1e-3, 2));
        Complex upp = fd_second(Ug, xi, 5e-3, 2);
        CHECK(std::abs(upp - rhs) < 1e-6 * (std::abs(upp) + 1.0));
    }
}

TEST_CASE("runge-kutta integrator") {
    // y' = i y, exact e^{ix}
    auto f = [](double, const State& y) {
        return State{Complex{0.0, 1.0} * y[0]};
    };
    auto out = integrate_ode(f, State{Complex{1.0, 0.0}}, grid(0.0, 1.0, 5));
    CHECK(out.size() == 5);
    CHECK(std::abs(out.back()[0] - std::exp(Complex{0.0, 1.0})) < 1e-10);
    CHECK(std::abs(out[2][0] - std::exp(Complex{0.0, 0.5})) < 1e-10);

    CHECK_THROWS_AS(integrate_ode(f, State{Complex{1.0, 0.0}},
                                  std::vector<double>{0.0, 1.0, 0.5}),
                    Error);
}

TEST_CASE("integrated profile tracks a closed-form solution") {
    catalog::FamilyConstants c;
    c.values["c1"] = 0.0;
    c.values["c2"] = 1.0;
    c.values["sign"] = 1.0;
    Parameters pr{3.0, 4.0, 3.0};
    Solution s = catalog::instantiate("T02", pr, c);
    ReductionFrame fr = frame(Frame::trans_phase, pr, 0.0);
    auto U = [&](double xi) { return fr.invariant(s, 0.0, xi); };

    double xi0 = 0.5;
    auto samples = grid(xi0, 2.5, 21);
    auto traj = integrate_profile(fr, U(xi0), fd_first(U, xi0, 1e-4, 2), samples);
    for (size_t i = 0; i < samples.size(); ++i)
        CHECK(std::abs(traj[i][0] - U(samples[i])) < 1e-8);
}

TEST_CASE("first integral is constant along trajectories") {
    struct Case {
        ReductionFrame fr;
        Complex U0, Up0;
    };
    std::vector<Case> cases{
        {frame(Frame::trans_phase, Parameters{3.0, 2.0, 1.0}, 1.0),
         Complex{1.0, 0.2}, Complex{0.1, -0.3}},
        {frame(Frame::scal_phase, Parameters{2.0, 2.0, 1.0}, 0.3),
         Complex{0.8, -0.1}, Complex{-0.2, 0.4}},
        {frame(Frame::conf_phase, Parameters{2.0, 2.0, 1.0}, 0.5),
         Complex{0.6, 0.3}, Complex{0.2, 0.1}},
    };
    for (auto& cs : cases) {
        auto samples = grid(0.2, 2.0, 25);  // one decade in xi
        auto traj = integrate_profile(cs.fr, cs.U0, cs.Up0, samples);
        double c0 = first_integral_C1(cs.fr, samples[0], traj[0][0], traj[0][1]);
        for (size_t i = 1; i < samples.size(); ++i) {
            double ci = first_integral_C1(cs.fr, samples[i], traj[i][0], traj[i][1]);
            CHECK(std::abs(ci - c0) <= 1e-7 * (1.0 + std::abs(c0)));
        }
    }
}

TEST_CASE("rotating kink carries first integral -sign * sqrt(k)") {
    for (double sign : {1.0, -1.0}) {
        for (double k : {1.0, 2.5}) {
            catalog::FamilyConstants c;
            c.values["c1"] = 0.0;
            c.values["c2"] = 0.2;
            c.values["c3"] = 1.1;
            c.values["sign"] = sign;
            Parameters pr{1.0, -4.0, k};
            Solution s = catalog::instantiate("T25", pr, c);
            ReductionFrame fr = frame(Frame::trans_phase, pr, 0.0);
            auto U = [&](double xi) { return fr.invariant(s, 0.0, xi); };
            double xi = 1.7;
            double c1 = first_integral_C1(fr, xi, U(xi), fd_first(U, xi, 1e-3, 2));
            CHECK(std::abs(c1 + sign * std::sqrt(k)) < 1e-9);
        }
    }
}

TEST_CASE("level-set form reproduces the complex flow") {
    ReductionFrame fr = frame(Frame::trans_phase, Parameters{3.0, 2.0, 1.0}, 0.8);
    Complex U0{1.1, 0.0}, Up0{0.05, 0.4};
    auto samples = grid(0.6, 2.4, 19);
    auto traj = integrate_profile(fr, U0, Up0, samples);
    double C1 = first_integral_C1(fr, samples[0], U0, Up0);

    // amplitude system A'' = g(xi, A, A'; C1), phase from the slope formula
    auto amp_rhs = [&](double xi, const State& y) {
        return State{y[1], Complex{level_set_rhs(fr, xi, y[0].real(),
                                                 y[1].real(), C1),
                                   0.0}};
    };
    double A0 = std::abs(U0);
    double Ap0 = (U0.real() * Up0.real() + U0.imag() * Up0.imag()) / A0;
    auto amp = integrate_ode(amp_rhs, State{Complex{A0, 0.0}, Complex{Ap0, 0.0}},
                             samples);
    for (size_t i = 0; i < samples.size(); ++i) {
        double A = amp[i][0].real();
        CHECK(std::abs(A - std::abs(traj[i][0])) < 1e-6 * (1.0 + A));
        // slope formula matches d(arg U)/dxi from the complex flow
        double slope = phase_slope(fr, samples[i], std::abs(traj[i][0]), C1);
        Complex U = traj[i][0], Up = traj[i][1];
        double darg = (U.real() * Up.imag() - U.imag() * Up.real()) / std::norm(U);
        CHECK(std::abs(slope - darg) < 1e-6 * (1.0 + std::abs(darg)));
    }
}

TEST_CASE("scaling chart removes the explicit radius") {
    // V(z) = xi^{2/p} U(xi), z = ln xi turns the nu = 0 equation autonomous:
    // V'' + (2a+n-2) V' + a(a+n-2) V + k|V|^p V = 0, a = -2/p
    Parameters pr{3.0, 4.0, 3.0};
    catalog::FamilyConstants c;
    c.values["c1"] = 0.0;
    c.values["c2"] = 1.0;
    c.values["sign"] = 1.0;
    Solution s = catalog::instantiate("T02", pr, c);
    ReductionFrame fr = frame(Frame::trans_phase, pr, 0.0);
    CanonicalChart ch = chart_scaling(pr);
    double a = -2.0 / pr.p;
    auto V = [&](double z) {
        double xi = ch.xi_of_z(z);
        return ch.to_profile(xi, fr.invariant(s, 0.0, xi));
    };
    for (double z : {-0.3, 0.1, 0.6}) {
        Complex v = V(z), vp = fd_first(V, z, 1e-3, 2), vpp = fd_second(V, z, 5e-3, 2);
        Complex defect = vpp + (2.0 * a + pr.n - 2.0) * vp +
                         a * (a + pr.n - 2.0) * v +
                         pr.k * power_nonlinearity(v, pr.p);
        CHECK(std::abs(defect) < 1e-7 * (std::abs(vpp) + 1.0));
    }
    // round trip
    double xi = 1.3;
    Complex u0 = fr.invariant(s, 0.0, xi);
    CHECK(std::abs(ch.from_profile(xi, ch.to_profile(xi, u0)) - u0) < 1e-14);
    CHECK(ch.xi_of_z(ch.z_of_xi(1.7)) == doctest::Approx(1.7));
}

TEST_CASE("dilation chart closed form solves the reduced equation") {
    // p = 2(3-n)/(n-2); n = 4 gives p = -1 and U = 2C1/(k xi^2) - k xi^2 / 8
    Parameters pr{4.0, -1.0, 1.0};
    CanonicalChart ch = chart_dilation(pr);
    double C1 = 1.0;
    auto U = [&](double xi) {
        double z = ch.z_of_xi(xi);
        double A = 2.0 * C1 / pr.k - (pr.k / 8.0) * z * z;
        return ch.from_profile(xi, Complex{A, 0.0});
    };
    ReductionFrame fr = frame(Frame::trans_phase, pr, 0.0);
    for (double xi : {0.8, 1.1, 1.5}) {
        Complex rhs = ode_rhs(fr, xi, U(xi), fd_first(U, xi, 1e-3, 2));
        Complex upp = fd_second(U, xi, 5e-3, 2);
        CHECK(std::abs(upp - rhs) < 1e-8 * (std::abs(upp) + 1.0));
    }
    CHECK_THROWS_AS(chart_dilation(Parameters{3.0, 2.0, 1.0}), Error);
}

TEST_CASE("hidden amplitude charts hit their quadratic targets") {
    SUBCASE("p = 1, n = 16") {
        double k = 1.0;
        AmplitudeChart ch = chart_hidden_p1_n16(k);
        // closed rational family through the chart
        double c = 1.0;
        auto A = [&](double xi) {
            double d = 2.0 * xi * xi + c;
            return (96.0 / k) * (xi * xi + c) / (d * d);
        };
        // z -> xi inversion for this chart: xi = sqrt(-1/(2z)), z < 0
        auto B = [&](double z) {
            double xi = std::sqrt(-0.5 / z);
            return Complex{ch.to_profile(xi, A(xi)), 0.0};
        };
        for (double xi : {0.9, 1.2, 1.6}) {
            double z = ch.z_of_xi(xi);
            double b = B(z).real();
            Complex bpp = fd_second(B, z, 5e-3, 2);
            CHECK(std::abs(bpp.real() - ch.target_rhs(b)) <
                  1e-6 * (std::abs(bpp) + 1.0));
            CHECK(ch.from_profile(xi, ch.to_profile(xi, A(xi))) ==
                  doctest::Approx(A(xi)));
        }
    }
    SUBCASE("p = 1, n = 13/3, manufactured profile") {
        // push an arbitrary smooth B(z) back through the chart; the chart is
        // correct iff the two equation defects differ exactly by the point
        // transformation factor (dz/dxi)^2 * (dA/dB)
        double k = 1.0;
        ReductionFrame fr = frame(Frame::trans_phase,
                                  Parameters{13.0 / 3.0, 1.0, k}, 0.0);
        AmplitudeChart ch = chart_hidden_p1_n13_3(k);
        auto Bman = [](double z) { return 0.3 * std::sin(4.0 * z) + 0.5; };
        auto A = [&](double xi) {
            return Complex{ch.from_profile(xi, Bman(ch.z_of_xi(xi))), 0.0};
        };
        for (double xi : {1.2, 1.8, 2.6}) {
            double z = ch.z_of_xi(xi);
            double a = A(xi).real();
            double ap = fd_first(A, xi, 1e-3, 2).real();
            double defect_a = fd_second(A, xi, 5e-3, 2).real() -
                              level_set_rhs(fr, xi, a, ap, 0.0);
            auto Bc = [&](double zz) { return Complex{Bman(zz), 0.0}; };
            double defect_b = fd_second(Bc, z, 5e-3, 2).real() -
                              ch.target_rhs(Bman(z));
            double zp = std::pow(xi, -2.0 / 3.0) / 9.0;     // dz/dxi
            double dadb = std::pow(xi, -4.0 / 3.0);          // dA/dB
            CHECK(defect_a ==
                  doctest::Approx(zp * zp * dadb * defect_b).epsilon(1e-6));
        }
    }
}

TEST_CASE("blow-up reductions") {
    SUBCASE("constant critical profile is a rest point") {
        Parameters pr{2.0, 2.0, 1.0};
        double omega = -1.0;
        Complex U{std::pow(-omega / pr.k, pr.n / 4.0), 0.0};
        CHECK(std::abs(blowup_rhs(BlowupKind::critical, pr, omega, 1.3, U,
                                  Complex{0.0, 0.0})) < 1e-14);

        Solution u = blowup_reconstruct(BlowupKind::critical, pr, omega, 1.0,
                                        [U](double) { return U; });
        auto rep = verify::residual_scan(u, 0.3, 0.5, 2.0, 15, 1e-4);
        CHECK(rep.points == 15);
        CHECK(rep.max_rel < 1e-6);
        CHECK(u.valid_at(1.5, 1.0) == false);  // past blow-up time
    }

    SUBCASE("reconstruction scales a manufactured profile defect correctly") {
        // for any smooth W the equation residual of the reconstruction is
        // lambda^{q} times the profile-equation defect at the same xi
        auto W = [](double xi) {
            return std::exp(-0.4 * xi * xi) * Complex{1.0, 0.3};
        };
        struct K {
            BlowupKind kind;
            Parameters pr;
            double omega, q;
        };
        for (const K& kc : {K{BlowupKind::critical, Parameters{2.0, 2.0, 1.0},
                              -0.7, 2.0 + 1.0},
                            K{BlowupKind::supercritical,
                              Parameters{1.0, 2.0, -1.0}, 0.4, 0.5 + 1.0}}) {
            double T = 1.0;
            Solution u = blowup_reconstruct(kc.kind, kc.pr, kc.omega, T, W);
            auto defect = [&](double xi) {
                Complex upp = fd_second(W, xi, 5e-3, 2);
                return std::abs(upp - blowup_rhs(kc.kind, kc.pr, kc.omega, xi,
                                                 W(xi), fd_first(W, xi, 1e-3, 2)));
            };
            for (double t : {0.2, 0.6}) {
                double lam = 1.0 / (T - t);
                double xi = 0.9;
                double r = kc.kind == BlowupKind::critical ? xi / lam
                                                           : xi / std::sqrt(lam);
                Complex ut = diff_t(u, t, r, 1e-4, 2);
                Complex ur = diff_r(u, t, r, 1e-4, 2);
                Complex urr = diff_rr(u, t, r, 1e-3, 2);
                Complex val = u(t, r);
                Complex res = Complex{0.0, 1.0} * ut - urr -
                              (kc.pr.n - 1.0) / r * ur -
                              kc.pr.k * power_nonlinearity(val, kc.pr.p);
                double expect = std::pow(lam, kc.q) * defect(xi);
                CHECK(std::abs(res) ==
                      doctest::Approx(expect).epsilon(1e-5));
            }
        }
    }

    SUBCASE("amplitude decays at the self-similar rate") {
        Parameters pr{2.0, 2.0, 1.0};
        Solution u = blowup_reconstruct(BlowupKind::critical, pr, -1.0, 1.0,
                                        [](double) { return Complex{1.0, 0.0}; });
        // |u(t, r0)| = (T-t)^{-n/2} for the constant profile
        double r0 = 0.4;
        for (double t : {0.5, 0.8, 0.95}) {
            double slope = std::log(std::abs(u(t, r0))) / std::log(1.0 - t);
            CHECK(slope == doctest::Approx(-pr.n / 2.0).epsilon(1e-10));
        }
    }
}
