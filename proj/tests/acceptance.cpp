// Acceptance gate: one line per criterion, non-zero exit if any fails.
// Usage: acceptance <witness-file>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rnls/catalog.hpp"
#include "rnls/conserve.hpp"
#include "rnls/reduce.hpp"
#include "rnls/specfun.hpp"
#include "rnls/symmetry.hpp"
#include "rnls/verify.hpp"

using namespace rnls;

namespace {

int g_failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, what,
                detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

catalog::FamilyConstants consts(
    std::initializer_list<std::pair<const char*, double>> kv) {
    catalog::FamilyConstants c;
    for (const auto& [k, v] : kv) c.values[k] = v;
    return c;
}

// ---- criterion 1: every non-vacuous family verifies on its witness window ------

void criterion_residual_suite(const std::vector<catalog::Witness>& ws) {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = verify::run_suite(ws, 20, 1);  // single worker, budget 60 s
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::size_t passed = 0;
    double worst = 0.0;
    for (const auto& e : rep.entries) {
        if (e.pass) ++passed;
        worst = std::max(worst, e.max_rel);
    }
    bool ok = rep.all_pass && passed >= 33 && secs <= 60.0;
    report(1, "catalog families verify at 1e-6 on 20-point windows", ok,
           std::to_string(passed) + "/" + std::to_string(rep.entries.size()) +
               " families, worst " + fmt(worst) + ", " + fmt(secs) + " s");
}

// ---- criterion 2: tight residual spot checks with exact values -----------------

void criterion_spot_checks() {
    Solution t01 = catalog::instantiate("T01", Parameters{5.0, 1.0, 1.0},
                                        consts({{"c1", 0.0}}));
    double worst1 = 0.0, value_err1 = 0.0;
    for (int i = 0; i < 8; ++i) {
        double r = 1.0 + 0.25 * i;
        worst1 = std::max(worst1, verify::pde_residual(t01, 0.3, r, 5e-3, 2));
        value_err1 = std::max(value_err1,
                              std::abs(t01(0.3, r) - Complex{2.0 / (r * r), 0.0}));
    }
    bool ok1 = worst1 <= 1e-10 && value_err1 < 1e-14;

    Solution t02 = catalog::instantiate(
        "T02", Parameters{3.0, 4.0, 3.0},
        consts({{"c1", 0.0}, {"c2", 1.0}, {"sign", 1.0}}));
    double worst2 = 0.0, value_err2 = 0.0;
    for (int i = 0; i < 8; ++i) {
        double r = 0.6 + 0.25 * i;
        worst2 = std::max(worst2, verify::pde_residual(t02, 0.3, r, 5e-3, 2));
        value_err2 = std::max(
            value_err2,
            std::abs(std::abs(t02(0.3, r)) - 1.0 / std::sqrt(1.0 + r * r)));
    }
    bool ok2 = worst2 <= 1e-8 && value_err2 < 1e-14;

    report(2, "monopole and bright-profile spot residuals", ok1 && ok2,
           "monopole " + fmt(worst1) + ", bright " + fmt(worst2));
}

// ---- criterion 3: the bracket table is exact ------------------------------------

void criterion_brackets() {
    using namespace symmetry;
    Parameters crit{2.0, 2.0, 1.0};
    VectorField ph = gen_phase();
    VectorField tr = gen_trans();
    VectorField sc = gen_scal(crit.p);
    VectorField in = gen_inver(crit);

    bool ok = lie_bracket(ph, tr).h.is_zero() && lie_bracket(ph, tr).tau.is_zero() &&
              lie_bracket(ph, tr).rho.is_zero() && lie_bracket(ph, sc).h.is_zero() &&
              lie_bracket(ph, in).h.is_zero() &&
              lie_bracket(tr, sc) == scale_field(tr, 2.0) &&
              lie_bracket(tr, in) == sc &&
              lie_bracket(sc, in) == scale_field(in, 2.0);

    // exact pointwise agreement on a 20-point sample as well
    const VectorField lhs[3] = {lie_bracket(tr, sc), lie_bracket(tr, in),
                                lie_bracket(sc, in)};
    const VectorField rhs[3] = {scale_field(tr, 2.0), sc, scale_field(in, 2.0)};
    for (int q = 0; q < 3; ++q) {
        for (int i = 0; i < 20; ++i) {
            double t = -1.9 + 0.2 * i, r = 0.1 + 0.15 * i;
            ok = ok && lhs[q].tau.eval(t, r) == rhs[q].tau.eval(t, r) &&
                 lhs[q].rho.eval(t, r) == rhs[q].rho.eval(t, r) &&
                 lhs[q].h.eval(t, r) == rhs[q].h.eval(t, r);
        }
    }
    report(3, "Lie bracket table holds exactly", ok, "sl(2) + central phase");
}

// ---- criterion 4: finite group actions map solutions to solutions ---------------

void criterion_orbits(const std::vector<catalog::Witness>& ws) {
    const std::vector<std::string> ids{"T01", "T03", "T05", "T06", "T11", "T17",
                                       "T19", "T20", "T21", "T22", "I01"};
    bool ok = true;
    double worst = 0.0;
    int checked = 0, families = 0;
    std::string bad;
    for (const auto& id : ids) {
        const catalog::Witness* w = nullptr;
        for (const auto& cand : ws)
            if (cand.id == id) w = &cand;
        if (!w) {
            ok = false;
            bad = id + " missing";
            continue;
        }
        ++families;
        Solution s = catalog::instantiate(*w);
        struct Act {
            symmetry::ActionKind kind;
            double eps[3];
        };
        std::vector<Act> acts{
            {symmetry::ActionKind::phase, {0.1, 1.0, 3.0}},
            {symmetry::ActionKind::translate, {0.1, 1.0, 5.0}},
            {symmetry::ActionKind::scale, {1.05, 1.3, 2.0}},
        };
        // large time shifts would leave the 1 + c t > 0 region of the
        // time-dependent families
        if (id == "I01") acts[1] = {symmetry::ActionKind::translate, {0.1, 0.3, 0.5}};
        if (w->params.critical())
            acts.push_back({symmetry::ActionKind::invert, {0.01, 0.05, 0.1}});
        for (const auto& a : acts) {
            for (double eps : a.eps) {
                double d;
                try {
                    d = verify::orbit_residual(s, a.kind, eps, w->t0, w->r_lo,
                                               w->r_hi, 20, 1e-4);
                } catch (const Error&) {
                    d = 1.0;  // leaving the domain entirely counts as failure
                }
                worst = std::max(worst, d);
                ++checked;
                if (d > 1e-5) {
                    ok = false;
                    if (bad.empty()) bad = id;
                }
            }
        }
    }
    report(4, "group orbits of closed forms remain solutions", ok,
           std::to_string(checked) + " orbit scans over " +
               std::to_string(families) + " families, worst " + fmt(worst) +
               (bad.empty() ? "" : ", first failure " + bad));
}

// ---- criterion 5: conservation laws ---------------------------------------------

void criterion_conservation(const std::vector<catalog::Witness>& ws) {
    bool ok = true;
    double worst = 0.0;
    std::string bad;
    for (const auto& w : ws) {
        Solution s = catalog::instantiate(w);
        for (const conserve::CurrentPair* cur : conserve::currents(w.params)) {
            for (double f : {0.3, 0.7}) {
                double r = w.r_lo + f * (w.r_hi - w.r_lo);
                auto d = conserve::local_defect(*cur, s, w.t0, r, 5e-4);
                double rel = d.defect / d.scale;
                worst = std::max(worst, rel);
                if (rel > 1e-5) {
                    ok = false;
                    if (bad.empty()) bad = w.id + "/" + cur->name;
                }
            }
        }
    }

    // standing-wave charge is a strict constant of motion
    Solution sw = catalog::instantiate(
        "S01", Parameters{3.0, -1.0, 1.0},
        consts({{"c1", 0.0}, {"c2", -10.0}, {"c3", 2.0}, {"nu", 1.0}}));
    double q1 = conserve::global_quantity(conserve::charge(), sw, 0.2, 4.1, 4.8);
    double q2 = conserve::global_quantity(conserve::charge(), sw, 0.9, 4.1, 4.8);
    bool const_ok = std::abs(q1 - q2) <= 1e-12 * (1.0 + std::abs(q1));
    ok = ok && const_ok;

    report(5, "local conservation and standing-wave charge", ok,
           "worst local " + fmt(worst) + ", charge drift " + fmt(std::abs(q1 - q2)) +
               (bad.empty() ? "" : ", first failure " + bad));
}

// ---- criterion 6: reduced first integrals ---------------------------------------

void criterion_first_integrals() {
    using namespace reduce;
    bool ok = true;
    double worst_drift = 0.0;

    struct Case {
        Frame f;
        Parameters pr;
        double sub;
        Complex U0, Up0;
    };
    std::vector<Case> cases{
        {Frame::trans_phase, {3.0, 2.0, 1.0}, 1.0, {1.0, 0.2}, {0.1, -0.3}},
        {Frame::scal_phase, {2.0, 2.0, 1.0}, 0.3, {0.8, -0.1}, {-0.2, 0.4}},
        {Frame::conf_phase, {2.0, 2.0, 1.0}, 0.5, {0.6, 0.3}, {0.2, 0.1}},
    };
    for (const auto& cs : cases) {
        ReductionFrame fr;
        fr.frame = cs.f;
        fr.params = cs.pr;
        fr.sub = cs.sub;
        std::vector<double> samples;
        for (int i = 0; i <= 24; ++i) samples.push_back(0.2 + 1.8 * i / 24.0);
        auto traj = integrate_profile(fr, cs.U0, cs.Up0, samples);
        double c0 = first_integral_C1(fr, samples[0], traj[0][0], traj[0][1]);
        for (size_t i = 1; i < samples.size(); ++i) {
            double drift = std::abs(
                first_integral_C1(fr, samples[i], traj[i][0], traj[i][1]) - c0);
            worst_drift = std::max(worst_drift, drift / (1.0 + std::abs(c0)));
        }
    }
    ok = worst_drift <= 1e-7;

    // hand value for the rotating kink: C1 = -sign * sqrt(k)
    double worst_kink = 0.0;
    for (double sign : {1.0, -1.0}) {
        Parameters pr{1.0, -4.0, 2.0};
        Solution s = catalog::instantiate(
            "T25", pr,
            consts({{"c1", 0.0}, {"c2", 0.2}, {"c3", 1.1}, {"sign", sign}}));
        ReductionFrame fr;
        fr.frame = Frame::trans_phase;
        fr.params = pr;
        fr.sub = 0.0;
        auto U = [&](double xi) { return fr.invariant(s, 0.0, xi); };
        double xi = 1.7;
        double c1 = first_integral_C1(fr, xi, U(xi), fd_first(U, xi, 1e-3, 2));
        worst_kink = std::max(worst_kink, std::abs(c1 + sign * std::sqrt(pr.k)));
    }
    ok = ok && worst_kink <= 1e-9;

    report(6, "first integrals constant along reduced flows", ok,
           "drift " + fmt(worst_drift) + " over a decade, kink value error " +
               fmt(worst_kink));
}

// ---- criterion 7: quadrature closed forms ----------------------------------------

void criterion_quadratures() {
    auto cases = verify::quadrature_cases();
    bool ok = cases.size() >= 6;
    double worst = 0.0;
    for (const auto& qc : cases) {
        double d = verify::quadrature_defect(qc, 10);
        worst = std::max(worst, d);
        if (d > 1e-6) ok = false;
    }
    report(7, "level-set quadratures invert to the closed forms", ok,
           std::to_string(cases.size()) + " cases, worst " + fmt(worst));
}

// ---- criterion 8: special-function layer ------------------------------------------

void criterion_specfun() {
    using namespace specfun;
    constexpr double kPi = 3.14159265358979323846;
    double worst_b = 0.0;
    for (double nu : {1.0 / 3.0, 0.5, 3.0}) {
        for (double x : {0.4, 2.7, 8.0, 21.0, 50.0}) {
            auto dj = bessel_j(nu - 1.0, x) - nu / x * bessel_j(nu, x);
            auto dy = bessel_y(nu - 1.0, x) - nu / x * bessel_y(nu, x);
            auto di = bessel_i(nu - 1.0, x) - nu / x * bessel_i(nu, x);
            auto dk = -bessel_k(nu - 1.0, x) - nu / x * bessel_k(nu, x);
            double wjy = bessel_j(nu, x) * dy - dj * bessel_y(nu, x);
            double wik = bessel_i(nu, x) * dk - di * bessel_k(nu, x);
            worst_b = std::max(worst_b,
                               std::abs(wjy - 2.0 / (kPi * x)) / (2.0 / (kPi * x)));
            worst_b = std::max(worst_b, std::abs(wik + 1.0 / x) * x);
        }
    }

    // Whittaker defining equation along both argument patterns in use
    double worst_w = 0.0;
    auto ode_res = [&](const std::function<Complex(Complex)>& w, Complex kappa,
                       Complex z0, Complex dir) {
        auto f = [&](double t) { return w(z0 + dir * t); };
        Complex q = 0.25 - kappa / z0 + (2.25 - 0.25) / (z0 * z0);
        Complex lhs = fd_second(f, 0.0, 5e-3, 2) / (dir * dir);
        Complex rhs = q * f(0.0);
        return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-30);
    };
    for (double x : {0.3, 0.9, 2.2}) {
        Complex kap{0.0, -0.15};
        auto m = [&](Complex z) { return whittaker_m(kap, 1.5, z); };
        auto s = [&](Complex z) { return whittaker_second(kap, z); };
        worst_w = std::max(worst_w, ode_res(m, kap, Complex{0.0, x}, Complex{0.0, 1.0}));
        worst_w = std::max(worst_w, ode_res(s, kap, Complex{0.0, x}, Complex{0.0, 1.0}));
        auto m2 = [&](Complex z) { return whittaker_m(0.25, 1.5, z); };
        auto s2 = [&](Complex z) { return whittaker_second(0.25, z); };
        worst_w = std::max(worst_w, ode_res(m2, 0.25, Complex{x, 0.0}, 1.0));
        worst_w = std::max(worst_w, ode_res(s2, 0.25, Complex{x, 0.0}, 1.0));
    }

    // the two variation-of-parameters families lean on the whole layer
    Solution g = catalog::instantiate(
        "G01", Parameters{-4.0, -1.0, 1.0},
        consts({{"c1", 0.3}, {"c2", 1.5}, {"c3", 0.3}, {"mu", 0.0}}));
    double rg = verify::residual_scan(g, 0.7, 0.95, 1.5, 12, 1e-4).max_rel;
    Solution p = catalog::instantiate(
        "P01", Parameters{-4.0, -1.0, 1.0},
        consts({{"c1", 0.3}, {"c2", 0.4}, {"c3", 0.8}, {"kappa", 0.0}}));
    double rp = verify::residual_scan(p, 0.3, 1.1, 1.8, 12, 1e-4).max_rel;

    bool ok = worst_b <= 1e-8 && worst_w <= 1e-7 && rg <= 1e-5 && rp <= 1e-5;
    report(8, "special-function layer", ok,
           "wronskians " + fmt(worst_b) + ", whittaker ode " + fmt(worst_w) +
               ", series families " + fmt(std::max(rg, rp)));
}

// ---- criterion 9: self-similar blow-up --------------------------------------------

void criterion_blowup() {
    using namespace reduce;
    Parameters pr{2.0, 2.0, 1.0};
    double omega = -1.0, T = 1.0;
    Complex U{std::pow(-omega / pr.k, pr.n / 4.0), 0.0};
    Solution u = blowup_reconstruct(BlowupKind::critical, pr, omega, T,
                                    [U](double) { return U; });

    double worst_res = 0.0;
    for (double t : {0.1, 0.3, 0.5})
        worst_res = std::max(worst_res,
                             verify::residual_scan(u, t, 0.5, 2.0, 10, 1e-4).max_rel);

    // least-squares slope of log|u| against log(T - t) over [0.5, 0.99]
    double r0 = 0.4;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int npts = 0;
    for (double t = 0.5; t <= 0.99 + 1e-12; t += 0.035) {
        double x = std::log(T - t), y = std::log(std::abs(u(t, r0)));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++npts;
    }
    double slope = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);

    bool ok = worst_res <= 1e-6 && std::abs(slope + pr.n / 2.0) <= 0.01;
    report(9, "self-similar blow-up reconstruction", ok,
           "residual " + fmt(worst_res) + ", amplitude slope " + fmt(slope));
}

// ---- criterion 10: the harness rejects non-solutions -------------------------------

void criterion_negative_control() {
    Solution t02 = catalog::instantiate(
        "T02", Parameters{3.0, 4.0, 3.0},
        consts({{"c1", 0.0}, {"c2", 1.0}, {"sign", 1.0}}));
    Solution bad = t02;
    auto inner = t02.eval;
    bad.eval = [inner](double t, double r) { return 1.01 * inner(t, r); };
    double res = verify::residual_scan(bad, 0.3, 0.5, 2.5, 20, 1e-4).max_rel;
    report(10, "1% amplitude perturbation is rejected", res >= 1e-3,
           "residual " + fmt(res));
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <witness-file>\n");
        return 2;
    }
    try {
        auto ws = catalog::load_witnesses(argv[1]);
        criterion_residual_suite(ws);
        criterion_spot_checks();
        criterion_brackets();
        criterion_orbits(ws);
        criterion_conservation(ws);
        criterion_first_integrals();
        criterion_quadratures();
        criterion_specfun();
        criterion_blowup();
        criterion_negative_control();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
        return 2;
    }
    return g_failures == 0 ? 0 : 1;
}
