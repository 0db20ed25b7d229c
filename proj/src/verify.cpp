#include "rnls/verify.hpp"

#include <cmath>
#include <thread>

#include "rnls/conserve.hpp"
#include "rnls/specfun.hpp"

namespace rnls::verify {

namespace {

constexpr Complex kI{0.0, 1.0};

std::vector<double> sample_radii(double r_lo, double r_hi, int points) {
    if (points < 1 || !(r_hi > r_lo))
        throw Error(ErrorKind::constraint, "bad sampling window");
    std::vector<double> rs(points);
    double cell = (r_hi - r_lo) / points;
    for (int i = 0; i < points; ++i) rs[i] = r_lo + (i + 0.5) * cell;
    return rs;
}

}  // namespace

double pde_residual(const Solution& s, double t, double r, double h0,
                    int levels) {
    if (!s.valid_at(t, r))
        throw Error(ErrorKind::domain, "residual requested outside the domain");
    Complex u = s.eval(t, r);
    Complex ut = diff_t(s, t, r, h0, levels);
    Complex ur = diff_r(s, t, r, h0, levels);
    Complex urr = diff_rr(s, t, r, h0, levels);
    const Parameters& pr = s.params;
    double a = std::abs(u);
    Complex res = kI * ut - urr - (pr.n - 1.0) / r * ur -
                  pr.k * std::pow(a, pr.p) * u;
    double scale = std::abs(ut) + std::abs(urr) + std::abs(ur / r) +
                   std::abs(pr.k) * std::pow(a, pr.p + 1.0) + 1e-30;
    return std::abs(res) / scale;
}

ResidualReport residual_scan(const Solution& s, double t, double r_lo,
                             double r_hi, int points, double h0, int levels) {
    ResidualReport rep;
    double sum = 0.0;
    for (double r : sample_radii(r_lo, r_hi, points)) {
        if (!s.valid_at(t, r)) {
            ++rep.skipped;
            continue;
        }
        double res = pde_residual(s, t, r, h0, levels);
        rep.max_rel = std::max(rep.max_rel, res);
        sum += res;
        ++rep.points;
    }
    if (rep.points > 0) rep.mean_rel = sum / double(rep.points);
    return rep;
}

double orbit_residual(const Solution& s, symmetry::ActionKind kind, double eps,
                      double t, double r_lo, double r_hi, int points,
                      double h0, int levels) {
    Solution moved = symmetry::apply_group(kind, eps, s);
    ResidualReport rep = residual_scan(moved, t, r_lo, r_hi, points, h0, levels);
    if (rep.points * 2 < std::size_t(points))
        throw Error(ErrorKind::numeric,
                    "group action moved most sample points out of the domain");
    return rep.max_rel;
}

std::vector<QuadratureCase> quadrature_cases() {
    std::vector<QuadratureCase> cs;

    // Scaling chart, H(A) = C1 - C2^2 A^{-2} + (4/p^2) A^2 - (2k/(p+2)) A^{p+2}.

    // C1 = C2 = 0, p = 4, k = 3: A = 4^{-1/4} cosh(z)^{-1/2}, decreasing
    cs.push_back(
        {"sech_profile_p4",
         [](double A) { return 0.25 * A * A - std::pow(A, 6); },
         [](double z) { return std::pow(4.0, -0.25) / std::sqrt(std::cosh(z)); },
         0.2, 1.5, -1.0});

    // p = -1, k = 1, C1 = 1 > k^2/4: A = (k + sqrt(4C1-k^2) sinh 2z)/4
    cs.push_back({"sinh_profile_p-1",
                  [](double A) { return 1.0 + 4.0 * A * A - 2.0 * A; },
                  [](double z) {
                      return 0.25 * (1.0 + std::sqrt(3.0) * std::sinh(2.0 * z));
                  },
                  0.1, 1.2, 1.0});

    // p = -1, k = 2, C1 = 0.5 < k^2/4: A = (k + sqrt(k^2-4C1) cosh 2z)/4
    cs.push_back({"cosh_profile_p-1",
                  [](double A) { return 0.5 + 4.0 * A * A - 4.0 * A; },
                  [](double z) {
                      return 0.25 * (2.0 + std::sqrt(2.0) * std::cosh(2.0 * z));
                  },
                  0.1, 1.2, 1.0});

    // p = -4, k = 1, C1 = 0.3, C2 = 0: A^2 = -2C1 + 2 sqrt(k-C1^2) sinh z
    cs.push_back({"sinh_profile_p-4",
                  [](double A) {
                      return 0.3 + 0.25 * A * A + 1.0 / (A * A);
                  },
                  [](double z) {
                      return std::sqrt(-0.6 +
                                       2.0 * std::sqrt(0.91) * std::sinh(z));
                  },
                  0.5, 1.5, 1.0});

    // p = -4, k = 1, C1 = 0.2, C2 = 0.5 (C1^2 + C2^2 < k):
    // A^2 = -2C1 + 2 sqrt(k - C1^2 - C2^2) sinh z
    cs.push_back({"sinh_profile_p-4_rotating",
                  [](double A) {
                      return 0.2 + 0.25 * A * A + 0.75 / (A * A);
                  },
                  [](double z) {
                      return std::sqrt(-0.4 +
                                       2.0 * std::sqrt(0.71) * std::sinh(z));
                  },
                  0.5, 1.5, 1.0});

    // p = -4, k = 1, C1 = -1.5 (C1^2 > k), C2 = 0:
    // A^2 = -2C1 + 2 sqrt(C1^2 - k) cosh z
    cs.push_back({"cosh_profile_p-4",
                  [](double A) {
                      return -1.5 + 0.25 * A * A + 1.0 / (A * A);
                  },
                  [](double z) {
                      return std::sqrt(3.0 +
                                       2.0 * std::sqrt(1.25) * std::cosh(z));
                  },
                  0.3, 1.3, 1.0});

    // Dilation chart, H(A) = C1 - C2^2 A^{-2} - (2k(1+p/2)^2/(p+2)) A^{p+2}.

    // p = -1, k = 2, C1 = 1: A = 2C1/k - (k/8) z^2, H = C1 - (k/2) A
    cs.push_back({"parabolic_profile_p-1",
                  [](double A) { return 1.0 - A; },
                  [](double z) { return 1.0 - 0.25 * z * z; }, 0.4, 1.6, -1.0});

    // p = -4, k = 1, C1 = C2 = 0: A = sqrt(2 z), H = k A^{-2}
    cs.push_back({"sqrt_profile_p-4",
                  [](double A) { return 1.0 / (A * A); },
                  [](double z) { return std::sqrt(2.0 * z); }, 0.3, 1.5, 1.0});

    return cs;
}

double quadrature_defect(const QuadratureCase& qc, int checkpoints) {
    if (checkpoints < 1)
        throw Error(ErrorKind::constraint, "checkpoints < 1");
    double A0 = qc.amplitude(qc.z_lo);
    auto sqrtH = [&qc](double A) {
        double h = qc.H(A);
        if (h <= 0.0)
            throw Error(ErrorKind::numeric,
                        "quadrature window crossed a turning point");
        return std::sqrt(h);
    };
    // integral_{A0}^{A} dA'/sqrt(H), strictly increasing in A
    auto I = [&](double A) {
        return specfun::integrate_real(
            [&sqrtH](double a) { return 1.0 / sqrtH(a); }, A0, A, 1e-13);
    };

    double worst = 0.0;
    for (int j = 1; j <= checkpoints; ++j) {
        double z = qc.z_lo + (qc.z_hi - qc.z_lo) * j / checkpoints;
        double target = qc.orientation * (z - qc.z_lo);
        double Ac = qc.amplitude(z);
        // Newton inversion of the monotone map I (derivative 1/sqrt(H)),
        // seeded away from the closed-form value.
        double A = 0.5 * (A0 + Ac);
        for (int it = 0; it < 80; ++it) {
            double step = (target - I(A)) * sqrtH(A);
            A += step;
            if (std::abs(step) <= 1e-13 * std::max(1.0, std::abs(A))) break;
        }
        worst = std::max(worst, std::abs(A - Ac) / std::max(1.0, std::abs(Ac)));
    }
    return worst;
}

SuiteReport run_suite(const std::vector<catalog::Witness>& witnesses,
                      int points, int jobs) {
    SuiteReport rep;
    rep.entries.resize(witnesses.size());

    auto run_one = [&](std::size_t i) {
        const catalog::Witness& w = witnesses[i];
        SuiteEntry& e = rep.entries[i];
        e.id = w.id;
        e.tol = w.tol;
        try {
            Solution s = catalog::instantiate(w);
            ResidualReport r =
                residual_scan(s, w.t0, w.r_lo, w.r_hi, points, 1e-4);
            e.max_rel = r.max_rel;
            e.points = r.points;
            e.pass = r.points == std::size_t(points) && r.max_rel <= w.tol;
        } catch (const std::exception& ex) {
            e.error = ex.what();
            e.pass = false;
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < witnesses.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t n = witnesses.size();
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (std::size_t i = j; i < n; i += std::size_t(jobs))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
    }
    for (const auto& e : rep.entries) rep.all_pass = rep.all_pass && e.pass;
    return rep;
}

namespace {

void fixture_checks(const catalog::Witness& w, int points,
                    std::vector<CheckRow>& out) {
    auto row = [&out, &w](const std::string& check, const std::string& status,
                          double defect) {
        out.push_back({w.id, check, status, defect});
    };

    Solution s;
    try {
        s = catalog::instantiate(w);
    } catch (const std::exception&) {
        row("instantiate", "fail", 0.0);
        return;
    }

    try {
        ResidualReport r = residual_scan(s, w.t0, w.r_lo, w.r_hi, points, 1e-4);
        bool ok = r.points == std::size_t(points) && r.max_rel <= w.tol;
        row("residual", ok ? "pass" : "fail", r.max_rel);
    } catch (const std::exception&) {
        row("residual", "fail", 0.0);
    }

    const double orbit_tol = 1e-5;
    struct Act {
        symmetry::ActionKind kind;
        double eps;
        const char* name;
        bool critical_only;
    };
    const Act acts[] = {
        {symmetry::ActionKind::phase, 0.3, "orbit_phase", false},
        {symmetry::ActionKind::translate, 0.1, "orbit_translate", false},
        {symmetry::ActionKind::scale, 1.25, "orbit_scale", false},
        {symmetry::ActionKind::invert, 0.05, "orbit_invert", true},
    };
    for (const Act& a : acts) {
        if (a.critical_only && !w.params.critical()) continue;
        try {
            double d = orbit_residual(s, a.kind, a.eps, w.t0, w.r_lo, w.r_hi,
                                      points, 1e-4);
            row(a.name, d <= orbit_tol ? "pass" : "fail", d);
        } catch (const Error&) {
            row(a.name, "skip", 0.0);
        }
    }

    for (const conserve::CurrentPair* cur : conserve::currents(w.params)) {
        double worst = 0.0;
        std::string status = "pass";
        try {
            for (double f : {0.35, 0.65}) {
                double r = w.r_lo + f * (w.r_hi - w.r_lo);
                auto d = conserve::local_defect(*cur, s, w.t0, r, 5e-4);
                worst = std::max(worst, d.defect / d.scale);
            }
            if (worst > 1e-5) status = "fail";
        } catch (const Error&) {
            status = "skip";
        }
        row("conserve_" + cur->name, status, worst);
    }
}

}  // namespace

std::vector<CheckRow> full_suite(const std::vector<catalog::Witness>& witnesses,
                                 const std::string& filter, int points,
                                 int jobs) {
    std::vector<const catalog::Witness*> selected;
    for (const auto& w : witnesses)
        if (filter.empty() || w.id.find(filter) != std::string::npos)
            selected.push_back(&w);

    std::vector<std::vector<CheckRow>> blocks(selected.size());
    auto run_one = [&](std::size_t i) {
        fixture_checks(*selected[i], points, blocks[i]);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (std::size_t i = j; i < selected.size();
                     i += std::size_t(jobs))
                    run_one(i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<CheckRow> rows;
    for (auto& b : blocks)
        for (auto& r : b) rows.push_back(std::move(r));
    return rows;
}

bool all_passed(const std::vector<CheckRow>& rows) {
    for (const auto& r : rows)
        if (r.status == "fail") return false;
    return true;
}

}  // namespace rnls::verify
