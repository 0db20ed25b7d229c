#include "rnls/catalog.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "rnls/specfun.hpp"
#include "rnls/symmetry.hpp"

namespace rnls::catalog {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorKind::constraint, msg);
}

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

Complex phase(double x) { return std::exp(Complex{0.0, x}); }

// Composite Simpson with a fixed panel count: unlike adaptive quadrature its
// error is a smooth function of the endpoint, so finite differencing the
// resulting solution does not amplify quadrature jitter.
Complex fixed_simpson(const std::function<Complex(double)>& f, double a,
                      double b, int panels = 100) {
    double h = (b - a) / (2.0 * panels);
    specfun::KahanSum s;
    s.add(f(a));
    s.add(f(b));
    for (int i = 1; i < 2 * panels; ++i)
        s.add((i % 2 == 1 ? 4.0 : 2.0) * f(a + h * i));
    return s.value() * (h / 3.0);
}

using Maker = std::function<Solution(const Parameters&, const FamilyConstants&)>;

struct Entry {
    FamilyDescriptor desc;
    Maker make;
};

Solution basic(const Parameters& params, const std::string& label,
               std::function<Complex(double, double)> eval,
               std::function<bool(double, double)> dom) {
    Solution s;
    s.params = params;
    s.label = label;
    s.eval = std::move(eval);
    s.in_domain = std::move(dom);
    return s;
}

// Several families are r-dependent amplitudes times a constant phase; the
// domain is exactly where the amplitude is positive.
Solution static_amp(const Parameters& params, const std::string& label,
                    std::function<double(double)> amp, double c1) {
    return basic(
        params, label,
        [amp, c1](double, double r) { return amp(r) * phase(c1); },
        [amp](double, double r) { return amp(r) > 0.0; });
}

// ---- Whittaker building blocks ----------------------------------------------------

// Complex amplitude of the scaling-type similarity solution:
//   W(xi) = (i k / 3) (w2(xi) I1(c2 -> xi; w1) - w1(xi) I2(c3 -> xi; w2)),
// w1 = M_{-i mu/2, 3/2}(i/(4 xi)), w2 = companion second solution.
double whitt_scal_amp(double k, double mu, double xi, double c2, double c3) {
    Complex kap = -kI * mu / 2.0;
    auto w1 = [kap](double x) {
        return specfun::whittaker_m(kap, 1.5, kI / (4.0 * x));
    };
    auto w2 = [kap](double x) {
        return specfun::whittaker_second(kap, kI / (4.0 * x));
    };
    Complex W = kI * k / 3.0 *
                (w2(xi) * fixed_simpson(w1, c2, xi) -
                 w1(xi) * fixed_simpson(w2, c3, xi));
    if (std::abs(W.imag()) > 1e-7 * std::max(1.0, std::abs(W.real())))
        throw Error(ErrorKind::numeric,
                    "whittaker amplitude acquired an imaginary part");
    return W.real();
}

// Conformal-type analogue with real argument 1/(2 xi) and order kappa/2.
double whitt_conf_amp(double k, double kappa, double xi, double c2, double c3) {
    Complex kap{0.5 * kappa, 0.0};
    auto w1 = [kap](double x) {
        return specfun::whittaker_m(kap, 1.5, Complex{1.0 / (2.0 * x), 0.0});
    };
    auto w2 = [kap](double x) {
        return specfun::whittaker_second(kap, Complex{1.0 / (2.0 * x), 0.0});
    };
    Complex W = k / 6.0 *
                (w1(xi) * fixed_simpson(w2, c2, xi) -
                 w2(xi) * fixed_simpson(w1, c3, xi));
    if (std::abs(W.imag()) > 1e-7 * std::max(1.0, std::abs(W.real())))
        throw Error(ErrorKind::numeric,
                    "whittaker amplitude acquired an imaginary part");
    return W.real();
}

bool whitt_xi_ok(double xi, double c2, double c3) {
    // keep the series argument |z| <= 60 along the whole integration path
    double lo = std::min({xi, c2, c3});
    return xi > 0.0 && lo > 0.005;
}

// ---- the registry -----------------------------------------------------------------

std::vector<Entry> build_entries() {
    std::vector<Entry> es;
    auto add = [&es](FamilyDescriptor d, Maker m) {
        es.push_back({std::move(d), std::move(m)});
    };

    // -- T01: static power-law profile
    add({"T01", "u = (2(p(n-2)-2)/(k p^2))^{1/p} r^{-2/p} e^{i c1}",
         "k/(p(n-2)-2) > 0", {"c1"}, Behaviour::monopole},
        [](const Parameters& pr, const FamilyConstants& c) {
            double base = 2.0 * (pr.p * (pr.n - 2.0) - 2.0) / (pr.k * pr.p * pr.p);
            require(base > 0.0, "T01: k/(p(n-2)-2) must be > 0");
            double c1 = c.get_or("c1", 0.0);
            double a = std::pow(base, 1.0 / pr.p), w = -2.0 / pr.p;
            return static_amp(pr, "T01",
                              [a, w](double r) { return a * std::pow(r, w); }, c1);
        });

    // -- T02: algebraic soliton at p = 4/(n-2)
    add({"T02", "u = (s 8(p+2)/(k p^2))^{1/p} (c2 r^2 + s/c2)^{-2/p} e^{i c1}",
         "p = 4/(n-2), s k (1-2/n) > 0, n != 2", {"c1", "c2", "sign"},
         Behaviour::bright_soliton},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(pr.n != 2.0 && close(pr.p, 4.0 / (pr.n - 2.0)),
                    "T02: requires p = 4/(n-2)");
            double s = c.get_or("sign", 1.0);
            require(s == 1.0 || s == -1.0, "T02: sign must be +-1");
            double c2 = c.get("c2");
            require(c2 != 0.0, "T02: c2 != 0");
            double base = s * 8.0 * (pr.p + 2.0) / (pr.k * pr.p * pr.p);
            require(base > 0.0, "T02: requires s k(1-2/n) > 0");
            double c1 = c.get_or("c1", 0.0);
            double a = std::pow(base, 1.0 / pr.p), w = -2.0 / pr.p, p = pr.p;
            return static_amp(
                pr, "T02",
                [a, w, c2, s, p](double r) {
                    double q = c2 * r * r + s / c2;
                    if (q <= 0.0 && (std::fmod(w, 1.0) != 0.0 || p < 0))
                        return -1.0;
                    return a * std::pow(q, w);
                },
                c1);
        });

    // -- T03: two-term static profile at p = 2(n-3)/(2-n)
    add({"T03", "u = (-k p^2(p+2)/8)^{-1/p} (r + c2 r^{3-n})^{-2/p} e^{i c1}",
         "p = 2(n-3)/(2-n), k/(n-2) < 0, n != 2,3", {"c1", "c2"},
         Behaviour::monopole},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(pr.n != 2.0 && pr.n != 3.0, "T03: n != 2,3");
            require(close(pr.p, 2.0 * (pr.n - 3.0) / (2.0 - pr.n)),
                    "T03: requires p = 2(n-3)/(2-n)");
            double base = -pr.k * pr.p * pr.p * (pr.p + 2.0) / 8.0;
            require(base > 0.0, "T03: requires k/(n-2) < 0");
            double c1 = c.get_or("c1", 0.0);
            double a = std::pow(base, -1.0 / pr.p), w = -2.0 / pr.p;
            double c2 = c.get_or("c2", 0.0), e = 3.0 - pr.n;
            return static_amp(
                pr, "T03",
                [a, w, c2, e](double r) {
                    double q = r + c2 * std::pow(r, e);
                    return q > 0.0 ? a * std::pow(q, w) : -1.0;
                },
                c1);
        });

    // -- T04: quadratic profile, p = -1
    add({"T04", "u = (-(k/(2n)) r^2 + c3 r^{2-n} + c2) e^{i c1}",
         "p = -1, n != 0,2", {"c1", "c2", "c3"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && pr.n != 0.0 && pr.n != 2.0,
                    "T04: p = -1, n != 0,2");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0);
            double k = pr.k, n = pr.n;
            return static_amp(
                pr, "T04",
                [k, n, c2, c3](double r) {
                    return -0.5 * (k / n) * r * r + c3 * std::pow(r, 2.0 - n) + c2;
                },
                c1);
        });

    // -- T05: planar (n = 2) log profile, p = -1
    add({"T05", "u = (-k r^2/4 + c3 ln r + c2) e^{i c1}", "p = -1, n = 2",
         {"c1", "c2", "c3"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, 2.0), "T05: p = -1, n = 2");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0), k = pr.k;
            return static_amp(
                pr, "T05",
                [k, c2, c3](double r) {
                    return -0.25 * k * r * r + c3 * std::log(r) + c2;
                },
                c1);
        });

    // -- T06: rational profile, p = 1, n = 16
    add({"T06", "u = (96/k)(r^2 + c2)(2 r^2 + c2)^{-2} e^{i c1}",
         "p = 1, n = 16", {"c1", "c2"}, Behaviour::monopole},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, 1.0) && close(pr.n, 16.0), "T06: p = 1, n = 16");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0), k = pr.k;
            return static_amp(
                pr, "T06",
                [k, c2](double r) {
                    double d = 2.0 * r * r + c2;
                    return d != 0.0 ? (96.0 / k) * (r * r + c2) / (d * d) : -1.0;
                },
                c1);
        });

    // -- T07: n = 0 log profile, p = -1
    add({"T07", "u = (-k r^2 ln r / 2 + c3 r^2 + c2) e^{i c1}", "p = -1, n = 0",
         {"c1", "c2", "c3"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, 0.0), "T07: p = -1, n = 0");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0), k = pr.k;
            return static_amp(
                pr, "T07",
                [k, c2, c3](double r) {
                    return -0.5 * k * r * r * std::log(r) + c3 * r * r + c2;
                },
                c1);
        });

    // -- T08: p = -4, n = 0 fractional profile with algebraic phase
    add({"T08",
         "u = (4k/3)^{1/4} r^2 (r^{-2} - c2/k)^{3/4} "
         "exp(i c1 - i(sqrt3/2)((k/c2) r^{-2} - 1)^{-1/2})",
         "p = -4, n = 0, k > 0, c2 > 0", {"c1", "c2"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -4.0) && close(pr.n, 0.0) && pr.k > 0.0,
                    "T08: p = -4, n = 0, k > 0");
            double c2 = c.get("c2");
            require(c2 > 0.0, "T08: c2 > 0");
            double c1 = c.get_or("c1", 0.0), k = pr.k;
            return basic(
                pr, "T08",
                [k, c2, c1](double, double r) {
                    double amp = std::pow(4.0 * k / 3.0, 0.25) * r * r *
                                 std::pow(1.0 / (r * r) - c2 / k, 0.75);
                    double ph = c1 - 0.5 * std::sqrt(3.0) /
                                         std::sqrt(k / (c2 * r * r) - 1.0);
                    return amp * phase(ph);
                },
                [k, c2](double, double r) { return r * r < k / c2; });
        });

    // -- T09: p = -4, n = 4/3 fractional profile (real branch: k > 0)
    add({"T09",
         "u = (12k)^{1/4} (r^{2/3} - c2/k)^{3/4} "
         "exp(i c1 + i s (sqrt3/2)((k/c2) r^{2/3} - 1)^{-1/2})",
         "p = -4, n = 4/3, k > 0, c2 > 0", {"c1", "c2", "sign"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -4.0) && close(pr.n, 4.0 / 3.0) && pr.k > 0.0,
                    "T09: p = -4, n = 4/3, k > 0");
            double c2 = c.get("c2");
            require(c2 > 0.0, "T09: c2 > 0");
            double s = c.get_or("sign", 1.0);
            require(s == 1.0 || s == -1.0, "T09: sign must be +-1");
            double c1 = c.get_or("c1", 0.0), k = pr.k;
            return basic(
                pr, "T09",
                [k, c2, c1, s](double, double r) {
                    double q = std::cbrt(r * r);
                    double amp = std::pow(12.0 * k, 0.25) *
                                 std::pow(q - c2 / k, 0.75);
                    double ph = c1 + s * 0.5 * std::sqrt(3.0) /
                                         std::sqrt(k * q / c2 - 1.0);
                    return amp * phase(ph);
                },
                [k, c2](double, double r) { return std::cbrt(r * r) > c2 / k; });
        });

    // -- T10: p = -8, n = 5/3
    add({"T10",
         "u = ((3k/c3^2) r^{4/3} - 4 c3^2 (r^{1/3} + c2 r^{2/3})^2)^{1/4} "
         "exp(i c1 + (i/2) arcsin((1 - (4/3)(c3^4/k)(r^{-1/3} + c2)^2)^{1/2}))",
         "p = -8, n = 5/3, k > 0", {"c1", "c2", "c3"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -8.0) && close(pr.n, 5.0 / 3.0) && pr.k > 0.0,
                    "T10: p = -8, n = 5/3, k > 0");
            double c3 = c.get("c3");
            require(c3 != 0.0, "T10: c3 != 0");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0), k = pr.k;
            auto amp4 = [k, c2, c3](double r) {
                double q = std::cbrt(r);
                double lin = q + c2 * q * q;
                return (3.0 * k / (c3 * c3)) * std::pow(r, 4.0 / 3.0) -
                       4.0 * c3 * c3 * lin * lin;
            };
            auto rad = [k, c2, c3](double r) {
                double w = 1.0 / std::cbrt(r) + c2;
                return 1.0 - (4.0 / 3.0) * std::pow(c3, 4) / k * w * w;
            };
            return basic(
                pr, "T10",
                [amp4, rad, c1](double, double r) {
                    double ph = c1 + 0.5 * std::asin(std::sqrt(rad(r)));
                    return std::pow(amp4(r), 0.25) * phase(ph);
                },
                [amp4, rad](double, double r) {
                    return amp4(r) > 0.0 && rad(r) >= 0.0;
                });
        });

    // -- T11: rational profile, p = 1, n = 13/3
    add({"T11", "u = (2/k) r^{-2} (2 c2 r^{1/3} + 3)(c2 r^{1/3} + 3)^{-2} e^{i c1}",
         "p = 1, n = 13/3", {"c1", "c2"}, Behaviour::monopole},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, 1.0) && close(pr.n, 13.0 / 3.0),
                    "T11: p = 1, n = 13/3");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0), k = pr.k;
            return static_amp(
                pr, "T11",
                [k, c2](double r) {
                    double q = std::cbrt(r);
                    double d = c2 * q + 3.0;
                    return d != 0.0
                               ? (2.0 / k) / (r * r) * (2.0 * c2 * q + 3.0) / (d * d)
                               : -1.0;
                },
                c1);
        });

    // ---- the p = -4, n = 1 group (phase-modulated square-root amplitudes) ----

    auto p4n1 = [](const Parameters& pr) {
        require(close(pr.p, -4.0) && close(pr.n, 1.0), "requires p = -4, n = 1");
    };

    // -- T12
    add({"T12", "u = (-2 c3 r + (s(k - c3^2))^{1/2} (c2 r^2 - s/c2))^{1/2} e^{i c1}",
         "p = -4, n = 1, s(k - c3^2) > 0", {"c1", "c2", "c3", "sign"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double s = c.get_or("sign", 1.0);
            require(s == 1.0 || s == -1.0, "T12: sign must be +-1");
            double c2 = c.get("c2"), c3 = c.get_or("c3", 0.0);
            require(c2 != 0.0, "T12: c2 != 0");
            double disc = s * (pr.k - c3 * c3);
            require(disc > 0.0, "T12: requires s(k - c3^2) > 0");
            double c1 = c.get_or("c1", 0.0), q = std::sqrt(disc);
            return static_amp(
                pr, "T12",
                [c2, c3, s, q](double r) {
                    double a2 = -2.0 * c3 * r + q * (c2 * r * r - s / c2);
                    return a2 > 0.0 ? std::sqrt(a2) : -1.0;
                },
                c1);
        });

    // -- T13 (arcsinh phase)
    add({"T13",
         "u = A exp(i c1 - (i/2)(k/c3^2 - 1)^{-1/2} arcsinh(N/A^2)), "
         "A^2 = -2 c4 r + (k - c3^2 - c4^2)^{1/2}(c2 r^2 - 1/c2), "
         "N = 2(k - c3^2 - c4^2)^{1/2} r + c4 (c2 r^2 - 1/c2)",
         "p = -4, n = 1, c3^2 + c4^2 < k", {"c1", "c2", "c3", "c4"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get("c2"), c3 = c.get("c3"), c4 = c.get("c4");
            require(c2 != 0.0 && c3 != 0.0, "T13: c2, c3 != 0");
            require(c3 * c3 + c4 * c4 < pr.k, "T13: requires c3^2 + c4^2 < k");
            double s = std::sqrt(pr.k - c3 * c3 - c4 * c4);
            double cph = 0.5 / std::sqrt(pr.k / (c3 * c3) - 1.0);
            double c1 = c.get_or("c1", 0.0);
            auto a2 = [c2, c4, s](double r) {
                return -2.0 * c4 * r + s * (c2 * r * r - 1.0 / c2);
            };
            return basic(
                pr, "T13",
                [a2, c2, c4, s, cph, c1](double, double r) {
                    double N = 2.0 * s * r + c4 * (c2 * r * r - 1.0 / c2);
                    double ph = c1 - cph * std::asinh(N / a2(r));
                    return std::sqrt(a2(r)) * phase(ph);
                },
                [a2](double, double r) { return a2(r) > 0.0; });
        });

    // -- T14 (arccosh phase)
    add({"T14",
         "u = A exp(i c1 - (i/2)(k/c3^2 - 1)^{-1/2} arccosh(N/D)), "
         "A^2 = -2 c4 r + (c3^2 + c4^2 - k)^{1/2}(c2 r^2 + 1/c2), D = -A^2, "
         "N = 2(c3^2 + c4^2 - k)^{1/2} r - c4 (c2 r^2 + 1/c2)",
         "p = -4, n = 1, c3^2 < k < c3^2 + c4^2", {"c1", "c2", "c3", "c4"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get("c2"), c3 = c.get("c3"), c4 = c.get("c4");
            require(c2 != 0.0, "T14: c2 != 0");
            require(c3 * c3 < pr.k && pr.k < c3 * c3 + c4 * c4,
                    "T14: requires c3^2 < k < c3^2 + c4^2");
            double s = std::sqrt(c3 * c3 + c4 * c4 - pr.k);
            double cph = 0.5 / std::sqrt(pr.k / (c3 * c3) - 1.0);
            double c1 = c.get_or("c1", 0.0);
            auto a2 = [c2, c4, s](double r) {
                return -2.0 * c4 * r + s * (c2 * r * r + 1.0 / c2);
            };
            auto ratio = [c2, c4, s, a2](double r) {
                double N = 2.0 * s * r - c4 * (c2 * r * r + 1.0 / c2);
                return N / (-a2(r));
            };
            return basic(
                pr, "T14",
                [a2, ratio, cph, c1](double, double r) {
                    double ph = c1 - cph * std::acosh(ratio(r));
                    return std::sqrt(a2(r)) * phase(ph);
                },
                [a2, ratio](double, double r) {
                    return a2(r) > 0.0 && ratio(r) >= 1.0;
                });
        });

    // -- T15 (arcsin phase)
    add({"T15",
         "u = A exp(i c1 - (i/2)(1 - k/c3^2)^{-1/2} arcsin(N/A^2)), "
         "A^2 = -2 c4 r + (c3^2 + c4^2 - k)^{1/2}(c2 r^2 + 1/c2), "
         "N = 2(c3^2 + c4^2 - k)^{1/2} r - c4 (c2 r^2 + 1/c2)",
         "p = -4, n = 1, c3^2 > k", {"c1", "c2", "c3", "c4"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get("c2"), c3 = c.get("c3"), c4 = c.get("c4");
            require(c2 != 0.0, "T15: c2 != 0");
            require(c3 * c3 > pr.k, "T15: requires c3^2 > k");
            double s = std::sqrt(c3 * c3 + c4 * c4 - pr.k);
            double cph = 0.5 / std::sqrt(1.0 - pr.k / (c3 * c3));
            double c1 = c.get_or("c1", 0.0);
            auto a2 = [c2, c4, s](double r) {
                return -2.0 * c4 * r + s * (c2 * r * r + 1.0 / c2);
            };
            auto ratio = [c2, c4, s, a2](double r) {
                return (2.0 * s * r - c4 * (c2 * r * r + 1.0 / c2)) / a2(r);
            };
            return basic(
                pr, "T15",
                [a2, ratio, cph, c1](double, double r) {
                    double ph = c1 - cph * std::asin(ratio(r));
                    return std::sqrt(a2(r)) * phase(ph);
                },
                [a2, ratio](double, double r) {
                    return a2(r) > 0.0 && std::abs(ratio(r)) <= 1.0;
                });
        });

    // -- T16 (log phase, quadratic amplitude)
    add({"T16",
         "u = (-2 c3 r + c2 r^2)^{1/2} exp(i c1 + s (i/2)(k/c3^2 - 1)^{1/2} "
         "ln|c2 - 2 c3/r|)",
         "p = -4, n = 1, k > c3^2", {"c1", "c2", "c3", "sign"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get("c2"), c3 = c.get("c3");
            require(c3 != 0.0 && pr.k > c3 * c3, "T16: requires 0 < c3^2 < k");
            double s = c.get_or("sign", 1.0);
            require(s == 1.0 || s == -1.0, "T16: sign must be +-1");
            double cph = 0.5 * std::sqrt(pr.k / (c3 * c3) - 1.0) * s;
            double c1 = c.get_or("c1", 0.0);
            return basic(
                pr, "T16",
                [c2, c3, cph, c1](double, double r) {
                    double a2 = -2.0 * c3 * r + c2 * r * r;
                    double ph = c1 + cph * std::log(std::abs(c2 - 2.0 * c3 / r));
                    return std::sqrt(a2) * phase(ph);
                },
                [c2, c3](double, double r) {
                    return -2.0 * c3 * r + c2 * r * r > 0.0 &&
                           c2 - 2.0 * c3 / r != 0.0;
                });
        });

    // -- T17 (log phase, linear amplitude)
    add({"T17",
         "u = (-2 c3 r + c2)^{1/2} exp(i c1 + s (i/2)(k/c3^2 - 1)^{1/2} "
         "ln|c2 - 2 c3 r|)",
         "p = -4, n = 1, k > c3^2", {"c1", "c2", "c3", "sign"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get("c2"), c3 = c.get("c3");
            require(c3 != 0.0 && pr.k > c3 * c3, "T17: requires 0 < c3^2 < k");
            double s = c.get_or("sign", 1.0);
            require(s == 1.0 || s == -1.0, "T17: sign must be +-1");
            double cph = 0.5 * std::sqrt(pr.k / (c3 * c3) - 1.0) * s;
            double c1 = c.get_or("c1", 0.0);
            return basic(
                pr, "T17",
                [c2, c3, cph, c1](double, double r) {
                    double ph = c1 + cph * std::log(std::abs(c2 - 2.0 * c3 * r));
                    return std::sqrt(-2.0 * c3 * r + c2) * phase(ph);
                },
                [c2, c3](double, double r) { return -2.0 * c3 * r + c2 > 0.0; });
        });

    // -- T18 (Moebius phase)
    add({"T18",
         "u = (c3/c2)^{1/2} (c2 r - 1) exp(i c1 - (i/2)(k^{1/2}/c3) "
         "(c2 r + 1)/(c2 r - 1))",
         "p = -4, n = 1, k > 0", {"c1", "c2", "c3"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            require(pr.k > 0.0, "T18: k > 0");
            double c2 = c.get("c2"), c3 = c.get("c3");
            require(c2 != 0.0 && c3 != 0.0 && c3 / c2 > 0.0,
                    "T18: requires c3/c2 > 0");
            double amp0 = std::sqrt(c3 / c2), cph = 0.5 * std::sqrt(pr.k) / c3;
            double c1 = c.get_or("c1", 0.0);
            return basic(
                pr, "T18",
                [amp0, c2, cph, c1](double, double r) {
                    double ph = c1 - cph * (c2 * r + 1.0) / (c2 * r - 1.0);
                    return amp0 * (c2 * r - 1.0) * phase(ph);
                },
                [amp0, c2](double, double r) {
                    return amp0 * (c2 * r - 1.0) > 0.0;
                });
        });

    // -- T19 (linear amplitude, 1/r phase)
    add({"T19", "u = c2 r exp(i c1 - i (k^{1/2}/c2^2)/r)", "p = -4, n = 1, k > 0",
         {"c1", "c2"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            require(pr.k > 0.0, "T19: k > 0");
            double c2 = c.get("c2");
            require(c2 > 0.0, "T19: c2 > 0");
            double cph = std::sqrt(pr.k) / (c2 * c2), c1 = c.get_or("c1", 0.0);
            return basic(
                pr, "T19",
                [c2, cph, c1](double, double r) {
                    return c2 * r * phase(c1 - cph / r);
                },
                [](double, double r) { return r > 0.0; });
        });

    // -- T20 (plane-wave-like)
    add({"T20", "u = c2 exp(i c1 - i (k^{1/2}/c2^2) r)", "p = -4, n = 1, k > 0",
         {"c1", "c2"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            require(pr.k > 0.0, "T20: k > 0");
            double c2 = c.get("c2");
            require(c2 > 0.0, "T20: c2 > 0");
            double cph = std::sqrt(pr.k) / (c2 * c2), c1 = c.get_or("c1", 0.0);
            return basic(
                pr, "T20",
                [c2, cph, c1](double, double r) { return c2 * phase(c1 - cph * r); },
                [](double, double r) { return r > 0.0; });
        });

    // -- T21 (arcsinh phase)
    add({"T21",
         "u = A exp(i c1 - i c3 (k - c3^2)^{-1/2} arcsinh((-1 + "
         "(c4^2/(k - c3^2))(r^{-1} + c2)^2)^{-1/2})), "
         "A^2 = ((c3^2 - k)/c4) r^2 + c4 (1 + c2 r)^2",
         "p = -4, n = 1, c3^2 < k, c4 > 0", {"c1", "c2", "c3", "c4"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get_or("c2", 0.0), c3 = c.get("c3"), c4 = c.get("c4");
            require(c3 * c3 < pr.k && c4 > 0.0, "T21: requires c3^2 < k, c4 > 0");
            double k = pr.k, c1 = c.get_or("c1", 0.0);
            double cph = c3 / std::sqrt(k - c3 * c3);
            auto a2 = [k, c2, c3, c4](double r) {
                double lin = 1.0 + c2 * r;
                return ((c3 * c3 - k) / c4) * r * r + c4 * lin * lin;
            };
            auto rad = [k, c2, c3, c4](double r) {
                double w = 1.0 / r + c2;
                return (c4 * c4 / (k - c3 * c3)) * w * w - 1.0;
            };
            return basic(
                pr, "T21",
                [a2, rad, cph, c1](double, double r) {
                    double ph = c1 - cph * std::asinh(1.0 / std::sqrt(rad(r)));
                    return std::sqrt(a2(r)) * phase(ph);
                },
                [a2, rad](double, double r) {
                    return a2(r) > 0.0 && rad(r) > 0.0;
                });
        });

    // -- T22 (arcsin phase)
    add({"T22",
         "u = A exp(i c1 - i c3 (c3^2 - k)^{-1/2} arcsin((1 + "
         "(c4^2/(c3^2 - k))(r^{-1} + c2)^2)^{-1/2})), "
         "A^2 = ((c3^2 - k)/c4) r^2 + c4 (1 + c2 r)^2",
         "p = -4, n = 1, c3^2 > k, c4 > 0", {"c1", "c2", "c3", "c4"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get_or("c2", 0.0), c3 = c.get("c3"), c4 = c.get("c4");
            require(c3 * c3 > pr.k && c4 > 0.0, "T22: requires c3^2 > k, c4 > 0");
            double k = pr.k, c1 = c.get_or("c1", 0.0);
            double cph = c3 / std::sqrt(c3 * c3 - k);
            auto a2 = [k, c2, c3, c4](double r) {
                double lin = 1.0 + c2 * r;
                return ((c3 * c3 - k) / c4) * r * r + c4 * lin * lin;
            };
            return basic(
                pr, "T22",
                [a2, k, c2, c3, c4, cph, c1](double, double r) {
                    double w = 1.0 / r + c2;
                    double arg = 1.0 / std::sqrt(
                                     1.0 + (c4 * c4 / (c3 * c3 - k)) * w * w);
                    return std::sqrt(a2(r)) * phase(c1 - cph * std::asin(arg));
                },
                [a2](double, double r) { return a2(r) > 0.0; });
        });

    // -- T23 (arccosh phase)
    add({"T23",
         "u = A exp(i c1 - i c3 (k - c3^2)^{-1/2} arccosh((1 + "
         "(c4^2/(c3^2 - k))(r^{-1} + c2)^2)^{-1/2})), "
         "A^2 = ((c3^2 - k)/c4) r^2 + c4 (1 + c2 r)^2",
         "p = -4, n = 1, c3^2 < k, c4 < 0", {"c1", "c2", "c3", "c4"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get_or("c2", 0.0), c3 = c.get("c3"), c4 = c.get("c4");
            require(c3 * c3 < pr.k && c4 < 0.0, "T23: requires c3^2 < k, c4 < 0");
            double k = pr.k, c1 = c.get_or("c1", 0.0);
            double cph = c3 / std::sqrt(k - c3 * c3);
            auto a2 = [k, c2, c3, c4](double r) {
                double lin = 1.0 + c2 * r;
                return ((c3 * c3 - k) / c4) * r * r + c4 * lin * lin;
            };
            auto inner = [k, c2, c3, c4](double r) {
                double w = 1.0 / r + c2;
                return 1.0 + (c4 * c4 / (c3 * c3 - k)) * w * w;
            };
            return basic(
                pr, "T23",
                [a2, inner, cph, c1](double, double r) {
                    double arg = 1.0 / std::sqrt(inner(r));
                    return std::sqrt(a2(r)) * phase(c1 - cph * std::acosh(arg));
                },
                [a2, inner](double, double r) {
                    return a2(r) > 0.0 && inner(r) > 0.0;
                });
        });

    // -- T24 (log phase)
    add({"T24",
         "u = (4(k - c3^2))^{1/4} (c2 r^2 + s r)^{1/2} exp(i c1 + "
         "(i/2) c3 (k - c3^2)^{-1/2} ln|c2 + s/r|)",
         "p = -4, n = 1, c3^2 < k", {"c1", "c2", "c3", "sign"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            double c2 = c.get("c2"), c3 = c.get_or("c3", 0.0);
            require(c3 * c3 < pr.k, "T24: requires c3^2 < k");
            double s = c.get_or("sign", 1.0);
            require(s == 1.0 || s == -1.0, "T24: sign must be +-1");
            double amp0 = std::pow(4.0 * (pr.k - c3 * c3), 0.25);
            double cph = 0.5 * c3 / std::sqrt(pr.k - c3 * c3);
            double c1 = c.get_or("c1", 0.0);
            return basic(
                pr, "T24",
                [amp0, c2, s, cph, c1](double, double r) {
                    double ph = c1 + cph * std::log(std::abs(c2 + s / r));
                    return amp0 * std::sqrt(c2 * r * r + s * r) * phase(ph);
                },
                [c2, s](double, double r) {
                    return c2 * r * r + s * r > 0.0 && c2 + s / r != 0.0;
                });
        });

    // -- T25 (Moebius phase; the profile whose phase level set is -s sqrt(k))
    add({"T25",
         "u = c3 (1 + c2 r) exp(i c1 - i s (k^{1/2}/c3^2)(r^{-1} + c2)^{-1})",
         "p = -4, n = 1, k > 0", {"c1", "c2", "c3", "sign"}},
        [p4n1](const Parameters& pr, const FamilyConstants& c) {
            p4n1(pr);
            require(pr.k > 0.0, "T25: k > 0");
            double c2 = c.get_or("c2", 0.0), c3 = c.get("c3");
            require(c3 > 0.0, "T25: c3 > 0");
            double s = c.get_or("sign", 1.0);
            require(s == 1.0 || s == -1.0, "T25: sign must be +-1");
            double cph = s * std::sqrt(pr.k) / (c3 * c3);
            double c1 = c.get_or("c1", 0.0);
            return basic(
                pr, "T25",
                [c2, c3, cph, c1](double, double r) {
                    double ph = c1 - cph / (1.0 / r + c2);
                    return c3 * (1.0 + c2 * r) * phase(ph);
                },
                [c2](double, double r) {
                    return 1.0 + c2 * r > 0.0 && 1.0 / r + c2 != 0.0;
                });
        });

    // -- S01: standing wave with oscillatory Bessel amplitude
    add({"S01",
         "u = (r^{1-n/2}(c2 J_{|n-2|/2}(sqrt(nu) r) + c3 Y_{|n-2|/2}(sqrt(nu) r)) "
         "- k/nu) exp(i c1 + i nu t)",
         "p = -1, nu > 0", {"c1", "c2", "c3", "nu"}, Behaviour::standing_wave},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0), "S01: p = -1");
            double nu = c.get("nu");
            require(nu > 0.0, "S01: nu > 0");
            double ord = 0.5 * std::abs(pr.n - 2.0);
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0);
            double n = pr.n, k = pr.k, rt = std::sqrt(nu);
            auto amp = [n, k, nu, ord, c2, c3, rt](double r) {
                double b = c2 != 0.0 ? c2 * specfun::bessel_j(ord, rt * r) : 0.0;
                if (c3 != 0.0) b += c3 * specfun::bessel_y(ord, rt * r);
                return std::pow(r, 1.0 - 0.5 * n) * b - k / nu;
            };
            return basic(
                pr, "S01",
                [amp, c1, nu](double t, double r) {
                    return amp(r) * phase(c1 + nu * t);
                },
                [amp](double, double r) { return amp(r) > 0.0; });
        });

    // -- S02: standing wave with modified-Bessel amplitude
    add({"S02",
         "u = (r^{1-n/2}(c2 I_{|n-2|/2}(sqrt(-nu) r) + c3 K_{|n-2|/2}(sqrt(-nu) r)) "
         "- k/nu) exp(i c1 + i nu t)",
         "p = -1, nu < 0", {"c1", "c2", "c3", "nu"}, Behaviour::standing_wave},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0), "S02: p = -1");
            double nu = c.get("nu");
            require(nu < 0.0, "S02: nu < 0");
            double ord = 0.5 * std::abs(pr.n - 2.0);
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0);
            double n = pr.n, k = pr.k, rt = std::sqrt(-nu);
            auto amp = [n, k, nu, ord, c2, c3, rt](double r) {
                double b = c2 != 0.0 ? c2 * specfun::bessel_i(ord, rt * r) : 0.0;
                if (c3 != 0.0) b += c3 * specfun::bessel_k(ord, rt * r);
                return std::pow(r, 1.0 - 0.5 * n) * b - k / nu;
            };
            return basic(
                pr, "S02",
                [amp, c1, nu](double t, double r) {
                    return amp(r) * phase(c1 + nu * t);
                },
                [amp](double, double r) { return amp(r) > 0.0; });
        });

    // -- G01: scaling-group Whittaker similarity solution
    add({"G01",
         "u = (i k r^2/3)(M2(i r^2/(4t)) Int_{c2}^{t/r^2} M1 - "
         "M1(i r^2/(4t)) Int_{c3}^{t/r^2} M2) exp(i c1 - i r^2/(8t) + "
         "(i/2) mu ln t); M1 = M_{-i mu/2,3/2}(i/(4 xi)), M2 its companion",
         "p = -1, n = -4", {"c1", "c2", "c3", "mu"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, -4.0), "G01: p = -1, n = -4");
            double mu = c.get_or("mu", 0.0);
            double c1 = c.get_or("c1", 0.0), c2 = c.get("c2"), c3 = c.get("c3");
            double k = pr.k;
            return basic(
                pr, "G01",
                [k, mu, c1, c2, c3](double t, double r) {
                    double xi = t / (r * r);
                    double A = whitt_scal_amp(k, mu, xi, c2, c3);
                    double ph = c1 - 0.125 * r * r / t + 0.5 * mu * std::log(t);
                    return r * r * A * phase(ph);
                },
                [c2, c3, k, mu](double t, double r) {
                    if (t <= 0.0) return false;
                    double xi = t / (r * r);
                    if (!whitt_xi_ok(xi, c2, c3)) return false;
                    return whitt_scal_amp(k, mu, xi, c2, c3) > 0.0;
                });
        });

    // -- P01: conformal-group Whittaker solution
    add({"P01",
         "u = (k r^2/6)(M1(r^2/(2(1+t^2))) Int_{c2}^{(1+t^2)/r^2} M2 - "
         "M2(r^2/(2(1+t^2))) Int_{c3}^{(1+t^2)/r^2} M1) exp(i c1 - "
         "i kappa arctan(1/t) - i r^2 t/(4(1+t^2))); M1 = M_{kappa/2,3/2}(1/(2 xi))",
         "p = -1, n = -4", {"c1", "c2", "c3", "kappa"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, -4.0), "P01: p = -1, n = -4");
            double kap = c.get_or("kappa", 0.0);
            double c1 = c.get_or("c1", 0.0), c2 = c.get("c2"), c3 = c.get("c3");
            double k = pr.k;
            return basic(
                pr, "P01",
                [k, kap, c1, c2, c3](double t, double r) {
                    double xi = (1.0 + t * t) / (r * r);
                    double A = whitt_conf_amp(k, kap, xi, c2, c3);
                    double ph = c1 - kap * symmetry::arctan_recip(t) -
                                0.25 * r * r * t / (1.0 + t * t);
                    return r * r * A * phase(ph);
                },
                [c2, c3, k, kap](double t, double r) {
                    double xi = (1.0 + t * t) / (r * r);
                    if (!whitt_xi_ok(xi, c2, c3)) return false;
                    return whitt_conf_amp(k, kap, xi, c2, c3) > 0.0;
                });
        });

    // -- I01: inversion-boosted power profile (critical power)
    add({"I01",
         "u = (n(n-4)/(4k))^{n/4} r^{-n/2} exp(i c1 - i c2 r^2/(4(1+c2 t)))",
         "p = 4/n, n != 4, k/(n(n-4)) > 0", {"c1", "c2"}, Behaviour::monopole},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(pr.critical() && pr.n != 4.0, "I01: p = 4/n, n != 4");
            double base = pr.n * (pr.n - 4.0) / (4.0 * pr.k);
            require(base > 0.0, "I01: requires k/(n(n-4)) > 0");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0);
            double n = pr.n, a = std::pow(base, 0.25 * pr.n);
            return basic(
                pr, "I01",
                [a, n, c1, c2](double t, double r) {
                    double w = 1.0 + c2 * t;
                    double ph = c1 - c2 * r * r / (4.0 * w);
                    return a * std::pow(r, -0.5 * n) * phase(ph);
                },
                [c2](double t, double) { return 1.0 + c2 * t > 0.0; });
        });

    // -- I02: vacuous over the reals (needs n^2 - n + 4 = 0)
    add({"I02",
         "u = (-n^3/(2k(2n+4)))^{n/4} r^{-n/2} (1 + c2 (r/(1+c3 t))^{2-4/p})^{-2/p}"
         " exp(i c1 - i c3 r^2/(4(1+c3 t)))",
         "n^2 - n + 4 = 0 (no real n); vacuous", {"c1", "c2", "c3"},
         Behaviour::monopole, true},
        [](const Parameters&, const FamilyConstants&) -> Solution {
            throw Error(ErrorKind::constraint,
                        "I02: requires n^2 - n + 4 = 0, which has no real root");
        });

    // -- I03: inversion-boosted quadratic profile
    add({"I03",
         "u = (k r^2/8 + c3 r^6 (1+c4 t)^{-4} + c2 (1+c4 t)^2) "
         "exp(i c1 - i c4 r^2/(4(1+c4 t)))",
         "p = -1, n = -4", {"c1", "c2", "c3", "c4"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, -4.0), "I03: p = -1, n = -4");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0), c4 = c.get_or("c4", 0.0);
            double k = pr.k;
            auto amp = [k, c2, c3, c4](double t, double r) {
                double w = 1.0 + c4 * t;
                return 0.125 * k * r * r + c3 * std::pow(r, 6) / std::pow(w, 4) +
                       c2 * w * w;
            };
            return basic(
                pr, "I03",
                [amp, c1, c4](double t, double r) {
                    double w = 1.0 + c4 * t;
                    return amp(t, r) * phase(c1 - c4 * r * r / (4.0 * w));
                },
                [amp, c4](double t, double r) {
                    return 1.0 + c4 * t > 0.0 && amp(t, r) > 0.0;
                });
        });

    // -- I04: inversion-boosted oscillatory standing wave
    add({"I04",
         "u = (r^3 (1+c4 t)^{-1}(c2 J_3(sqrt(nu) r/(1+c4 t)) + "
         "c3 Y_3(sqrt(nu) r/(1+c4 t))) - (k/nu)(1+c4 t)^2) "
         "exp(i c1 + i nu t/(1+c4 t) - i c4 r^2/(4(1+c4 t)))",
         "p = -1, n = -4, nu > 0", {"c1", "c2", "c3", "c4", "nu"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, -4.0), "I04: p = -1, n = -4");
            double nu = c.get("nu");
            require(nu > 0.0, "I04: nu > 0");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0), c4 = c.get_or("c4", 0.0);
            double k = pr.k, rt = std::sqrt(nu);
            auto amp = [k, nu, rt, c2, c3, c4](double t, double r) {
                double w = 1.0 + c4 * t;
                double x = rt * r / w;
                double b = c2 != 0.0 ? c2 * specfun::bessel_j(3.0, x) : 0.0;
                if (c3 != 0.0) b += c3 * specfun::bessel_y(3.0, x);
                return std::pow(r, 3) / w * b - (k / nu) * w * w;
            };
            return basic(
                pr, "I04",
                [amp, c1, c4, nu](double t, double r) {
                    double w = 1.0 + c4 * t;
                    double ph = c1 + nu * t / w - c4 * r * r / (4.0 * w);
                    return amp(t, r) * phase(ph);
                },
                [amp, c4](double t, double r) {
                    return 1.0 + c4 * t > 0.0 && amp(t, r) > 0.0;
                });
        });

    // -- I05: inversion-boosted modified-Bessel profile
    add({"I05",
         "u = (r^3 (1+c4 t)^{-1}(c2 I_3(sqrt(-nu) r/(1+c4 t)) + "
         "c3 K_3(sqrt(-nu) r/(1+c4 t))) - (k/nu)(1+c4 t)^2) "
         "exp(i c1 + i nu t/(1+c4 t) - i c4 r^2/(4(1+c4 t)))",
         "p = -1, n = -4, nu < 0", {"c1", "c2", "c3", "c4", "nu"},
         Behaviour::dark_soliton},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, -4.0), "I05: p = -1, n = -4");
            double nu = c.get("nu");
            require(nu < 0.0, "I05: nu < 0");
            double c1 = c.get_or("c1", 0.0), c2 = c.get_or("c2", 0.0),
                   c3 = c.get_or("c3", 0.0), c4 = c.get_or("c4", 0.0);
            double k = pr.k, rt = std::sqrt(-nu);
            auto amp = [k, nu, rt, c2, c3, c4](double t, double r) {
                double w = 1.0 + c4 * t;
                double x = rt * r / w;
                double b = c2 != 0.0 ? c2 * specfun::bessel_i(3.0, x) : 0.0;
                if (c3 != 0.0) b += c3 * specfun::bessel_k(3.0, x);
                return std::pow(r, 3) / w * b - (k / nu) * w * w;
            };
            return basic(
                pr, "I05",
                [amp, c1, c4, nu](double t, double r) {
                    double w = 1.0 + c4 * t;
                    double ph = c1 + nu * t / w - c4 * r * r / (4.0 * w);
                    return amp(t, r) * phase(ph);
                },
                [amp, c4](double t, double r) {
                    return 1.0 + c4 * t > 0.0 && amp(t, r) > 0.0;
                });
        });

    // -- I06: inversion-boosted G01
    add({"I06",
         "G01 with t -> t(1+c4 t) in the invariant and phase "
         "-(i/2) mu ln(c4 + 1/t) - i r^2 (1+2 c4 t)/(8 t(1+c4 t))",
         "p = -1, n = -4", {"c1", "c2", "c3", "c4", "mu"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, -4.0), "I06: p = -1, n = -4");
            double mu = c.get_or("mu", 0.0), c4 = c.get_or("c4", 0.0);
            double c1 = c.get_or("c1", 0.0), c2 = c.get("c2"), c3 = c.get("c3");
            double k = pr.k;
            auto scale = [c4](double t) { return t * (1.0 + c4 * t); };
            return basic(
                pr, "I06",
                [k, mu, c1, c2, c3, c4, scale](double t, double r) {
                    double s = scale(t);
                    double xi = s / (r * r);
                    double A = whitt_scal_amp(k, mu, xi, c2, c3);
                    double ph = c1 - 0.5 * mu * std::log(c4 + 1.0 / t) -
                                0.125 * r * r * (1.0 + 2.0 * c4 * t) / s;
                    return r * r * A * phase(ph);
                },
                [k, mu, c2, c3, c4, scale](double t, double r) {
                    if (t <= 0.0 || c4 + 1.0 / t <= 0.0) return false;
                    double xi = scale(t) / (r * r);
                    if (!whitt_xi_ok(xi, c2, c3)) return false;
                    return whitt_scal_amp(k, mu, xi, c2, c3) > 0.0;
                });
        });

    // -- I07: inversion-boosted P01
    add({"I07",
         "P01 with 1+t^2 -> t^2+(1+c4 t)^2 and phase -i kappa arctan(c4 + 1/t) "
         "- i r^2 (c4 + t + c4^2 t)/(4(t^2+(1+c4 t)^2))",
         "p = -1, n = -4", {"c1", "c2", "c3", "c4", "kappa"}},
        [](const Parameters& pr, const FamilyConstants& c) {
            require(close(pr.p, -1.0) && close(pr.n, -4.0), "I07: p = -1, n = -4");
            double kap = c.get_or("kappa", 0.0), c4 = c.get_or("c4", 0.0);
            double c1 = c.get_or("c1", 0.0), c2 = c.get("c2"), c3 = c.get("c3");
            double k = pr.k;
            auto scale = [c4](double t) {
                double w = 1.0 + c4 * t;
                return t * t + w * w;
            };
            return basic(
                pr, "I07",
                [k, kap, c1, c2, c3, c4, scale](double t, double r) {
                    double s = scale(t);
                    double xi = s / (r * r);
                    double A = whitt_conf_amp(k, kap, xi, c2, c3);
                    double ph = c1 - kap * std::atan(c4 + 1.0 / t) -
                                0.25 * r * r * (c4 + t + c4 * c4 * t) / s;
                    return r * r * A * phase(ph);
                },
                [k, kap, c2, c3, scale](double t, double r) {
                    if (t == 0.0) return false;
                    double xi = scale(t) / (r * r);
                    if (!whitt_xi_ok(xi, c2, c3)) return false;
                    return whitt_conf_amp(k, kap, xi, c2, c3) > 0.0;
                });
        });

    return es;
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> es = build_entries();
    return es;
}

}  // namespace

double FamilyConstants::get(const std::string& name) const {
    auto it = values.find(name);
    if (it == values.end())
        throw Error(ErrorKind::constraint, "missing constant '" + name + "'");
    return it->second;
}

double FamilyConstants::get_or(const std::string& name, double fallback) const {
    auto it = values.find(name);
    return it == values.end() ? fallback : it->second;
}

const std::vector<FamilyDescriptor>& registry() {
    static const std::vector<FamilyDescriptor> ds = [] {
        std::vector<FamilyDescriptor> out;
        for (const auto& e : entries()) out.push_back(e.desc);
        return out;
    }();
    return ds;
}

const FamilyDescriptor& find(const std::string& id) {
    for (const auto& e : entries())
        if (e.desc.id == id) return e.desc;
    throw Error(ErrorKind::constraint, "unknown family id '" + id + "'");
}

Solution instantiate(const std::string& id, const Parameters& params,
                     const FamilyConstants& constants) {
    params.validate();
    for (const auto& e : entries())
        if (e.desc.id == id) {
            for (const auto& [name, _] : constants.values) {
                bool known = name == "t0" || name == "r_lo" || name == "r_hi";
                for (const auto& cn : e.desc.constants) known |= (cn == name);
                if (!known)
                    throw Error(ErrorKind::constraint,
                                id + ": unknown constant '" + name + "'");
            }
            return e.make(params, constants);
        }
    throw Error(ErrorKind::constraint, "unknown family id '" + id + "'");
}

std::uint64_t transcription_checksum() {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto eat = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    };
    for (const auto& d : registry()) {
        eat(d.id);
        eat(d.summary);
        eat(d.constraint);
        for (const auto& c : d.constants) eat(c);
        eat(behaviour_name(d.behaviour));
        eat(d.vacuous ? "vacuous" : "real");
    }
    return h;
}

const char* behaviour_name(Behaviour b) {
    switch (b) {
        case Behaviour::monopole: return "monopole";
        case Behaviour::bright_soliton: return "bright_soliton";
        case Behaviour::dark_soliton: return "dark_soliton";
        case Behaviour::standing_wave: return "standing_wave";
        case Behaviour::other: return "other";
    }
    return "other";
}

std::vector<Witness> load_witnesses(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse, "cannot open fixture file " + path);
    std::vector<Witness> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ss(line);
        Witness w;
        if (!(ss >> w.id)) continue;  // blank line
        if (!(ss >> w.params.n >> w.params.p >> w.params.k >> w.tol))
            throw Error(ErrorKind::parse, path + ":" + std::to_string(lineno) +
                                              ": expected 'id n p k tol'");
        std::string kv;
        while (ss >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw Error(ErrorKind::parse, path + ":" + std::to_string(lineno) +
                                                  ": expected key=value, got '" +
                                                  kv + "'");
            std::string key = kv.substr(0, eq);
            double val;
            try {
                val = std::stod(kv.substr(eq + 1));
            } catch (const std::exception&) {
                throw Error(ErrorKind::parse, path + ":" + std::to_string(lineno) +
                                                  ": bad number in '" + kv + "'");
            }
            if (key == "t0")
                w.t0 = val;
            else if (key == "r_lo")
                w.r_lo = val;
            else if (key == "r_hi")
                w.r_hi = val;
            else
                w.constants.values[key] = val;
        }
        out.push_back(std::move(w));
    }
    return out;
}

Solution instantiate(const Witness& w) {
    return instantiate(w.id, w.params, w.constants);
}

}  // namespace rnls::catalog
