#include "rnls/core.hpp"

#include <cmath>

namespace rnls {

bool Parameters::critical() const {
    return n != 0.0 && std::abs(p - 4.0 / n) <= 1e-12 * std::abs(p);
}

void Parameters::validate() const {
    if (!std::isfinite(n) || !std::isfinite(p) || !std::isfinite(k))
        throw Error(ErrorKind::constraint, "parameters must be finite");
    if (k == 0.0)
        throw Error(ErrorKind::constraint, "k = 0 is the linear equation");
    if (p == 0.0)
        throw Error(ErrorKind::constraint, "p = 0 is the linear equation");
}

namespace {

double rel_step(double x, double h0) { return h0 * std::max(1.0, std::abs(x)); }

Complex central1(const std::function<Complex(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

Complex central2(const std::function<Complex(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// Richardson ladder for an O(h^2) central difference: each stage halves the
// step and cancels the leading error power (2, then 4, ...).
Complex richardson(const std::function<Complex(double, double)>& d, double x,
                   double h, int levels) {
    constexpr int kMax = 4;
    if (levels < 0 || levels > kMax - 1)
        throw Error(ErrorKind::constraint, "richardson levels out of range");
    Complex tab[kMax][kMax];
    for (int i = 0; i <= levels; ++i) {
        tab[i][0] = d(x, h / double(1 << i));
        double pw = 4.0;
        for (int j = 1; j <= i; ++j) {
            tab[i][j] = tab[i][j - 1] +
                        (tab[i][j - 1] - tab[i - 1][j - 1]) / (pw - 1.0);
            pw *= 4.0;
        }
    }
    return tab[levels][levels];
}

}  // namespace

Complex fd_first(const std::function<Complex(double)>& f, double x, double h0,
                 int levels) {
    double h = rel_step(x, h0);
    return richardson([&](double xx, double hh) { return central1(f, xx, hh); },
                      x, h, levels);
}

Complex fd_second(const std::function<Complex(double)>& f, double x, double h0,
                  int levels) {
    double h = rel_step(x, h0);
    return richardson([&](double xx, double hh) { return central2(f, xx, hh); },
                      x, h, levels);
}

Complex diff_t(const Solution& s, double t, double r, double h0, int levels) {
    return fd_first([&](double tt) { return s.eval(tt, r); }, t, h0, levels);
}

Complex diff_r(const Solution& s, double t, double r, double h0, int levels) {
    return fd_first([&](double rr) { return s.eval(t, rr); }, r, h0, levels);
}

Complex diff_rr(const Solution& s, double t, double r, double h0, int levels) {
    return fd_second([&](double rr) { return s.eval(t, rr); }, r, h0, levels);
}

Complex limit_r_to_zero(const std::function<Complex(double)>& f, double h) {
    if (h <= 0.0) throw Error(ErrorKind::constraint, "extrapolation step <= 0");
    // Quadratic through (h, 2h, 4h) evaluated at r = 0.
    return (8.0 / 3.0) * f(h) - 2.0 * f(2.0 * h) + (1.0 / 3.0) * f(4.0 * h);
}

}  // namespace rnls
