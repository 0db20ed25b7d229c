#ifndef RNLS_CORE_HPP
#define RNLS_CORE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

// Radial semilinear Schrodinger model
//   i u_t = u_rr + (n-1)/r u_r + k |u|^p u,   u(t,r) complex, r > 0.
// The dimension n is an arbitrary real parameter; m = 2-n is the coefficient
// of the equivalent planar form i u_t = u_rr - (m-1)/r u_r + k|u|^p u.

namespace rnls {

using Complex = std::complex<double>;

// Error taxonomy shared by all modules.  The CLI maps these to exit codes.
enum class ErrorKind { domain, numeric, constraint, parse };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

struct Parameters {
    double n = 1.0;  // spatial dimension (any real value)
    double p = 1.0;  // nonlinearity power, p != 0
    double k = 1.0;  // interaction coefficient, k != 0

    double m() const { return 2.0 - n; }
    bool critical() const;  // pseudo-conformal power p = 4/n
    void validate() const;  // throws Error(constraint) on bad values
};

// A concrete solution candidate: an evaluator plus its validity region.
struct Solution {
    Parameters params;
    std::function<Complex(double t, double r)> eval;
    std::function<bool(double t, double r)> in_domain;  // default r > 0
    std::string label;

    Complex operator()(double t, double r) const { return eval(t, r); }
    bool valid_at(double t, double r) const {
        return r > 0.0 && (!in_domain || in_domain(t, r));
    }
};

// Central finite differences with Richardson extrapolation.  The step is
// relative, h = h0 * max(1, |x|); `levels` Richardson stages are applied
// (1 combines h and h/2 for O(h^4), 2 adds h/4 for O(h^6)).
Complex diff_t(const Solution& s, double t, double r, double h0 = 1e-4,
               int levels = 1);
Complex diff_r(const Solution& s, double t, double r, double h0 = 1e-4,
               int levels = 1);
Complex diff_rr(const Solution& s, double t, double r, double h0 = 1e-4,
                int levels = 1);

// Same derivatives for a plain function of one real variable.
Complex fd_first(const std::function<Complex(double)>& f, double x,
                 double h0 = 1e-4, int levels = 1);
Complex fd_second(const std::function<Complex(double)>& f, double x,
                  double h0 = 1e-4, int levels = 1);

// Limit r -> 0+ by quadratic extrapolation through r = 4h, 2h, h.
Complex limit_r_to_zero(const std::function<Complex(double)>& f,
                        double h = 1e-3);

}  // namespace rnls

#endif
