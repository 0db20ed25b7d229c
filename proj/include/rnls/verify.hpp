#ifndef RNLS_VERIFY_HPP
#define RNLS_VERIFY_HPP

#include <string>
#include <vector>

#include "rnls/catalog.hpp"
#include "rnls/core.hpp"
#include "rnls/symmetry.hpp"

// Numerical checks: scaled PDE residuals, group-orbit closure, and the
// first-integral quadratures of the reduced amplitude equations.

namespace rnls::verify {

// | i u_t - u_rr - (n-1) u_r / r - k |u|^p u |  divided by
// |u_t| + |u_rr| + |u_r / r| + |k| |u|^{p+1} + 1e-30.
double pde_residual(const Solution& s, double t, double r, double h0 = 1e-4,
                    int levels = 1);

struct ResidualReport {
    double max_rel = 0.0;
    double mean_rel = 0.0;
    std::size_t points = 0;   // points actually inside the domain
    std::size_t skipped = 0;  // sample positions outside the domain
};

// Residual scan at fixed t over `points` radii placed strictly inside
// [r_lo, r_hi] (half-cell margin at both ends).
ResidualReport residual_scan(const Solution& s, double t, double r_lo,
                             double r_hi, int points = 20, double h0 = 1e-4,
                             int levels = 1);

// Max scaled residual of the group-transformed solution over the same window.
// Throws Error(numeric) if fewer than half of the sample points survive the
// domain transformation.
double orbit_residual(const Solution& s, symmetry::ActionKind kind, double eps,
                      double t, double r_lo, double r_hi, int points = 20,
                      double h0 = 1e-4, int levels = 1);

// ---- quadrature cross-checks --------------------------------------------------

// One explicit solution A(z) of an amplitude ODE reduced to a quadrature
//   integral dA / sqrt(H(A)) = +- z + C3.
// `orientation` is the sign in dA/dz = orientation * sqrt(H(A)) on the stated
// window, which must stay away from turning points H = 0.
struct QuadratureCase {
    std::string name;
    std::function<double(double)> H;          // radicand as a function of A
    std::function<double(double)> amplitude;  // closed-form A(z)
    double z_lo, z_hi;
    double orientation;
};

// Built-in catalogue of explicitly solvable cases (both reduction charts).
std::vector<QuadratureCase> quadrature_cases();

// Max over checkpoints of | integral_{A(z_lo)}^{A(z)} dA/sqrt(H) -
// orientation * (z - z_lo) | / max(1, z - z_lo), with the integral done by
// adaptive quadrature, independent of the closed form.
double quadrature_defect(const QuadratureCase& qc, int checkpoints = 8);

// ---- fixture suite --------------------------------------------------------------

struct SuiteEntry {
    std::string id;
    double max_rel = 0.0;
    double tol = 0.0;
    std::size_t points = 0;
    bool pass = false;
    std::string error;  // non-empty when instantiation/evaluation threw
};

struct SuiteReport {
    std::vector<SuiteEntry> entries;
    bool all_pass = true;
};

// Run every witness; `jobs` > 1 distributes witnesses over threads with a
// deterministic result order.
SuiteReport run_suite(const std::vector<catalog::Witness>& witnesses,
                      int points = 20, int jobs = 1);

// ---- full check matrix ------------------------------------------------------------

// One row of the fixture/check matrix produced by the suite command:
// residual, orbit closure under each applicable action, and the applicable
// conservation rows.  status is "pass", "fail" or "skip" (skips, e.g. a group
// action that moves the window outside the domain, do not fail the suite).
struct CheckRow {
    std::string fixture;
    std::string check;
    std::string status;
    double max_defect = 0.0;
};

std::vector<CheckRow> full_suite(const std::vector<catalog::Witness>& witnesses,
                                 const std::string& filter = "",
                                 int points = 20, int jobs = 1);

bool all_passed(const std::vector<CheckRow>& rows);

}  // namespace rnls::verify

#endif
