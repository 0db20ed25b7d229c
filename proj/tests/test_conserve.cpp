#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rnls/catalog.hpp"
#include "rnls/conserve.hpp"

using namespace rnls;
using namespace rnls::conserve;

namespace {

Solution standing_wave() {
    // S01 with n = 3: u = (r^{-1/2}(c2 J_{1/2} + c3 Y_{1/2}) - k/nu) e^{i nu t}
    catalog::FamilyConstants c;
    c.values["c1"] = 0.0;
    c.values["c2"] = -10.0;
    c.values["c3"] = 2.0;
    c.values["nu"] = 1.0;
    return catalog::instantiate("S01", Parameters{3.0, -1.0, 1.0}, c);
}

Solution bright() {
    catalog::FamilyConstants c;
    c.values["c1"] = 0.0;
    c.values["c2"] = 1.0;
    c.values["sign"] = 1.0;
    return catalog::instantiate("T02", Parameters{3.0, 4.0, 3.0}, c);
}

Solution critical_monopole() {
    // I01: dynamic-phase monopole at the critical power
    catalog::FamilyConstants c;
    c.values["c1"] = 0.0;
    c.values["c2"] = 0.5;
    return catalog::instantiate("I01", Parameters{5.0, 0.8, 1.0}, c);
}

}  // namespace

TEST_CASE("current selection tracks the critical power") {
    CHECK(currents(Parameters{3.0, 2.0, 1.0}).size() == 2);
    CHECK(currents(Parameters{2.0, 2.0, 1.0}).size() == 4);
    CHECK(dilation_energy().critical_only);
    CHECK(pseudoconformal_energy().critical_only);
    CHECK_THROWS_AS(local_defect(dilation_energy(), bright(), 0.3, 1.0), Error);
}

TEST_CASE("local conservation on exact solutions") {
    Solution sw = standing_wave();
    for (double r : {4.2, 4.5, 4.7}) {
        for (const CurrentPair* cur : currents(sw.params)) {
            auto d = local_defect(*cur, sw, 0.4, r);
            CHECK(d.defect <= 1e-5 * d.scale);
        }
    }
    // static solution: the energy flux vanishes identically with u_t
    Solution b = bright();
    auto d = local_defect(energy(), b, 0.2, 1.3);
    CHECK(d.defect < 1e-8);

    Solution m = critical_monopole();
    for (const CurrentPair* cur : currents(m.params)) {
        auto dm = local_defect(*cur, m, 0.5, 1.7);
        CHECK(dm.defect <= 1e-5 * dm.scale);
    }
}

TEST_CASE("standing-wave charge is time-independent") {
    Solution sw = standing_wave();
    double q1 = global_quantity(charge(), sw, 0.2, 4.1, 4.8);
    double q2 = global_quantity(charge(), sw, 0.9, 4.1, 4.8);
    CHECK(std::abs(q1 - q2) <= 1e-12 * (1.0 + std::abs(q1)));
}

TEST_CASE("global balance matches the boundary flux") {
    Solution sw = standing_wave();
    for (const CurrentPair* cur : currents(sw.params)) {
        auto g = global_balance(*cur, sw, 0.5, 4.1, 4.8);
        CHECK(g.defect <= 1e-6 * g.scale);
    }
    Solution m = critical_monopole();
    auto g = global_balance(pseudoconformal_energy(), m, 0.5, 1.0, 2.0);
    CHECK(g.defect <= 1e-5 * g.scale);
}

TEST_CASE("modulation identity balances for a regular profile") {
    // T20 (n = 1): plane-wave kink, finite at r = 0+
    catalog::FamilyConstants c;
    c.values["c1"] = 0.0;
    c.values["c2"] = 1.5;
    Solution s = catalog::instantiate("T20", Parameters{1.0, -4.0, 1.0}, c);
    auto mb = modulation_balance(s, 0.4, 2.0);
    CHECK(mb.defect <= 1e-5 * mb.scale);

    // and with genuine time dependence (I03 is regular at the origin)
    catalog::FamilyConstants ci;
    ci.values["c1"] = 0.0;
    ci.values["c2"] = 1.0;
    ci.values["c3"] = 0.05;
    ci.values["c4"] = 0.3;
    Solution s2 = catalog::instantiate("I03", Parameters{-4.0, -1.0, 1.0}, ci);
    auto mb2 = modulation_balance(s2, 0.5, 2.0);
    CHECK(mb2.defect <= 1e-5 * mb2.scale);
}

TEST_CASE("boundary correction reduces to the surface terms") {
    // for u = const, R u_r(R) - m u(R) = -m u
    Solution s;
    s.params = Parameters{3.0, 2.0, 1.0};
    s.eval = [](double, double) { return Complex{2.0, 1.0}; };
    Complex bc = boundary_correction(s, 0.0, 1.5);
    Complex expect = Complex{0.0, 1.0} *
                     (-s.params.m() * Complex{2.0, 1.0});
    CHECK(std::abs(bc - expect) < 1e-9);
}
