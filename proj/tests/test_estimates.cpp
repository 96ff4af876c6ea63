#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <cstdlib>
#include <vector>

#include "qzak/estimates.hpp"
#include "qzak/rng.hpp"
#include "qzak/symbols.hpp"

using namespace qzak;

TEST_CASE("all weight exponents derive from theta as documented") {
    EstimateConfig cfg;
    cfg.theta = 0.05;
    CHECK(cfg.b() == doctest::Approx(0.525));
    CHECK(cfg.b1() == doctest::Approx(0.525));
    CHECK(cfg.b_prime() == doctest::Approx(-0.45));
    CHECK(cfg.b1_prime() == doctest::Approx(-0.45));
    CHECK(cfg.c() == doctest::Approx(0.45));
    CHECK(cfg.c1() == doctest::Approx(0.45));
    CHECK(cfg.big_b1() == doctest::Approx(0.45));
    CHECK(cfg.big_b2() == doctest::Approx(0.525));
    // 2B = 2 B1 - [1 - 2 B2]_+ and 2 B2 = 1 + theta > 1, so B = B1
    CHECK(cfg.big_b() == doctest::Approx(0.45));
}

TEST_CASE("exponent validation enforces the per-kernel windows on B") {
    EstimateConfig cfg;
    cfg.theta = 0.05;
    CHECK_NOTHROW(validate_estimate_config(cfg, KernelKind::C1));
    CHECK_NOTHROW(validate_estimate_config(cfg, KernelKind::C2));
    CHECK_NOTHROW(validate_estimate_config(cfg, KernelKind::C3));

    cfg.theta = 0.2;  // B = 0.3: enough for C1 (>1/6) but not for C2 (>1/3)
    CHECK_NOTHROW(validate_estimate_config(cfg, KernelKind::C1));
    CHECK_THROWS_AS(validate_estimate_config(cfg, KernelKind::C2), std::invalid_argument);

    cfg.theta = 0.3;  // B1 = 0.2 breaks the global 1/4 < B1 requirement
    CHECK_THROWS_AS(validate_estimate_config(cfg, KernelKind::C3), std::invalid_argument);

    cfg.theta = -0.1;
    CHECK_THROWS_WITH_AS(validate_estimate_config(cfg, KernelKind::C1),
                         doctest::Contains("theta"), std::invalid_argument);
    cfg = EstimateConfig{};
    cfg.eps = 1.5;
    CHECK_THROWS_WITH_AS(validate_estimate_config(cfg, KernelKind::C1), doctest::Contains("eps"),
                         std::invalid_argument);
}

TEST_CASE("kernel names round-trip") {
    CHECK(kernel_name(KernelKind::C1) == "C1");
    CHECK(kernel_name(KernelKind::C2) == "C2");
    CHECK(kernel_name(KernelKind::C3) == "C3");
}

TEST_CASE("the expanded resonance cubic equals the direct phase difference") {
    // hand value at tau = xi = eta = eps = 1: 1 + (2+1) + 4 = 8
    CHECK(resonance_cubic(1.0, 1.0, 1.0, 1.0) == doctest::Approx(8.0).epsilon(1e-15));
    CHECK(resonance_direct(1.0, 1.0, 1.0, 1.0) == doctest::Approx(8.0).epsilon(1e-12));

    // random sample; agreement is judged relative to the size of the phase
    // pieces, since the direct form cancels catastrophically at large xi
    CounterRng rng(314, 0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double tau = rng.uniform(-1e4, 1e4);
        const double xi = std::pow(10.0, rng.uniform(-2.0, 3.0));
        const double eta = rng.uniform(-2.0 * xi, 2.0 * xi);
        const double eps = rng.uniform(0.05, 1.0);
        const double a = resonance_cubic(tau, xi, eta, eps);
        const double b = resonance_direct(tau, xi, eta, eps);
        const double scale = std::max({1.0, std::fabs(tau),
                                       std::fabs(phi_eps(eta + 0.5 * xi, eps)),
                                       std::fabs(phi_eps(eta - 0.5 * xi, eps))});
        worst = std::max(worst, std::fabs(a - b) / scale);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("the two-weight integral reproduces its coincident-center closed form") {
    // T(0) = 2 / (2(a_minus + a_plus) - 1)
    TauIntegral r = weighted_tau_integral(0.3, 0.3, 7.0, 7.0);
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(10.0).epsilon(1e-7));
    CHECK(r.alpha == doctest::Approx(0.6 - 0.4));  // 2 a_minus - [1 - 2 a_plus]_+

    TauIntegral one = weighted_tau_integral(0.75, 0.75, 0.0, 0.0);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-8));

    TauIntegral gen = weighted_tau_integral(0.4, 0.8, 2.0, 2.0);
    CHECK(gen.value == doctest::Approx(2.0 / 1.4).epsilon(1e-8));
}

TEST_CASE("the two-weight integral depends only on the center distance") {
    TauIntegral a = weighted_tau_integral(0.45, 0.55, 1.0, 4.0);
    TauIntegral b = weighted_tau_integral(0.45, 0.55, 4.0, 1.0);
    TauIntegral c = weighted_tau_integral(0.45, 0.55, -10.0, -7.0);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
    CHECK(a.value == doctest::Approx(c.value).epsilon(1e-9));
    CHECK(a.bound_ratio == doctest::Approx(a.value * std::pow(4.0, a.alpha)).epsilon(1e-12));
}

TEST_CASE("the two-weight integral rejects inadmissible exponents") {
    CHECK_THROWS_AS(weighted_tau_integral(0.6, 0.3, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(weighted_tau_integral(0.1, 0.1, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("the decay certificate approaches its power law far out") {
    TauIntegral a = weighted_tau_integral(0.45, 0.45, 0.0, 1e6);
    TauIntegral b = weighted_tau_integral(0.45, 0.45, 0.0, 1e7);
    const double ratio = a.value / b.value;  // alpha = 0.8, so 10^0.8 = 6.31 in the limit
    CHECK(ratio > 5.5);
    CHECK(ratio < 6.4);

    // on [1e6, 1e9] the compensated ratio is flat to well under 5 percent per decade
    TauProfile prof(0.3, 0.6);
    std::vector<double> d, r;
    for (int i = 0; i <= 30; ++i) {
        d.push_back(1e6 * std::pow(10.0, 3.0 * i / 30.0));
        r.push_back(prof(d.back()) * std::pow(1.0 + d.back(), 0.6));
    }
    CHECK(std::fabs(log_log_slope(d, r)) < 0.05);

    TauProfile prof2(0.45, 0.45);
    std::vector<double> r2;
    for (double dd : d) r2.push_back(prof2(dd) * std::pow(1.0 + dd, 0.8));
    CHECK(std::fabs(log_log_slope(d, r2)) < 0.05);
}

TEST_CASE("the tabulated profile matches direct quadrature across all regimes") {
    TauProfile prof(0.45, 0.45);
    CHECK(prof.at_zero() == doctest::Approx(2.5).epsilon(1e-7));
    CHECK(prof.a_minus() == 0.45);
    CHECK(prof.a_plus() == 0.45);
    for (double dval : {1e-3, 0.05, 1.0, 37.0, 1e3, 1e6, 1e10}) {
        TauIntegral direct = weighted_tau_integral(0.45, 0.45, 0.0, dval);
        CHECK(prof(dval) == doctest::Approx(direct.value).epsilon(1e-4));
    }
    // beyond the table the exact power law takes over
    TauIntegral far = weighted_tau_integral(0.45, 0.45, 0.0, 1e22);
    CHECK(prof(1e22) == doctest::Approx(far.value).epsilon(0.05));
}

TEST_CASE("the modulation integral matches a brute-force reference at desk scale") {
    EtaIntegral e = eta_integral_bound(-3.0, 2.0, 1.0, 0.45);
    const double p = 2.0 * 2.0 + 8.0;  // 2 xi + eps^2 xi^3 at xi=2
    const double q = 4.0 * 2.0;        // 4 eps^2 xi
    double trap = 0.0;
    const double h = 1e-4;
    for (double eta = -200.0; eta <= 200.0; eta += h) {
        const double gval = -3.0 + p * eta + q * eta * eta * eta;
        trap += std::pow(1.0 + std::fabs(gval), -0.9) * h;
    }
    CHECK(e.lhs == doctest::Approx(trap).epsilon(2e-4));
    // certificate bookkeeping: rhs = <Gamma>^{-(2B - 1/4)} with Gamma = 20
    CHECK(e.rhs == doctest::Approx(std::pow(21.0, -0.65)).epsilon(1e-12));
    CHECK(e.ratio == doctest::Approx(e.lhs / e.rhs).epsilon(1e-12));
    CHECK(e.evaluations > 0);
}

TEST_CASE("the modulation integral converges at the exact resonance specials") {
    // tau = -Gamma puts the root of the cubic exactly at eta = xi/2, the
    // sharpest-peak configuration the scans visit
    for (double xi : {352.51441973131558, 1024.0}) {
        const double gamma = xi * xi + xi * xi * xi * xi;
        EtaIntegral plus = eta_integral_bound(gamma, xi, 1.0, 0.45);
        EtaIntegral minus = eta_integral_bound(-gamma, xi, 1.0, 0.45);
        CHECK(std::isfinite(plus.ratio));
        CHECK(std::isfinite(minus.ratio));
        CHECK(minus.ratio > 0.0);
    }
}

TEST_CASE("the modulation integral validates its arguments") {
    CHECK_THROWS_AS(eta_integral_bound(0.0, 0.5, 1.0, 0.45), std::invalid_argument);
    CHECK_THROWS_AS(eta_integral_bound(0.0, 2.0, 1.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(eta_integral_bound(0.0, 2.0, 1.0, 0.6), std::invalid_argument);
}

TEST_CASE("bracket weights obey the triangle-style sandwich inequality") {
    CounterRng rng(2718, 0);
    for (int i = 0; i < 2000; ++i) {
        const double a = rng.uniform(-1e6, 1e6);
        const double b = rng.uniform(-1e6, 1e6);
        CHECK(1.0 + std::fabs(a) <= (1.0 + std::fabs(b)) * (1.0 + std::fabs(a - b)) * (1.0 + 1e-17));
    }
}

TEST_CASE("stationary points of the mixed phase sit at the cube-root scale") {
    for (double xi : {32.0, 64.0, 128.0, 256.0}) {
        ResonanceGeometry geo = stationary_points(0.0, xi, 1.0, PhaseBranch::wave_plus);
        CHECK(geo.gamma == doctest::Approx(xi * xi + xi * xi * xi * xi));
        const double c = geo.a_m / std::cbrt(xi);
        CHECK(c > 0.5);
        CHECK(c < 1.0);
        const double m_rel = geo.m / std::sqrt(geo.gamma);
        CHECK(m_rel >= 0.75);
        CHECK(m_rel <= 1.25);
        CHECK(geo.convex_certified);
    }
}

TEST_CASE("far-branch minimizers collapse to the origin with closed-form offsets") {
    for (double xi : {4.0, 32.0, 200.0}) {
        const double root = std::sqrt(phi_eps(xi, 1.0));
        ResonanceGeometry plus = stationary_points(5.0, xi, 1.0, PhaseBranch::wave_plus_far);
        CHECK(plus.a_m == doctest::Approx(0.0));
        CHECK(plus.m == doctest::Approx(root).epsilon(1e-10));
        ResonanceGeometry minus = stationary_points(5.0, xi, 1.0, PhaseBranch::wave_minus_far);
        CHECK(minus.a_m == doctest::Approx(0.0));
        CHECK(minus.m == doctest::Approx(-root).epsilon(1e-10));
    }
}

TEST_CASE("the minus branch dips below zero by at most a quarter of the wave height") {
    for (double xi : {32.0, 128.0}) {
        ResonanceGeometry geo = stationary_points(0.0, xi, 1.0, PhaseBranch::wave_minus);
        const double root = std::sqrt(geo.gamma);
        CHECK(geo.m < 0.0);
        CHECK(-geo.m >= root);
        CHECK(-geo.m <= 1.25 * root);
        CHECK(geo.convex_certified);
    }
}

TEST_CASE("order-one modulation windows are classified from tau") {
    const double xi = 64.0;
    const double root = std::sqrt(phi_eps(xi, 1.0));
    ResonanceGeometry in = stationary_points(-0.75 * root, xi, 1.0, PhaseBranch::wave_plus);
    CHECK(in.lambda_plus_order_one);
    ResonanceGeometry out = stationary_points(5.0, xi, 1.0, PhaseBranch::wave_plus);
    CHECK(!out.lambda_plus_order_one);
    ResonanceGeometry minus_in = stationary_points(0.75 * root + 0.5 * root, xi, 1.0,
                                                   PhaseBranch::wave_minus);
    CHECK(minus_in.lambda_minus_order_one);  // tau = 1.25 root lies in [root, 1.5 root]
}

TEST_CASE("the cubic branch reports a root where the resonance function vanishes") {
    ResonanceGeometry geo = stationary_points(-500.0, 3.0, 1.0, PhaseBranch::schro_schro);
    const double res = resonance_cubic(-500.0, 3.0, geo.root_r, 1.0);
    CHECK(std::fabs(res) < 1e-6 * 500.0);
}

TEST_CASE("phase values and second derivatives agree with finite differences") {
    const double tau = 2.0, xi = 8.0, eps = 0.7;
    for (PhaseBranch br : {PhaseBranch::wave_plus, PhaseBranch::wave_minus,
                           PhaseBranch::wave_plus_far, PhaseBranch::wave_minus_far}) {
        const double x0 = 3.7;  // away from every kink of these branches
        const double h = 1e-4;
        const double fdd = (wave_phase_value(tau, xi, eps, br, x0 + h) -
                            2.0 * wave_phase_value(tau, xi, eps, br, x0) +
                            wave_phase_value(tau, xi, eps, br, x0 - h)) / (h * h);
        CHECK(wave_phase_second_derivative(xi, eps, br, x0) == doctest::Approx(fdd).epsilon(1e-4));
    }
}

TEST_CASE("membership in the admissible exponent region matches hand evaluation") {
    CHECK(region_membership(0.0, 0.0).inside);
    CHECK(region_membership(1.0, 0.0).inside);
    CHECK(region_membership(0.0, 1.4).inside);
    CHECK(!region_membership(2.0, 0.0).inside);     // k - l = 2 >= 3/2
    CHECK(region_membership(-0.5, -0.6).inside);
    CHECK(!region_membership(-0.75, -0.75).inside);  // boundary corner is excluded
    RegionCheck rc = region_membership(2.0, 0.0);
    CHECK(!rc.active_constraints.empty());
}

TEST_CASE("the region boundary polyline is ordered and contains the corner") {
    auto poly = region_boundary_polyline(3.0);
    REQUIRE(poly.size() >= 4);
    bool corner = false;
    for (const auto& [k, l] : poly)
        if (std::fabs(k + 0.75) < 1e-12 && std::fabs(l + 0.75) < 1e-12) corner = true;
    CHECK(corner);
    for (const auto& [k, l] : poly) {
        CHECK(k >= -0.75 - 1e-12);
        CHECK(k <= 3.0 + 1e-12);
    }
}

TEST_CASE("the restricted window integral enforces its large-frequency precondition") {
    CHECK_THROWS_WITH_AS(around_xi_integral(0.0, 16.0, 1.0, -0.3, -0.3, 0.45),
                         doctest::Contains("xi"), std::invalid_argument);
    CHECK_THROWS_AS(around_xi_integral(0.0, 64.0, 1.0, 0.3, -0.3, 0.45), std::invalid_argument);
    CHECK_THROWS_AS(around_xi_integral(0.0, 64.0, 1.0, -0.3, -0.3, 0.6), std::invalid_argument);

    const double xi = 64.0;
    const double tau = -phi_eps(xi, 1.0);
    AroundXiIntegral a = around_xi_integral(tau, xi, 1.0, -0.3, -0.3, 0.45);
    CHECK(a.value > 0.0);
    CHECK(std::isfinite(a.bound_ratio));
    CHECK(a.bound_ratio == doctest::Approx(4.8666).epsilon(1e-3));
}

TEST_CASE("log-log slope fitting is exact on pure power laws") {
    std::vector<double> x, y;
    for (int i = 1; i <= 40; ++i) {
        x.push_back(std::pow(10.0, 0.25 * i));
        y.push_back(3.0 * std::pow(x.back(), 1.7));
    }
    CHECK(log_log_slope(x, y) == doctest::Approx(1.7).epsilon(1e-12));
    y[5] = 0.0;  // non-positive samples are skipped, not fatal
    CHECK(log_log_slope(x, y) == doctest::Approx(1.7).epsilon(1e-10));
}

TEST_CASE("kernel scans are deterministic and independent of the thread count") {
    ScanConfig cfg;
    cfg.kind = KernelKind::C1;
    cfg.est.theta = 0.05;
    cfg.n_tau = 5;
    cfg.n_xi = 5;
    cfg.tau_abs_max = 100.0;
    cfg.xi_max = 50.0;
    cfg.include_case_boundaries = true;

    ScanResult once = kernel_sup_scan(cfg);
    ScanResult again = kernel_sup_scan(cfg);
    cfg.threads = 2;
    ScanResult threaded = kernel_sup_scan(cfg);

    CHECK(once.supremum == again.supremum);
    CHECK(once.supremum == threaded.supremum);
    CHECK(once.slope == threaded.slope);
    REQUIRE(!once.points.empty());
    double max_product = 0.0;
    for (const ScanPoint& p : once.points) max_product = std::max(max_product, p.product);
    CHECK(once.supremum == doctest::Approx(max_product));
    CHECK(once.warnings.empty());
    CHECK(once.sup_per_xi.size() == once.xi_series.size());
    CHECK(std::isfinite(once.slope));
    for (const ScanPoint& p : once.points) {
        CHECK(p.product == doctest::Approx(p.prefactor * p.kernel_value).epsilon(1e-12));
        CHECK(std::isfinite(p.kernel_value));
    }
}

TEST_CASE("scan configuration errors name the offending field") {
    ScanConfig cfg;
    cfg.xi_min = -1.0;
    CHECK_THROWS_WITH_AS(kernel_sup_scan(cfg), doctest::Contains("xi_min"), std::invalid_argument);
    cfg = ScanConfig{};
    cfg.tau_abs_min = 0.0;
    CHECK_THROWS_AS(kernel_sup_scan(cfg), std::invalid_argument);
    cfg = ScanConfig{};
    cfg.est.theta = 0.3;  // inadmissible exponents surface through the scan too
    CHECK_THROWS_AS(kernel_sup_scan(cfg), std::invalid_argument);
}

TEST_CASE("phase profiles sample the kink node exactly") {
    const double tau = 1.0, xi = 2.0, eps = 1.0;
    auto pts = phase_profile(tau, xi, eps, PhaseBranch::wave_plus, 6.0, 61);
    REQUIRE(pts.size() >= 61);
    CHECK(pts.front().xi1 == doctest::Approx(0.0));
    CHECK(pts.back().xi1 == doctest::Approx(6.0));
    bool kink = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].xi1 == 2.0) kink = true;
        if (i > 0) CHECK(pts[i].xi1 > pts[i - 1].xi1);
        CHECK(pts[i].f_value ==
              doctest::Approx(wave_phase_value(tau, xi, eps, PhaseBranch::wave_plus, pts[i].xi1))
                  .epsilon(1e-12));
    }
    CHECK(kink);
}
