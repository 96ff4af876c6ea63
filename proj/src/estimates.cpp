#include "qzak/estimates.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qzak/symbols.hpp"

namespace qzak {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double bracket(double x) { return 1.0 + std::fabs(x); }

double pos_part(double x) { return x > 0.0 ? x : 0.0; }

// sqrt(Phi_eps(v)) = |v| sqrt(1 + eps^2 v^2), numerically safe for all v.
double sqrt_phi(double v, double eps) {
    return std::fabs(v) * std::sqrt(1.0 + eps * eps * v * v);
}

// d/dv sqrt(Phi_eps(v)) away from v = 0.
double sqrt_phi_deriv(double v, double eps) {
    const double e2v2 = eps * eps * v * v;
    const double s = (v > 0.0) ? 1.0 : -1.0;
    return s * (1.0 + 2.0 * e2v2) / std::sqrt(1.0 + e2v2);
}

// d^2/dv^2 sqrt(Phi_eps(v)) away from v = 0 (always positive).
double sqrt_phi_second(double v, double eps) {
    const double e2 = eps * eps;
    const double e2v2 = e2 * v * v;
    return std::fabs(v) * (3.0 * e2 + 2.0 * e2 * e2v2) / std::pow(1.0 + e2v2, 1.5);
}

double phi_deriv(double x, double eps) { return 2.0 * x + 4.0 * eps * eps * x * x * x; }

struct BranchSigns {
    double outer = 1.0;  // sign in front of sqrt(Phi)
    double inner = -1.0; // sign of xi in the sqrt argument: xi1 + inner*xi
};

BranchSigns branch_signs(PhaseBranch b) {
    switch (b) {
        case PhaseBranch::wave_plus: return {+1.0, -1.0};
        case PhaseBranch::wave_minus: return {-1.0, +1.0};
        case PhaseBranch::wave_plus_far: return {+1.0, +1.0};
        case PhaseBranch::wave_minus_far: return {-1.0, -1.0};
        default: throw std::invalid_argument("branch_signs: wave branch required");
    }
}

}  // namespace

std::string kernel_name(KernelKind k) {
    switch (k) {
        case KernelKind::C1: return "C1";
        case KernelKind::C2: return "C2";
        case KernelKind::C3: return "C3";
    }
    return "?";
}

std::string phase_branch_name(PhaseBranch b) {
    switch (b) {
        case PhaseBranch::schro_schro: return "schro_schro";
        case PhaseBranch::wave_plus: return "wave_plus";
        case PhaseBranch::wave_minus: return "wave_minus";
        case PhaseBranch::wave_plus_far: return "wave_plus_far";
        case PhaseBranch::wave_minus_far: return "wave_minus_far";
    }
    return "?";
}

double EstimateConfig::big_b() const {
    return big_b1() - 0.5 * pos_part(1.0 - 2.0 * big_b2());
}

void validate_estimate_config(const EstimateConfig& cfg, KernelKind kind) {
    if (!(cfg.theta > 0.0)) {
        throw std::invalid_argument("estimates.theta: must be positive");
    }
    if (!(cfg.eps > 0.0 && cfg.eps <= 1.0)) {
        throw std::invalid_argument("estimates.eps: must lie in (0, 1]");
    }
    if (!(cfg.b_prime() > -0.5 && cfg.b_prime() < 0.0)) {
        throw std::invalid_argument("estimates.theta: b' = -1/2 + theta must lie in (-1/2, 0)");
    }
    if (!(cfg.big_b1() > 0.25 && cfg.big_b1() <= cfg.big_b2())) {
        throw std::invalid_argument("estimates.theta: requires 1/4 < B1 <= B2");
    }
    const double B = cfg.big_b();
    double lo = 0.0, hi = 0.5;
    switch (kind) {
        case KernelKind::C1: lo = 1.0 / 6.0; break;
        case KernelKind::C2: lo = 1.0 / 3.0; break;
        case KernelKind::C3: lo = 1.0 / 8.0; break;
    }
    if (!(B > lo && B < hi)) {
        std::ostringstream os;
        os << "estimates.theta: effective B = " << B << " outside (" << lo << ", " << hi
           << ") required for kernel " << kernel_name(kind);
        throw std::invalid_argument(os.str());
    }
}

double resonance_cubic(double tau, double xi, double eta, double eps) {
    const double e2 = eps * eps;
    return tau + (2.0 * xi + e2 * xi * xi * xi) * eta + 4.0 * e2 * xi * eta * eta * eta;
}

double resonance_direct(double tau, double xi, double eta, double eps) {
    return tau - phi_eps(eta - 0.5 * xi, eps) + phi_eps(eta + 0.5 * xi, eps);
}

// ---------------------------------------------------------------------------
// weighted_tau_integral
// ---------------------------------------------------------------------------

TauIntegral weighted_tau_integral(double a_minus, double a_plus, double s1, double s2,
                                  const QuadOptions& opt) {
    if (!(a_minus >= 0.0 && a_minus <= a_plus)) {
        throw std::invalid_argument("weighted_tau_integral: requires 0 <= a_minus <= a_plus");
    }
    if (!(a_minus + a_plus > 0.5)) {
        throw std::invalid_argument("weighted_tau_integral: requires a_minus + a_plus > 1/2");
    }
    const double d = std::fabs(s2 - s1);
    const double em = 2.0 * a_minus, ep = 2.0 * a_plus;
    auto f = [em, ep, d](double x) {
        return std::pow(1.0 + std::fabs(x), -em) * std::pow(1.0 + std::fabs(x - d), -ep);
    };
    const double wing = 8.0 * (1.0 + d);
    TauIntegral out;
    out.alpha = em - pos_part(1.0 - ep);
    QuadResult central, right, left;
    if (d < 1e6) {
        central = integrate_segmented(f, -wing, d + wing, {0.0, d, 0.5 * d}, opt);
        right = integrate_power_tail(f, d + wing, 1.0 + d, opt);
        left = integrate_power_tail([&f](double v) { return f(-v); }, wing, 1.0 + d, opt);
    } else {
        // For large separation the peak at x = d has width O(1) but sits where
        // the double grid is coarser than 1, so each peak is integrated in its
        // own local coordinates: x for the left peak, u = x - d for the right.
        std::vector<double> breaks{0.0};
        for (double p = 1.0; p < 0.5 * d; p *= 2.0) {
            breaks.push_back(p);
            breaks.push_back(-p);
        }
        // g(u) = f(u + d) without the cancellation in |x - d|.
        auto g = [em, ep, d](double u) {
            return std::pow(1.0 + std::fabs(u + d), -em) * std::pow(1.0 + std::fabs(u), -ep);
        };
        QuadResult left_half = integrate_segmented(f, -wing, 0.5 * d, breaks, opt);
        QuadResult right_half = integrate_segmented(g, -0.5 * d, wing, breaks, opt);
        central.value = left_half.value + right_half.value;
        central.error = left_half.error + right_half.error;
        central.evaluations = left_half.evaluations + right_half.evaluations;
        central.converged = left_half.converged && right_half.converged;
        right = integrate_power_tail(g, wing, 1.0 + d, opt);
        left = integrate_power_tail([&f](double v) { return f(-v); }, wing, 1.0 + d, opt);
    }
    out.value = central.value + right.value + left.value;
    out.evaluations = central.evaluations + right.evaluations + left.evaluations;
    out.converged = central.converged && right.converged && left.converged;
    out.bound_ratio = out.value * std::pow(1.0 + d, out.alpha);
    return out;
}

// ---------------------------------------------------------------------------
// TauProfile
// ---------------------------------------------------------------------------

namespace {
constexpr double kProfileDMin = 1e-3;
constexpr double kProfileDMax = 1e18;
constexpr int kProfilePerDecade = 16;
}  // namespace

TauProfile::TauProfile(double a_minus, double a_plus) : am_(a_minus), ap_(a_plus) {
    QuadOptions opt;
    opt.rel_tol = 1e-9;
    t0_ = weighted_tau_integral(am_, ap_, 0.0, 0.0, opt).value;
    log_d_min_ = std::log(kProfileDMin);
    const double step = std::log(10.0) / kProfilePerDecade;
    inv_step_ = 1.0 / step;
    const int n = static_cast<int>(std::ceil((std::log(kProfileDMax) - log_d_min_) / step)) + 1;
    log_t_.resize(n);
    for (int i = 0; i < n; ++i) {
        const double d = std::exp(log_d_min_ + i * step);
        log_t_[i] = std::log(weighted_tau_integral(am_, ap_, 0.0, d, opt).value);
    }
    // Past the table the integral follows its exact asymptotic power law
    // T(D) ~ C D^{-alpha}; using the analytic exponent keeps the
    // extrapolation immune to quadrature noise in the last nodes.
    tail_slope_ = -(2.0 * am_ - pos_part(1.0 - 2.0 * ap_));
}

double TauProfile::operator()(double distance) const {
    const double d = std::fabs(distance);
    if (d <= kProfileDMin) {
        const double t_first = std::exp(log_t_.front());
        return t0_ + (t_first - t0_) * (d / kProfileDMin);
    }
    const double u = (std::log(d) - log_d_min_) * inv_step_;
    const int n = static_cast<int>(log_t_.size());
    if (u >= n - 1) {
        const double excess_log_d = (u - (n - 1)) / inv_step_;
        return std::exp(log_t_.back() + tail_slope_ * excess_log_d);
    }
    const int i = static_cast<int>(u);
    const double t = u - i;
    auto at = [this, n](int j) { return log_t_[std::clamp(j, 0, n - 1)]; };
    const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
    const double val =
        0.5 * ((2.0 * p1) + (-p0 + p2) * t + (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t * t +
               (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * t * t * t);
    return std::exp(val);
}

// ---------------------------------------------------------------------------
// eta_integral_bound
// ---------------------------------------------------------------------------

namespace {

// Root of the strictly increasing cubic tau + p eta + q eta^3 (p, q > 0).
double cubic_root(double tau, double p, double q) {
    double x = -tau / p;  // linear-regime guess
    for (int i = 0; i < 60; ++i) {
        const double g = tau + p * x + q * x * x * x;
        const double gp = p + 3.0 * q * x * x;
        const double step = g / gp;
        x -= step;
        if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(x))) break;
    }
    // Bisection safeguard in case Newton wandered.
    double glo, ghi;
    double lo = x, hi = x;
    double w = std::max(1.0, std::fabs(x));
    auto g = [&](double e) { return tau + p * e + q * e * e * e; };
    for (int i = 0; i < 200 && g(lo) > 0.0; ++i) { lo -= w; w *= 2.0; }
    w = std::max(1.0, std::fabs(x));
    for (int i = 0; i < 200 && g(hi) < 0.0; ++i) { hi += w; w *= 2.0; }
    glo = g(lo);
    ghi = g(hi);
    if (!(glo <= 0.0 && ghi >= 0.0)) return x;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if (gm <= 0.0) lo = mid; else hi = mid;
        if (hi - lo <= 1e-15 * (1.0 + std::fabs(mid))) break;
    }
    return 0.5 * (lo + hi);
}

// Geometric rings around a resonance root: center +- delta * 2^j up to span.
void add_rings(std::vector<double>& pts, double center, double delta, double span) {
    delta = std::max(delta, 1e-300);
    for (double r = delta; r <= span; r *= 2.0) {
        pts.push_back(center - r);
        pts.push_back(center + r);
    }
}

}  // namespace

EtaIntegral eta_integral_bound(double tau, double xi, double eps, double big_b,
                               const QuadOptions& opt) {
    if (!(xi >= 1.0)) throw std::invalid_argument("eta_integral_bound: requires xi >= 1");
    if (!(big_b > 1.0 / 6.0 && big_b < 0.5)) {
        throw std::invalid_argument("eta_integral_bound: requires B in (1/6, 1/2)");
    }
    const double e2 = eps * eps;
    const double p = 2.0 * xi + e2 * xi * xi * xi;
    const double q = 4.0 * e2 * xi;
    const double gamma = xi * xi + e2 * xi * xi * xi * xi;
    const double two_b = 2.0 * big_b;
    const double eta0 = cubic_root(tau, p, q);
    const double gp0 = p + 3.0 * q * eta0 * eta0;
    // Root-centered (exact for a cubic) evaluation: g = gp0*d + 3q*eta0*d^2 + q*d^3
    // with d = eta - eta0.  The direct form tau + p*eta + q*eta^3 cancels to
    // |tau|*eps_mach noise near the root, which is exactly where the weight peaks.
    auto w = [eta0, gp0, q, two_b](double eta) {
        const double d = eta - eta0;
        const double g = ((q * d + 3.0 * q * eta0) * d + gp0) * d;
        return std::pow(1.0 + std::fabs(g), -two_b);
    };
    const double win = std::max({2.0 * std::fabs(eta0), 2.0 * std::sqrt(p / std::max(q, 1e-300)),
                                 4.0, 40.0 / gp0});
    std::vector<double> pts = {eta0, 0.0};
    add_rings(pts, eta0, 1.0 / gp0, win);
    EtaIntegral out;
    out.tau = tau;
    out.xi = xi;
    // The central window is split into ~70 ring segments, so it needs a larger
    // refinement budget than the per-call default to certify rel_tol.
    QuadOptions copt = opt;
    copt.max_intervals = std::max<std::size_t>(opt.max_intervals, 20000);
    QuadResult central = integrate_segmented(w, eta0 - win, eta0 + win, pts, copt);
    QuadResult right = integrate_power_tail(w, eta0 + win, win, opt);
    QuadResult left =
        integrate_power_tail([&w](double v) { return w(-v); }, win - eta0, win, opt);
    out.lhs = central.value + right.value + left.value;
    out.evaluations = central.evaluations + right.evaluations + left.evaluations;
    if (!(central.converged && right.converged && left.converged)) {
        std::ostringstream os;
        os << "eta_integral_bound: quadrature did not converge at (tau=" << tau
           << ", xi=" << xi << ")";
        throw std::runtime_error(os.str());
    }
    out.rhs = std::pow(1.0 + gamma, -(two_b - 0.25));
    out.ratio = out.lhs / out.rhs;
    return out;
}

// ---------------------------------------------------------------------------
// Stationary-point geometry
// ---------------------------------------------------------------------------

double wave_phase_value(double tau, double xi, double eps, PhaseBranch branch, double xi1) {
    if (branch == PhaseBranch::schro_schro) {
        return resonance_cubic(tau, xi, xi1 - 0.5 * xi, eps);
    }
    const BranchSigns s = branch_signs(branch);
    return tau + s.outer * sqrt_phi(xi1 + s.inner * xi, eps) + phi_eps(xi1, eps);
}

double wave_phase_second_derivative(double xi, double eps, PhaseBranch branch, double xi1) {
    if (branch == PhaseBranch::schro_schro) {
        return 24.0 * eps * eps * xi * (xi1 - 0.5 * xi);
    }
    const BranchSigns s = branch_signs(branch);
    return s.outer * sqrt_phi_second(xi1 + s.inner * xi, eps) + 2.0 + 12.0 * eps * eps * xi1 * xi1;
}

namespace {

double wave_phase_deriv(double xi, double eps, PhaseBranch branch, double xi1) {
    const BranchSigns s = branch_signs(branch);
    return s.outer * sqrt_phi_deriv(xi1 + s.inner * xi, eps) + phi_deriv(xi1, eps);
}

// Minimize the convex restriction of f' over [lo, hi] (derivative bisection).
// Assumes f is convex on the segment; returns the minimizer.
double convex_segment_argmin(double xi, double eps, PhaseBranch branch, double lo, double hi,
                             double tau) {
    const double shrink = 1e-12 * (1.0 + hi - lo);
    double a = lo + shrink, b = hi - shrink;
    if (!(b > a)) return 0.5 * (lo + hi);
    double fa = wave_phase_deriv(xi, eps, branch, a);
    double fb = wave_phase_deriv(xi, eps, branch, b);
    if (fa >= 0.0) return lo;
    if (fb <= 0.0) return hi;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (a + b);
        const double fm = wave_phase_deriv(xi, eps, branch, mid);
        if (fm < 0.0) { a = mid; fa = fm; } else { b = mid; fb = fm; }
        if (b - a <= 1e-15 * (1.0 + std::fabs(mid))) break;
    }
    (void)tau;
    (void)fa;
    (void)fb;
    return 0.5 * (a + b);
}

// Global minimizer of the wave phase on xi1 >= 0, honoring the kink for the
// (xi1 - xi) argument branches.  The suggested bracket, when valid, speeds up
// and cross-checks the derivative bisection.
double wave_phase_argmin(double tau, double xi, double eps, PhaseBranch branch) {
    const BranchSigns s = branch_signs(branch);
    const bool kink_inside = (s.inner < 0.0);  // argument xi1 - xi vanishes at xi1 = xi
    double best_x = 0.0;
    double best_f = wave_phase_value(tau, xi, eps, branch, 0.0);
    auto consider = [&](double x) {
        const double fx = wave_phase_value(tau, xi, eps, branch, x);
        if (fx < best_f) { best_f = fx; best_x = x; }
    };
    if (kink_inside) {
        // Analytic bracket for the interior minimizer left of the kink
        // (used when the derivative changes sign across it).
        if (branch == PhaseBranch::wave_plus && xi > 1.0) {
            const double r1 = eps / std::sqrt(2.0), r2 = 1.5 * eps;
            const double lo_c = std::min(r1 / (1.0 + r1) * xi, std::cbrt(xi / (4.0 * std::sqrt(2.0) * eps)));
            const double hi_c = std::min(r2 / (1.0 + r2) * xi, std::cbrt(3.0 * xi / (4.0 * eps)));
            if (hi_c > lo_c && wave_phase_deriv(xi, eps, branch, lo_c) < 0.0 &&
                wave_phase_deriv(xi, eps, branch, hi_c) > 0.0) {
                double a = lo_c, b = hi_c;
                for (int i = 0; i < 200; ++i) {
                    const double mid = 0.5 * (a + b);
                    if (wave_phase_deriv(xi, eps, branch, mid) < 0.0) a = mid; else b = mid;
                    if (b - a <= 1e-15 * (1.0 + std::fabs(mid))) break;
                }
                consider(0.5 * (a + b));
                consider(xi);
                return best_x;
            }
        }
        consider(convex_segment_argmin(xi, eps, branch, 0.0, xi, tau));
        consider(xi);
        // Right segment [xi, inf): convex; expand until the derivative is positive.
        double hi = std::max(2.0 * xi, 1.0);
        int guard = 0;
        while (wave_phase_deriv(xi, eps, branch, hi) < 0.0 && guard++ < 200) hi *= 2.0;
        consider(convex_segment_argmin(xi, eps, branch, xi, hi, tau));
    } else {
        double hi = std::max(2.0 * xi, 1.0);
        int guard = 0;
        while (wave_phase_deriv(xi, eps, branch, hi) < 0.0 && guard++ < 200) hi *= 2.0;
        consider(convex_segment_argmin(xi, eps, branch, 0.0, hi, tau));
    }
    return best_x;
}

}  // namespace

ResonanceGeometry stationary_points(double tau, double xi, double eps, PhaseBranch branch) {
    if (!(xi > 0.0)) throw std::invalid_argument("stationary_points: requires xi > 0");
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("stationary_points: requires eps in (0, 1]");
    }
    ResonanceGeometry geo;
    geo.tau = tau;
    geo.xi = xi;
    geo.eps = eps;
    geo.gamma = phi_eps(xi, eps);
    geo.a_scale = std::pow(eps, -2.0 / 3.0) * std::cbrt(std::fabs(tau / xi));

    const double sp = sqrt_phi(xi, eps);

    // Modulation classification is branch-independent: it compares tau with
    // the minima of the two primary wave phases.
    const double am_plus = wave_phase_argmin(tau, xi, eps, PhaseBranch::wave_plus);
    const double m_plus =
        wave_phase_value(tau, xi, eps, PhaseBranch::wave_plus, am_plus) - tau;
    const double am_minus = wave_phase_argmin(tau, xi, eps, PhaseBranch::wave_minus);
    const double m_minus =
        wave_phase_value(tau, xi, eps, PhaseBranch::wave_minus, am_minus) - tau;
    geo.lambda_plus_order_one = (tau >= -sp && tau <= -0.5 * sp);
    geo.lambda_minus_order_one = (tau >= sp && tau <= 1.5 * sp);
    geo.lambda_plus = geo.lambda_plus_order_one ? 1.0 : std::fabs(tau + m_plus);
    geo.lambda_minus = geo.lambda_minus_order_one ? 1.0 : std::fabs(tau + m_minus);

    if (branch == PhaseBranch::schro_schro) {
        geo.branch = PhaseBranch::schro_schro;
        const double e2 = eps * eps;
        const double p = 2.0 * xi + e2 * xi * xi * xi;
        const double q = 4.0 * e2 * xi;
        geo.root_r = cubic_root(tau, p, q);
        geo.a_m = kNaN;
        geo.m = kNaN;
        geo.a2 = kNaN;
        // Convexity in eta holds on eta > 0: f'' = 24 eps^2 xi eta.
        double min_s = std::numeric_limits<double>::infinity();
        const double span = std::max({xi, std::fabs(geo.root_r), 1.0});
        for (int i = 0; i <= 256; ++i) {
            const double eta = span * std::pow(10.0, -3.0 + 5.0 * i / 256.0);
            const double s2 = 24.0 * e2 * xi * eta;
            min_s = std::min(min_s, s2);
        }
        geo.min_f_second = min_s;
        geo.convex_certified = min_s > 0.0;
        return geo;
    }

    geo.branch = (branch == PhaseBranch::wave_plus || branch == PhaseBranch::wave_plus_far)
                     ? PhaseBranch::wave_plus
                     : PhaseBranch::wave_minus;
    geo.root_r = kNaN;
    geo.a_m = wave_phase_argmin(tau, xi, eps, branch);
    geo.m = wave_phase_value(tau, xi, eps, branch, geo.a_m) - tau;

    // Upper zero past the minimizer when the phase dips below zero.
    geo.a2 = kNaN;
    const double f_min = tau + geo.m;
    if (f_min < 0.0) {
        double hi = std::max({2.0 * geo.a_m + 1.0, 2.0 * xi, 1.0});
        int guard = 0;
        while (wave_phase_value(tau, xi, eps, branch, hi) < 0.0 && guard++ < 300) hi *= 2.0;
        if (wave_phase_value(tau, xi, eps, branch, hi) >= 0.0) {
            double a = geo.a_m, b = hi;
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (a + b);
                if (wave_phase_value(tau, xi, eps, branch, mid) < 0.0) a = mid; else b = mid;
                if (b - a <= 1e-14 * (1.0 + std::fabs(mid))) break;
            }
            geo.a2 = 0.5 * (a + b);
        } else {
            std::ostringstream os;
            os << "stationary_points: expansion failed to bracket the upper zero at (tau="
               << tau << ", xi=" << xi << ", eps=" << eps << ")";
            throw std::runtime_error(os.str());
        }
    }

    // Convexity certificate: analytic second derivative sampled away from the
    // kink of the sqrt argument.
    const BranchSigns s = branch_signs(branch);
    const double kink = (s.inner < 0.0) ? xi : -xi;  // xi1 where the sqrt argument vanishes
    double min_s = std::numeric_limits<double>::infinity();
    const double span = std::max({xi, geo.a_m, 1.0});
    for (int i = 0; i <= 256; ++i) {
        const double x = span * std::pow(10.0, -3.0 + 5.0 * i / 256.0);
        if (std::fabs(x - kink) < 1e-9 * span) continue;
        min_s = std::min(min_s, wave_phase_second_derivative(xi, eps, branch, x));
    }
    for (double off : {1e-3, 1e-2, 1e-1}) {
        const double x = kink + off * span;
        if (x > 0.0) min_s = std::min(min_s, wave_phase_second_derivative(xi, eps, branch, x));
        const double y = kink - off * span;
        if (y > 0.0) min_s = std::min(min_s, wave_phase_second_derivative(xi, eps, branch, y));
    }
    geo.min_f_second = min_s;
    geo.convex_certified = min_s > 0.0;
    return geo;
}

// ---------------------------------------------------------------------------
// Region membership
// ---------------------------------------------------------------------------

RegionCheck region_membership(double k, double l) {
    RegionCheck out;
    const bool c1a = (k - l > -1.5);
    const bool c1b = (k - l < 1.5);
    const bool c1c = (k >= 0.0);
    const bool first = c1a && c1b && c1c;
    const bool c2a = (2.0 * k - l > -1.5);
    const bool c2b = (k + l > -1.5);
    const bool c2c = (k > -0.75 && k < 0.0);
    const bool second = c2a && c2b && c2c;
    out.inside = first || second;
    auto mark = [](bool v) { return v ? std::string("[holds]") : std::string("[fails]"); };
    out.active_constraints = {
        "first: k-l > -3/2 " + mark(c1a),
        "first: k-l < 3/2 " + mark(c1b),
        "first: k >= 0 " + mark(c1c),
        "second: 2k-l > -3/2 " + mark(c2a),
        "second: k+l > -3/2 " + mark(c2b),
        "second: -3/4 < k < 0 " + mark(c2c),
    };
    return out;
}

std::vector<std::pair<double, double>> region_boundary_polyline(double k_max) {
    return {
        {k_max, k_max - 1.5},  // lower edge l = k - 3/2 for k >= 0
        {0.0, -1.5},
        {-0.75, -0.75},        // corner where l = -k - 3/2 meets k = -3/4
        {-0.75, 0.0},
        {0.0, 1.5},
        {k_max, k_max + 1.5},  // upper edge l = k + 3/2 for k >= 0
    };
}

// ---------------------------------------------------------------------------
// around_xi_integral
// ---------------------------------------------------------------------------

namespace {

// Zeros of the convex phase restricted to [lo, hi]; appends to roots.
void collect_convex_roots(double tau, double xi, double eps, PhaseBranch branch, double lo,
                          double hi, std::vector<double>& roots) {
    if (!(hi > lo)) return;
    auto f = [&](double x) { return wave_phase_value(tau, xi, eps, branch, x); };
    const double xmin_cand = convex_segment_argmin(xi, eps, branch, lo, hi, tau);
    const double xmin = std::clamp(xmin_cand, lo, hi);
    const double fmin = f(xmin);
    if (fmin > 0.0) return;
    auto bisect = [&](double a, double b, bool rising) {
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (a + b);
            const bool below = f(mid) < 0.0;
            if (below == rising) a = mid; else b = mid;
            if (b - a <= 1e-13 * (1.0 + std::fabs(mid))) break;
        }
        return 0.5 * (a + b);
    };
    if (f(lo) > 0.0 && xmin > lo) roots.push_back(bisect(lo, xmin, false));
    if (f(hi) > 0.0 && xmin < hi) roots.push_back(bisect(xmin, hi, true));
    if (fmin == 0.0) roots.push_back(xmin);
}

double wave_phase_deriv_mag(double tau, double xi, double eps, PhaseBranch branch, double x) {
    (void)tau;
    const double h = 1e-7 * (1.0 + std::fabs(x));
    const double fp = wave_phase_value(tau, xi, eps, branch, x + h) -
                      wave_phase_value(tau, xi, eps, branch, x - h);
    return std::fabs(fp / (2.0 * h));
}

}  // namespace

AroundXiIntegral around_xi_integral(double tau, double xi, double eps, double k, double l,
                                    double big_b, const QuadOptions& opt) {
    if (!(k < 0.0)) throw std::invalid_argument("around_xi_integral: requires k < 0");
    if (!(l < 0.0)) throw std::invalid_argument("around_xi_integral: requires l < 0");
    if (!(big_b > 0.0 && big_b < 0.5)) {
        throw std::invalid_argument("around_xi_integral: requires B in (0, 1/2)");
    }
    if (!(eps > 0.0 && eps <= 1.0)) {
        throw std::invalid_argument("around_xi_integral: requires eps in (0, 1]");
    }
    if (!(xi > 32.0 / (eps * eps))) {
        throw std::invalid_argument("around_xi_integral: requires xi > 32 eps^{-2}");
    }
    AroundXiIntegral out;
    out.tau = tau;
    out.xi = xi;
    const double two_b = 2.0 * big_b;
    const double lo = 0.5 * xi, hi = 1.5 * xi;
    for (PhaseBranch branch : {PhaseBranch::wave_plus, PhaseBranch::wave_minus_far}) {
        auto integrand = [&](double x) {
            const double mod = std::fabs(wave_phase_value(tau, xi, eps, branch, x));
            return std::pow(1.0 + std::fabs(x - xi), 2.0 * l) * std::pow(1.0 + std::fabs(x), -2.0 * k) *
                   std::pow(1.0 + mod, -two_b);
        };
        std::vector<double> pts = {xi};
        std::vector<double> roots;
        collect_convex_roots(tau, xi, eps, branch, lo, xi, roots);
        collect_convex_roots(tau, xi, eps, branch, xi, hi, roots);
        for (double r : roots) {
            pts.push_back(r);
            const double slope = std::max(wave_phase_deriv_mag(tau, xi, eps, branch, r), 1e-12);
            add_rings(pts, r, 1.0 / slope, 0.5 * xi);
        }
        add_rings(pts, xi, 1e-6 * xi, 0.5 * xi);  // kink neighborhood
        QuadResult q = integrate_segmented(integrand, lo, hi, pts, opt);
        out.evaluations += q.evaluations;
        out.value = std::max(out.value, q.value);
    }
    const double xb = bracket(xi);
    out.bound_ratio = out.value * std::pow(xb, 2.0 * k) * std::pow(xb, 6.0 * big_b - 0.01);
    return out;
}

// ---------------------------------------------------------------------------
// Kernel scans
// ---------------------------------------------------------------------------

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return 0.0;
    return (n * sxy - sx * sy) / denom;
}

namespace {

struct PointEval {
    double kernel_value = 0.0;
    double prefactor = 0.0;
    double product = 0.0;
    bool converged = true;
};

// Inner integral for C1/C2 in the eta variable.
double schro_inner(const ScanConfig& cfg, const TauProfile& profile, double tau, double xi,
                   bool ratio_weight, bool* ok) {
    const double eps = cfg.est.eps;
    const double e2 = eps * eps;
    const double p = 2.0 * xi + e2 * xi * xi * xi;
    const double q = 4.0 * e2 * xi;
    const double two_k = 2.0 * cfg.est.k;
    auto integrand = [&](double eta) {
        const double g = tau + p * eta + q * eta * eta * eta;
        const double t = profile(g);
        const double b_plus = 1.0 + std::fabs(eta + 0.5 * xi);   // <xi1>
        const double b_minus = 1.0 + std::fabs(eta - 0.5 * xi);  // <xi1 - xi>
        const double sw = ratio_weight ? std::pow(b_plus / b_minus, two_k)
                                       : std::pow(b_plus * b_minus, -two_k);
        return sw * t;
    };
    const double eta0 = cubic_root(tau, p, q);
    const double gp0 = p + 3.0 * q * eta0 * eta0;
    const double win =
        std::max({2.0 * std::fabs(eta0), 1.5 * xi, 2.0 * std::sqrt(p / std::max(q, 1e-300)), 4.0});
    std::vector<double> pts = {eta0, 0.0, -0.5 * xi, 0.5 * xi};
    add_rings(pts, eta0, 1.0 / gp0, win);
    QuadOptions opt;
    opt.rel_tol = 1e-7;
    QuadResult central = integrate_segmented(integrand, eta0 - win, eta0 + win, pts, opt);
    QuadResult right = integrate_power_tail(integrand, eta0 + win, win, opt);
    QuadResult left =
        integrate_power_tail([&](double v) { return integrand(-v); }, win - eta0, win, opt);
    *ok = central.converged && right.converged && left.converged;
    return central.value + right.value + left.value;
}

// Inner integral for C3 in the xi1 variable (one sign branch).
double wave_inner(const ScanConfig& cfg, const TauProfile& profile, double tau, double xi,
                  PhaseBranch branch, bool* ok) {
    const double eps = cfg.est.eps;
    const double two_k = 2.0 * cfg.est.k;
    const double two_l = 2.0 * cfg.est.l;
    auto integrand = [&](double x) {
        const double mod = wave_phase_value(tau, xi, eps, branch, x);
        return std::pow(1.0 + std::fabs(x - xi), two_l) * std::pow(1.0 + std::fabs(x), -two_k) *
               profile(mod);
    };
    const double ext = 2.0 * (xi + std::sqrt(std::fabs(tau) + 16.0) + 4.0);
    std::vector<double> pts = {0.0, xi, 0.5 * xi, 1.5 * xi, -0.5 * xi};
    std::vector<double> roots;
    collect_convex_roots(tau, xi, eps, branch, -ext, xi, roots);
    collect_convex_roots(tau, xi, eps, branch, xi, ext, roots);
    for (double r : roots) {
        pts.push_back(r);
        const double slope = std::max(wave_phase_deriv_mag(tau, xi, eps, branch, r), 1e-12);
        add_rings(pts, r, 1.0 / slope, ext);
    }
    add_rings(pts, xi, std::max(1e-6 * (1.0 + xi), 1e-6), 2.0 * (1.0 + xi));
    QuadOptions opt;
    opt.rel_tol = 1e-7;
    QuadResult central = integrate_segmented(integrand, -ext, ext, pts, opt);
    QuadResult right = integrate_power_tail(integrand, ext, ext, opt);
    QuadResult left = integrate_power_tail([&](double v) { return integrand(-v); }, ext, ext, opt);
    *ok = central.converged && right.converged && left.converged;
    return central.value + right.value + left.value;
}

PointEval eval_scan_point(const ScanConfig& cfg, const TauProfile& profile, double tau,
                          double xi) {
    PointEval out;
    const double eps = cfg.est.eps;
    const double sp = sqrt_phi(xi, eps);
    const double xb = bracket(xi);
    bool ok = true;
    switch (cfg.kind) {
        case KernelKind::C1: {
            const double inner = schro_inner(cfg, profile, tau, xi, /*ratio_weight=*/true, &ok);
            out.kernel_value = std::sqrt(std::max(inner, 0.0));
            const double mod = std::min(std::fabs(tau + sp), std::fabs(tau - sp));
            out.prefactor = std::pow(xb, -cfg.est.l) * std::pow(1.0 + mod, -cfg.est.b());
            break;
        }
        case KernelKind::C2: {
            const double inner = schro_inner(cfg, profile, tau, xi, /*ratio_weight=*/false, &ok);
            out.kernel_value = std::sqrt(std::max(inner, 0.0));
            const double mod = std::min(std::fabs(tau + sp), std::fabs(tau - sp));
            out.prefactor = std::pow(xb, cfg.est.l) * std::pow(1.0 + mod, cfg.est.b_prime());
            break;
        }
        case KernelKind::C3: {
            bool ok1 = true, ok2 = true;
            const double i1 = wave_inner(cfg, profile, tau, xi, PhaseBranch::wave_plus, &ok1);
            const double i2 = wave_inner(cfg, profile, tau, xi, PhaseBranch::wave_minus_far, &ok2);
            ok = ok1 && ok2;
            out.kernel_value = std::sqrt(std::max(std::max(i1, i2), 0.0));
            const double mod = std::fabs(tau + phi_eps(xi, eps));
            out.prefactor = std::pow(xb, -cfg.est.k) * std::pow(1.0 + mod, -cfg.est.b1());
            break;
        }
    }
    out.product = out.prefactor * out.kernel_value;
    out.converged = ok;
    return out;
}

std::vector<double> scan_tau_values(const ScanConfig& cfg, double xi) {
    std::vector<double> taus;
    taus.push_back(0.0);
    const int n = std::max(cfg.n_tau, 2);
    const double llo = std::log(cfg.tau_abs_min);
    const double lhi = std::log(cfg.tau_abs_max);
    for (int i = 0; i < n; ++i) {
        const double t = std::exp(llo + (lhi - llo) * i / (n - 1));
        taus.push_back(t);
        taus.push_back(-t);
    }
    if (cfg.include_case_boundaries) {
        const double sp = sqrt_phi(xi, cfg.est.eps);
        const double gamma = phi_eps(xi, cfg.est.eps);
        for (double v : {0.5 * sp, 0.75 * sp, sp, 1.25 * sp, 1.5 * sp, gamma, 2.0 * gamma}) {
            taus.push_back(v);
            taus.push_back(-v);
        }
    }
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    return taus;
}

}  // namespace

ScanResult kernel_sup_scan(const ScanConfig& cfg) {
    validate_estimate_config(cfg.est, cfg.kind);
    if (!(cfg.xi_min > 0.0 && cfg.xi_max > cfg.xi_min)) {
        throw std::invalid_argument("estimates.xi_min: scan requires 0 < xi_min < xi_max");
    }
    if ((cfg.kind == KernelKind::C1 || cfg.kind == KernelKind::C2) && cfg.xi_min < 1.0) {
        throw std::invalid_argument("estimates.xi_min: C1/C2 scans require xi >= 1");
    }
    if (!(cfg.tau_abs_min > 0.0 && cfg.tau_abs_max > cfg.tau_abs_min)) {
        throw std::invalid_argument("estimates.tau_min: scan requires 0 < tau_min < tau_max");
    }
    const auto t_start = std::chrono::steady_clock::now();

    double a_minus = 0.0, a_plus = 0.0;
    switch (cfg.kind) {
        case KernelKind::C1: a_minus = cfg.est.c1(); a_plus = cfg.est.b1(); break;
        case KernelKind::C2: a_minus = cfg.est.b1(); a_plus = cfg.est.b1(); break;
        case KernelKind::C3: a_minus = cfg.est.c(); a_plus = cfg.est.b1(); break;
    }
    if (a_minus > a_plus) std::swap(a_minus, a_plus);
    TauProfile profile(a_minus, a_plus);

    ScanResult res;
    res.config = cfg;
    const int n_xi = std::max(cfg.n_xi, 2);
    std::vector<double> xis(n_xi);
    {
        const double llo = std::log(cfg.xi_min);
        const double lhi = std::log(cfg.xi_max);
        for (int i = 0; i < n_xi; ++i) xis[i] = std::exp(llo + (lhi - llo) * i / (n_xi - 1));
    }

    std::vector<std::vector<ScanPoint>> rows(n_xi);
    std::vector<int> bad_counts(n_xi, 0);
    auto work = [&](int i) {
        const double xi = xis[i];
        const auto taus = scan_tau_values(cfg, xi);
        auto& row = rows[i];
        row.reserve(taus.size());
        for (double tau : taus) {
            const PointEval ev = eval_scan_point(cfg, profile, tau, xi);
            if (!ev.converged) ++bad_counts[i];
            row.push_back({tau, xi, ev.kernel_value, ev.prefactor, ev.product});
        }
    };
    const int threads = std::clamp(cfg.threads, 1, 64);
    if (threads <= 1) {
        for (int i = 0; i < n_xi; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (n_xi + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk, hi = std::min<std::size_t>(n_xi, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi]() {
                for (std::size_t i = lo; i < hi; ++i) work(static_cast<int>(i));
            });
        }
        for (auto& th : pool) th.join();
    }

    res.xi_series = xis;
    res.sup_per_xi.assign(n_xi, 0.0);
    for (int i = 0; i < n_xi; ++i) {
        for (const ScanPoint& pnt : rows[i]) {
            res.points.push_back(pnt);
            res.sup_per_xi[i] = std::max(res.sup_per_xi[i], pnt.product);
            if (pnt.product > res.supremum) {
                res.supremum = pnt.product;
                res.argmax_tau = pnt.tau;
                res.argmax_xi = pnt.xi;
            }
        }
        if (bad_counts[i] > 0 && res.warnings.size() < 50) {
            std::ostringstream os;
            os << bad_counts[i] << " non-converged quadratures at xi=" << xis[i];
            res.warnings.push_back(os.str());
        }
    }
    res.slope = log_log_slope(res.xi_series, res.sup_per_xi);
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return res;
}

// ---------------------------------------------------------------------------
// phase_profile
// ---------------------------------------------------------------------------

std::vector<ProfilePoint> phase_profile(double tau, double xi, double eps, PhaseBranch branch,
                                        double hi, int samples) {
    std::vector<double> xs;
    const int n = std::max(samples, 2);
    for (int i = 0; i < n; ++i) xs.push_back(hi * i / (n - 1));
    if (branch == PhaseBranch::wave_plus || branch == PhaseBranch::wave_minus_far) {
        if (xi > 0.0 && xi < hi) xs.push_back(xi);  // kink node
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<ProfilePoint> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back({x, wave_phase_value(tau, xi, eps, branch, x)});
    return out;
}

}  // namespace qzak
