#include "specmarket/pricing.hpp"

#include <algorithm>
#include <cmath>

namespace specmarket {

namespace {

std::vector<CurvePoint> sample_curve(const std::function<double(double)>& f, double lo,
                                     double hi, int n) {
    std::vector<CurvePoint> curve;
    if (n <= 0) return curve;
    curve.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
        curve.push_back({x, f(x)});
    }
    return curve;
}

}  // namespace

ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                          double tol, int coarse) {
    double best_x = lo, best_v = f(lo);
    int best_i = 0;
    for (int i = 1; i < coarse; ++i) {
        const double x = lo + (hi - lo) * i / (coarse - 1);
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
            best_i = i;
        }
    }
    double a = lo + (hi - lo) * std::max(0, best_i - 1) / (coarse - 1);
    double b = lo + (hi - lo) * std::min(coarse - 1, best_i + 1) / (coarse - 1);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    const double v = f(x);
    if (v >= best_v) return {x, v};
    return {best_x, best_v};
}

std::pair<double, double> shared_price_interval(const Scenario& s) {
    const double t1 = s.delay().mean_delay(1.0);
    const double c_lo = t1 == kInf ? 0.0 : std::max(0.0, s.reward_v() - s.theta_max() * t1);
    return {c_lo, s.reward_v()};
}

double revenue_shared(const Scenario& s, double c1) {
    return c1 * equilibrium_shared(s, c1).p_star;
}

double welfare_shared(const Scenario& s, double c1) {
    const EquilibriumResult eq = equilibrium_shared(s, c1);
    if (eq.delay_at_eq == kInf) return 0.0;  // p*=0 with infinite delay cannot occur
    const double cut = std::min(eq.cutoff_theta, s.theta_max());
    return (s.reward_v() * cut - 0.5 * eq.delay_at_eq * cut * cut) / s.theta_max();
}

double welfare_shared_cutoff(const Scenario& s, double theta_tilde) {
    const double t = s.delay().mean_delay(theta_tilde / s.theta_max());
    if (t == kInf) return -kInf;
    return (s.reward_v() * theta_tilde - 0.5 * t * theta_tilde * theta_tilde)
           / s.theta_max();
}

PricingResult revenue_optimal_shared(const Scenario& s, int curve_points) {
    const auto [c_lo, c_up] = shared_price_interval(s);
    const auto f = [&](double c) { return revenue_shared(s, c); };
    const ScalarMax m = maximize_scalar(f, c_lo, c_up);
    return {m.x, m.value, equilibrium_shared(s, m.x).p_star,
            sample_curve(f, c_lo, c_up, curve_points)};
}

PricingResult social_optimal_shared(const Scenario& s, int curve_points) {
    const auto f = [&](double th) { return welfare_shared_cutoff(s, th); };
    const ScalarMax m = maximize_scalar(f, 0.0, s.theta_max());
    const double theta_star = m.x;
    const double price = s.reward_v()
                       - theta_star * s.delay().mean_delay(theta_star / s.theta_max());
    return {price, m.value, theta_star, sample_curve(f, 0.0, s.theta_max(), curve_points)};
}

double revenue_exclusive(const Scenario& s, double c2) {
    return c2 * equilibrium_exclusive(s, c2).p_star;
}

double welfare_exclusive(const Scenario& s, double c2) {
    const double cut = std::min(equilibrium_exclusive(s, c2).cutoff_theta, s.theta_max());
    return (s.reward_v() * cut - 0.5 * s.x_mean() * cut * cut) / s.theta_max();
}

PricingResult revenue_optimal_exclusive(const Scenario& s, int curve_points) {
    const auto f = [&](double c) { return revenue_exclusive(s, c); };
    double price;
    if (s.reward_v() <= s.theta_max() * s.x_mean()) {
        price = 0.5 * s.reward_v();  // interior optimum of c (V-c)/(theta_max E[X])
    } else {
        price = maximize_scalar(f, 0.0, s.reward_v()).x;
    }
    return {price, f(price), equilibrium_exclusive(s, price).p_star,
            sample_curve(f, 0.0, s.reward_v(), curve_points)};
}

PricingResult social_optimal_exclusive(const Scenario& s, int curve_points) {
    const auto f = [&](double c) { return welfare_exclusive(s, c); };
    const double price = 0.0;
    return {price, f(price), equilibrium_exclusive(s, price).cutoff_theta,
            sample_curve(f, 0.0, s.reward_v(), curve_points)};
}

}  // namespace specmarket
