#include "specmarket/monopoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specmarket {

namespace {

constexpr double kBisectTol = 1e-10;
constexpr int kBisectMaxIter = 200;
constexpr double kRouteAgreement = 1e-6;
constexpr double kGapTol = 1e-9;

double phi(const Scenario& s, double c1, double p) {
    return s.type_cdf(cutoff_shared(s, c1, p)) - p;
}

double bisect_phi(const Scenario& s, double c1) {
    // Phi is continuous and strictly decreasing, so a sign bracket on [0,1]
    // pins the unique root.
    if (phi(s, c1, 0.0) <= 0.0) return 0.0;
    if (phi(s, c1, 1.0) >= 0.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < kBisectMaxIter && hi - lo > kBisectTol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (phi(s, c1, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double closed_form_shared(const Scenario& s, double c1) {
    const double v = s.reward_v(), th = s.theta_max(), lam = s.lambda();
    const double m1 = s.moments().m1, m2 = s.moments().m2;
    if (c1 >= v) return 0.0;
    const double t1 = s.delay().mean_delay(1.0);
    if (t1 != kInf && c1 <= v - th * t1) return 1.0;
    const double pi = 2.0 * lam * th * (v - c1) * m2
                    + m1 * m1 * (lam * (c1 - v) + th) * (lam * (c1 - v) + th);
    const double den = lam * th * (2.0 * m1 * m1 - m2);
    if (std::fabs(den) < 1e-12) {
        // 2 m1^2 == m2: the fixed-point quadratic degenerates to linear.
        return (v - c1) / (m1 * (th + lam * (v - c1)));
    }
    return (-std::sqrt(pi) + m1 * (lam * (v - c1) + th)) / den;
}

}  // namespace

double cutoff_shared(const Scenario& s, double c1, double p) {
    if (c1 < 0.0) throw std::invalid_argument("cutoff_shared: price must be >= 0");
    if (c1 >= s.reward_v()) return 0.0;
    const double t = s.delay().mean_delay(p);
    if (t == kInf) return 0.0;
    return (s.reward_v() - c1) / t;
}

double equilibrium_shared_closed_form(const Scenario& s, double c1) {
    return closed_form_shared(s, c1);
}

double equilibrium_shared_bisection(const Scenario& s, double c1) {
    return bisect_phi(s, c1);
}

EquilibriumResult equilibrium_shared(const Scenario& s, double c1) {
    if (c1 < 0.0) throw std::invalid_argument("equilibrium_shared: price must be >= 0");
    const double p_closed = closed_form_shared(s, c1);
    const double p_bisect = bisect_phi(s, c1);
    if (std::fabs(p_closed - p_bisect) > kRouteAgreement)
        throw std::runtime_error("equilibrium_shared: closed form and bisection disagree ("
                                 + std::to_string(p_closed) + " vs "
                                 + std::to_string(p_bisect) + ") at c1=" + std::to_string(c1));
    const double p = p_closed;
    return EquilibriumResult{p, cutoff_shared(s, c1, p), s.delay().mean_delay(p),
                             EquilibriumMethod::ClosedForm, std::fabs(phi(s, c1, p))};
}

EquilibriumResult equilibrium_exclusive(const Scenario& s, double c2) {
    if (c2 < 0.0) throw std::invalid_argument("equilibrium_exclusive: price must be >= 0");
    const double cutoff = std::max(0.0, (s.reward_v() - c2) / s.x_mean());
    const double p = s.type_cdf(cutoff);
    return EquilibriumResult{p, cutoff, s.x_mean(), EquilibriumMethod::ClosedForm, 0.0};
}

double dynamics_join_fraction(const Scenario& s, double c1, double p) {
    const double v = s.reward_v();
    const double rho = s.lambda() * p * s.moments().m1;
    if (rho > 1.0) {
        // The naive predictor is the raw PK value, which is negative here:
        // U(theta) = (V - c1) + theta*|T| > 0 for theta above (c1-V)/|T|.
        const double t_raw = s.moments().m1
                           + s.lambda() * p * s.moments().m2 / (2.0 * (1.0 - rho));
        if (c1 <= v) return 1.0;
        return 1.0 - s.type_cdf((c1 - v) / std::fabs(t_raw));
    }
    return s.type_cdf(cutoff_shared(s, c1, p));
}

IterationTrace iterate_shared(const Scenario& s, double c1, double p0,
                              IterationMethod method, long max_iter) {
    if (!(p0 >= 0.0 && p0 <= 1.0))
        throw std::invalid_argument("iterate_shared: p0 must be in [0,1]");
    if (max_iter < 1) throw std::invalid_argument("iterate_shared: max_iter must be >= 1");
    const double a = method == IterationMethod::Static ? 1.0 : s.alpha();
    IterationTrace trace;
    trace.iterates.push_back(p0);
    double p = p0;
    for (long t = 0; t < max_iter; ++t) {
        const double next = (1.0 - a) * p + a * dynamics_join_fraction(s, c1, p);
        trace.iterates.push_back(next);
        trace.final_gap = std::fabs(next - p);
        trace.iterations_used = t + 1;
        p = next;
        if (trace.final_gap < kGapTol) break;
    }
    // Converged means settled at a stable point; absorption past the
    // stability threshold (the divergence mode of the naive dynamics) is a
    // non-convergence verdict even though the step gap vanishes.
    trace.converged = trace.final_gap < kGapTol && s.delay().stable_at(p);
    if (!trace.converged) {
        const std::size_t window = std::min<std::size_t>(20, trace.iterates.size());
        auto first = trace.iterates.end() - static_cast<long>(window);
        const auto [lo, hi] = std::minmax_element(first, trace.iterates.end());
        trace.last_window_amplitude = *hi - *lo;
    }
    return trace;
}

ConvergenceCondition convergence_condition_shared(const Scenario& s) {
    const double t1 = s.delay().mean_delay(1.0);
    const double d1 = s.delay().delay_derivative(1.0);
    const double lhs = t1 == kInf ? kInf : d1 / t1;
    const double bound = 1.0 / s.alpha();
    return {lhs < bound, lhs, bound};
}

}  // namespace specmarket
