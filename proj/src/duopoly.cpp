#include "specmarket/duopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace specmarket {

namespace {

constexpr double kBisectTol = 1e-12;
constexpr double kGapTol = 1e-9;
constexpr double kRouteAgreement = 1e-6;

double theta_two(const Scenario& s, double c2) {
    return std::max(0.0, (s.reward_v() - c2) / s.x_mean());
}

// Root of Omega(p) = F(theta_bar(p)) - p on [0, cap]; Omega is strictly
// decreasing. Returns cap when Omega is still positive there.
double omega_root(const Scenario& s, double c1, double c2, double cap) {
    const auto omega = [&](double p) {
        return s.type_cdf(indifference_cutoff(s, c1, c2, p)) - p;
    };
    if (omega(0.0) <= 0.0) return 0.0;
    if (omega(cap) >= 0.0) return cap;
    double lo = 0.0, hi = cap;
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        (omega(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double p_eps_cap(const Scenario& s) {
    const double p_stab = 1.0 / (s.lambda() * s.moments().m1);
    if (p_stab >= 1.0 + s.epsilon()) return 1.0;
    return p_stab - s.epsilon();
}

double indifference_cutoff(const Scenario& s, double c1, double c2, double p1) {
    const double t = s.delay().mean_delay(p1);
    if (t == kInf) return 0.0;
    return (c2 - c1) / (t - s.x_mean());
}

double coexistence_upper_price(const Scenario& s, double c1) {
    const double te = s.delay().mean_delay(p_eps_cap(s));
    return (s.reward_v() * (te - s.x_mean()) + s.x_mean() * c1) / te;
}

MarketRegion classify_market(const Scenario& s, double c1, double c2) {
    if (c1 < 0.0 || c2 < 0.0)
        throw std::invalid_argument("classify_market: prices must be >= 0");
    if (c2 <= c1) return MarketRegion::ExclusiveMonopoly;
    if (c2 >= coexistence_upper_price(s, c1)) return MarketRegion::SharedMonopoly;
    return MarketRegion::Coexistence;
}

DuopolyEquilibrium stage2_equilibrium(const Scenario& s, double c1, double c2) {
    if (c1 < 0.0 || c2 < 0.0)
        throw std::invalid_argument("stage2_equilibrium: prices must be >= 0");
    const double th2 = theta_two(s, c2);

    if (c2 <= c1) {
        // theta_bar <= 0: the shared operator is priced out.
        const double p2 = s.type_cdf(th2);
        return {0.0, p2, indifference_cutoff(s, c1, c2, 0.0), th2,
                MarketRegion::ExclusiveMonopoly, s.delay().mean_delay(0.0)};
    }

    // Coexistence candidate: unique root of Omega on [0, p_eps].
    const double cap = p_eps_cap(s);
    const double p1 = omega_root(s, c1, c2, cap);
    const double thbar = indifference_cutoff(s, c1, c2, p1);
    if (thbar > 0.0 && thbar < th2) {
        const double p2 = s.type_cdf(th2) - s.type_cdf(thbar);
        return {p1, p2, thbar, th2, MarketRegion::Coexistence, s.delay().mean_delay(p1)};
    }

    // theta_bar(p1*) >= theta_2*: the exclusive operator attracts nobody and
    // the shared monopoly equilibrium prevails.
    const EquilibriumResult mono = equilibrium_shared(s, c1);
    return {mono.p_star, 0.0, indifference_cutoff(s, c1, c2, mono.p_star), th2,
            MarketRegion::SharedMonopoly, mono.delay_at_eq};
}

DuopolyTrace stage2_iterate(const Scenario& s, double c1, double c2,
                            std::array<double, 2> p0, IterationMethod method,
                            long max_iter) {
    if (!(p0[0] >= 0.0 && p0[0] <= 1.0 && p0[1] >= 0.0 && p0[1] <= 1.0))
        throw std::invalid_argument("stage2_iterate: p0 must lie in [0,1]^2");
    if (max_iter < 1) throw std::invalid_argument("stage2_iterate: max_iter must be >= 1");
    const double a = method == IterationMethod::Static ? 1.0 : s.alpha();
    const double cap = p_eps_cap(s);
    const double th2 = theta_two(s, c2);

    DuopolyTrace trace;
    std::array<double, 2> p = {std::min(p0[0], cap), p0[1]};
    trace.iterates.push_back(p);
    for (long t = 0; t < max_iter; ++t) {
        const double thbar = indifference_cutoff(s, c1, c2, p[0]);
        std::array<double, 2> q;
        if (thbar < 0.0) {
            q = {0.0, s.type_cdf(th2)};
        } else if (thbar < th2) {
            q = {s.type_cdf(thbar), s.type_cdf(th2) - s.type_cdf(thbar)};
        } else {
            q = {s.type_cdf(cutoff_shared(s, c1, p[0])), 0.0};
        }
        std::array<double, 2> next = {(1.0 - a) * p[0] + a * q[0],
                                      (1.0 - a) * p[1] + a * q[1]};
        next[0] = std::min(next[0], cap);
        trace.final_gap = std::max(std::fabs(next[0] - p[0]), std::fabs(next[1] - p[1]));
        trace.iterates.push_back(next);
        trace.iterations_used = t + 1;
        p = next;
        if (trace.final_gap < kGapTol) break;
    }
    trace.converged = trace.final_gap < kGapTol;
    return trace;
}

DuopolyConvergenceCondition convergence_condition_duopoly(const Scenario& s) {
    const double t1 = s.delay().mean_delay(1.0);
    const double d1 = s.delay().delay_derivative(1.0);
    const double lhs = t1 == kInf ? kInf : d1 / (t1 - s.x_mean());
    const double shared = t1 == kInf ? kInf : d1 / t1;
    const double bound = 1.0 / s.alpha();
    return {lhs < bound, lhs, bound, shared};
}

double best_response_shared(const Scenario&, double c2) { return 0.5 * c2; }

double best_response_exclusive(const Scenario& s, double c1) {
    // c2 = br2_formula(V, E[T(p1*(c1,c2))], E[X], c1) with the Stage II
    // equilibrium p1* consistent with (c1, c2): damped fixed-point iteration.
    double c2 = 0.5 * (s.reward_v() + c1);
    for (int i = 0; i < 500; ++i) {
        const DuopolyEquilibrium eq = stage2_equilibrium(s, c1, c2);
        const double next = br2_formula(s.reward_v(), eq.delay_at_p1, s.x_mean(), c1);
        const double gap = std::fabs(next - c2);
        c2 = 0.5 * (c2 + next);
        if (gap < 1e-12) break;
    }
    return c2;
}

StageOneOutcome stage1_equilibrium(const Scenario& s) {
    const double v = s.reward_v(), th = s.theta_max(), lam = s.lambda();
    const double m1 = s.moments().m1, m2 = s.moments().m2, xm = s.x_mean();

    // Closed form: positive root of
    //   lam th (2 m2 - m1 (4 m1 - E[X])) p^2 + (th (4 m1 - E[X]) + lam V m1) p - V = 0,
    // the quadratic induced by p = V/(th (4 E[T(p)] - E[X])). Written in the
    // rationalized form it degrades gracefully for either sign of the leading
    // coefficient and reduces to the all-Xe expression when E[X] = E[Xe].
    const double quad_a = lam * th * (2.0 * m2 - m1 * (4.0 * m1 - xm));
    const double quad_b = th * (4.0 * m1 - xm) + lam * v * m1;
    const double delta = quad_b * quad_b + 4.0 * quad_a * v;
    const double p_closed = 2.0 * v / (quad_b + std::sqrt(delta));

    // Oracle: damped fixed-point iteration (gain 0.5), bisection fallback on
    // the increasing map p th (4 E[T(p)] - E[X]) - V.
    const auto target = [&](double p) {
        const double t = s.delay().mean_delay(p);
        return v / (th * (4.0 * t - xm));
    };
    double p_fix = 0.1;
    bool fixed_ok = false;
    for (int i = 0; i < 10000; ++i) {
        const double next = 0.5 * p_fix + 0.5 * target(p_fix);
        if (std::fabs(next - p_fix) < 1e-13) {
            p_fix = next;
            fixed_ok = true;
            break;
        }
        p_fix = next;
    }
    if (!fixed_ok) {
        double lo = 0.0, hi = p_eps_cap(s);
        const auto h = [&](double p) {
            const double t = s.delay().mean_delay(p);
            return t == kInf ? kInf : p * th * (4.0 * t - xm) - v;
        };
        while (hi - lo > kBisectTol) {
            const double mid = 0.5 * (lo + hi);
            (h(mid) < 0.0 ? lo : hi) = mid;
        }
        p_fix = 0.5 * (lo + hi);
    }
    if (std::fabs(p_closed - p_fix) > kRouteAgreement)
        throw std::runtime_error("stage1_equilibrium: closed form and fixed-point oracle "
                                 "disagree (" + std::to_string(p_closed) + " vs "
                                 + std::to_string(p_fix) + ")");

    const double p1 = p_closed;
    const double t1 = s.delay().mean_delay(p1);
    const double c1 = v * (t1 - xm) / (4.0 * t1 - xm);
    const double c2 = 2.0 * c1;
    const double p2 = s.type_cdf(theta_two(s, c2))
                    - s.type_cdf(indifference_cutoff(s, c1, c2, p1));
    const bool ok = c2 < coexistence_upper_price(s, c1);
    return {c1, c2, p1, p2, delta, ok};
}

std::string to_string(MarketRegion r) {
    switch (r) {
        case MarketRegion::ExclusiveMonopoly: return "exclusive-monopoly";
        case MarketRegion::Coexistence:       return "coexistence";
        default:                              return "shared-monopoly";
    }
}

}  // namespace specmarket
