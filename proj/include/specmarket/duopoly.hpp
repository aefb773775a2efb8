#pragma once

#include <array>

#include "specmarket/monopoly.hpp"

namespace specmarket {

enum class MarketRegion { ExclusiveMonopoly, Coexistence, SharedMonopoly };

struct DuopolyEquilibrium {
    double p1;
    double p2;
    double cutoff_bar;   // indifference type theta_bar(p1*)
    double cutoff_two;   // theta_2* = (V - c2)/E[X]
    MarketRegion region; // the Def.-6 case realized at the equilibrium
    double delay_at_p1;  // E[T(p1*)]
};

struct StageOneOutcome {
    double c1_star;
    double c2_star;       // = 2 c1_star exactly
    double p1_circ;       // fixed point of p = V/(theta_max (4 E[T(p)] - E[X]))
    double p2_circ;
    double delta;         // discriminant of the closed-form root
    bool upper_bound_ok;  // c2* < u(c1*)
};

struct DuopolyTrace {
    std::vector<std::array<double, 2>> iterates;
    bool converged = false;
    double final_gap = 0.0;
    long iterations_used = 0;
};

/// p^eps = min{1, 1/(lambda E[Xe]) - eps}; 1 when 1/(lambda E[Xe]) >= 1 + eps.
double p_eps_cap(const Scenario& s);

/// theta_bar(p1) = (c2 - c1)/(E[T(p1)] - E[X]); negative iff c2 < c1;
/// 0 in the infinite-delay limit.
double indifference_cutoff(const Scenario& s, double c1, double c2, double p1);

/// u(c1) of the coexistence price band c1 < c2 < u(c1).
double coexistence_upper_price(const Scenario& s, double c1);

/// Pricing-space classification per the equilibrium summary table. Boundaries
/// c2 = c1 and c2 = u(c1) map to the adjacent monopoly regions. Near the
/// upper boundary the realized equilibrium can still be the shared-monopoly
/// case; stage2_equilibrium reports the case actually taken.
MarketRegion classify_market(const Scenario& s, double c1, double c2);

/// Stage II user equilibrium at prices (c1, c2), by case analysis of the
/// fixed-point definition (unique).
DuopolyEquilibrium stage2_equilibrium(const Scenario& s, double c1, double c2);

/// Adaptive/static expectations on the pair (p1, p2); p1 capped at p^eps.
DuopolyTrace stage2_iterate(const Scenario& s, double c1, double c2,
                            std::array<double, 2> p0, IterationMethod method,
                            long max_iter = 100000);

struct DuopolyConvergenceCondition {
    bool satisfied;
    double lhs;         // E[T(1)]'/(E[T(1)] - E[X]), extended
    double bound;       // 1/alpha
    double shared_lhs;  // the monopoly-condition left side, for the strictness relation
};

DuopolyConvergenceCondition convergence_condition_duopoly(const Scenario& s);

/// Best responses of the Stage I pricing game (delay evaluated at the
/// self-consistent Stage II equilibrium).
double best_response_shared(const Scenario& s, double c2);
double best_response_exclusive(const Scenario& s, double c1);

/// Reduced-form best response of the exclusive operator given a delay value.
inline double br2_formula(double v, double t_delay, double x_mean, double c1) {
    return (v * (t_delay - x_mean) + c1 * x_mean) / (2.0 * t_delay);
}

/// Stage I equilibrium (closed form cross-checked against the damped
/// fixed-point iteration of p = V/(theta_max (4 E[T(p)] - E[X]))).
StageOneOutcome stage1_equilibrium(const Scenario& s);

std::string to_string(MarketRegion r);

}  // namespace specmarket
