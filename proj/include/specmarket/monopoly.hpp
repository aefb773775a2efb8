#pragma once

#include <vector>

#include "specmarket/scenario.hpp"

namespace specmarket {

enum class EquilibriumMethod { ClosedForm, Bisection };

struct EquilibriumResult {
    double p_star;
    double cutoff_theta;   // theta_1(p*) (may exceed theta_max when p*=1)
    double delay_at_eq;    // E[T(p*)], extended value
    EquilibriumMethod method;
    double residual;       // |F(theta_1(p*)) - p*|
};

enum class IterationMethod { Static, Adaptive };

struct IterationTrace {
    std::vector<double> iterates;    // includes p0
    bool converged = false;          // gap < 1e-9 AND final point stable
    double final_gap = 0.0;
    long iterations_used = 0;
    double last_window_amplitude = 0.0;  // max-min of trailing iterates when not converged
};

/// theta_1(p) = (V - c1)/E[T(p)]; 0 when c1 >= V or the delay is infinite.
double cutoff_shared(const Scenario& s, double c1, double p);

/// Unique Nash equilibrium of p = F(theta_1(p)) for the shared-use monopoly.
/// Solved by bisection on Phi(p) = F(theta_1(p)) - p and by the uniform-F
/// closed form; the two routes must agree within 1e-6.
EquilibriumResult equilibrium_shared(const Scenario& s, double c1);

/// The two routes of equilibrium_shared, exposed for consistency checks.
double equilibrium_shared_closed_form(const Scenario& s, double c1);
double equilibrium_shared_bisection(const Scenario& s, double c1);

/// Exclusive-use monopoly: theta_2* = (V - c2)/E[X], p_2* = F(theta_2*);
/// delay is load-independent so no fixed point is involved.
EquilibriumResult equilibrium_exclusive(const Scenario& s, double c2);

/// Joining map of the period dynamics: the mass of types with positive
/// predicted utility, where the predictor is the raw Pollaczek-Khinchin value
/// of the previous period (negative past the stability threshold, so every
/// type predicts positive utility there).
double dynamics_join_fraction(const Scenario& s, double c1, double p);

/// Static (p <- q(p)) or adaptive (p <- (1-a)p + a q(p)) expectations.
IterationTrace iterate_shared(const Scenario& s, double c1, double p0,
                              IterationMethod method, long max_iter = 100000);

struct ConvergenceCondition {
    bool satisfied;
    double lhs;      // extended value
    double bound;    // 1/alpha
};

/// Contraction-based sufficient condition E[T(1)]'/E[T(1)] < 1/alpha.
ConvergenceCondition convergence_condition_shared(const Scenario& s);

}  // namespace specmarket
