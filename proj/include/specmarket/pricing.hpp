#pragma once

#include <optional>
#include <vector>

#include "specmarket/monopoly.hpp"

namespace specmarket {

struct CurvePoint {
    double x;      // price (or cut-off for the social change of variable)
    double value;  // revenue or welfare
};

struct PricingResult {
    double optimal_price;
    double optimal_value;
    double argmax_aux;  // equilibrium p* (revenue) or cut-off theta~* (social)
    std::vector<CurvePoint> curve;  // optional sampled curve
};

/// Unimodal maximization: coarse bracketing scan, then golden section.
/// The scan defends against the concavity claim failing at the stability
/// kink, where the objective drops to its limiting value.
struct ScalarMax {
    double x;
    double value;
};
ScalarMax maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                          double tol = 1e-8, int coarse = 256);

/// R1(c1) = c1 * p1*(c1).
double revenue_shared(const Scenario& s, double c1);

/// Network social welfare at price c1 (via the equilibrium cut-off).
double welfare_shared(const Scenario& s, double c1);

/// S1(theta~) = V theta~/theta_max - theta~^2/(2 theta_max) E[T(theta~/theta_max)];
/// -inf past the stability kink.
double welfare_shared_cutoff(const Scenario& s, double theta_tilde);

PricingResult revenue_optimal_shared(const Scenario& s, int curve_points = 0);
PricingResult social_optimal_shared(const Scenario& s, int curve_points = 0);

/// R2(c2) = c2 * p2*(c2); optimum V/2 when V <= theta_max E[X], else found by
/// the clamp-aware search.
double revenue_exclusive(const Scenario& s, double c2);
double welfare_exclusive(const Scenario& s, double c2);
PricingResult revenue_optimal_exclusive(const Scenario& s, int curve_points = 0);
PricingResult social_optimal_exclusive(const Scenario& s, int curve_points = 0);

/// Feasible price interval [c_lo, c_up] of the revenue problem:
/// c_lo = max{0, V - theta_max E[T(1)]} (0 when E[T(1)] = +inf), c_up = V.
std::pair<double, double> shared_price_interval(const Scenario& s);

}  // namespace specmarket
