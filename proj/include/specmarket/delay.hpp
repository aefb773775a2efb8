#pragma once

#include <limits>

#include "specmarket/effective_service.hpp"

namespace specmarket {

/// Extended-value arithmetic: the mean delay of the interrupted M/G/1 queue
/// is +infinity at and beyond the stability threshold; +inf is the genuine
/// IEEE infinity, never a large sentinel.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Mean waiting / mean sojourn of the virtual M/G/1 queue with effective
/// service moments (m1, m2) and potential arrival rate lambda; the load at
/// joining probability p is lambda*p.
class DelayModel {
public:
    DelayModel(double lambda, ServiceMoments moments, double x_mean);

    /// Pollaczek-Khinchin mean waiting time; +inf when lambda*p*m1 >= 1.
    double mean_waiting(double p) const;

    /// Waiting plus service, extended-valued.
    double mean_delay(double p) const;

    /// Closed-form d/dp of mean_delay: lambda*m2 / (2 (1 - lambda*p*m1)^2);
    /// +inf beyond stability.
    double delay_derivative(double p) const;

    /// The p at which lambda*p = 1/m1 (may exceed 1).
    double stability_threshold() const { return 1.0 / (lambda_ * moments_.m1); }

    bool stable_at(double p) const { return lambda_ * p * moments_.m1 < 1.0; }

    double lambda() const { return lambda_; }
    double x_mean() const { return x_mean_; }
    const ServiceMoments& moments() const { return moments_; }

private:
    double lambda_;
    ServiceMoments moments_;
    double x_mean_;
};

}  // namespace specmarket
