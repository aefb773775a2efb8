#include "specmarket/delay.hpp"

#include <stdexcept>

namespace specmarket {

DelayModel::DelayModel(double lambda, ServiceMoments moments, double x_mean)
    : lambda_(lambda), moments_(moments), x_mean_(x_mean) {
    if (!(lambda > 0.0)) throw std::invalid_argument("DelayModel: lambda must be > 0");
    if (!(x_mean > 0.0)) throw std::invalid_argument("DelayModel: x_mean must be > 0");
}

double DelayModel::mean_waiting(double p) const {
    const double rho = lambda_ * p * moments_.m1;
    if (rho >= 1.0) return kInf;
    return lambda_ * p * moments_.m2 / (2.0 * (1.0 - rho));
}

double DelayModel::mean_delay(double p) const {
    const double w = mean_waiting(p);
    return w == kInf ? kInf : w + moments_.m1;
}

double DelayModel::delay_derivative(double p) const {
    const double rho = lambda_ * p * moments_.m1;
    if (rho >= 1.0) return kInf;
    const double s = 1.0 - rho;
    return lambda_ * moments_.m2 / (2.0 * s * s);
}

}  // namespace specmarket
