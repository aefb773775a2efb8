#pragma once

#include <optional>
#include <stdexcept>

#include "specmarket/distributions.hpp"

namespace specmarket {

/// First and second moments of the effective service time Xe (service
/// inflated by ON interruptions under preemptive resume).
struct ServiceMoments {
    double m1;  // E[Xe]
    double m2;  // E[Xe^2], >= m1^2

    ServiceMoments(double m1_, double m2_);
};

/// The five (X, Y, Z) family combinations with closed-form second moments.
enum class ComboKind { Exp, Erl, UniExp, ErlExp, ExpErl };

/// E[Xe] = E[X] (1 + E[Y]/E[Z]); valid for any distribution families.
double effective_first_moment(const DistSpec& x, const DistSpec& y, const DistSpec& z);

/// Closed-form E[Xe^2] per combo. Exp/Erlang families are parameterized by
/// rates (mu_x, nu_on, nu_off); UniExp by the service support [x_lo, x_up].
double second_moment_exp(double mu_x, double nu_on, double nu_off);
double second_moment_erl(double mu_x, double nu_on, double nu_off);
double second_moment_uniexp(double x_lo, double x_up, double nu_on, double nu_off);
double second_moment_erlexp(double mu_x, double nu_on, double nu_off);
double second_moment_experl(double mu_x, double nu_on, double nu_off);

/// Map (x, y, z) families onto a combo; nullopt when no closed form applies.
std::optional<ComboKind> classify_combo(const DistSpec& x, const DistSpec& y,
                                        const DistSpec& z);

double effective_second_moment(ComboKind combo, const DistSpec& x, const DistSpec& y,
                               const DistSpec& z);

/// Both moments for a supported combo; throws std::invalid_argument for
/// family combinations outside the five closed forms (use the simulator or
/// supply ServiceMoments directly in that case).
ServiceMoments effective_moments(const DistSpec& x, const DistSpec& y,
                                 const DistSpec& z);

std::string to_string(ComboKind k);

}  // namespace specmarket
