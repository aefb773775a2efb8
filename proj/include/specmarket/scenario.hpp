#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specmarket/delay.hpp"
#include "specmarket/queue_sim.hpp"

namespace specmarket {

struct SimSettings {
    long n_jobs = 500000;
    double warmup_fraction = 0.1;
    std::uint64_t seed = 20260810;
    int batches = 20;
};

/// Full market instance: arrival rate, reward, type bound, the three
/// distribution models, iteration gain and the duopoly guard epsilon.
/// Types theta are Uniform[0, theta_max].
class Scenario {
public:
    static Scenario make(double lambda, double v, double theta_max, double alpha,
                         double epsilon, DistSpec x, DistSpec y, DistSpec z,
                         SimSettings sim = {});

    double lambda() const { return lambda_; }
    double reward_v() const { return v_; }
    double theta_max() const { return theta_max_; }
    double alpha() const { return alpha_; }
    double epsilon() const { return epsilon_; }
    const DistSpec& x() const { return x_; }
    const DistSpec& y() const { return y_; }
    const DistSpec& z() const { return z_; }
    const SimSettings& sim() const { return sim_; }
    const DelayModel& delay() const { return delay_; }
    const ServiceMoments& moments() const { return delay_.moments(); }
    double x_mean() const { return delay_.x_mean(); }

    /// F_Theta, clamped uniform CDF.
    double type_cdf(double theta) const {
        if (theta <= 0.0) return 0.0;
        if (theta >= theta_max_) return 1.0;
        return theta / theta_max_;
    }

    SimConfig sim_config(double p) const;

private:
    Scenario(double lambda, double v, double theta_max, double alpha, double epsilon,
             DistSpec x, DistSpec y, DistSpec z, SimSettings sim, DelayModel delay)
        : lambda_(lambda), v_(v), theta_max_(theta_max), alpha_(alpha),
          epsilon_(epsilon), x_(x), y_(y), z_(z), sim_(sim), delay_(delay) {}

    double lambda_, v_, theta_max_, alpha_, epsilon_;
    DistSpec x_, y_, z_;
    SimSettings sim_;
    DelayModel delay_;
};

/// Built-in parameterizations: combo in {exp, erl, uniexp, erlexp, experl},
/// traffic in {light, heavy} (nu_on/nu_off = 1.5/0.5 and 0.5/1.5).
Scenario preset_scenario(const std::string& combo, const std::string& traffic);

/// Preset lookup by the single name "<combo>-<traffic>"; empty optional-style
/// failure is reported by throwing std::invalid_argument.
Scenario preset_scenario(const std::string& name);

std::vector<std::string> preset_combo_names();

}  // namespace specmarket
