#include "specmarket/scenario.hpp"

#include <stdexcept>

namespace specmarket {

Scenario Scenario::make(double lambda, double v, double theta_max, double alpha,
                        double epsilon, DistSpec x, DistSpec y, DistSpec z,
                        SimSettings sim) {
    if (!(lambda > 0.0)) throw std::invalid_argument("Scenario: lambda must be > 0");
    if (!(v > 0.0)) throw std::invalid_argument("Scenario: v must be > 0");
    if (!(theta_max > 0.0)) throw std::invalid_argument("Scenario: theta_max must be > 0");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw std::invalid_argument("Scenario: alpha must be in (0,1]");
    ServiceMoments mom = effective_moments(x, y, z);
    if (!(epsilon > 0.0 && epsilon < 1.0 / (lambda * mom.m1)))
        throw std::invalid_argument("Scenario: epsilon must be in (0, 1/(lambda E[Xe]))");
    DelayModel delay(lambda, mom, x.mean());
    return Scenario(lambda, v, theta_max, alpha, epsilon, x, y, z, sim, delay);
}

SimConfig Scenario::sim_config(double p) const {
    return SimConfig{lambda_ * p, x_,      y_,        z_,
                     sim_.n_jobs, sim_.warmup_fraction, sim_.seed, sim_.batches};
}

Scenario preset_scenario(const std::string& combo, const std::string& traffic) {
    double nu_on, nu_off;
    if (traffic == "light") {
        nu_on = 1.5;
        nu_off = 0.5;
    } else if (traffic == "heavy") {
        nu_on = 0.5;
        nu_off = 1.5;
    } else {
        throw std::invalid_argument("unknown traffic model '" + traffic +
                                    "' (expected light|heavy)");
    }

    DistSpec y = DistSpec::exponential(nu_on);
    DistSpec z = DistSpec::exponential(nu_off);
    DistSpec x = DistSpec::exponential(1.0);
    if (combo == "exp") {
        // defaults above
    } else if (combo == "erl") {
        x = DistSpec::erlang2(1.0);
        y = DistSpec::erlang2(nu_on);
        z = DistSpec::erlang2(nu_off);
    } else if (combo == "uniexp") {
        x = DistSpec::uniform(0.1, 1.9);
    } else if (combo == "erlexp") {
        x = DistSpec::erlang2(1.5);
    } else if (combo == "experl") {
        x = DistSpec::exponential(2.0 / 3.0);
        y = DistSpec::erlang2(nu_on);
        z = DistSpec::erlang2(nu_off);
    } else {
        throw std::invalid_argument("unknown combo '" + combo +
                                    "' (expected exp|erl|uniexp|erlexp|experl)");
    }
    return Scenario::make(1.0, 1.0, 1.0, 0.3, 0.01, x, y, z);
}

Scenario preset_scenario(const std::string& name) {
    const auto dash = name.find('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("preset name must be <combo>-<traffic>, e.g. exp-light");
    return preset_scenario(name.substr(0, dash), name.substr(dash + 1));
}

std::vector<std::string> preset_combo_names() {
    return {"exp", "erl", "uniexp", "erlexp", "experl"};
}

}  // namespace specmarket
