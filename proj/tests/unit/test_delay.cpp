#include <doctest.h>

#include <cmath>

#include "specmarket/delay.hpp"

using namespace specmarket;

namespace {

DelayModel exp_light() {
    return DelayModel(1.0, ServiceMoments(4.0 / 3.0, 4.0), 1.0);
}

DelayModel exp_mu2() {
    // Exp setting with mu_X = 2: m1 = 2/3, m2 = 10/9.
    return DelayModel(1.0, ServiceMoments(2.0 / 3.0, 10.0 / 9.0), 0.5);
}

}  // namespace

TEST_CASE("mean waiting") {
    const DelayModel m = exp_light();
    CHECK(m.mean_waiting(0.0) == 0.0);
    CHECK(m.mean_waiting(0.2) == doctest::Approx(6.0 / 11.0));
    CHECK(m.mean_waiting(0.8) == kInf);  // lambda p m1 > 1
}

TEST_CASE("mean delay") {
    const DelayModel m = exp_light();
    CHECK(m.mean_delay(0.0) == doctest::Approx(4.0 / 3.0));
    CHECK(m.mean_delay(0.2) == doctest::Approx(62.0 / 33.0));  // 1.87878...
    CHECK(m.mean_delay(0.75) == kInf);                         // boundary is unstable

    const DelayModel m2 = exp_mu2();
    CHECK(m2.mean_delay(1.0) == doctest::Approx(7.0 / 3.0));
}

TEST_CASE("delay derivative") {
    const DelayModel m = exp_light();
    CHECK(m.delay_derivative(0.0) == doctest::Approx(2.0));
    CHECK(m.delay_derivative(0.9) == kInf);

    const DelayModel m2 = exp_mu2();
    CHECK(m2.delay_derivative(1.0) == doctest::Approx(5.0));

    // Central finite differences of mean_delay, relative 1e-6, below p_stab.
    for (const DelayModel& model : {exp_light(), exp_mu2()}) {
        const double h = 1e-6;
        for (int i = 1; i <= 18; ++i) {
            const double p = 0.9 * std::min(1.0, model.stability_threshold()) * i / 20.0;
            const double fd = (model.mean_delay(p + h) - model.mean_delay(p - h)) / (2 * h);
            CHECK(std::fabs(fd - model.delay_derivative(p)) / model.delay_derivative(p) <=
                  1e-6);
        }
    }
}

TEST_CASE("stability threshold") {
    CHECK(exp_light().stability_threshold() == doctest::Approx(0.75));
    CHECK(exp_mu2().stability_threshold() == doctest::Approx(1.5));
    CHECK(DelayModel(2.0, ServiceMoments(1.0, 1.5), 0.5).stability_threshold() ==
          doctest::Approx(0.5));
}

TEST_CASE("strict monotonicity below the threshold") {
    const DelayModel m = exp_light();
    double prev = -1.0;
    for (int i = 0; i <= 40; ++i) {
        const double p = 0.7499 * i / 40.0;
        const double t = m.mean_delay(p);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(DelayModel(0.0, ServiceMoments(1.0, 2.0), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ServiceMoments(1.0, 0.5), std::invalid_argument);  // Jensen
    CHECK_THROWS_AS(ServiceMoments(-1.0, 2.0), std::invalid_argument);
}
