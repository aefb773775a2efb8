#include <doctest.h>

#include <cmath>

#include "specmarket/duopoly.hpp"
#include "specmarket/pricing.hpp"

using namespace specmarket;

namespace {

Scenario exp_light() { return preset_scenario("exp", "light"); }

}  // namespace

TEST_CASE("p_eps cap") {
    CHECK(p_eps_cap(exp_light()) == doctest::Approx(0.74));
    // 1/(lambda E[Xe]) = 1.5 >= 1 + eps: cap is 1.
    const Scenario s = Scenario::make(1.0, 1.0, 1.0, 0.3, 0.01, DistSpec::exponential(2.0),
                                      DistSpec::exponential(1.5),
                                      DistSpec::exponential(0.5));
    CHECK(p_eps_cap(s) == 1.0);
}

TEST_CASE("indifference cutoff") {
    const Scenario s = exp_light();
    CHECK(indifference_cutoff(s, 0.5, 0.5, 0.2) == 0.0);
    CHECK(indifference_cutoff(s, 0.6, 0.5, 0.2) < 0.0);
    CHECK(indifference_cutoff(s, 0.5, 0.6, 0.2) ==
          doctest::Approx(0.1 / (s.delay().mean_delay(0.2) - 1.0)));
}

TEST_CASE("market classification and boundary conventions") {
    const Scenario s = exp_light();
    CHECK(classify_market(s, 0.6, 0.5) == MarketRegion::ExclusiveMonopoly);
    CHECK(classify_market(s, 0.5, 0.5) == MarketRegion::ExclusiveMonopoly);  // boundary
    const double u = coexistence_upper_price(s, 0.3);
    CHECK(classify_market(s, 0.3, u) == MarketRegion::SharedMonopoly);  // boundary
    CHECK(classify_market(s, 0.3, 0.5) == MarketRegion::Coexistence);
    CHECK_THROWS_AS(classify_market(s, -0.1, 0.5), std::invalid_argument);
}

TEST_CASE("stage II equilibrium cases") {
    const Scenario s = exp_light();

    SUBCASE("exclusive monopoly when c1 > c2") {
        const DuopolyEquilibrium eq = stage2_equilibrium(s, 0.6, 0.5);
        CHECK(eq.region == MarketRegion::ExclusiveMonopoly);
        CHECK(eq.p1 == 0.0);
        CHECK(eq.p2 == doctest::Approx(0.5));
    }
    SUBCASE("equal prices: the slower operator is empty") {
        const DuopolyEquilibrium eq = stage2_equilibrium(s, 0.5, 0.5);
        CHECK(eq.p1 == 0.0);
        CHECK(eq.p2 == doctest::Approx(0.5));
    }
    SUBCASE("coexistence at the Stage I prices") {
        const StageOneOutcome out = stage1_equilibrium(s);
        const DuopolyEquilibrium eq = stage2_equilibrium(s, out.c1_star, out.c2_star);
        CHECK(eq.region == MarketRegion::Coexistence);
        CHECK(eq.p1 == doctest::Approx(out.p1_circ).epsilon(1e-8));
        CHECK(eq.p2 == doctest::Approx(out.p2_circ).epsilon(1e-8));
        CHECK(eq.cutoff_bar > 0.0);
        CHECK(eq.cutoff_bar < eq.cutoff_two);
        CHECK(s.type_cdf(eq.cutoff_bar) == doctest::Approx(eq.p1).epsilon(1e-9));
    }
    SUBCASE("near the upper bound the realized case is the shared monopoly") {
        const double c1 = revenue_optimal_shared(s).optimal_price;
        const double c2 = 0.99 * coexistence_upper_price(s, c1);
        CHECK(classify_market(s, c1, c2) == MarketRegion::Coexistence);
        const DuopolyEquilibrium eq = stage2_equilibrium(s, c1, c2);
        CHECK(eq.region == MarketRegion::SharedMonopoly);
        CHECK(eq.p2 == 0.0);
        CHECK(eq.p1 == doctest::Approx(equilibrium_shared(s, c1).p_star).epsilon(1e-9));
    }
}

TEST_CASE("stage II iteration") {
    const Scenario s = exp_light();
    const StageOneOutcome out = stage1_equilibrium(s);

    SUBCASE("from the equilibrium: one step") {
        const DuopolyTrace t = stage2_iterate(s, out.c1_star, out.c2_star,
                                              {out.p1_circ, out.p2_circ},
                                              IterationMethod::Adaptive, 1000);
        CHECK(t.converged);
        CHECK(t.iterations_used <= 1);
    }
    SUBCASE("from (0,0) to the Stage I equilibrium") {
        const DuopolyTrace t = stage2_iterate(s, out.c1_star, out.c2_star, {0.0, 0.0},
                                              IterationMethod::Adaptive, 100000);
        CHECK(t.converged);
        CHECK(t.iterates.back()[0] == doctest::Approx(out.p1_circ).epsilon(1e-6));
        CHECK(t.iterates.back()[1] == doctest::Approx(out.p2_circ).epsilon(1e-6));
    }
    SUBCASE("lower-bound degeneration (c1 = 0.99 c2, c2 = 0.5)") {
        const DuopolyTrace t =
            stage2_iterate(s, 0.495, 0.5, {0.0, 0.0}, IterationMethod::Adaptive, 100000);
        CHECK(t.converged);
        CHECK(t.iterates.back()[0] == doctest::Approx(0.0138307064762).epsilon(1e-5));
        CHECK(t.iterates.back()[1] == doctest::Approx(0.486169293524).epsilon(1e-5));
    }
    SUBCASE("static method also settles at the same point") {
        const DuopolyTrace t = stage2_iterate(s, out.c1_star, out.c2_star, {0.0, 0.0},
                                              IterationMethod::Static, 100000);
        CHECK(t.converged);
        CHECK(t.iterates.back()[0] == doctest::Approx(out.p1_circ).epsilon(1e-6));
    }
}

TEST_CASE("duopoly convergence condition is more stringent") {
    const DuopolyConvergenceCondition c = convergence_condition_duopoly(exp_light());
    CHECK(c.lhs == kInf);  // unstable at p = 1
    CHECK_FALSE(c.satisfied);

    const Scenario s2 = Scenario::make(1.0, 1.0, 1.0, 0.3, 0.01, DistSpec::exponential(2.0),
                                       DistSpec::exponential(1.5),
                                       DistSpec::exponential(0.5));
    const DuopolyConvergenceCondition c2 = convergence_condition_duopoly(s2);
    CHECK(c2.lhs == doctest::Approx(5.0 / (7.0 / 3.0 - 0.5)));  // 2.7272...
    CHECK(c2.lhs > c2.shared_lhs);
    CHECK(c2.satisfied);
}

TEST_CASE("best responses") {
    const Scenario s = exp_light();
    CHECK(best_response_shared(s, 0.5) == doctest::Approx(0.25));
    CHECK(br2_formula(1.0, 1.5, 1.5, 0.4) == doctest::Approx(0.2));  // T = E[X] limit: c1/2

    const StageOneOutcome out = stage1_equilibrium(s);
    // Fixed point of the best-response maps at the Stage I solution.
    const double c2 = best_response_exclusive(s, out.c1_star);
    CHECK(c2 == doctest::Approx(out.c2_star).epsilon(1e-7));
    CHECK(best_response_shared(s, c2) == doctest::Approx(out.c1_star).epsilon(1e-7));
}

TEST_CASE("stage I equilibrium: frozen values") {
    struct Gold {
        const char* combo;
        double p1, c1, p2;
    };
    const Gold gold[] = {{"exp", 0.165702953422, 0.125722784933, 0.0},
                         {"erl", 0.0880074906351, 0.117988764047, 0.0},
                         {"uniexp", 0.178571428571, 0.116071428571, 0.0},
                         {"erlexp", 0.131449466033, 0.118550533967, 0.0},
                         {"experl", 0.110981451752, 0.125145866779, 0.0}};
    for (const Gold& g : gold) {
        const Scenario s = preset_scenario(g.combo, "light");
        const StageOneOutcome out = stage1_equilibrium(s);
        CHECK(out.p1_circ == doctest::Approx(g.p1).epsilon(1e-8));
        CHECK(out.c1_star == doctest::Approx(g.c1).epsilon(1e-8));
        CHECK(out.c2_star == 2.0 * out.c1_star);
        CHECK(out.upper_bound_ok);
        // The fixed point property p = V/(theta_max (4 E[T(p)] - E[X])).
        const double t = s.delay().mean_delay(out.p1_circ);
        CHECK(out.p1_circ ==
              doctest::Approx(1.0 / (4.0 * t - s.x_mean())).epsilon(1e-8));
    }
}

TEST_CASE("no profitable unilateral price deviation (reduced-form payoffs)") {
    // The Stage I payoffs hold the congestion delay fixed at its equilibrium
    // value; against those payoffs the closed-form point is deviation-proof.
    for (const auto& combo : preset_combo_names()) {
        const Scenario s = preset_scenario(combo, "light");
        const StageOneOutcome out = stage1_equilibrium(s);
        const double t = s.delay().mean_delay(out.p1_circ);
        const double denom = s.theta_max() * (t - s.x_mean());
        const auto r1 = [&](double c1) { return c1 * (out.c2_star - c1) / denom; };
        const auto r2 = [&](double c2) {
            return c2 * ((s.reward_v() - c2) / (s.theta_max() * s.x_mean()) -
                         (c2 - out.c1_star) / denom);
        };
        const double r1_star = r1(out.c1_star), r2_star = r2(out.c2_star);
        for (int i = 0; i <= 100; ++i) {
            CHECK(r1(out.c2_star * i / 100.0) <= r1_star + 1e-12);
            CHECK(r2(s.reward_v() * i / 100.0) <= r2_star + 1e-12);
        }
    }
}

TEST_CASE("stage II invariants over random price pairs") {
    // Hand-rolled generator: price pairs across the whole classification
    // space, every combo. Checks the fixed-point residual, the region
    // consistency of the realized case, the probability bounds and the
    // monotonicity of Omega.
    Rng rng(2024);
    for (const auto& combo : preset_combo_names()) {
        const Scenario s = preset_scenario(combo, "light");
        const double cap = p_eps_cap(s);
        for (int trial = 0; trial < 120; ++trial) {
            const double c1 = rng.uniform01();
            const double c2 = rng.uniform01() * 1.2;
            const DuopolyEquilibrium eq = stage2_equilibrium(s, c1, c2);
            CHECK(eq.p1 >= 0.0);
            CHECK(eq.p2 >= 0.0);
            CHECK(eq.p1 + eq.p2 <= 1.0 + 1e-12);
            CHECK(eq.p1 <= cap + 1e-12);
            switch (eq.region) {
                case MarketRegion::ExclusiveMonopoly:
                    CHECK(eq.p1 == 0.0);
                    CHECK(eq.p2 == doctest::Approx(s.type_cdf(eq.cutoff_two)));
                    break;
                case MarketRegion::Coexistence: {
                    CHECK(eq.cutoff_bar > 0.0);
                    CHECK(eq.cutoff_bar < eq.cutoff_two);
                    CHECK(eq.p2 == doctest::Approx(s.type_cdf(eq.cutoff_two) -
                                                   s.type_cdf(eq.cutoff_bar)));
                    // Fixed-point residual of Omega at the root (away from
                    // the p_eps cap, where the root is interior).
                    if (eq.p1 < cap - 1e-9)
                        CHECK(std::fabs(s.type_cdf(eq.cutoff_bar) - eq.p1) <= 1e-8);
                    break;
                }
                default:
                    CHECK(eq.p2 == 0.0);
                    CHECK(eq.p1 ==
                          doctest::Approx(equilibrium_shared(s, c1).p_star).epsilon(1e-9));
            }
            // Omega strictly decreases on [0, cap] for coexistence pairs.
            if (classify_market(s, c1, c2) == MarketRegion::Coexistence) {
                double prev = 2.0;
                for (int i = 0; i <= 10; ++i) {
                    const double p = cap * i / 10.0;
                    const double omega =
                        s.type_cdf(indifference_cutoff(s, c1, c2, p)) - p;
                    CHECK(omega < prev);
                    prev = omega;
                }
            }
        }
    }
}

TEST_CASE("omega is strictly decreasing on the coexistence band") {
    const Scenario s = exp_light();
    const StageOneOutcome out = stage1_equilibrium(s);
    const double cap = p_eps_cap(s);
    double prev = 2.0;
    for (int i = 0; i <= 40; ++i) {
        const double p = cap * i / 40.0;
        const double omega =
            s.type_cdf(indifference_cutoff(s, out.c1_star, out.c2_star, p)) - p;
        CHECK(omega < prev);
        prev = omega;
    }
}

TEST_CASE("duopoly nash property on a type grid") {
    const Scenario s = exp_light();
    const StageOneOutcome out = stage1_equilibrium(s);
    const DuopolyEquilibrium eq = stage2_equilibrium(s, out.c1_star, out.c2_star);
    for (int i = 0; i <= 40; ++i) {
        const double theta = s.theta_max() * i / 40.0;
        const double u1 = s.reward_v() - theta * eq.delay_at_p1 - out.c1_star;
        const double u2 = s.reward_v() - theta * s.x_mean() - out.c2_star;
        double prescribed;
        if (theta < eq.cutoff_bar) prescribed = u1;
        else if (theta < eq.cutoff_two) prescribed = u2;
        else prescribed = 0.0;
        CHECK(prescribed >= std::max({u1, u2, 0.0}) - 1e-9);
    }
}
