#include "specmarket/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "specmarket/tables.hpp"

namespace specmarket {

namespace {

const std::vector<std::string> kCombos = {"exp", "erl", "uniexp", "erlexp", "experl"};

// Reported optima of the five light-traffic settings (in combo order).
const double kGoldRevenuePrice = 0.58;
const double kGoldRevenue[] = {0.13, 0.07, 0.14, 0.10, 0.08};
const double kGoldJoinProb[] = {0.21, 0.11, 0.23, 0.17, 0.14};
const double kGoldSocialCutoff[] = {0.30, 0.16, 0.33, 0.25, 0.21};
const double kGoldWelfare[] = {0.19, 0.10, 0.21, 0.16, 0.13};
const double kGoldStage1C1[] = {0.13, 0.19, 0.11, 0.16, 0.18};

std::string fmt(double v) { return CsvTable::format_value(v); }

CheckResult check(const std::string& name, bool pass, const std::string& detail) {
    return {name, pass, detail};
}

CheckResult check_close(const std::string& name, double observed, double expected,
                        double tol) {
    const bool ok = std::fabs(observed - expected) <= tol;
    return {name, ok,
            "observed " + fmt(observed) + ", expected " + fmt(expected) + " +/- " + fmt(tol)};
}

void maybe_write(const std::optional<std::string>& dir, const std::string& name,
                 const CsvTable& table) {
    if (!dir) return;
    table.write_file(*dir + "/" + name);
}

Scenario light(const std::string& combo) { return preset_scenario(combo, "light"); }

Scenario exp_mu2_scenario() {
    // The Exp setting with mu_X = 2: the sufficient convergence condition holds.
    return Scenario::make(1.0, 1.0, 1.0, 0.3, 0.01, DistSpec::exponential(2.0),
                          DistSpec::exponential(1.5), DistSpec::exponential(0.5));
}

CriterionReport criterion1(const ValidateOptions& opts) {
    CriterionReport rep{1, "delay analysis vs simulation (5 combos x 2 traffic x 5 loads)", {}};
    const auto t_start = std::chrono::steady_clock::now();
    int run_index = 0;
    for (const auto& traffic : {std::string("light"), std::string("heavy")}) {
        for (const auto& combo : kCombos) {
            const Scenario s = preset_scenario(combo, traffic);
            CsvTable table({"p", "T_analytic", "T_sim", "ci_halfwidth", "saturated"});
            for (double p : {0.1, 0.2, 0.3, 0.4, 0.5}) {
                const std::string tag = combo + "-" + traffic + " p=" + fmt(p);
                const double t_an = s.delay().mean_delay(p);
                SimConfig cfg = s.sim_config(p);
                cfg.n_jobs = opts.sim_jobs;
                cfg.seed = opts.seed + static_cast<std::uint64_t>(run_index++);
                const SimEstimate est = simulate_shared_queue(cfg);
                table.add_row({p, t_an, est.mean_delay, est.ci_halfwidth,
                               est.saturated ? 1.0 : 0.0});
                if (t_an == kInf) {
                    rep.checks.push_back(check(
                        tag + " saturation flagged", est.saturated,
                        "analytic delay infinite; simulator saturated flag = " +
                            std::string(est.saturated ? "true" : "false")));
                    continue;
                }
                const double err = std::fabs(est.mean_delay - t_an);
                rep.checks.push_back(check(tag + " within 99% CI", err <= est.ci_halfwidth,
                                           "analytic " + fmt(t_an) + ", sim " +
                                               fmt(est.mean_delay) + " +/- " +
                                               fmt(est.ci_halfwidth)));
                if (p <= 0.4 + 1e-12) {
                    const double gap = err / t_an;
                    rep.checks.push_back(check(tag + " relative gap <= 3%", gap <= 0.03,
                                               "gap " + fmt(100.0 * gap) + "%"));
                }
            }
            maybe_write(opts.out_dir, "fig4_" + combo + "_" + traffic + ".csv", table);
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    rep.checks.push_back(
        check("total runtime <= 120 s", secs <= 120.0, fmt(secs) + " s"));
    return rep;
}

CriterionReport criterion2(const ValidateOptions& opts) {
    CriterionReport rep{2, "revenue-optimal pricing (five light settings)", {}};
    for (std::size_t i = 0; i < kCombos.size(); ++i) {
        const Scenario s = light(kCombos[i]);
        const PricingResult r = revenue_optimal_shared(s);
        rep.checks.push_back(check_close(kCombos[i] + " optimal price", r.optimal_price,
                                         kGoldRevenuePrice, 0.01));
        rep.checks.push_back(
            check_close(kCombos[i] + " optimal revenue", r.optimal_value, kGoldRevenue[i], 0.01));
        rep.checks.push_back(
            check_close(kCombos[i] + " p* at optimum", r.argmax_aux, kGoldJoinProb[i], 0.01));
        maybe_write(opts.out_dir, "fig5_" + kCombos[i] + ".csv", sweep_table_shared(s, 101));
    }
    return rep;
}

CriterionReport criterion3(const ValidateOptions& opts) {
    CriterionReport rep{3, "socially-optimal pricing (five light settings)", {}};
    for (std::size_t i = 0; i < kCombos.size(); ++i) {
        const Scenario s = light(kCombos[i]);
        const PricingResult r = social_optimal_shared(s, 101);
        rep.checks.push_back(check_close(kCombos[i] + " optimal cut-off", r.argmax_aux,
                                         kGoldSocialCutoff[i], 0.01));
        rep.checks.push_back(
            check_close(kCombos[i] + " optimal welfare", r.optimal_value, kGoldWelfare[i], 0.01));
        const EquilibriumResult eq = equilibrium_shared(s, r.optimal_price);
        rep.checks.push_back(check_close(kCombos[i] + " price recovery p*(c_S)", eq.p_star,
                                         r.argmax_aux / s.theta_max(), 1e-6));
        maybe_write(opts.out_dir, "fig6_" + kCombos[i] + ".csv", curve_table(r, "theta"));
    }
    return rep;
}

CriterionReport criterion4(const ValidateOptions&) {
    CriterionReport rep{4, "closed forms vs root finders", {}};
    for (const auto& combo : kCombos) {
        const Scenario s = light(combo);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double c = s.reward_v() * i / 99.0;
            worst = std::max(worst, std::fabs(equilibrium_shared_closed_form(s, c) -
                                              equilibrium_shared_bisection(s, c)));
        }
        rep.checks.push_back(check(combo + " monopoly closed form vs bisection (100 prices)",
                                   worst <= 1e-6, "max |diff| " + fmt(worst)));

        // Independent fixed-point oracle for the Stage I joining probability.
        const double p_closed = stage1_equilibrium(s).p1_circ;
        double p = 0.1;
        for (int it = 0; it < 20000; ++it) {
            const double next =
                0.5 * p + 0.5 * s.reward_v() /
                              (s.theta_max() * (4.0 * s.delay().mean_delay(p) - s.x_mean()));
            if (std::fabs(next - p) < 1e-13) {
                p = next;
                break;
            }
            p = next;
        }
        rep.checks.push_back(check(combo + " stage-1 closed form vs fixed point",
                                   std::fabs(p_closed - p) <= 1e-6,
                                   "closed " + fmt(p_closed) + ", fixed point " + fmt(p)));
    }
    return rep;
}

CriterionReport criterion5(const ValidateOptions& opts) {
    CriterionReport rep{5, "duopoly Stage I equilibrium", {}};
    for (std::size_t i = 0; i < kCombos.size(); ++i) {
        const Scenario s = light(kCombos[i]);
        const StageOneOutcome out = stage1_equilibrium(s);
        rep.checks.push_back(
            check_close(kCombos[i] + " c1*", out.c1_star, kGoldStage1C1[i], 0.01));
        rep.checks.push_back(
            check_close(kCombos[i] + " c2*", out.c2_star, 2.0 * kGoldStage1C1[i], 0.01));
        rep.checks.push_back(check(kCombos[i] + " c2* = 2 c1* exactly",
                                   out.c2_star == 2.0 * out.c1_star,
                                   "c1* " + fmt(out.c1_star) + ", c2* " + fmt(out.c2_star)));
        const double t_circ = s.delay().mean_delay(out.p1_circ);
        const double t_eps = s.delay().mean_delay(p_eps_cap(s));
        const bool feas = 2.0 * t_circ * t_eps > s.x_mean() * (3.0 * t_circ - t_eps);
        rep.checks.push_back(check(kCombos[i] + " upper-bound feasibility",
                                   feas && out.upper_bound_ok,
                                   "2 T(p)T(p_eps) " + fmt(2.0 * t_circ * t_eps) +
                                       " > E[X](3T(p)-T(p_eps)) " +
                                       fmt(s.x_mean() * (3.0 * t_circ - t_eps))));
        maybe_write(opts.out_dir, "stage1_" + kCombos[i] + ".csv", duopoly_stage1_table(s));
        maybe_write(opts.out_dir, "fig9a_" + kCombos[i] + ".csv",
                    duopoly_trace_table(s, out.c1_star, out.c2_star, {0.0, 0.0},
                                        IterationMethod::Adaptive, 2000));
    }
    return rep;
}

CriterionReport criterion6(const ValidateOptions& opts) {
    CriterionReport rep{6, "duopoly degeneration toward the monopolies", {}};
    for (const auto& combo : kCombos) {
        const Scenario s = light(combo);
        // Fig. 9b: price pair near the upper coexistence bound.
        const double c1 = revenue_optimal_shared(s).optimal_price;
        const double c2 = 0.99 * coexistence_upper_price(s, c1);
        const DuopolyTrace tb =
            stage2_iterate(s, c1, c2, {0.0, 0.0}, IterationMethod::Adaptive, 200000);
        const auto& endb = tb.iterates.back();
        const double mono = equilibrium_shared(s, c1).p_star;
        rep.checks.push_back(check(combo + " (9b) p2 -> 0", endb[1] < 0.02,
                                   "final p2 " + fmt(endb[1]) + " (p1 " + fmt(endb[0]) +
                                       ", shared-monopoly p* " + fmt(mono) + ")"));
        maybe_write(opts.out_dir, "fig9b_" + combo + ".csv",
                    duopoly_trace_table(s, c1, c2, {0.0, 0.0}, IterationMethod::Adaptive,
                                        2000));

        // Fig. 9c: price pair near the lower bound.
        const double c2l = 0.5, c1l = 0.99 * c2l;
        const DuopolyTrace tc =
            stage2_iterate(s, c1l, c2l, {0.0, 0.0}, IterationMethod::Adaptive, 200000);
        const auto& endc = tc.iterates.back();
        rep.checks.push_back(
            check(combo + " (9c) p1 -> 0", endc[0] < 0.02, "final p1 " + fmt(endc[0])));
        rep.checks.push_back(check_close(combo + " (9c) p2 -> (V-c2)/E[X]", endc[1],
                                         0.5 / s.x_mean(), 0.01));
        maybe_write(opts.out_dir, "fig9c_" + combo + ".csv",
                    duopoly_trace_table(s, c1l, c2l, {0.0, 0.0}, IterationMethod::Adaptive,
                                        2000));
    }
    return rep;
}

CriterionReport criterion7(const ValidateOptions& opts) {
    CriterionReport rep{7, "equilibrium convergence dynamics (Exp setting)", {}};
    const Scenario s = light("exp");
    const double c_r = revenue_optimal_shared(s).optimal_price;
    const double p_star = equilibrium_shared(s, c_r).p_star;

    const auto converges_to = [&](const IterationTrace& t, double target) {
        return t.converged && std::fabs(t.iterates.back() - target) <= 1e-6;
    };

    const IterationTrace st0 = iterate_shared(s, c_r, 0.0, IterationMethod::Static);
    rep.checks.push_back(check("static from p0=0 converges to p*",
                               converges_to(st0, p_star),
                               "final " + fmt(st0.iterates.back()) + ", p* " + fmt(p_star)));
    const IterationTrace ad0 = iterate_shared(s, c_r, 0.0, IterationMethod::Adaptive);
    rep.checks.push_back(check("adaptive from p0=0 converges to p*",
                               converges_to(ad0, p_star),
                               "final " + fmt(ad0.iterates.back()) + ", p* " + fmt(p_star)));
    const IterationTrace ad75 = iterate_shared(s, c_r, 0.75, IterationMethod::Adaptive);
    rep.checks.push_back(check("adaptive from p0=0.75 converges",
                               converges_to(ad75, p_star),
                               "final " + fmt(ad75.iterates.back())));
    const IterationTrace ad80 = iterate_shared(s, c_r, 0.80, IterationMethod::Adaptive);
    rep.checks.push_back(check("adaptive from p0=0.80 diverges", !ad80.converged,
                               "final " + fmt(ad80.iterates.back()) +
                                   (ad80.converged ? " (converged)" : " (non-convergent verdict)")));

    const Scenario s2 = exp_mu2_scenario();
    const ConvergenceCondition cond = convergence_condition_shared(s2);
    rep.checks.push_back(check("mu_X=2: sufficient convergence condition satisfied",
                               cond.satisfied && std::fabs(cond.lhs - 15.0 / 7.0) < 1e-9,
                               "lhs " + fmt(cond.lhs) + " < bound " + fmt(cond.bound)));
    const double c_r2 = revenue_optimal_shared(s2).optimal_price;
    const double p_star2 = equilibrium_shared(s2, c_r2).p_star;
    bool all_ok = true;
    std::string fail_at;
    for (int i = 0; i <= 20; ++i) {
        const double p0 = i / 20.0;
        const IterationTrace t = iterate_shared(s2, c_r2, p0, IterationMethod::Adaptive);
        if (!converges_to(t, p_star2)) {
            all_ok = false;
            fail_at = "p0=" + fmt(p0);
            break;
        }
    }
    rep.checks.push_back(check("mu_X=2: global convergence on the 21-point grid", all_ok,
                               all_ok ? "all starts reach p* " + fmt(p_star2)
                                      : "failed at " + fail_at));

    if (opts.out_dir) {
        maybe_write(opts.out_dir, "fig7_static.csv",
                    monopoly_trace_table(s, c_r, 0.0, IterationMethod::Static, 2000));
        maybe_write(opts.out_dir, "fig7_adaptive.csv",
                    monopoly_trace_table(s, c_r, 0.0, IterationMethod::Adaptive, 2000));
        CsvTable basin({"p0", "converged", "p_final"});
        for (int i = 0; i <= 20; ++i) {
            const double p0 = i / 20.0;
            const IterationTrace t = iterate_shared(s, c_r, p0, IterationMethod::Adaptive);
            basin.add_row({p0, t.converged ? 1.0 : 0.0, t.iterates.back()});
        }
        maybe_write(opts.out_dir, "fig8_basin.csv", basin);
    }
    return rep;
}

CriterionReport criterion8(const ValidateOptions& opts) {
    CriterionReport rep{8, "property suites", {}};

    for (const auto& combo : kCombos) {
        const Scenario s = light(combo);

        // Strict monotonicity of T(p) below the stability threshold.
        bool mono_t = true;
        const double p_hi = std::min(1.0, 0.999 * s.delay().stability_threshold());
        double prev = s.delay().mean_delay(0.0);
        for (int i = 1; i <= 20; ++i) {
            const double t = s.delay().mean_delay(p_hi * i / 20.0);
            if (!(t > prev)) mono_t = false;
            prev = t;
        }
        rep.checks.push_back(check(combo + " T(p) strictly increasing", mono_t, ""));

        // p*(c) non-increasing and Phi strictly decreasing.
        bool mono_p = true;
        double prev_p = equilibrium_shared(s, 0.0).p_star;
        for (int i = 1; i <= 100; ++i) {
            const double p = equilibrium_shared(s, s.reward_v() * i / 100.0).p_star;
            if (p > prev_p + 1e-12) mono_p = false;
            prev_p = p;
        }
        rep.checks.push_back(check(combo + " p*(c) non-increasing (101 prices)", mono_p, ""));

        bool phi_dec = true;
        for (double c : {0.2, 0.5, 0.8}) {
            double prev_phi = s.type_cdf(cutoff_shared(s, c, 0.0)) - 0.0;
            for (int i = 1; i <= 20; ++i) {
                const double p = i / 20.0;
                const double phi = s.type_cdf(cutoff_shared(s, c, p)) - p;
                if (!(phi < prev_phi)) phi_dec = false;
                prev_phi = phi;
            }
        }
        rep.checks.push_back(check(combo + " Phi strictly decreasing", phi_dec, ""));

        // Omega strictly decreasing at the Stage I prices.
        const StageOneOutcome out = stage1_equilibrium(s);
        bool omega_dec = true;
        const double cap = p_eps_cap(s);
        double prev_om =
            s.type_cdf(indifference_cutoff(s, out.c1_star, out.c2_star, 0.0)) - 0.0;
        for (int i = 1; i <= 20; ++i) {
            const double p = cap * i / 20.0;
            const double om =
                s.type_cdf(indifference_cutoff(s, out.c1_star, out.c2_star, p)) - p;
            if (!(om < prev_om)) omega_dec = false;
            prev_om = om;
        }
        rep.checks.push_back(check(combo + " Omega strictly decreasing", omega_dec, ""));

        // Jensen for both traffic models.
        for (const auto& traffic : {std::string("light"), std::string("heavy")}) {
            const ServiceMoments m = preset_scenario(combo, traffic).moments();
            rep.checks.push_back(check(combo + "-" + traffic + " Jensen m2 >= m1^2",
                                       m.m2 >= m.m1 * m.m1,
                                       "m1 " + fmt(m.m1) + ", m2 " + fmt(m.m2)));
        }

        // Monopoly Nash: no type gains by deviating from the threshold rule.
        {
            const double c = revenue_optimal_shared(s).optimal_price;
            const EquilibriumResult eq = equilibrium_shared(s, c);
            bool nash = true;
            for (int i = 0; i <= 20; ++i) {
                const double theta = s.theta_max() * i / 20.0;
                const double u = s.reward_v() - theta * eq.delay_at_eq - c;
                const double prescribed = theta < eq.cutoff_theta ? 1.0 : 0.0;
                for (double dev : {0.0, 0.25, 0.5, 0.75, 1.0})
                    if (dev * u > prescribed * u + 1e-12) nash = false;
            }
            rep.checks.push_back(check(combo + " monopoly Nash deviation (21 types)", nash, ""));
        }

        // Duopoly Nash at the Stage I outcome.
        {
            const DuopolyEquilibrium eq = stage2_equilibrium(s, out.c1_star, out.c2_star);
            bool nash = true;
            for (int i = 0; i <= 20; ++i) {
                const double theta = s.theta_max() * i / 20.0;
                const double u1 = s.reward_v() - theta * eq.delay_at_p1 - out.c1_star;
                const double u2 = s.reward_v() - theta * s.x_mean() - out.c2_star;
                double prescribed;
                if (theta < eq.cutoff_bar) prescribed = u1;
                else if (theta < eq.cutoff_two) prescribed = u2;
                else prescribed = 0.0;
                const double best = std::max({u1, u2, 0.0});
                if (prescribed < best - 1e-9) nash = false;
            }
            rep.checks.push_back(check(combo + " duopoly Nash deviation (21 types)", nash, ""));
        }

        // Closed-form delay derivative vs central finite differences.
        {
            const double h = 1e-6;
            double worst = 0.0;
            for (int i = 1; i <= 18; ++i) {
                const double p = 0.9 * s.delay().stability_threshold() * i / 20.0;
                const double fd =
                    (s.delay().mean_delay(p + h) - s.delay().mean_delay(p - h)) / (2.0 * h);
                const double an = s.delay().delay_derivative(p);
                worst = std::max(worst, std::fabs(fd - an) / an);
            }
            rep.checks.push_back(check(combo + " derivative vs finite differences",
                                       worst <= 1e-6, "max rel err " + fmt(worst)));
        }
    }

    // Determinism: repeated runs are bit-identical.
    {
        const Scenario s = light("exp");
        SimConfig cfg = s.sim_config(0.3);
        cfg.n_jobs = 100000;
        cfg.seed = opts.seed;
        const SimEstimate a = simulate_shared_queue(cfg);
        const SimEstimate b = simulate_shared_queue(cfg);
        const bool same_sim = a.mean_delay == b.mean_delay &&
                              a.ci_halfwidth == b.ci_halfwidth &&
                              a.mean_effective_service == b.mean_effective_service &&
                              a.second_moment_effective_service ==
                                  b.second_moment_effective_service &&
                              a.jobs_counted == b.jobs_counted;
        rep.checks.push_back(check("simulation determinism (bit-identical)", same_sim, ""));
        const std::string t1 = sweep_table_shared(s, 51).to_string();
        const std::string t2 = sweep_table_shared(s, 51).to_string();
        rep.checks.push_back(check("table determinism (byte-identical)", t1 == t2, ""));
    }
    return rep;
}

}  // namespace

std::vector<CriterionReport> run_validation(const ValidateOptions& opts) {
    if (opts.out_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*opts.out_dir, ec);
        if (ec || !std::filesystem::is_directory(*opts.out_dir))
            throw std::runtime_error("cannot create output directory " + *opts.out_dir);
    }
    std::vector<CriterionReport> reports;
    for (int id : opts.criteria) {
        switch (id) {
            case 1: reports.push_back(criterion1(opts)); break;
            case 2: reports.push_back(criterion2(opts)); break;
            case 3: reports.push_back(criterion3(opts)); break;
            case 4: reports.push_back(criterion4(opts)); break;
            case 5: reports.push_back(criterion5(opts)); break;
            case 6: reports.push_back(criterion6(opts)); break;
            case 7: reports.push_back(criterion7(opts)); break;
            case 8: reports.push_back(criterion8(opts)); break;
            default: throw std::invalid_argument("unknown criterion id " + std::to_string(id));
        }
    }
    if (opts.out_dir) {
        std::ofstream f(*opts.out_dir + "/report.txt", std::ios::binary);
        f << format_reports(reports);
    }
    return reports;
}

std::string format_reports(const std::vector<CriterionReport>& reports) {
    std::ostringstream out;
    int total = 0, failed = 0;
    for (const auto& rep : reports) {
        out << "criterion " << rep.id << ": " << rep.title << "\n";
        for (const auto& c : rep.checks) {
            out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) out << " -- " << c.detail;
            out << "\n";
            ++total;
            if (!c.pass) ++failed;
        }
        out << "  => criterion " << rep.id << (rep.pass() ? " PASS" : " FAIL") << "\n";
    }
    out << total - failed << "/" << total << " checks passed\n";
    return out.str();
}

}  // namespace specmarket
