#include "specmarket/tables.hpp"

#include <stdexcept>

namespace specmarket {

namespace {

void require_probability_grid(const std::vector<double>& grid) {
    for (double p : grid)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("joining probabilities must lie in [0,1], got " +
                                        CsvTable::format_value(p));
}

void require_grid_size(int n) {
    if (n < 2) throw std::invalid_argument("price grid needs at least 2 points");
}

}  // namespace

CsvTable delay_table(const Scenario& s, const std::vector<double>& p_grid, bool with_sim) {
    require_probability_grid(p_grid);
    CsvTable table(with_sim
                       ? std::vector<std::string>{"p", "T_analytic", "T_sim", "ci_halfwidth"}
                       : std::vector<std::string>{"p", "T_analytic"});
    for (double p : p_grid) {
        const double t = s.delay().mean_delay(p);
        if (with_sim) {
            const SimEstimate est = simulate_shared_queue(s.sim_config(p));
            table.add_row({p, t, est.mean_delay, est.ci_halfwidth});
        } else {
            table.add_row({p, t});
        }
    }
    return table;
}

CsvTable sweep_table_shared(const Scenario& s, int grid_n) {
    require_grid_size(grid_n);
    CsvTable table({"c", "p_star", "revenue", "welfare"});
    for (int i = 0; i < grid_n; ++i) {
        const double c = s.reward_v() * i / (grid_n - 1);
        const EquilibriumResult eq = equilibrium_shared(s, c);
        table.add_row({c, eq.p_star, c * eq.p_star, welfare_shared(s, c)});
    }
    return table;
}

CsvTable sweep_table_exclusive(const Scenario& s, int grid_n) {
    require_grid_size(grid_n);
    CsvTable table({"c", "p_star", "revenue", "welfare"});
    for (int i = 0; i < grid_n; ++i) {
        const double c = s.reward_v() * i / (grid_n - 1);
        const EquilibriumResult eq = equilibrium_exclusive(s, c);
        table.add_row({c, eq.p_star, c * eq.p_star, welfare_exclusive(s, c)});
    }
    return table;
}

CsvTable optimize_summary_table(const PricingResult& r, const std::string& aux_name) {
    CsvTable table({"optimal_price", "optimal_value", aux_name});
    table.add_row({r.optimal_price, r.optimal_value, r.argmax_aux});
    return table;
}

CsvTable curve_table(const PricingResult& r, const std::string& x_name) {
    CsvTable table({x_name, "value"});
    for (const auto& pt : r.curve) table.add_row({pt.x, pt.value});
    return table;
}

CsvTable duopoly_stage1_table(const Scenario& s) {
    const StageOneOutcome out = stage1_equilibrium(s);
    CsvTable table({"c1_star", "c2_star", "p1_circ", "p2_circ", "delta",
                    "upper_bound_ok", "region"});
    table.add_row({out.c1_star, out.c2_star, out.p1_circ, out.p2_circ, out.delta,
                   out.upper_bound_ok ? 1.0 : 0.0,
                   static_cast<double>(classify_market(s, out.c1_star, out.c2_star))});
    return table;
}

CsvTable duopoly_pair_table(const Scenario& s, double c1, double c2) {
    const DuopolyEquilibrium eq = stage2_equilibrium(s, c1, c2);
    CsvTable table({"c1", "c2", "classified_region", "equilibrium_region", "p1", "p2",
                    "cutoff_bar", "cutoff_two", "delay_at_p1"});
    table.add_row({c1, c2, static_cast<double>(classify_market(s, c1, c2)),
                   static_cast<double>(eq.region), eq.p1, eq.p2, eq.cutoff_bar,
                   eq.cutoff_two, eq.delay_at_p1});
    return table;
}

CsvTable duopoly_trace_table(const Scenario& s, double c1, double c2,
                             std::array<double, 2> p0, IterationMethod method,
                             long max_iter) {
    const DuopolyTrace trace = stage2_iterate(s, c1, c2, p0, method, max_iter);
    CsvTable table({"t", "p1", "p2"});
    for (std::size_t t = 0; t < trace.iterates.size(); ++t)
        table.add_row({static_cast<double>(t), trace.iterates[t][0], trace.iterates[t][1]});
    return table;
}

CsvTable monopoly_trace_table(const Scenario& s, double c1, double p0,
                              IterationMethod method, long max_iter) {
    const IterationTrace trace = iterate_shared(s, c1, p0, method, max_iter);
    CsvTable table({"t", "p"});
    for (std::size_t t = 0; t < trace.iterates.size(); ++t)
        table.add_row({static_cast<double>(t), trace.iterates[t]});
    return table;
}

CsvTable simulate_table(const Scenario& s, const std::vector<double>& p_grid) {
    require_probability_grid(p_grid);
    CsvTable table({"p", "T_sim", "ci_halfwidth", "xe_m1_hat", "xe_m2_hat",
                    "jobs_counted", "saturated"});
    for (double p : p_grid) {
        const SimEstimate est = simulate_shared_queue(s.sim_config(p));
        table.add_row({p, est.mean_delay, est.ci_halfwidth, est.mean_effective_service,
                       est.second_moment_effective_service,
                       static_cast<double>(est.jobs_counted), est.saturated ? 1.0 : 0.0});
    }
    return table;
}

}  // namespace specmarket
