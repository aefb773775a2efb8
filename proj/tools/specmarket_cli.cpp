// specmarket: analysis, pricing and simulation CLI for the ON-OFF shared
// spectrum market model. CSV goes to stdout; human-readable summaries to
// stderr. Exit codes: 0 ok, 1 check failure, 2 usage/config error.
#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "specmarket/scenario_io.hpp"
#include "specmarket/tables.hpp"
#include "specmarket/validate.hpp"

using namespace specmarket;

namespace {

std::vector<double> parse_grid(const std::string& arg) {
    std::vector<double> grid;
    std::stringstream ss(arg);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        std::size_t pos = 0;
        const double v = std::stod(cell, &pos);
        if (pos != cell.size()) throw std::invalid_argument("bad grid value '" + cell + "'");
        grid.push_back(v);
    }
    if (grid.empty()) throw std::invalid_argument("empty grid");
    return grid;
}

void emit(const CsvTable& table, const std::string& out_path) {
    if (out_path.empty())
        std::cout << table.to_string();
    else
        table.write_file(out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"price-based spectrum access: delays, equilibria, pricing, simulation"};
    app.require_subcommand(1);

    std::string scenario_arg, out_path, p_arg = "0.1,0.2,0.3,0.4,0.5";
    bool with_sim = false;

    auto* delay = app.add_subcommand("delay", "mean queueing delay over a p grid (Fig. 4)");
    delay->add_option("--scenario", scenario_arg, "scenario file or preset")->required();
    delay->add_option("--p", p_arg, "comma-separated joining probabilities");
    delay->add_flag("--simulate", with_sim, "add simulated delay and 99% CI columns");
    delay->add_option("--out", out_path, "write CSV to a file instead of stdout");

    std::string market = "shared";
    int grid_n = 101;
    auto* sweep = app.add_subcommand("sweep", "price sweep: p*, revenue, welfare (Fig. 5)");
    sweep->add_option("--scenario", scenario_arg, "scenario file or preset")->required();
    sweep->add_option("--market", market, "shared|exclusive")
        ->check(CLI::IsMember({"shared", "exclusive"}));
    sweep->add_option("--grid", grid_n, "grid size over [0, V]")->check(CLI::Range(2, 1000000));
    sweep->add_option("--out", out_path, "write CSV to a file instead of stdout");

    std::string objective = "revenue";
    int curve_n = 0;
    std::string curve_out;
    auto* opt = app.add_subcommand("optimize", "revenue- or socially-optimal price");
    opt->add_option("--scenario", scenario_arg, "scenario file or preset")->required();
    opt->add_option("--market", market, "shared|exclusive")
        ->check(CLI::IsMember({"shared", "exclusive"}));
    opt->add_option("--objective", objective, "revenue|social")
        ->check(CLI::IsMember({"revenue", "social"}));
    opt->add_option("--curve", curve_n, "sample the objective curve at N points");
    opt->add_option("--curve-out", curve_out, "write the sampled curve CSV to a file");
    opt->add_option("--out", out_path, "write the summary CSV to a file instead of stdout");

    double c1 = -1.0, c2 = -1.0;
    std::string trace_arg, method_arg = "adaptive";
    long max_iter = 100000;
    auto* duo = app.add_subcommand("duopoly", "Stage I/II duopoly equilibria (Fig. 9)");
    duo->add_option("--scenario", scenario_arg, "scenario file or preset")->required();
    auto* c1_opt = duo->add_option("--c1", c1, "shared-use price");
    auto* c2_opt = duo->add_option("--c2", c2, "exclusive-use price");
    c1_opt->needs(c2_opt);
    c2_opt->needs(c1_opt);
    duo->add_option("--trace", trace_arg, "start 'p1,p2': emit the iteration trace table");
    duo->add_option("--method", method_arg, "static|adaptive")
        ->check(CLI::IsMember({"static", "adaptive"}));
    duo->add_option("--max-iter", max_iter, "iteration cap");
    duo->add_option("--out", out_path, "write CSV to a file instead of stdout");

    auto* sim = app.add_subcommand("simulate", "discrete-event simulation over a p grid");
    sim->add_option("--scenario", scenario_arg, "scenario file or preset")->required();
    sim->add_option("--p", p_arg, "comma-separated joining probabilities");
    sim->add_option("--out", out_path, "write CSV to a file instead of stdout");

    ValidateOptions vopts;
    std::string out_dir, criteria_arg;
    auto* val = app.add_subcommand(
        "validate", "run the full validation suite over the built-in settings");
    val->add_option("--out", out_dir, "directory for golden CSVs and report.txt");
    val->add_option("--criteria", criteria_arg, "comma-separated subset, e.g. 2,3,4");
    val->add_option("--jobs", vopts.sim_jobs, "simulated jobs per delay-validation run");
    val->add_option("--seed", vopts.seed, "base seed for the validation simulations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*delay) {
            emit(delay_table(resolve_scenario(scenario_arg), parse_grid(p_arg), with_sim),
                 out_path);
        } else if (*sweep) {
            const Scenario s = resolve_scenario(scenario_arg);
            emit(market == "shared" ? sweep_table_shared(s, grid_n)
                                    : sweep_table_exclusive(s, grid_n),
                 out_path);
        } else if (*opt) {
            const Scenario s = resolve_scenario(scenario_arg);
            PricingResult r;
            std::string aux;
            if (market == "shared" && objective == "revenue") {
                r = revenue_optimal_shared(s, curve_n);
                aux = "p_star";
            } else if (market == "shared") {
                r = social_optimal_shared(s, curve_n);
                aux = "theta_star";
            } else if (objective == "revenue") {
                r = revenue_optimal_exclusive(s, curve_n);
                aux = "p_star";
            } else {
                r = social_optimal_exclusive(s, curve_n);
                aux = "theta_star";
            }
            std::cerr << market << "/" << objective << ": optimal price "
                      << CsvTable::format_value(r.optimal_price) << ", value "
                      << CsvTable::format_value(r.optimal_value) << ", " << aux << " "
                      << CsvTable::format_value(r.argmax_aux) << "\n";
            emit(optimize_summary_table(r, aux), out_path);
            if (!curve_out.empty())
                curve_table(r, objective == "social" ? "theta" : "c").write_file(curve_out);
        } else if (*duo) {
            const Scenario s = resolve_scenario(scenario_arg);
            const IterationMethod method = method_arg == "static" ? IterationMethod::Static
                                                                  : IterationMethod::Adaptive;
            if (c1 < 0.0) {
                const StageOneOutcome out = stage1_equilibrium(s);
                std::cerr << "stage I: c1* " << CsvTable::format_value(out.c1_star)
                          << ", c2* " << CsvTable::format_value(out.c2_star) << ", p1 "
                          << CsvTable::format_value(out.p1_circ) << ", p2 "
                          << CsvTable::format_value(out.p2_circ) << ", upper bound "
                          << (out.upper_bound_ok ? "ok" : "violated") << "\n";
                if (!trace_arg.empty()) {
                    const auto p0 = parse_grid(trace_arg);
                    if (p0.size() != 2) throw std::invalid_argument("--trace wants 'p1,p2'");
                    emit(duopoly_trace_table(s, out.c1_star, out.c2_star, {p0[0], p0[1]},
                                             method, max_iter),
                         out_path);
                } else {
                    emit(duopoly_stage1_table(s), out_path);
                }
            } else {
                const DuopolyEquilibrium eq = stage2_equilibrium(s, c1, c2);
                std::cerr << "region " << to_string(classify_market(s, c1, c2))
                          << ", equilibrium " << to_string(eq.region) << ": p1 "
                          << CsvTable::format_value(eq.p1) << ", p2 "
                          << CsvTable::format_value(eq.p2) << "\n";
                if (!trace_arg.empty()) {
                    const auto p0 = parse_grid(trace_arg);
                    if (p0.size() != 2) throw std::invalid_argument("--trace wants 'p1,p2'");
                    emit(duopoly_trace_table(s, c1, c2, {p0[0], p0[1]}, method, max_iter),
                         out_path);
                } else {
                    emit(duopoly_pair_table(s, c1, c2), out_path);
                }
            }
        } else if (*sim) {
            emit(simulate_table(resolve_scenario(scenario_arg), parse_grid(p_arg)), out_path);
        } else if (*val) {
            if (!out_dir.empty()) vopts.out_dir = out_dir;
            if (!criteria_arg.empty()) {
                vopts.criteria.clear();
                for (double v : parse_grid(criteria_arg))
                    vopts.criteria.push_back(static_cast<int>(v));
            }
            const auto reports = run_validation(vopts);
            std::cout << format_reports(reports);
            for (const auto& rep : reports)
                if (!rep.pass()) return 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
