#pragma once

#include "specmarket/csv.hpp"
#include "specmarket/duopoly.hpp"
#include "specmarket/pricing.hpp"

namespace specmarket {

/// Machine-readable tables backing the CLI subcommands (and the golden CSV
/// files of the validation runner). All columns are numeric; region cells use
/// the MarketRegion enum value (0 exclusive, 1 coexistence, 2 shared).

CsvTable delay_table(const Scenario& s, const std::vector<double>& p_grid, bool with_sim);

CsvTable sweep_table_shared(const Scenario& s, int grid_n);
CsvTable sweep_table_exclusive(const Scenario& s, int grid_n);

CsvTable optimize_summary_table(const PricingResult& r, const std::string& aux_name);
CsvTable curve_table(const PricingResult& r, const std::string& x_name);

CsvTable duopoly_stage1_table(const Scenario& s);
CsvTable duopoly_pair_table(const Scenario& s, double c1, double c2);
CsvTable duopoly_trace_table(const Scenario& s, double c1, double c2,
                             std::array<double, 2> p0, IterationMethod method,
                             long max_iter);
CsvTable monopoly_trace_table(const Scenario& s, double c1, double p0,
                              IterationMethod method, long max_iter);

CsvTable simulate_table(const Scenario& s, const std::vector<double>& p_grid);

}  // namespace specmarket
