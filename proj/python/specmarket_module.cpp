// Python bindings for the core operations: distributions, delay analytics,
// equilibria, pricing optimizers, duopoly game and the discrete-event
// simulator.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "specmarket/duopoly.hpp"
#include "specmarket/pricing.hpp"
#include "specmarket/scenario_io.hpp"
#include "specmarket/validate.hpp"

namespace py = pybind11;
using namespace specmarket;

PYBIND11_MODULE(_core, m) {
    m.doc() = "price-based spectrum access: queueing delays, equilibria, pricing";

    py::class_<DistSpec>(m, "DistSpec")
        .def_static("exponential", &DistSpec::exponential, py::arg("rate"))
        .def_static("erlang2", &DistSpec::erlang2, py::arg("rate"))
        .def_static("uniform", &DistSpec::uniform, py::arg("lo"), py::arg("hi"))
        .def_property_readonly("mean", &DistSpec::mean)
        .def_property_readonly("second_moment", &DistSpec::second_moment)
        .def("__repr__", [](const DistSpec& d) {
            return "DistSpec(" + to_string(d.kind()) + ")";
        });

    py::class_<ServiceMoments>(m, "ServiceMoments")
        .def(py::init<double, double>(), py::arg("m1"), py::arg("m2"))
        .def_readonly("m1", &ServiceMoments::m1)
        .def_readonly("m2", &ServiceMoments::m2);

    m.def("effective_first_moment", &effective_first_moment, py::arg("x"), py::arg("y"),
          py::arg("z"));
    m.def("effective_moments", &effective_moments, py::arg("x"), py::arg("y"), py::arg("z"));

    py::class_<DelayModel>(m, "DelayModel")
        .def(py::init<double, ServiceMoments, double>(), py::arg("lambda_"),
             py::arg("moments"), py::arg("x_mean"))
        .def("mean_waiting", &DelayModel::mean_waiting, py::arg("p"))
        .def("mean_delay", &DelayModel::mean_delay, py::arg("p"))
        .def("delay_derivative", &DelayModel::delay_derivative, py::arg("p"))
        .def("stability_threshold", &DelayModel::stability_threshold);

    py::class_<SimSettings>(m, "SimSettings")
        .def(py::init<>())
        .def_readwrite("n_jobs", &SimSettings::n_jobs)
        .def_readwrite("warmup_fraction", &SimSettings::warmup_fraction)
        .def_readwrite("seed", &SimSettings::seed)
        .def_readwrite("batches", &SimSettings::batches);

    py::class_<Scenario>(m, "Scenario")
        .def_static("make", &Scenario::make, py::arg("lambda_"), py::arg("v"),
                    py::arg("theta_max"), py::arg("alpha"), py::arg("epsilon"), py::arg("x"),
                    py::arg("y"), py::arg("z"), py::arg("sim") = SimSettings{})
        .def_static("preset",
                    py::overload_cast<const std::string&>(&preset_scenario),
                    py::arg("name"))
        .def_static("from_json", &load_scenario_json, py::arg("text"))
        .def_static("from_file", &load_scenario_file, py::arg("path"))
        .def("to_json", &scenario_to_json)
        .def_property_readonly("delay", &Scenario::delay)
        .def_property_readonly("moments", &Scenario::moments)
        .def_property_readonly("x_mean", &Scenario::x_mean)
        .def_property_readonly("lambda_", &Scenario::lambda)
        .def_property_readonly("v", &Scenario::reward_v)
        .def_property_readonly("theta_max", &Scenario::theta_max)
        .def_property_readonly("alpha", &Scenario::alpha)
        .def_property_readonly("epsilon", &Scenario::epsilon);

    py::enum_<EquilibriumMethod>(m, "EquilibriumMethod")
        .value("closed_form", EquilibriumMethod::ClosedForm)
        .value("bisection", EquilibriumMethod::Bisection);

    py::class_<EquilibriumResult>(m, "EquilibriumResult")
        .def_readonly("p_star", &EquilibriumResult::p_star)
        .def_readonly("cutoff_theta", &EquilibriumResult::cutoff_theta)
        .def_readonly("delay_at_eq", &EquilibriumResult::delay_at_eq)
        .def_readonly("method", &EquilibriumResult::method)
        .def_readonly("residual", &EquilibriumResult::residual);

    m.def("cutoff_shared", &cutoff_shared, py::arg("s"), py::arg("c1"), py::arg("p"));
    m.def("equilibrium_shared", &equilibrium_shared, py::arg("s"), py::arg("c1"));
    m.def("equilibrium_exclusive", &equilibrium_exclusive, py::arg("s"), py::arg("c2"));

    py::enum_<IterationMethod>(m, "IterationMethod")
        .value("static_expectations", IterationMethod::Static)
        .value("adaptive_expectations", IterationMethod::Adaptive);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("iterates", &IterationTrace::iterates)
        .def_readonly("converged", &IterationTrace::converged)
        .def_readonly("final_gap", &IterationTrace::final_gap)
        .def_readonly("iterations_used", &IterationTrace::iterations_used)
        .def_readonly("last_window_amplitude", &IterationTrace::last_window_amplitude);

    m.def("iterate_shared", &iterate_shared, py::arg("s"), py::arg("c1"), py::arg("p0"),
          py::arg("method") = IterationMethod::Adaptive, py::arg("max_iter") = 100000);

    py::class_<ConvergenceCondition>(m, "ConvergenceCondition")
        .def_readonly("satisfied", &ConvergenceCondition::satisfied)
        .def_readonly("lhs", &ConvergenceCondition::lhs)
        .def_readonly("bound", &ConvergenceCondition::bound);
    m.def("convergence_condition_shared", &convergence_condition_shared, py::arg("s"));

    py::class_<PricingResult>(m, "PricingResult")
        .def_readonly("optimal_price", &PricingResult::optimal_price)
        .def_readonly("optimal_value", &PricingResult::optimal_value)
        .def_readonly("argmax_aux", &PricingResult::argmax_aux);

    m.def("revenue_shared", &revenue_shared, py::arg("s"), py::arg("c1"));
    m.def("welfare_shared", &welfare_shared, py::arg("s"), py::arg("c1"));
    m.def("revenue_optimal_shared", &revenue_optimal_shared, py::arg("s"),
          py::arg("curve_points") = 0);
    m.def("social_optimal_shared", &social_optimal_shared, py::arg("s"),
          py::arg("curve_points") = 0);
    m.def("revenue_optimal_exclusive", &revenue_optimal_exclusive, py::arg("s"),
          py::arg("curve_points") = 0);
    m.def("social_optimal_exclusive", &social_optimal_exclusive, py::arg("s"),
          py::arg("curve_points") = 0);

    py::enum_<MarketRegion>(m, "MarketRegion")
        .value("exclusive_monopoly", MarketRegion::ExclusiveMonopoly)
        .value("coexistence", MarketRegion::Coexistence)
        .value("shared_monopoly", MarketRegion::SharedMonopoly);

    py::class_<DuopolyEquilibrium>(m, "DuopolyEquilibrium")
        .def_readonly("p1", &DuopolyEquilibrium::p1)
        .def_readonly("p2", &DuopolyEquilibrium::p2)
        .def_readonly("cutoff_bar", &DuopolyEquilibrium::cutoff_bar)
        .def_readonly("cutoff_two", &DuopolyEquilibrium::cutoff_two)
        .def_readonly("region", &DuopolyEquilibrium::region)
        .def_readonly("delay_at_p1", &DuopolyEquilibrium::delay_at_p1);

    py::class_<StageOneOutcome>(m, "StageOneOutcome")
        .def_readonly("c1_star", &StageOneOutcome::c1_star)
        .def_readonly("c2_star", &StageOneOutcome::c2_star)
        .def_readonly("p1_circ", &StageOneOutcome::p1_circ)
        .def_readonly("p2_circ", &StageOneOutcome::p2_circ)
        .def_readonly("delta", &StageOneOutcome::delta)
        .def_readonly("upper_bound_ok", &StageOneOutcome::upper_bound_ok);

    py::class_<DuopolyTrace>(m, "DuopolyTrace")
        .def_readonly("iterates", &DuopolyTrace::iterates)
        .def_readonly("converged", &DuopolyTrace::converged)
        .def_readonly("final_gap", &DuopolyTrace::final_gap)
        .def_readonly("iterations_used", &DuopolyTrace::iterations_used);

    py::class_<DuopolyConvergenceCondition>(m, "DuopolyConvergenceCondition")
        .def_readonly("satisfied", &DuopolyConvergenceCondition::satisfied)
        .def_readonly("lhs", &DuopolyConvergenceCondition::lhs)
        .def_readonly("bound", &DuopolyConvergenceCondition::bound)
        .def_readonly("shared_lhs", &DuopolyConvergenceCondition::shared_lhs);

    m.def("p_eps_cap", &p_eps_cap, py::arg("s"));
    m.def("indifference_cutoff", &indifference_cutoff, py::arg("s"), py::arg("c1"),
          py::arg("c2"), py::arg("p1"));
    m.def("coexistence_upper_price", &coexistence_upper_price, py::arg("s"), py::arg("c1"));
    m.def("classify_market", &classify_market, py::arg("s"), py::arg("c1"), py::arg("c2"));
    m.def("stage2_equilibrium", &stage2_equilibrium, py::arg("s"), py::arg("c1"),
          py::arg("c2"));
    m.def("stage2_iterate", &stage2_iterate, py::arg("s"), py::arg("c1"), py::arg("c2"),
          py::arg("p0"), py::arg("method") = IterationMethod::Adaptive,
          py::arg("max_iter") = 100000);
    m.def("convergence_condition_duopoly", &convergence_condition_duopoly, py::arg("s"));
    m.def("best_response_shared", &best_response_shared, py::arg("s"), py::arg("c2"));
    m.def("best_response_exclusive", &best_response_exclusive, py::arg("s"), py::arg("c1"));
    m.def("stage1_equilibrium", &stage1_equilibrium, py::arg("s"));

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init([](double lambda_eff, DistSpec x, DistSpec y, DistSpec z, long n_jobs,
                         double warmup_fraction, std::uint64_t seed, int batches) {
                 return SimConfig{lambda_eff, x, y, z, n_jobs, warmup_fraction, seed,
                                  batches};
             }),
             py::arg("lambda_eff"), py::arg("x"), py::arg("y"), py::arg("z"),
             py::arg("n_jobs") = 500000, py::arg("warmup_fraction") = 0.1,
             py::arg("seed") = 1, py::arg("batches") = 20);

    py::class_<SimEstimate>(m, "SimEstimate")
        .def_readonly("mean_delay", &SimEstimate::mean_delay)
        .def_readonly("ci_halfwidth", &SimEstimate::ci_halfwidth)
        .def_readonly("mean_effective_service", &SimEstimate::mean_effective_service)
        .def_readonly("second_moment_effective_service",
                      &SimEstimate::second_moment_effective_service)
        .def_readonly("jobs_counted", &SimEstimate::jobs_counted)
        .def_readonly("empty", &SimEstimate::empty)
        .def_readonly("saturated", &SimEstimate::saturated);

    m.def("simulate_shared_queue",
          py::overload_cast<const SimConfig&>(&simulate_shared_queue), py::arg("cfg"));

    py::class_<EffectiveServiceEstimate>(m, "EffectiveServiceEstimate")
        .def_readonly("m1_hat", &EffectiveServiceEstimate::m1_hat)
        .def_readonly("m2_hat", &EffectiveServiceEstimate::m2_hat)
        .def_readonly("m1_stderr", &EffectiveServiceEstimate::m1_stderr)
        .def_readonly("m2_stderr", &EffectiveServiceEstimate::m2_stderr)
        .def_readonly("n", &EffectiveServiceEstimate::n);
    m.def("simulate_effective_service", &simulate_effective_service, py::arg("x"),
          py::arg("y"), py::arg("z"), py::arg("n"), py::arg("seed"));
}
