#include "specmarket/queue_sim.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "specmarket/effective_service.hpp"

namespace specmarket {

void SimConfig::validate() const {
    if (!(lambda_eff >= 0.0))
        throw std::invalid_argument("SimConfig: lambda_eff must be >= 0");
    if (n_jobs <= 0) throw std::invalid_argument("SimConfig: n_jobs must be > 0");
    if (!(warmup_fraction >= 0.0 && warmup_fraction < 1.0))
        throw std::invalid_argument("SimConfig: warmup_fraction must be in [0,1)");
    if (batches < 2) throw std::invalid_argument("SimConfig: need at least 2 batches");
    if (static_cast<double>(n_jobs) * (1.0 - warmup_fraction) <
        static_cast<double>(batches) * 100.0)
        throw std::invalid_argument(
            "SimConfig: too few post-warmup jobs per batch (need n_jobs*(1-warmup) >= "
            "batches*100)");
}

SimEstimate simulate_shared_queue(const SimConfig& cfg) {
    return simulate_shared_queue(cfg, nullptr);
}

SimEstimate simulate_shared_queue(const SimConfig& cfg,
                                  const std::function<void(const JobRecord&)>& sink) {
    cfg.validate();
    SimEstimate est;
    if (cfg.lambda_eff == 0.0) {
        est.empty = true;
        return est;
    }
    est.saturated = cfg.lambda_eff * effective_first_moment(cfg.x, cfg.y, cfg.z) >= 1.0;

    Rng arrivals = Rng::stream(cfg.seed, 0);
    Rng services = Rng::stream(cfg.seed, 1);
    Rng on = Rng::stream(cfg.seed, 2);
    Rng off = Rng::stream(cfg.seed, 3);

    // Interruption overlay on the cumulative work axis: off_remaining is the
    // OFF capacity left before the next ON period. It is consumed only while
    // serving, so a job entering an idle server always starts during OFF and
    // the per-job first interruption sits at the stationary residual of Z in
    // steady state (the renewal overlay of the delay analysis).
    double off_remaining = cfg.z.sample(off);

    double server_free = 0.0;
    double arrival = 0.0;
    const long warm = static_cast<long>(cfg.warmup_fraction * cfg.n_jobs);

    std::vector<double> sojourns;
    sojourns.reserve(cfg.n_jobs - warm);
    double xe_sum = 0.0, xe_sq_sum = 0.0;

    for (long k = 0; k < cfg.n_jobs; ++k) {
        arrival += arrivals.exponential(cfg.lambda_eff);
        double work = cfg.x.sample(services);
        double t = std::max(arrival, server_free);
        const double service_start = t;
        while (true) {
            if (work <= off_remaining) {
                off_remaining -= work;
                t += work;
                break;
            }
            work -= off_remaining;
            t += off_remaining;
            t += cfg.y.sample(on);            // suspended during ON
            off_remaining = cfg.z.sample(off);
        }
        server_free = t;
        if (k >= warm) {
            sojourns.push_back(t - arrival);
            const double xe = t - service_start;
            xe_sum += xe;
            xe_sq_sum += xe * xe;
            if (sink) sink({arrival, service_start, t});
        }
    }

    const long m = static_cast<long>(sojourns.size());
    est.jobs_counted = m;
    est.mean_effective_service = xe_sum / m;
    est.second_moment_effective_service = xe_sq_sum / m;

    // Batch means, Student-t 99% CI.
    const long batch_size = m / cfg.batches;
    std::vector<double> batch_mean(cfg.batches);
    for (int b = 0; b < cfg.batches; ++b) {
        double acc = 0.0;
        const long begin = static_cast<long>(b) * batch_size;
        for (long i = begin; i < begin + batch_size; ++i) acc += sojourns[i];
        batch_mean[b] = acc / batch_size;
    }
    double mean = 0.0;
    for (double v : batch_mean) mean += v;
    mean /= cfg.batches;
    double var = 0.0;
    for (double v : batch_mean) var += (v - mean) * (v - mean);
    var /= (cfg.batches - 1);

    const boost::math::students_t tdist(cfg.batches - 1);
    const double tq = boost::math::quantile(tdist, 0.995);
    est.mean_delay = mean;
    est.ci_halfwidth = tq * std::sqrt(var / cfg.batches);
    return est;
}

EffectiveServiceEstimate simulate_effective_service(const DistSpec& x, const DistSpec& y,
                                                    const DistSpec& z, long n,
                                                    std::uint64_t seed) {
    if (n < 10000)
        throw std::invalid_argument("simulate_effective_service: need n >= 1e4");
    Rng rx = Rng::stream(seed, 1);
    Rng ry = Rng::stream(seed, 2);
    Rng rz = Rng::stream(seed, 3);

    double s1 = 0.0, s2 = 0.0, s1sq = 0.0, s2sq = 0.0;
    for (long k = 0; k < n; ++k) {
        double work = x.sample(rx);
        double xe = work;
        double to_next_on = z.sample_stationary_residual(rz);
        while (work > to_next_on) {
            work -= to_next_on;
            xe += y.sample(ry);
            to_next_on = z.sample(rz);
        }
        const double sq = xe * xe;
        s1 += xe;
        s2 += sq;
        s1sq += sq;
        s2sq += sq * sq;
    }
    const double nd = static_cast<double>(n);
    const double m1 = s1 / nd, m2 = s2 / nd;
    const double var1 = std::max(0.0, s1sq / nd - m1 * m1);
    const double var2 = std::max(0.0, s2sq / nd - m2 * m2);
    return {m1, m2, std::sqrt(var1 / nd), std::sqrt(var2 / nd), n};
}

}  // namespace specmarket
