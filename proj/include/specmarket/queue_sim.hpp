#pragma once

#include <cstdint>
#include <functional>

#include "specmarket/distributions.hpp"

namespace specmarket {

struct SimConfig {
    double lambda_eff;         // effective arrival rate lambda * p (jobs/time)
    DistSpec x, y, z;          // service, ON, OFF models
    long n_jobs = 500000;
    double warmup_fraction = 0.1;
    std::uint64_t seed = 1;
    int batches = 20;

    void validate() const;
};

struct SimEstimate {
    double mean_delay = 0.0;                      // mean sojourn (wait + service)
    double ci_halfwidth = 0.0;                    // 99% batch-means halfwidth
    double mean_effective_service = 0.0;          // per-job Xe average
    double second_moment_effective_service = 0.0; // per-job Xe^2 average
    long jobs_counted = 0;
    bool empty = false;      // lambda_eff == 0: no jobs simulated
    bool saturated = false;  // lambda_eff * E[Xe] >= 1: no steady state exists
};

/// Per-departure record, exposed for invariant tests.
struct JobRecord {
    double arrival;
    double service_start;  // first instant the job holds the server (OFF)
    double departure;
};

/// FIFO single-server queue whose service is interrupted by an ON-OFF renewal
/// overlay consumed along the cumulative work axis (preemptive resume: an ON
/// period suspends the job in service; the remaining work resumes at the next
/// OFF). Four independent seeded streams: arrivals, X, Y, Z.
SimEstimate simulate_shared_queue(const SimConfig& cfg);

/// Same simulation, invoking `sink` for every post-warmup departure.
SimEstimate simulate_shared_queue(const SimConfig& cfg,
                                  const std::function<void(const JobRecord&)>& sink);

struct EffectiveServiceEstimate {
    double m1_hat, m2_hat;
    double m1_stderr, m2_stderr;
    long n;
};

/// Isolated Xe sampling: draw X, overlay the OFF/ON renewal process from a
/// stationary-residual OFF start, accumulate the interrupting ON periods.
EffectiveServiceEstimate simulate_effective_service(const DistSpec& x, const DistSpec& y,
                                                    const DistSpec& z, long n,
                                                    std::uint64_t seed);

}  // namespace specmarket
