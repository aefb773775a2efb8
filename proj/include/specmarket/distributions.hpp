#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace specmarket {

/// Deterministic random stream. Identical seed => identical sample stream,
/// independent of platform library details (samplers below use only raw
/// 64-bit draws and our own inverse transforms).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Derive an independently seeded stream (stream k of a base seed).
    static Rng stream(std::uint64_t base_seed, std::uint64_t stream_id);

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

enum class DistKind { Exponential, Erlang2, Uniform };

/// Parametric nonnegative random-variable model for the service time X and
/// the ON/OFF periods Y, Z. Parameters are validated at construction.
class DistSpec {
public:
    static DistSpec exponential(double rate);
    static DistSpec erlang2(double rate);
    static DistSpec uniform(double lo, double hi);

    DistKind kind() const { return kind_; }
    double rate() const { return rate_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

    double mean() const;
    double second_moment() const;

    double sample(Rng& rng) const;

    /// Draw from the stationary residual (equilibrium) distribution where a
    /// closed form exists; falls back to a fresh draw for Uniform.
    double sample_stationary_residual(Rng& rng) const;

    bool operator==(const DistSpec&) const = default;

private:
    DistSpec(DistKind k, double rate, double lo, double hi)
        : kind_(k), rate_(rate), lo_(lo), hi_(hi) {}

    DistKind kind_;
    double rate_ = 0.0;
    double lo_ = 0.0, hi_ = 0.0;
};

/// (mean, second moment) as exact closed forms.
struct Moments {
    double mean;
    double second_moment;
};

inline Moments moments(const DistSpec& d) { return {d.mean(), d.second_moment()}; }

std::string to_string(DistKind k);

}  // namespace specmarket
