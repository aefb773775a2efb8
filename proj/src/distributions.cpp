#include "specmarket/distributions.hpp"

namespace specmarket {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t base_seed, std::uint64_t stream_id) {
    // splitmix64 walk: stream k gets the k-th derived state, so streams with
    // the same base seed are decorrelated and reproducible.
    std::uint64_t s = base_seed;
    std::uint64_t derived = splitmix64(s);
    for (std::uint64_t i = 0; i < stream_id; ++i) derived = splitmix64(s);
    return Rng(derived);
}

DistSpec DistSpec::exponential(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be > 0");
    return DistSpec(DistKind::Exponential, rate, 0.0, 0.0);
}

DistSpec DistSpec::erlang2(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("erlang2: rate must be > 0");
    return DistSpec(DistKind::Erlang2, rate, 0.0, 0.0);
}

DistSpec DistSpec::uniform(double lo, double hi) {
    if (!(lo >= 0.0) || !(hi > lo))
        throw std::invalid_argument("uniform: need 0 <= lo < hi");
    return DistSpec(DistKind::Uniform, 0.0, lo, hi);
}

double DistSpec::mean() const {
    switch (kind_) {
        case DistKind::Exponential: return 1.0 / rate_;
        case DistKind::Erlang2:     return 2.0 / rate_;
        default:                    return 0.5 * (lo_ + hi_);
    }
}

double DistSpec::second_moment() const {
    switch (kind_) {
        case DistKind::Exponential: return 2.0 / (rate_ * rate_);
        case DistKind::Erlang2:     return 6.0 / (rate_ * rate_);
        default:                    return (lo_ * lo_ + lo_ * hi_ + hi_ * hi_) / 3.0;
    }
}

double DistSpec::sample(Rng& rng) const {
    switch (kind_) {
        case DistKind::Exponential: return rng.exponential(rate_);
        case DistKind::Erlang2:     return rng.exponential(rate_) + rng.exponential(rate_);
        default:                    return lo_ + (hi_ - lo_) * rng.uniform01();
    }
}

double DistSpec::sample_stationary_residual(Rng& rng) const {
    switch (kind_) {
        case DistKind::Exponential:
            return rng.exponential(rate_);  // memoryless
        case DistKind::Erlang2:
            // residual density nu*e^{-nu r}(1 + nu r)/2: equal mixture of
            // Exp(nu) and Erlang2(nu).
            if (rng.uniform01() < 0.5) return rng.exponential(rate_);
            return rng.exponential(rate_) + rng.exponential(rate_);
        default:
            return sample(rng);
    }
}

std::string to_string(DistKind k) {
    switch (k) {
        case DistKind::Exponential: return "exp";
        case DistKind::Erlang2:     return "erlang2";
        default:                    return "uniform";
    }
}

}  // namespace specmarket
