#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "specmarket/distributions.hpp"

using namespace specmarket;

namespace {

// Simpson quadrature on [0, hi], independent oracle for the moment formulas.
double quad(const std::function<double(double)>& f, double hi, int n = 20000) {
    const double h = hi / n;
    double acc = f(0.0) + f(hi);
    for (int i = 1; i < n; ++i) acc += f(i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

struct Empirical {
    double mean, m2, se_mean, se_m2;
};

Empirical sample_moments(const DistSpec& d, std::uint64_t seed, long n) {
    Rng rng(seed);
    double s1 = 0, s2 = 0, s4 = 0;
    for (long i = 0; i < n; ++i) {
        const double v = d.sample(rng);
        s1 += v;
        s2 += v * v;
        s4 += v * v * v * v;
    }
    const double m = s1 / n, m2 = s2 / n, m4 = s4 / n;
    return {m, m2, std::sqrt((m2 - m * m) / n), std::sqrt(std::max(0.0, m4 - m2 * m2) / n)};
}

}  // namespace

TEST_CASE("closed-form moments") {
    CHECK(moments(DistSpec::exponential(1.0)).mean == doctest::Approx(1.0));
    CHECK(moments(DistSpec::exponential(1.0)).second_moment == doctest::Approx(2.0));
    CHECK(moments(DistSpec::erlang2(1.0)).mean == doctest::Approx(2.0));
    CHECK(moments(DistSpec::erlang2(1.0)).second_moment == doctest::Approx(6.0));
    CHECK(moments(DistSpec::uniform(0.1, 1.9)).mean == doctest::Approx(1.0));
    CHECK(moments(DistSpec::uniform(0.1, 1.9)).second_moment == doctest::Approx(1.27));
}

TEST_CASE("erlang2 moments against quadrature") {
    const double mu = 1.0;
    const auto pdf = [&](double t) { return mu * mu * t * std::exp(-mu * t); };
    CHECK(quad([&](double t) { return t * pdf(t); }, 60.0) ==
          doctest::Approx(2.0).epsilon(1e-8));
    CHECK(quad([&](double t) { return t * t * pdf(t); }, 60.0) ==
          doctest::Approx(6.0).epsilon(1e-8));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(DistSpec::exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(DistSpec::erlang2(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(DistSpec::uniform(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(DistSpec::uniform(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("sample support") {
    Rng rng(7);
    const DistSpec u = DistSpec::uniform(0.1, 1.9);
    const DistSpec e = DistSpec::exponential(1.0);
    for (int i = 0; i < 1000; ++i) {
        const double uv = u.sample(rng);
        CHECK(uv >= 0.1);
        CHECK(uv <= 1.9);
        CHECK(e.sample(rng) >= 0.0);
    }
}

TEST_CASE("empirical moments match closed forms within 3 SE") {
    const long n = 1000000;
    const std::vector<DistSpec> specs = {
        DistSpec::exponential(2.0), DistSpec::exponential(0.5), DistSpec::erlang2(1.5),
        DistSpec::uniform(0.1, 1.9), DistSpec::uniform(0.0, 3.0)};
    std::uint64_t seed = 42;
    for (const auto& d : specs) {
        const Empirical e = sample_moments(d, seed++, n);
        CHECK(std::fabs(e.mean - d.mean()) <= 3.0 * e.se_mean);
        CHECK(std::fabs(e.m2 - d.second_moment()) <= 3.0 * e.se_m2);
    }
    // The spec's law-of-large-numbers example: Exp(2), 1e6 samples.
    const Empirical e = sample_moments(DistSpec::exponential(2.0), 9001, n);
    CHECK(std::fabs(e.mean - 0.5) < 0.01);
}

TEST_CASE("determinism per seed, independence per stream") {
    Rng a(123), b(123);
    const DistSpec d = DistSpec::erlang2(0.7);
    for (int i = 0; i < 100; ++i) CHECK(d.sample(a) == d.sample(b));

    Rng s0 = Rng::stream(123, 0), s1 = Rng::stream(123, 1);
    bool all_equal = true;
    for (int i = 0; i < 16; ++i)
        if (s0.raw() != s1.raw()) all_equal = false;
    CHECK_FALSE(all_equal);
}

TEST_CASE("stationary residual of erlang2") {
    // E[residual] = E[Z^2]/(2 E[Z]) = 1.5/nu for Erlang2(nu).
    const DistSpec z = DistSpec::erlang2(0.5);
    Rng rng(77);
    double acc = 0.0;
    const long n = 500000;
    for (long i = 0; i < n; ++i) acc += z.sample_stationary_residual(rng);
    CHECK(acc / n == doctest::Approx(3.0).epsilon(0.01));
}
