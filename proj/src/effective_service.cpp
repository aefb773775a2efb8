#include "specmarket/effective_service.hpp"

namespace specmarket {

ServiceMoments::ServiceMoments(double m1_, double m2_) : m1(m1_), m2(m2_) {
    if (!(m1 > 0.0)) throw std::invalid_argument("ServiceMoments: m1 must be > 0");
    if (m2 < m1 * m1)
        throw std::invalid_argument("ServiceMoments: m2 violates Jensen (m2 < m1^2)");
}

double effective_first_moment(const DistSpec& x, const DistSpec& y, const DistSpec& z) {
    return x.mean() * (1.0 + y.mean() / z.mean());
}

double second_moment_exp(double mu_x, double nu_on, double nu_off) {
    const double on2 = nu_on * nu_on, x2 = mu_x * mu_x;
    return 2.0 * nu_off * nu_off / (on2 * x2) + 2.0 * nu_off / (on2 * mu_x)
         + 4.0 * nu_off / (nu_on * x2) + 2.0 / x2;
}

double second_moment_erl(double mu_x, double nu_on, double nu_off) {
    const double on2 = nu_on * nu_on, x2 = mu_x * mu_x;
    const double d = 2.0 * nu_off + mu_x;
    return 6.0 * nu_off / (on2 * mu_x) + 12.0 * nu_off / (nu_on * x2) + 6.0 / x2
         + 8.0 * nu_off * nu_off * nu_off * (3.0 * nu_off + 2.0 * mu_x) / (on2 * x2 * d * d);
}

double second_moment_uniexp(double x_lo, double x_up, double nu_on, double nu_off) {
    // E[Xe^2] = E[X^2](1 + nu_off/nu_on)^2 + 2 nu_off E[X] / nu_on^2 for an
    // exponential OFF renewal overlay (Poisson interruption counting) with
    // exponential ON insertions.
    const double ex = 0.5 * (x_lo + x_up);
    const double ex2 = (x_lo * x_lo + x_lo * x_up + x_up * x_up) / 3.0;
    const double r = 1.0 + nu_off / nu_on;
    return ex2 * r * r + 2.0 * nu_off * ex / (nu_on * nu_on);
}

double second_moment_erlexp(double mu_x, double nu_on, double nu_off) {
    const double on2 = nu_on * nu_on, x2 = mu_x * mu_x;
    return 6.0 * nu_off * nu_off / (on2 * x2) + 4.0 * nu_off / (on2 * mu_x)
         + 12.0 * nu_off / (nu_on * x2) + 6.0 / x2;
}

double second_moment_experl(double mu_x, double nu_on, double nu_off) {
    const double on2 = nu_on * nu_on, x2 = mu_x * mu_x;
    return 4.0 * nu_off * nu_off * nu_off / (on2 * x2 * (2.0 * nu_off + mu_x))
         + 3.0 * nu_off / (on2 * mu_x) + 4.0 * nu_off / (nu_on * x2) + 2.0 / x2;
}

std::optional<ComboKind> classify_combo(const DistSpec& x, const DistSpec& y,
                                        const DistSpec& z) {
    const auto xk = x.kind(), yk = y.kind(), zk = z.kind();
    using K = DistKind;
    if (yk == K::Exponential && zk == K::Exponential) {
        if (xk == K::Exponential) return ComboKind::Exp;
        if (xk == K::Erlang2) return ComboKind::ErlExp;
        if (xk == K::Uniform) return ComboKind::UniExp;
    }
    if (yk == K::Erlang2 && zk == K::Erlang2) {
        if (xk == K::Erlang2) return ComboKind::Erl;
        if (xk == K::Exponential) return ComboKind::ExpErl;
    }
    return std::nullopt;
}

double effective_second_moment(ComboKind combo, const DistSpec& x, const DistSpec& y,
                               const DistSpec& z) {
    const auto inferred = classify_combo(x, y, z);
    if (!inferred || *inferred != combo)
        throw std::invalid_argument("effective_second_moment: distribution families do "
                                    "not match combo " + to_string(combo));
    switch (combo) {
        case ComboKind::Exp:    return second_moment_exp(x.rate(), y.rate(), z.rate());
        case ComboKind::Erl:    return second_moment_erl(x.rate(), y.rate(), z.rate());
        case ComboKind::UniExp: return second_moment_uniexp(x.lo(), x.hi(), y.rate(), z.rate());
        case ComboKind::ErlExp: return second_moment_erlexp(x.rate(), y.rate(), z.rate());
        default:                return second_moment_experl(x.rate(), y.rate(), z.rate());
    }
}

ServiceMoments effective_moments(const DistSpec& x, const DistSpec& y, const DistSpec& z) {
    const auto combo = classify_combo(x, y, z);
    if (!combo)
        throw std::invalid_argument(
            "effective_moments: no closed-form second moment for families ("
            + to_string(x.kind()) + ", " + to_string(y.kind()) + ", " + to_string(z.kind())
            + "); estimate via the simulator instead");
    return ServiceMoments(effective_first_moment(x, y, z),
                          effective_second_moment(*combo, x, y, z));
}

std::string to_string(ComboKind k) {
    switch (k) {
        case ComboKind::Exp:    return "Exp";
        case ComboKind::Erl:    return "Erl";
        case ComboKind::UniExp: return "UniExp";
        case ComboKind::ErlExp: return "ErlExp";
        default:                return "ExpErl";
    }
}

}  // namespace specmarket
