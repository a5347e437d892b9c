#include "qosc/model.hpp"

#include <cmath>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

std::string_view to_string(Variant v) {
    return v == Variant::Complete ? "complete" : "rwa";
}

ValidatedParams validate(const ModelParams& p) {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!finite(p.omega0) || !finite(p.omega) || !finite(p.g) || !finite(p.lambda) ||
        !finite(p.mu) || !finite(p.gamma))
        throw DomainError("model parameters must be finite");
    if (p.omega0 <= 0.0) throw DomainError("omega0 must be positive");
    if (p.omega <= 0.0) throw DomainError("omega must be positive");
    if (p.g < 0.0) throw DomainError("g must be non-negative");
    if (p.gamma < 0.0) throw DomainError("gamma must be non-negative");
    if (p.lambda < 0.0) throw DomainError("lambda must be non-negative");

    if (p.variant == Variant::Complete && p.lambda >= 0.5 * p.omega)
        throw StabilityError("complete model requires lambda < omega/2 (lambda = " +
                             std::to_string(p.lambda) + ")");
    if (p.variant == Variant::Rwa && p.lambda >= p.omega)
        throw StabilityError("rwa model requires lambda < omega (lambda = " +
                             std::to_string(p.lambda) + ")");
    return ValidatedParams(p);
}

DerivedParams derive(const ValidatedParams& vp, SqueezeConvention convention) {
    const ModelParams& p = vp.get();
    DerivedParams d;
    const double w = p.omega;
    const double lam = p.lambda;

    if (p.variant == Variant::Complete) {
        const double scale = convention == SqueezeConvention::QuarterLog ? 0.25 : 1.0;
        d.r_plus = scale * std::log1p(2.0 * lam / w);
        d.r_minus = scale * std::log1p(-2.0 * lam / w);
        d.Omega_plus = w * std::cosh(2.0 * d.r_plus) + lam * std::exp(-2.0 * d.r_plus);
        d.Omega_minus = w * std::cosh(2.0 * d.r_minus) - lam * std::exp(-2.0 * d.r_minus);
        d.delta = p.g * p.mu / (w + 2.0 * lam);
    } else {
        d.Omega_plus = w + lam;
        d.Omega_minus = w - lam;
        d.delta = p.g * p.mu / (w + lam);
    }

    d.lam_plus = p.g * std::exp(-d.r_plus) / (std::sqrt(2.0) * d.Omega_plus);
    d.lam_minus = p.g * std::exp(-d.r_minus) / (std::sqrt(2.0) * d.Omega_minus);
    d.omega0_eff = p.omega0 - 4.0 * p.g * d.delta;
    d.chi = 2.0 * p.g * p.g *
            (std::exp(-2.0 * d.r_minus) / d.Omega_minus - std::exp(-2.0 * d.r_plus) / d.Omega_plus);
    return d;
}

} // namespace qosc
