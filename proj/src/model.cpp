#include "ppcavity/model.hpp"

#include <cmath>

namespace ppcavity {

PhysicalParams::PhysicalParams(double gamma, double delta, double kappa, Complex drive)
    : gamma_(gamma), delta_(delta), kappa_(kappa), drive_(drive) {
    if (!is_finite(gamma) || !is_finite(delta) || !is_finite(kappa) || !is_finite(drive))
        throw DomainError("PhysicalParams: all parameters must be finite");
    if (gamma < 0.0) throw DomainError("PhysicalParams: gamma must be >= 0");
    if (!(kappa > 0.0)) throw DomainError("PhysicalParams: kappa must be > 0");
}

PhysicalParams make_params(double gamma, double delta, double kappa, Complex drive) {
    return PhysicalParams(gamma, delta, kappa, drive);
}

PhasePoint drift(const PhasePoint& state, const PhysicalParams& params) {
    const Complex a = params.a();
    const double kappa = params.kappa();
    const Complex e = params.drive();
    const Complex alpha = state.alpha;
    const Complex beta = state.beta_star;
    return PhasePoint{
        a * alpha - kappa * alpha * alpha * beta + e,
        std::conj(a) * beta - kappa * beta * beta * alpha + std::conj(e),
    };
}

DiffusionFactor diffusion_factor(const PhasePoint& state, const PhysicalParams& params) {
    const double root_kappa = std::sqrt(params.kappa());
    const Complex i{0.0, 1.0};
    return DiffusionFactor{i * root_kappa * state.alpha, -i * root_kappa * state.beta_star};
}

CoefficientSystem to_coefficient_system(const PhysicalParams& params, const TimeGrid& grid) {
    const std::size_t n = grid.n;
    const Complex a = params.a();
    const Complex e = params.drive();
    CoefficientSystem sys;
    sys.grid = grid;
    sys.a.assign(n, a);
    sys.b.assign(n, Complex(-params.kappa(), 0.0));
    sys.c.assign(n, std::conj(a));
    sys.d.assign(n, Complex(-params.kappa(), 0.0));
    sys.f.assign(n, e);
    sys.g.assign(n, std::conj(e));
    return sys;
}

ScaledSystem::ScaledSystem(const PhysicalParams& params) : params_(params) {
    const double e_mag = std::abs(params.drive());
    if (e_mag == 0.0) throw DomainError("ScaledSystem: drive must be nonzero");
    b_tilde_ = params.kappa() * e_mag * e_mag;
    noise_amp_ = std::sqrt(b_tilde_) / e_mag;
}

PhasePoint ScaledSystem::to_scaled(const PhasePoint& physical) const {
    const Complex e = params_.drive();
    return PhasePoint{physical.alpha / e, physical.beta_star / e};
}

PhasePoint ScaledSystem::from_scaled(const PhasePoint& scaled) const {
    const Complex e = params_.drive();
    return PhasePoint{scaled.alpha * e, scaled.beta_star * e};
}

PhasePoint ScaledSystem::scaled_drift(const PhasePoint& scaled) const {
    const Complex a = params_.a();
    const Complex x = scaled.alpha;
    const Complex y = scaled.beta_star;
    return PhasePoint{
        a * x - b_tilde_ * x * x * y + 1.0,
        std::conj(a) * y - b_tilde_ * y * y * x + 1.0,
    };
}

ScaledSystem scale_large_field(const PhysicalParams& params) { return ScaledSystem(params); }

}  // namespace ppcavity
