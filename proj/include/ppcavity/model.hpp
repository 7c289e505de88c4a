#pragma once

#include "ppcavity/types.hpp"

namespace ppcavity {

// Physical parameters of the driven cavity mode with two-photon losses:
// decay rate gamma, detuning delta, two-photon loss coefficient kappa,
// complex drive E. The linear coefficient a = -(gamma/2 + i*delta) is
// always recomputed from gamma and delta.
class PhysicalParams {
public:
    PhysicalParams(double gamma, double delta, double kappa, Complex drive);

    double gamma() const { return gamma_; }
    double delta() const { return delta_; }
    double kappa() const { return kappa_; }
    Complex drive() const { return drive_; }

    Complex a() const { return Complex(-0.5 * gamma_, -delta_); }

private:
    double gamma_;
    double delta_;
    double kappa_;
    Complex drive_;
};

// Validating factory. Throws DomainError for gamma < 0, kappa <= 0 or any
// non-finite input.
PhysicalParams make_params(double gamma, double delta, double kappa, Complex drive);

// Deterministic part of the equations of motion,
//   d(alpha)/dt     = a*alpha     - kappa*alpha^2*beta_star + E
//   d(beta_star)/dt = a**beta_star - kappa*beta_star^2*alpha + E*
// returned as a tangent expressed in phase-space components. Pure.
PhasePoint drift(const PhasePoint& state, const PhysicalParams& params);

// Diagonal noise factor g: g11 = i*sqrt(kappa)*alpha,
// g22 = -i*sqrt(kappa)*beta_star. Squaring either entry reproduces the
// corresponding diagonal of the diffusion matrix (-kappa*alpha^2,
// -kappa*beta_star^2).
struct DiffusionFactor {
    Complex g11;
    Complex g22;
};

DiffusionFactor diffusion_factor(const PhasePoint& state, const PhysicalParams& params);

// The six time-dependent coefficients of the abstract coupled system
//   dx/dt = a(t)x + b(t)x^2 y + f(t)
//   dy/dt = c(t)y + d(t)y^2 x + g(t)
// sampled on a shared uniform grid.
struct CoefficientSystem {
    TimeGrid grid;
    std::vector<Complex> a, b, c, d, f, g;

    bool is_homogeneous() const {
        for (const auto& v : f)
            if (v != Complex{}) return false;
        for (const auto& v : g)
            if (v != Complex{}) return false;
        return true;
    }
};

// Maps the physical model onto the abstract system with the sign convention
// of the +b*x^2*y template: a(t)=a, c(t)=a*, b(t)=d(t)=-kappa, f(t)=E,
// g(t)=E*. All values constant over the grid.
CoefficientSystem to_coefficient_system(const PhysicalParams& params, const TimeGrid& grid);

// Large-drive rescaling x = alpha/E, y = beta_star/E. The rescaled loss is
// b_tilde = kappa*|E|^2 and the multiplicative-noise amplitude becomes
// sqrt(b_tilde)/|E| = sqrt(kappa), so it shrinks as 1/|E| at fixed b_tilde.
class ScaledSystem {
public:
    ScaledSystem(const PhysicalParams& params);

    double b_tilde() const { return b_tilde_; }
    double noise_amp() const { return noise_amp_; }
    const PhysicalParams& params() const { return params_; }

    // State maps alpha = x*E, beta_star = y*E.
    PhasePoint to_scaled(const PhasePoint& physical) const;
    PhasePoint from_scaled(const PhasePoint& scaled) const;

    // Drift of the rescaled system, (a x - b_tilde x^2 y + 1,
    // a* y - b_tilde y^2 x + 1). For real drive this times E equals the
    // physical drift at (xE, yE).
    PhasePoint scaled_drift(const PhasePoint& scaled) const;

private:
    PhysicalParams params_;
    double b_tilde_;
    double noise_amp_;
};

// Throws DomainError when E = 0.
ScaledSystem scale_large_field(const PhysicalParams& params);

}  // namespace ppcavity
