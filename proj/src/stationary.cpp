#include "ppcavity/stationary.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace ppcavity {

namespace {

constexpr double kRootResidualTol = 1e-10;

bool complex_less(const Complex& lhs, const Complex& rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
    return lhs.imag() < rhs.imag();
}

double drift_residual(const PhasePoint& state, const PhysicalParams& params) {
    const PhasePoint f = drift(state, params);
    return std::max(std::abs(f.alpha), std::abs(f.beta_star));
}

}  // namespace

double CubicPoly::max_coeff() const {
    return std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
}

CubicPoly stationary_cubic(const PhysicalParams& params, CubicMode mode) {
    const Complex e = params.drive();
    if (std::abs(e) == 0.0)
        throw DegenerateError("stationary_cubic: leading coefficient vanishes for E = 0");

    const Complex a = params.a();
    const Complex as = std::conj(a);
    const Complex es = std::conj(e);
    const double kappa = params.kappa();

    if (mode == CubicMode::PaperEq43) {
        return CubicPoly{kappa * e, as * (a - as), es * (a - 2.0 * as), -es * es};
    }
    // Eliminating alpha = (a* Z0 + E*)/(kappa Z0^2) from the first zero-drift
    // condition and clearing denominators gives
    //   kappa E Z0^3 + (a a* - a*^2) Z0^2 + (a E* - 2 a* E*) Z0 - E*^2 = 0,
    // the same coefficients the published cubic carries.
    return CubicPoly{kappa * e, a * as - as * as, a * es - 2.0 * as * es, -es * es};
}

std::array<Complex, 3> solve_cubic(const CubicPoly& poly) {
    if (std::abs(poly.c3) == 0.0)
        throw DegenerateError("solve_cubic: leading coefficient must be nonzero");

    // Companion matrix of the monic polynomial z^3 + p z^2 + q z + r.
    const Complex p = poly.c2 / poly.c3;
    const Complex q = poly.c1 / poly.c3;
    const Complex r = poly.c0 / poly.c3;

    Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
    companion(0, 2) = -r;
    companion(1, 0) = 1.0;
    companion(1, 2) = -q;
    companion(2, 1) = 1.0;
    companion(2, 2) = -p;

    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("solve_cubic: companion eigenvalue iteration failed");

    std::array<Complex, 3> roots;
    for (int i = 0; i < 3; ++i) {
        Complex z = solver.eigenvalues()(i);
        // One Newton polish; skipped near multiple roots where the
        // derivative underflows and the step would be unstable.
        const Complex dp = poly.deriv(z);
        if (std::abs(dp) > 1e-30) {
            const Complex step = poly.eval(z) / dp;
            if (std::abs(step) < 1.0) z -= step;
        }
        roots[i] = z;
    }

    const double tol = kRootResidualTol * poly.max_coeff();
    for (const auto& z : roots) {
        if (!is_finite(z) || std::abs(poly.eval(z)) >= tol)
            throw ConvergenceError("solve_cubic: root residual above tolerance after polish");
    }

    std::sort(roots.begin(), roots.end(), complex_less);
    return roots;
}

Jacobian2 jacobian(const PhasePoint& state, const PhysicalParams& params) {
    const Complex a = params.a();
    const double kappa = params.kappa();
    const Complex alpha = state.alpha;
    const Complex beta = state.beta_star;
    return Jacobian2{
        a - 2.0 * kappa * alpha * beta,
        -kappa * alpha * alpha,
        -kappa * beta * beta,
        std::conj(a) - 2.0 * kappa * alpha * beta,
    };
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "Stable";
        case Stability::Unstable: return "Unstable";
        case Stability::Marginal: return "Marginal";
    }
    return "?";
}

Classification classify_stability(const PhasePoint& state, const PhysicalParams& params) {
    const Jacobian2 j = jacobian(state, params);
    const Complex half_trace = 0.5 * j.trace();
    const Complex disc = std::sqrt(half_trace * half_trace - j.det());
    std::array<Complex, 2> eig{half_trace - disc, half_trace + disc};
    if (complex_less(eig[1], eig[0])) std::swap(eig[0], eig[1]);

    const double eps = 1e-9 * (1.0 + std::abs(params.a()));
    Stability s;
    if (eig[0].real() > eps || eig[1].real() > eps)
        s = Stability::Unstable;
    else if (eig[0].real() < -eps && eig[1].real() < -eps)
        s = Stability::Stable;
    else
        s = Stability::Marginal;
    return Classification{s, eig};
}

StationaryAnalysis stationary_points(const PhysicalParams& params, CubicMode mode) {
    StationaryAnalysis out;

    const Complex e = params.drive();
    if (std::abs(e) == 0.0) {
        // The cubic-and-map route divides by Z0^2, so the undriven case is
        // read off the drift directly: the origin is the stationary state.
        const PhasePoint origin{};
        const Classification cls = classify_stability(origin, params);
        out.accepted.push_back(
            StationaryPoint{origin, drift_residual(origin, params), cls.stability, cls.eigenvalues});
        return out;
    }

    const CubicPoly cubic = stationary_cubic(params, mode);
    const auto roots = solve_cubic(cubic);
    const double accept_tol = 1e-8 * std::max(1.0, std::abs(e));
    const double map_sign = (mode == CubicMode::PaperEq43) ? -1.0 : +1.0;

    for (const Complex& z0 : roots) {
        const Complex alpha =
            map_sign * (std::conj(params.a()) * z0 + std::conj(e)) / (params.kappa() * z0 * z0);
        const PhasePoint candidate{alpha, z0};
        if (!is_finite(candidate)) continue;
        const double residual = drift_residual(candidate, params);
        const Classification cls = classify_stability(candidate, params);
        StationaryPoint pt{candidate, residual, cls.stability, cls.eigenvalues};
        if (residual < accept_tol)
            out.accepted.push_back(pt);
        else
            out.rejected.push_back(pt);
    }
    return out;
}

}  // namespace ppcavity
