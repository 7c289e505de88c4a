#pragma once

#include <array>
#include <vector>

#include "ppcavity/model.hpp"
#include "ppcavity/types.hpp"

namespace ppcavity {

// c3*Z^3 + c2*Z^2 + c1*Z + c0 with complex coefficients.
struct CubicPoly {
    Complex c3, c2, c1, c0;

    Complex eval(Complex z) const { return ((c3 * z + c2) * z + c1) * z + c0; }
    Complex deriv(Complex z) const { return (3.0 * c3 * z + 2.0 * c2) * z + c1; }
    double max_coeff() const;
};

// Which route produces the stationary candidates.
//
// PaperEq43 takes the published cubic together with the published state map
// alpha = -(a* Z0 + E*)/(kappa Z0^2). SelfConsistent re-derives the cubic by
// eliminating alpha from the two zero-drift conditions, which forces the
// opposite sign, alpha = +(a* Z0 + E*)/(kappa Z0^2). The two cubics agree;
// the maps do not, so PaperEq43 candidates can fail the drift-residual test.
enum class CubicMode { PaperEq43, SelfConsistent };

// Builds the stationary cubic in Z0 = beta_star. Requires |E| > 0
// (DegenerateError otherwise; the E = 0 stationary state is handled by
// stationary_points directly).
CubicPoly stationary_cubic(const PhysicalParams& params, CubicMode mode);

// All three complex roots, sorted by (Re, Im), each polished by one Newton
// step. Every returned root satisfies |poly(root)| < 1e-10 * max|c_i|;
// ConvergenceError if polishing cannot reach that. Multiple roots are
// reported by repetition.
std::array<Complex, 3> solve_cubic(const CubicPoly& poly);

// 2x2 complex Jacobian of the deterministic drift at a state, in the basis
// (alpha, beta_star).
struct Jacobian2 {
    Complex m00, m01, m10, m11;

    Complex trace() const { return m00 + m11; }
    Complex det() const { return m00 * m11 - m01 * m10; }
};

Jacobian2 jacobian(const PhasePoint& state, const PhysicalParams& params);

enum class Stability { Stable, Unstable, Marginal };

const char* to_string(Stability s);

struct Classification {
    Stability stability;
    std::array<Complex, 2> eigenvalues;  // sorted by (Re, Im)
};

// Eigenvalues of the drift Jacobian via the closed-form quadratic. Stable
// iff both real parts < -eps, Unstable iff any real part > +eps, Marginal
// otherwise, with eps = 1e-9 * (1 + |a|).
Classification classify_stability(const PhasePoint& state, const PhysicalParams& params);

struct StationaryPoint {
    PhasePoint point;
    double residual;  // max(|F1|, |F2|) of the drift at the point
    Stability classification;
    std::array<Complex, 2> eigenvalues;
};

// Candidates that pass the drift-residual filter land in `accepted`; the
// rest are kept in `rejected` with their residuals so a bad state map is
// visible instead of silently dropped.
struct StationaryAnalysis {
    std::vector<StationaryPoint> accepted;
    std::vector<StationaryPoint> rejected;
};

// Stationary states of the noiseless system. For E = 0 this is exactly the
// origin. Otherwise each cubic root Z0 is mapped to a candidate
// (alpha(Z0), Z0) and accepted only if its drift residual is below
// 1e-8 * max(1, |E|).
StationaryAnalysis stationary_points(const PhysicalParams& params, CubicMode mode);

}  // namespace ppcavity
