#pragma once

#include <functional>
#include <vector>

#include "ppcavity/model.hpp"
#include "ppcavity/types.hpp"

// Independent deterministic integrator and defect checker. Everything here
// is kept free of the solution machinery in analytic.hpp so that agreement
// between the two is evidence rather than tautology.

namespace ppcavity::oracle {

// Right-hand side evaluator for an autonomous-or-not first-order system of
// complex components. Must return a derivative of the same length as the
// state it was given.
using VectorField =
    std::function<std::vector<Complex>(double t, const std::vector<Complex>& state)>;

// Classic fourth-order Runge-Kutta over the grid, one step per grid panel.
// Returns one state per node (the first is `init`). Throws BlowUpError if
// any component magnitude exceeds 1e12.
std::vector<std::vector<Complex>> rk4_integrate(const VectorField& field,
                                                std::vector<Complex> init,
                                                const TimeGrid& grid);

// Fourth-order finite-difference derivative of a sampled function: centered
// five-point stencils inside, one-sided five-point stencils at the first and
// last two nodes. Requires n >= 5 (GridError otherwise).
std::vector<Complex> fd_derivative(const GridFunction& fn);

// Pointwise defect of a candidate pair (x, y) against the coupled system:
// at each node the larger of |Dx - (a x + b x^2 y + f)| and
// |Dy - (c y + d y^2 x + g)| where D is the finite difference above.
std::vector<double> residual_profile(const GridFunction& x, const GridFunction& y,
                                     const CoefficientSystem& coeffs);

// Max-norm of residual_profile over all nodes.
double ode_residual(const GridFunction& x, const GridFunction& y,
                    const CoefficientSystem& coeffs);

}  // namespace ppcavity::oracle
