#include "ppcavity/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace ppcavity::oracle {

namespace {

constexpr double kBlowUpGuard = 1e12;

bool exceeds_guard(const std::vector<Complex>& state) {
    for (const auto& z : state)
        if (!is_finite(z) || std::abs(z) > kBlowUpGuard) return true;
    return false;
}

std::vector<Complex> axpy(const std::vector<Complex>& base, double scale,
                          const std::vector<Complex>& dir) {
    std::vector<Complex> out(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) out[i] = base[i] + scale * dir[i];
    return out;
}

}  // namespace

std::vector<std::vector<Complex>> rk4_integrate(const VectorField& field,
                                                std::vector<Complex> init,
                                                const TimeGrid& grid) {
    std::vector<std::vector<Complex>> states;
    states.reserve(grid.n);
    states.push_back(init);

    std::vector<Complex> y = std::move(init);
    const double h = grid.dt;
    for (std::size_t step = 0; step + 1 < grid.n; ++step) {
        const double t = grid.time(step);
        const auto k1 = field(t, y);
        const auto k2 = field(t + 0.5 * h, axpy(y, 0.5 * h, k1));
        const auto k3 = field(t + 0.5 * h, axpy(y, 0.5 * h, k2));
        const auto k4 = field(t + h, axpy(y, h, k3));
        for (std::size_t i = 0; i < y.size(); ++i)
            y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        if (exceeds_guard(y))
            throw BlowUpError("rk4_integrate: state magnitude exceeded 1e12", grid.time(step + 1));
        states.push_back(y);
    }
    return states;
}

std::vector<Complex> fd_derivative(const GridFunction& fn) {
    const std::size_t n = fn.size();
    if (n < 5) throw GridError("fd_derivative: need at least 5 nodes");
    const auto& v = fn.values;
    const double inv = 1.0 / (12.0 * fn.grid.dt);

    std::vector<Complex> d(n);
    d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) * inv;
    d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) * inv;
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) * inv;
    d[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4] - v[n - 5]) * inv;
    d[n - 1] =
        (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4] + 3.0 * v[n - 5]) * inv;
    return d;
}

std::vector<double> residual_profile(const GridFunction& x, const GridFunction& y,
                                     const CoefficientSystem& coeffs) {
    if (!x.grid.same_as(y.grid) || !x.grid.same_as(coeffs.grid))
        throw GridError("residual_profile: candidate and coefficients must share one grid");
    const std::size_t n = x.size();
    if (n < 5) throw GridError("residual_profile: need at least 5 nodes");

    const auto dx = fd_derivative(x);
    const auto dy = fd_derivative(y);
    std::vector<double> res(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex rx =
            dx[i] - (coeffs.a[i] * x[i] + coeffs.b[i] * x[i] * x[i] * y[i] + coeffs.f[i]);
        const Complex ry =
            dy[i] - (coeffs.c[i] * y[i] + coeffs.d[i] * y[i] * y[i] * x[i] + coeffs.g[i]);
        res[i] = std::max(std::abs(rx), std::abs(ry));
    }
    return res;
}

double ode_residual(const GridFunction& x, const GridFunction& y,
                    const CoefficientSystem& coeffs) {
    const auto profile = residual_profile(x, y, coeffs);
    return *std::max_element(profile.begin(), profile.end());
}

}  // namespace ppcavity::oracle
