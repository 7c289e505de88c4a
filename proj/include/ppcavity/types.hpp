#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ppcavity/errors.hpp"

namespace ppcavity {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// A point of the doubled phase space. `alpha` and `beta_star` are two
// independent complex amplitudes; nothing constrains beta_star to be the
// conjugate of alpha.
struct PhasePoint {
    Complex alpha{0.0, 0.0};
    Complex beta_star{0.0, 0.0};
};

inline bool is_finite(const PhasePoint& p) {
    return is_finite(p.alpha) && is_finite(p.beta_star);
}

// Uniform time grid: nodes t_i = t0 + i*dt for i in [0, n).
struct TimeGrid {
    double t0{0.0};
    double dt{0.0};
    std::size_t n{0};

    TimeGrid() = default;
    TimeGrid(double t0_, double dt_, std::size_t n_) : t0(t0_), dt(dt_), n(n_) {
        if (!(dt > 0.0) || !is_finite(dt) || !is_finite(t0))
            throw GridError("TimeGrid: dt must be positive and finite");
        if (n == 0) throw GridError("TimeGrid: need at least one node");
    }

    double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    double t_end() const { return time(n - 1); }

    bool same_as(const TimeGrid& other) const {
        return t0 == other.t0 && dt == other.dt && n == other.n;
    }
};

// A complex-valued function sampled on a uniform grid, one value per node.
struct GridFunction {
    TimeGrid grid;
    std::vector<Complex> values;

    GridFunction() = default;
    GridFunction(TimeGrid g, std::vector<Complex> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.n)
            throw GridError("GridFunction: value count does not match grid");
    }

    // Sample a callable at every node.
    template <typename Fn>
    static GridFunction sample(const TimeGrid& g, Fn&& fn) {
        std::vector<Complex> v(g.n);
        for (std::size_t i = 0; i < g.n; ++i) v[i] = Complex(fn(g.time(i)));
        return GridFunction(g, std::move(v));
    }

    static GridFunction constant(const TimeGrid& g, Complex value) {
        return GridFunction(g, std::vector<Complex>(g.n, value));
    }

    std::size_t size() const { return values.size(); }
    Complex operator[](std::size_t i) const { return values[i]; }
    Complex& operator[](std::size_t i) { return values[i]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

}  // namespace ppcavity
