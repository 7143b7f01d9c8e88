#pragma once

#include <functional>
#include <vector>

#include "dc/solutions.hpp"

namespace dc::resolvent {

using manifold::ManifoldPoint;
using solutions::EnergyContext;

// Rectangular grid of 2x2 kernel values over (x, y) nodes on the half-line.
struct KernelGrid {
    std::vector<double> xs;  // ascending, > 0
    std::vector<double> ys;
    std::vector<Mat2> values;  // row-major, values[i*ys.size()+j] = G(x_i, y_j)

    const Mat2& at(size_t i, size_t j) const { return values[i * ys.size() + j]; }
};

// Sampled C^2-valued function with quadrature weights.
struct SampledFunction {
    std::vector<double> nodes;    // ascending, > 0
    std::vector<double> weights;  // positive
    std::vector<Spinor> values;
};

// Two-sided Green's kernel of D_p at k in C_± (family = sgn Im k), p off E^±.
Mat2 green_kernel(const ManifoldPoint& p, const EnergyContext& ctx, double x, double y);

// Boundary values G(k ± i0), k real nonzero, via the trigonometric-form solutions.
Mat2 green_boundary(const ManifoldPoint& p, double k, Sign side, double x, double y);

// Zero-energy kernel, Re mu > 0.
Mat2 green_zero(const ManifoldPoint& p, double x, double y);

// Spectral density Pi_p(k; x, y), k real nonzero, p off both exceptional sets.
Mat2 spectral_density(const ManifoldPoint& p, double k, double x, double y);

// Small-k leading coefficient Pi_p^0(x,y) of the density expansion.
Mat2 spectral_density_zero_coeff(const ManifoldPoint& p, double x, double y);

// Quadrature nodes adapted to the resolvent application at spectral parameter k.
SampledFunction sample_function(const std::function<Spinor(double)>& f, Cplx k,
                                int points_per_panel = 24);

// g(x_i) = sum_j w_j G(k; x_i, y_j) f(y_j) over the sample's own nodes.
SampledFunction apply_resolvent(const ManifoldPoint& p, const EnergyContext& ctx,
                                const SampledFunction& f);

// Resolvent applied to an analytic f, evaluated at one x with quadrature panels
// split at x (continuous in x; used by the defect oracle).
Spinor apply_resolvent_at(const ManifoldPoint& p, const EnergyContext& ctx,
                          const std::function<Spinor(double)>& f, double x, double x_max);

// Elementary omega = 0 resolvent kernels of D_lambda^{+-} (exponential closed form).
Mat2 elementary_kernel(Cplx lambda, Sign family, const EnergyContext& ctx, double x, double y);

// Jordan chain element f_n of D_lambda^{family} at eigenvalue k (in C_family).
Spinor jordan_chain(Cplx lambda, Sign family, Cplx k, int n, double x);

KernelGrid fill_grid(const std::function<Mat2(double, double)>& kernel,
                     const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace dc::resolvent
