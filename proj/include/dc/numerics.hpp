#pragma once

#include <functional>
#include <vector>

#include "dc/types.hpp"

namespace dc::numerics {

// Gauss-Legendre nodes/weights on [-1,1], computed once per order and cached.
const std::vector<double>& gl_nodes(int n);
const std::vector<double>& gl_weights(int n);

struct QuadratureScheme {
    std::vector<double> panel_edges;  // ascending, >= 0
    int points_per_panel = 24;
    double tail_scale = 0.0;  // > 0: exponential-map tail rule beyond the last edge
};

// Geometrically graded panels from x0 to x1 (ratio r), prepended edge at 0 if from_zero.
QuadratureScheme graded_scheme(double x0, double x1, double ratio = 2.0, int pts = 24,
                               bool from_zero = true, double tail_scale = 0.0);

struct QuadResult {
    Cplx value;
    double error_estimate;
};

// Panel-summed Gauss-Legendre with embedded (half-order) error estimate;
// optional exponential-mapped tail rule past the last edge.
QuadResult quad_halfline(const std::function<Cplx(double)>& f, const QuadratureScheme& scheme);

// Adaptive refinement wrapper: bisects panels until the summed estimate meets tol.
QuadResult quad_adaptive(const std::function<Cplx(double)>& f, double a, double b, double tol,
                         int max_depth = 12, int pts = 16);

// Nodes and weights of a scheme flattened to the half-line (tail rule excluded).
void scheme_nodes(const QuadratureScheme& s, std::vector<double>& xs, std::vector<double>& ws);

// Adaptive embedded Runge-Kutta (Cash-Karp 4/5) for f' = M(x) f, f ∈ C^2.
Spinor ode_rkf(const std::function<Mat2(double)>& M, double x0, const Spinor& f0, double x1,
               double tol = 1e-11);

// Ground-truth power series oracles (Kahan-compensated), |z| small.
Cplx series_1F1(Cplx a, Cplx c, Cplx z);          // regularized: 1F1/Gamma(c)
Cplx series_2F1(Cplx a, Cplx b, Cplx c, Cplx z);  // regularized: 2F1/Gamma(c), |z| <= 0.95

// Independent Whittaker-K check via the Laplace representation of the
// Tricomi-type solution; requires Re(1/2+m-beta) > 0, x > 0. Test use only.
Cplx laplace_K_oracle(Cplx beta, Cplx m, double x);

// First-order Richardson: value at eps and eps/2 -> extrapolated limit.
inline Cplx richardson(Cplx v_eps, Cplx v_half) { return 2.0 * v_half - v_eps; }
inline double richardson(double v_eps, double v_half) { return 2.0 * v_half - v_eps; }

// Three-point Richardson for first-order sequences sampled at eps, eps/2, eps/4.
inline Cplx richardson3(Cplx v1, Cplx v2, Cplx v4) {
    // eliminates O(eps) and O(eps^2)
    return (8.0 * v4 - 6.0 * v2 + v1) / 3.0;
}

// In-place radix-2 complex FFT, n a power of two; sign = -1 forward.
void fft(std::vector<Cplx>& data, int sign);

// Finite-difference weights on an arbitrary node set (Fornberg), derivative order m,
// evaluated at x0; returns one weight per node.
std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m);

}  // namespace dc::numerics
