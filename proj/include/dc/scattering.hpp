#pragma once

#include <vector>

#include "dc/manifold.hpp"
#include "dc/solutions.hpp"

namespace dc::scattering {

using manifold::ManifoldPoint;
using manifold::ProjectiveValue;

// Log-uniform grid x_j = e^{(j - n/2) h}, j = 0..n-1 (n a power of two).
struct MellinGrid {
    double h;
    size_t n;
    double x(size_t j) const { return std::exp((double(j) - 0.5 * double(n)) * h); }
    double t(size_t j) const { return (double(j) - 0.5 * double(n)) * h; }
    double s(size_t m) const {  // frequency of FFT bin m (signed)
        double mm = m < n / 2 ? double(m) : double(m) - double(n);
        return 2.0 * pi * mm / (double(n) * h);
    }
};

MellinGrid make_grid(size_t n = 4096, double x_min = 1e-4, double x_max = 1e4);

struct MellinSymbolResult {
    std::vector<Cplx> values;  // indexed by FFT bin
    bool alias_warning;
};

// Discrete Mellin pair on the grid (FFT based).
MellinSymbolResult mellin_forward(const MellinGrid& g, const std::vector<Cplx>& f);
std::vector<Cplx> mellin_inverse(const MellinGrid& g, const std::vector<Cplx>& symbol);

// Inversion J f(x) = f(1/x)/x on the grid.
std::vector<Cplx> apply_inversion(const MellinGrid& g, const std::vector<Cplx>& f);

// Mellin symbol Xi_p^family(eps, s) (two spinor components).
Spinor xi_mellin(const ManifoldPoint& p, Sign eps, Sign family, double s,
                 Sign prescription = Sign::Plus);

// Diagonalizer kernel row U^family(k, x) = e^{eps pi lambda/2}/sqrt(pi) xi^T.
Spinor u_kernel(const ManifoldPoint& p, Sign family, Cplx k, double x);

// Full scattering amplitude e^{-i eps pi mu} S_p as a projective value.
ProjectiveValue scattering_value(const ManifoldPoint& p, Sign eps);

// U applied to a sampled spinor function: output over k = +-x_j.
struct UResult {
    std::vector<double> k;      // 2n entries: -x_{n-1}..-x_0, x_0..x_{n-1}
    std::vector<Cplx> values;   // U f(k)
    std::vector<double> weights;  // dk quadrature weights (x_j h per branch)
    bool alias_warning;
};
UResult apply_u(const ManifoldPoint& p, Sign family, const MellinGrid& g,
                const std::vector<Spinor>& f);

// Transpose U^{family T} applied to a function on the k-side (2n samples over
// k = +-x_j as produced by apply_u); uses Xi(eps, -A) and the inversion.
std::vector<Spinor> apply_u_transpose(const ManifoldPoint& p, Sign family, const MellinGrid& g,
                                      const std::vector<Cplx>& h);

// D_{omega,lambda} applied on the log grid by 4th-order differences in t = ln x.
std::vector<Spinor> dirac_on_grid(const ManifoldPoint& p, const MellinGrid& g,
                                  const std::vector<Spinor>& f);

// L2 norm over the grid.
double grid_norm(const MellinGrid& g, const std::vector<Spinor>& f);

}  // namespace dc::scattering
