#pragma once

#include <optional>
#include <vector>

#include "dc/manifold.hpp"
#include "dc/types.hpp"

namespace dc::mixedbc {

using manifold::ManifoldPoint;
using manifold::ProjectiveValue;

// Nonhomogeneous realization data: boundary function
// f(x) = [omega-lambda, -mu]^T x^mu + kappa [omega-lambda, mu]^T x^{-mu}.
struct MixedBoundaryData {
    ManifoldPoint p;  // |Re mu| < 1/2, mu != 0
    Cplx kappa;       // != 0
};

struct Window {
    double re_min, re_max, im_min, im_max;
    bool contains(Cplx k) const {
        return k.real() >= re_min && k.real() <= re_max && k.imag() >= im_min && k.imag() <= im_max;
    }
};

enum class LocusGeometry { Circle, HalfLineDiscrete, Spiral };

struct Eigenvalue {
    Cplx k;
    Sign sign;           // admissible half-plane family
    double residual;     // defining-equation residual
};

struct EigenvalueList {
    std::vector<Eigenvalue> entries;
    LocusGeometry geometry;
    bool finite;  // the full locus is finite (mu not purely imaginary)
};

// Coefficient c_{p,+-} as a projective value (never 0/0 in the admissible region).
ProjectiveValue c_coeff(const ManifoldPoint& p, Sign sign);

bool admissible(Cplx k, Sign sign, Cplx lambda);

// All eigenvalues of D^f in the window (mu != 0 case).
EigenvalueList eigenvalues(const MixedBoundaryData& data, const Window& window);

// mu = 0, omega = +-lambda != 0 case: at most one eigenvalue per half-plane.
std::vector<Eigenvalue> eigenvalues_mu0(Sign omega_eq_lambda, Cplx lambda, Cplx nu);

// Zero-fiber case: k eigenvalue of D_{[1:kappa]} iff k non-real, kappa = i sgn(Im k).
bool zero_fiber_eigen(Cplx kappa, Cplx k);

// Boundary function of the realization at x.
Spinor boundary_function(const MixedBoundaryData& data, double x);

// Boundary function continued to higher orders by the Frobenius recursion of
// the eigen-equation (seed for the outward ODE shot).
Spinor boundary_series(const MixedBoundaryData& data, Cplx k, double x, int orders = 4);

// Asymptotic-matching residual of a claimed eigenvalue via the small-z branch
// coefficients of K (independent of the c_coeff route).
double matching_residual(const MixedBoundaryData& data, Cplx k, Sign sign);

// Two-sided ODE verification: outward from the boundary data, inward from the
// decaying asymptote; also measures the L2 tail decay of the inward branch.
struct OdeVerification {
    double match_residual;   // normalized Wronskian of the two shots at x_mid
    double tail_ratio;       // I([T2,2T2]) / I([T1,2T1])
    double tail_bound;       // the geometric/polynomial bound it must beat
    bool decays;             // tail_ratio <= tail_bound
};
OdeVerification verify_eigen_ode(const MixedBoundaryData& data, Cplx k, Sign sign);

}  // namespace dc::mixedbc
