#pragma once

#include <functional>

#include "dc/manifold.hpp"
#include "dc/types.hpp"

namespace dc::solutions {

using manifold::ManifoldPoint;

// Spectral parameter plus the half-plane label eps_k = sgn(Re k) (0 on i R).
struct EnergyContext {
    Cplx k;
    explicit EnergyContext(Cplx k_) : k(k_) {}
    int eps() const;  // throws BranchCut when Re k = 0
    int eps_or_zero() const { return k.real() > 0 ? 1 : (k.real() < 0 ? -1 : 0); }
};

enum class Direction { Up, Down };

// Zero-energy power solutions eta^{up/down}.
Spinor eta(const ManifoldPoint& p, Direction dir, double x);

// Logarithmic zero-energy solutions, defined for mu = 0 (lambda = +-omega).
Spinor theta(Cplx omega, Direction dir, double x);

// Family solutions xi^s (recessive at 0) and zeta^s (recessive at infinity, k in C_s).
Spinor xi(const ManifoldPoint& p, Sign family, const EnergyContext& ctx, double x);
Spinor zeta(const ManifoldPoint& p, Sign family, const EnergyContext& ctx, double x);

// Canonical bisolution xi zeta^T - zeta xi^T (unit Wronskian); closed form at k = 0.
Mat2 bisolution(const ManifoldPoint& p, const EnergyContext& ctx, double x, double y);

// First-order system matrix of (D_{omega,lambda} - k) f = 0.
Mat2 dirac_system_matrix(const ManifoldPoint& p, Cplx k, double x);

// Independent verification: adaptive RK integration of the eigen-equation.
Spinor ode_oracle(const ManifoldPoint& p, const EnergyContext& ctx, double seed_x,
                  const Spinor& seed_value, double x, double tol = 1e-11);

// (D_{omega,lambda} f)(x) by 4th-order central differences of a callable solution.
Spinor apply_dirac_fd(const ManifoldPoint& p, const std::function<Spinor(double)>& f, double x);

// Family matching the half-plane of k (throws for real k).
Sign family_for_k(Cplx k);

}  // namespace dc::solutions
