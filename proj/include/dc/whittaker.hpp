#pragma once

#include "dc/types.hpp"

namespace dc::whittaker {

// Parameter pair (beta, m) of the Whittaker equation.
struct WhittakerParams {
    Cplx beta;
    Cplx m;
};

inline bool degenerate(const WhittakerParams& p, double tol = 1e-6) {
    Cplx tm = 2.0 * p.m;
    return std::abs(tm - Cplx(std::round(tm.real()), 0)) < tol;
}

enum class RecurrenceKind {
    REI1, REI2, REI3, REI4, REI5, REI6,
    REK1, REK2, REK3, REK4, REK5, REK6,
    RERI1, RERI2, RERK1, RERK2,
};

// Hyperbolic-type solutions.
Cplx whittaker_I(const WhittakerParams& p, Cplx z);
Cplx whittaker_K(const WhittakerParams& p, Cplx z);

// K_{-beta,m}(e^{+-i pi} z) through the I-combination (analytic continuation).
Cplx whittaker_K_rotated(const WhittakerParams& p, Cplx z, Sign rotation);

// Derivatives in z, via the half-step recurrences (exact).
Cplx whittaker_I_deriv(const WhittakerParams& p, Cplx z);
Cplx whittaker_K_deriv(const WhittakerParams& p, Cplx z);

// Trigonometric-type solutions.
Cplx trig_J(const WhittakerParams& p, Cplx z);
Cplx trig_H(const WhittakerParams& p, Cplx z, Sign sign);

// Regularized Mellin transform of J_{beta,m}(v x): closed form; the two internal
// i0 prescriptions are computed and required to agree.
Cplx mellin_J(const WhittakerParams& p, double v, double s);
Cplx mellin_J_onesided(const WhittakerParams& p, double v, double s, Sign prescription);

// LHS - RHS of the selected recurrence identity; derivative by central differences.
Cplx recurrence_residual(RecurrenceKind kind, const WhittakerParams& p, Cplx z);

// Leading small-z branch coefficients of K: K ~ Cp z^{1/2+m} + Cm z^{1/2-m}.
void k_smallx_coeffs(const WhittakerParams& p, Cplx& c_plus, Cplx& c_minus);

}  // namespace dc::whittaker
