#pragma once

#include "dc/types.hpp"

namespace dc::complexfn {

// Distance to the nearest nonpositive integer; *n receives it when non-null.
double dist_to_nonpos_int(Cplx z, long* n = nullptr);

// Gamma function.  Throws PoleAt when z is a nonpositive integer within 1e-14.
Cplx gamma(Cplx z);

// Entire reciprocal 1/Gamma; exact zero at nonpositive integers (1e-14 snapping).
Cplx rgamma(Cplx z);

// log Gamma, principal-ish branch (used only inside exponentials).
Cplx lgamma(Cplx z);

// Digamma.  Throws PoleAt at nonpositive integers.
Cplx digamma(Cplx z);

// Pochhammer (a)_n for integer n >= 0.
Cplx pochhammer(Cplx a, long n);

// Principal power z^a on C \ (-oo, 0]; power with an explicitly tracked argument.
Cplx cpow(Cplx z, Cplx a);
Cplx cpow_arg(double mod, double arg, Cplx a);

// Regularized confluent function 1F1(a;c;z)/Gamma(c), entire in all variables.
Cplx reg_1F1(Cplx a, Cplx c, Cplx z);

// Regularized Gauss function 2F1(a,b;c;z)/Gamma(c) on C \ [1, oo).
Cplx reg_2F1(Cplx a, Cplx b, Cplx c, Cplx z);

// Boundary value 2F1(a,b;c;x +- i0)/Gamma(c) for x > 1 via the 1-z connection.
Cplx reg_2F1_boundary(Cplx a, Cplx b, Cplx c, double x, Sign side);

// Tricomi U(a,b,w) on C \ (-oo, 0]; arg_w overrides the principal argument of w
// (needed when a rotated branch is intended).  Exact polynomial for a ∈ -N.
Cplx tricomi_U(Cplx a, Cplx b, Cplx w);
Cplx tricomi_U(Cplx a, Cplx b, Cplx w, double arg_w);

}  // namespace dc::complexfn
