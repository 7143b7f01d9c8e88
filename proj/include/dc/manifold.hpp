#pragma once

#include <optional>

#include "dc/types.hpp"

namespace dc::manifold {

// A point (omega, lambda, mu, [a:b]) of the blown-up null quadric.
// The ray is stored max-normalized: max(|a|,|b|) = 1.
struct ManifoldPoint {
    Cplx omega;
    Cplx lambda;
    Cplx mu;
    Cplx a;
    Cplx b;

    bool on_zero_fiber() const {
        return omega == Cplx(0, 0) && lambda == Cplx(0, 0) && mu == Cplx(0, 0);
    }
    bool b_chart() const { return std::abs(b) >= std::abs(a); }
    Cplx z() const { return a / b; }         // valid on {b != 0}
    Cplx zinv() const { return b / a; }      // valid on {a != 0}
    ManifoldPoint conj() const {
        return {std::conj(omega), std::conj(lambda), std::conj(mu), std::conj(a), std::conj(b)};
    }
};

ManifoldPoint point_from_triple(Cplx omega, Cplx lambda, Cplx mu);
ManifoldPoint point_zero_fiber(Cplx a, Cplx b);

// Projective equality of the rays of two points.
bool same_ray(const ManifoldPoint& p, const ManifoldPoint& q, double tol = 1e-12);

// Involution (omega, lambda, -mu, [-a:b]).
ManifoldPoint tau(const ManifoldPoint& p);

// N_p^{+-} = (z +- i)/Gamma(1 + mu -+ i lambda), chart-normalized:
// on {|a|>|b|} the equivalent a-chart expression (1 +- i/z)/Gamma(...) is returned.
Cplx n_factor(const ManifoldPoint& p, Sign sign);

// Component index within the exceptional set E^sign, or nullopt when off it.
std::optional<long> exceptional_component(const ManifoldPoint& p, Sign sign, double tol = 1e-12);

inline bool in_exceptional(const ManifoldPoint& p, Sign sign, double tol = 1e-12) {
    return exceptional_component(p, sign, tol).has_value();
}

// Principal scattering amplitude N^-/N^+ as a projective value.
struct ProjectiveValue {
    enum class Kind { Finite, Zero, Inf, Indeterminate } kind;
    Cplx value;  // meaningful for Finite (and Zero, where it is 0)
};

ProjectiveValue scattering_amplitude(const ManifoldPoint& p);

inline bool in_upper_manifold(const ManifoldPoint& p) { return p.mu.real() > -0.5; }

}  // namespace dc::manifold
