#include "dc/manifold.hpp"

#include <cmath>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"

namespace dc::manifold {

namespace {

void normalize_ray(Cplx& a, Cplx& b) {
    double n = std::max(std::abs(a), std::abs(b));
    if (n == 0.0) throw ZeroRay();
    a /= n;
    b /= n;
}

}  // namespace

ManifoldPoint point_from_triple(Cplx omega, Cplx lambda, Cplx mu) {
    const double scale = std::max({std::abs(omega), std::abs(lambda), std::abs(mu)});
    if (scale == 0.0) throw ZeroTriple();
    if (std::abs(omega * omega - lambda * lambda - mu * mu) > 1e-10 * std::max(1.0, scale * scale))
        throw OffQuadric();
    // ray: kernel of [[omega+lambda, mu], [mu, omega-lambda]]
    Cplx a1 = -mu, b1 = omega + lambda;       // [-mu : omega+lambda]
    Cplx a2 = omega - lambda, b2 = -mu;       // [omega-lambda : -mu]
    Cplx a, b;
    if (std::max(std::abs(a1), std::abs(b1)) >= std::max(std::abs(a2), std::abs(b2))) {
        a = a1;
        b = b1;
    } else {
        a = a2;
        b = b2;
    }
    normalize_ray(a, b);
    return {omega, lambda, mu, a, b};
}

ManifoldPoint point_zero_fiber(Cplx a, Cplx b) {
    normalize_ray(a, b);
    return {Cplx(0, 0), Cplx(0, 0), Cplx(0, 0), a, b};
}

bool same_ray(const ManifoldPoint& p, const ManifoldPoint& q, double tol) {
    return std::abs(p.a * q.b - q.a * p.b) <= tol;
}

ManifoldPoint tau(const ManifoldPoint& p) { return {p.omega, p.lambda, -p.mu, -p.a, p.b}; }

Cplx n_factor(const ManifoldPoint& p, Sign sign) {
    const Cplx si(0, double(sgn_of(sign)));
    const Cplx rg = complexfn::rgamma(1.0 + p.mu - si * p.lambda);
    if (p.b_chart()) return (p.z() + si) * rg;
    return (1.0 + si * p.zinv()) * rg;
}

std::optional<long> exceptional_component(const ManifoldPoint& p, Sign sign, double tol) {
    const Cplx si(0, double(sgn_of(sign)));
    // E_0: ray [-(sign)i : 1]
    if (std::abs(p.a + si * p.b) <= tol * std::max(std::abs(p.a), std::abs(p.b))) return 0;
    if (p.on_zero_fiber()) return std::nullopt;
    const Cplx q = p.mu - si * p.lambda;  // in E_n iff q = -n
    const double r = std::round(q.real());
    if (r <= 0.0 && std::abs(q - Cplx(r, 0)) <= tol) {
        long n = long(-r);
        if (n == 0) return 0;  // z = -(sign) i equivalently
        return n;
    }
    return std::nullopt;
}

ProjectiveValue scattering_amplitude(const ManifoldPoint& p) {
    const bool plus = in_exceptional(p, Sign::Plus);
    const bool minus = in_exceptional(p, Sign::Minus);
    if (plus && minus) return {ProjectiveValue::Kind::Indeterminate, Cplx(0, 0)};
    if (plus) return {ProjectiveValue::Kind::Inf, Cplx(0, 0)};
    if (minus) return {ProjectiveValue::Kind::Zero, Cplx(0, 0)};
    return {ProjectiveValue::Kind::Finite, n_factor(p, Sign::Minus) / n_factor(p, Sign::Plus)};
}

}  // namespace dc::manifold
