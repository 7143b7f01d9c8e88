#include "dc/mixedbc.hpp"

#include <algorithm>
#include <cmath>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"
#include "dc/numerics.hpp"
#include "dc/solutions.hpp"
#include "dc/whittaker.hpp"

namespace dc::mixedbc {

using complexfn::cpow;
using complexfn::digamma;
using complexfn::rgamma;

namespace {

void check_region(const ManifoldPoint& p) {
    if (std::abs(p.mu.real()) >= 0.5) throw DomainError("mixed conditions require |Re mu| < 1/2");
    if (std::abs(p.mu) == 0.0) throw DomainError("mu = 0 handled by eigenvalues_mu0/zero_fiber");
}

}  // namespace

ProjectiveValue c_coeff(const ManifoldPoint& p, Sign sign) {
    check_region(p);
    const Cplx si(0, double(sgn_of(sign)));
    // omega/(lambda - si mu) = (lambda + si mu)/omega on the quadric; pick the
    // representation whose denominator is away from zero (the manifold limit on
    // {omega = 0} is then 0 or infinity, never 0/0)
    Cplx qn = p.omega, qd = p.lambda - si * p.mu;
    const Cplx an = p.lambda + si * p.mu, ad = p.omega;
    if (std::abs(ad) > std::abs(qd) || (std::abs(ad) == std::abs(qd) && std::abs(an) > std::abs(qn))) {
        qn = an;
        qd = ad;
    }
    const Cplx num = qn * rgamma(1.0 - 2.0 * p.mu) * rgamma(1.0 + p.mu - si * p.lambda);
    const Cplx den = qd * rgamma(1.0 + 2.0 * p.mu) * rgamma(1.0 - p.mu - si * p.lambda);
    const bool nz = num == Cplx(0, 0), dz = den == Cplx(0, 0);
    if (nz && dz) return {ProjectiveValue::Kind::Indeterminate, Cplx(0, 0)};
    if (nz) return {ProjectiveValue::Kind::Zero, Cplx(0, 0)};
    if (dz) return {ProjectiveValue::Kind::Inf, Cplx(0, 0)};
    return {ProjectiveValue::Kind::Finite, num / den};
}

bool admissible(Cplx k, Sign sign, Cplx lambda) {
    if (k == Cplx(0, 0)) return false;
    const double s = double(sgn_of(sign));
    if (k.imag() == 0.0) return std::abs(lambda.imag()) > 0.5 && s * lambda.imag() > 0;
    return s * k.imag() > 0;
}

EigenvalueList eigenvalues(const MixedBoundaryData& data, const Window& window) {
    check_region(data.p);
    if (data.kappa == Cplx(0, 0)) throw DomainError("kappa = 0 is the homogeneous operator");
    const Cplx mu = data.p.mu;
    EigenvalueList out;
    const double tol_axis = 1e-13;
    out.geometry = std::abs(mu.imag()) <= tol_axis
                       ? LocusGeometry::Circle
                       : (std::abs(mu.real()) <= tol_axis ? LocusGeometry::HalfLineDiscrete
                                                          : LocusGeometry::Spiral);
    out.finite = std::abs(mu.real()) > tol_axis;
    const double kmax = std::max({std::abs(window.re_min), std::abs(window.re_max),
                                  std::abs(window.im_min), std::abs(window.im_max)}) *
                        1.5;
    const double kmin_log = std::log(1e-12);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const double sd = double(sgn_of(s));
        ProjectiveValue c = c_coeff(data.p, s);
        if (c.kind != ProjectiveValue::Kind::Finite) continue;  // no eigenvalues in C_s
        const Cplx target = c.value / data.kappa;
        const Cplx L0(std::log(std::abs(target)), std::arg(target));
        const Cplx dw = Cplx(0, pi) / mu;  // lattice step of w per unit n
        const Cplx w0 = L0 / (2.0 * mu);
        // enumerate n with |Im w| <= pi/2 + slack and e^{Re w}/2 within the window scale
        long n_lo = -200000, n_hi = 200000;
        auto clamp_range = [&](double v0, double dv, double lo, double hi) {
            if (std::abs(dv) < 1e-15) return;
            double n1 = (lo - v0) / dv, n2 = (hi - v0) / dv;
            if (n1 > n2) std::swap(n1, n2);
            n_lo = std::max(n_lo, long(std::floor(n1 - 2)));
            n_hi = std::min(n_hi, long(std::ceil(n2 + 2)));
        };
        clamp_range(w0.imag(), dw.imag(), -0.5 * pi - 0.1, 0.5 * pi + 0.1);
        clamp_range(w0.real(), dw.real(), kmin_log, std::log(2.0 * kmax + 1e-12));
        if (n_hi - n_lo > 100000) throw DomainError("eigenvalue window too large to enumerate");
        for (long n = n_lo; n <= n_hi; ++n) {
            const Cplx w = w0 + double(n) * dw;
            if (std::abs(w.imag()) > 0.5 * pi + 1e-9) continue;
            const Cplx k = Cplx(0, sd * 0.5) * std::exp(w);
            const bool is_real_k = std::abs(k.imag()) <= 1e-12 * std::abs(k);
            const Cplx kk = is_real_k ? Cplx(k.real(), 0) : k;
            if (!admissible(kk, s, data.p.lambda)) continue;
            if (!window.contains(kk)) continue;
            const Cplx rho = Cplx(0, -2.0 * sd) * kk;
            const Cplx lhs = data.kappa * std::exp(2.0 * mu * std::log(rho));
            const double res = std::abs(lhs - c.value) / (1.0 + std::abs(c.value));
            out.entries.push_back({kk, s, res});
        }
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
        if (a.k.real() != b.k.real()) return a.k.real() < b.k.real();
        return a.k.imag() < b.k.imag();
    });
    return out;
}

std::vector<Eigenvalue> eigenvalues_mu0(Sign omega_eq_lambda, Cplx lambda, Cplx nu) {
    (void)omega_eq_lambda;  // the eigenvalue condition is the same on both lines
    if (lambda == Cplx(0, 0)) throw DomainError("lambda = 0 is the zero-fiber case");
    std::vector<Eigenvalue> out;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        const double sd = double(sgn_of(s));
        const Cplx si(0, sd);
        // existence: s i lambda not in N and Re E > 0, E = exp(nu - psi(1 - s i lambda) + s i/(2 lambda))
        const Cplx q = si * lambda;
        const double r = std::round(q.real());
        if (r >= 0.0 && std::abs(q - Cplx(r, 0)) < 1e-12) continue;
        Cplx E;
        try {
            E = std::exp(nu - digamma(1.0 - si * lambda) + si / (2.0 * lambda));
        } catch (const PoleAt&) {
            continue;
        }
        if (!(E.real() > 0.0)) continue;
        const Cplx k = Cplx(0, sd * 0.5) * E;
        const Cplx res = std::log(Cplx(0, -2.0 * sd) * k) + digamma(1.0 - si * lambda) - si / (2.0 * lambda) - nu;
        out.push_back({k, s, std::abs(res)});
    }
    return out;
}

bool zero_fiber_eigen(Cplx kappa, Cplx k) {
    if (k == Cplx(0, 0)) throw DomainError("k = 0 is never an eigenvalue");
    if (k.imag() == 0.0) return false;
    const Cplx want(0, k.imag() > 0 ? 1.0 : -1.0);
    return std::abs(kappa - want) <= 1e-12;
}

Spinor boundary_function(const MixedBoundaryData& data, double x) {
    const ManifoldPoint& p = data.p;
    const Cplx xp = cpow(Cplx(x, 0), p.mu), xm = cpow(Cplx(x, 0), -p.mu);
    return Spinor((p.omega - p.lambda) * (xp + data.kappa * xm), p.mu * (-xp + data.kappa * xm));
}

namespace {

// Frobenius continuation of a power-series solution x^{rho} sum x^n v_n of the
// eigen-equation, seeded by the leading vector v0; orders n = 1..N solved from
// [[-(lambda+omega), -(rho+n)], [rho+n, -(lambda-omega)]] v_n = k v_{n-1}.
Spinor frobenius_seed(const ManifoldPoint& p, Cplx k, Cplx rho, Spinor v0, double x, int N) {
    Spinor acc = v0 * cpow(Cplx(x, 0), rho);
    Spinor vn = v0;
    for (int n = 1; n <= N; ++n) {
        const Cplx rn = rho + double(n);
        const Cplx det = rn * rn - p.mu * p.mu;
        const Cplx b1 = k * vn.up, b2 = k * vn.down;
        // inverse of [[-(l+w), -rn],[rn, -(l-w)]]
        vn = Spinor((-(p.lambda - p.omega) * b1 + rn * b2) / det,
                    (-rn * b1 - (p.lambda + p.omega) * b2) / det);
        acc += vn * cpow(Cplx(x, 0), rho + double(n));
    }
    return acc;
}

}  // namespace

Spinor boundary_series(const MixedBoundaryData& data, Cplx k, double x, int orders) {
    const ManifoldPoint& p = data.p;
    Spinor up0(p.omega - p.lambda, -p.mu);
    Spinor dn0(p.omega - p.lambda, p.mu);
    return frobenius_seed(p, k, p.mu, up0, x, orders) +
           data.kappa * frobenius_seed(p, k, -p.mu, dn0, x, orders);
}

double matching_residual(const MixedBoundaryData& data, Cplx k, Sign sign) {
    const ManifoldPoint& p = data.p;
    const double sd = double(sgn_of(sign));
    const Cplx si(0, sd);
    const Cplx beta = si * p.lambda;
    Cplx cp_up, cm_up, cp_dn, cm_dn;
    whittaker::k_smallx_coeffs({beta, p.mu + 0.5}, cp_up, cm_up);
    whittaker::k_smallx_coeffs({beta, p.mu - 0.5}, cp_dn, cm_dn);
    // zeta ~ const * [x^{-mu} branch + (c_via/rho^{2mu}) x^{mu} branch]; eigen iff kappa rho^{2mu} = c_via
    const Cplx c_via = p.omega * cm_up / ((p.lambda - si * p.mu) * cp_dn);
    const Cplx rho = Cplx(0, -2.0 * sd) * k;
    const Cplx lhs = data.kappa * std::exp(2.0 * p.mu * std::log(rho));
    return std::abs(lhs - c_via) / (1.0 + std::abs(c_via));
}

OdeVerification verify_eigen_ode(const MixedBoundaryData& data, Cplx k, Sign sign) {
    const ManifoldPoint& p = data.p;
    const double sd = double(sgn_of(sign));
    const Cplx si(0, sd);
    const bool real_k = k.imag() == 0.0;
    const double rate = real_k ? std::abs(k) : std::abs(k.imag());
    const double T1 = 10.0 / rate, T2 = 20.0 / rate;
    const double x_far = 4.2 * T2;
    const double x_mid = std::min(1.0, 1.0 / std::abs(k));

    // outward shot from the boundary data (Frobenius-continued seed)
    const double x0 = 1e-4;
    solutions::EnergyContext ctx(k);
    Spinor out_shot = solutions::ode_oracle(p, ctx, x0, boundary_series(data, k, x0), x_mid, 1e-12);

    // inward shot from the decaying asymptote direction, normalized so the
    // integrator's error control stays relative along the huge dynamic range
    auto asym = [&](double x) -> Spinor {
        const Cplx ph = std::exp(si * k * x) * cpow(Cplx(0, -2.0 * sd) * k * x, si * p.lambda);
        Spinor v{-si * ph, ph};
        return v * (1.0 / dc::abs(v));
    };
    auto M = [&](double t) { return solutions::dirac_system_matrix(p, k, t); };

    // march inward once, recording the L2 tails over [T1,2T1] and [T2,2T2]
    auto tail_integral = [&](double a, double b, Spinor& state, double from) {
        // integrate from 'from' down to b, then accumulate int_a^b |f|^2 with GL nodes
        state = numerics::ode_rkf(M, from, state, b, 1e-11);
        const auto& xs = numerics::gl_nodes(24);
        const auto& ws = numerics::gl_weights(24);
        double acc = 0;
        Spinor cur = state;
        double pos = b;
        // nodes descending
        for (int i = 23; i >= 0; --i) {
            double t = 0.5 * (a + b) + 0.5 * (b - a) * xs[i];
            cur = numerics::ode_rkf(M, pos, cur, t, 1e-11);
            pos = t;
            acc += 0.5 * (b - a) * ws[i] * norm2(cur);
        }
        state = numerics::ode_rkf(M, pos, cur, a, 1e-11);
        return acc;
    };
    Spinor state = asym(x_far);
    double I2 = tail_integral(T2, 2.0 * T2, state, x_far);   // [T2, 2T2]
    double I1 = tail_integral(T1, 2.0 * T1, state, 2.0 * T1);  // continue down to [T1, 2T1]
    Spinor in_shot = numerics::ode_rkf(M, T1, state, x_mid, 1e-11);

    OdeVerification v;
    v.match_residual = std::abs(out_shot.up * in_shot.down - out_shot.down * in_shot.up) /
                       (dc::abs(out_shot) * dc::abs(in_shot));
    v.tail_ratio = I2 / I1;
    if (real_k) {
        // polynomial decay: I(T) ~ T^{1-2|Im lambda|}
        v.tail_bound = std::pow(2.0, 1.0 - 2.0 * std::abs(p.lambda.imag()));
        v.decays = std::abs(v.tail_ratio / v.tail_bound - 1.0) < 0.2;
    } else {
        v.tail_bound = std::exp(-std::abs(k.imag()) * T1 * 0.5);
        v.decays = v.tail_ratio < v.tail_bound;
    }
    return v;
}

}  // namespace dc::mixedbc
