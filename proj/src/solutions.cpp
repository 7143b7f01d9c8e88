#include "dc/solutions.hpp"

#include <cmath>
#include <functional>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"
#include "dc/numerics.hpp"
#include "dc/whittaker.hpp"

namespace dc::solutions {

using complexfn::cpow;
using complexfn::gamma;
using manifold::in_exceptional;
using manifold::n_factor;
using whittaker::trig_H;
using whittaker::trig_J;
using whittaker::whittaker_I;
using whittaker::whittaker_K;

int EnergyContext::eps() const {
    if (k.real() > 0) return 1;
    if (k.real() < 0) return -1;
    throw BranchCut("eps_k undefined for k on the imaginary axis");
}

Sign family_for_k(Cplx k) {
    if (k.imag() > 0) return Sign::Plus;
    if (k.imag() < 0) return Sign::Minus;
    throw BranchCut("no preferred family for real k");
}

Spinor eta(const ManifoldPoint& p, Direction dir, double x) {
    if (x <= 0) throw DomainError("eta requires x > 0");
    const Cplx xm = cpow(Cplx(x, 0), p.mu);
    if (dir == Direction::Up) {
        if (std::abs(p.b) < 1e-14) throw ChartPole("eta_up has a pole on {b = 0}");
        return {xm * p.z(), xm};
    }
    if (std::abs(p.a) < 1e-14) throw ChartPole("eta_down has a pole on {a = 0}");
    return {xm, xm * p.zinv()};
}

Spinor theta(Cplx omega, Direction dir, double x) {
    if (x <= 0) throw DomainError("theta requires x > 0");
    const double lx = std::log(x);
    if (dir == Direction::Up) return {Cplx(1, 0), -lx * 2.0 * omega};
    return {-lx * 2.0 * omega, Cplx(1, 0)};
}

namespace {

// Whittaker data of the family s at spectral parameter k, evaluated through the
// hyperbolic functions for complex k and the trigonometric ones on the real axis.
struct FamilyEval {
    Cplx beta;    // s i lambda
    Cplx w;       // -2 s i k x (hyperbolic argument)
    bool real_k;
    double eps;   // sgn Re k, used on the real axis
    double s;
    Cplx lambda;
    double xt;    // 2|k|x

    Cplx I(Cplx m) const {
        if (!real_k) return whittaker_I({beta, m}, w);
        // I_{s i lambda, m}(-s eps i xt) = e^{-s eps i pi/2 (m+1/2)} J_{eps lambda, m}(xt)
        Cplx ph = std::exp(Cplx(0, -s * eps * 0.5 * pi) * (m + 0.5));
        return ph * trig_J({eps * lambda, m}, Cplx(xt, 0));
    }
    Cplx K(Cplx m) const {
        if (!real_k) return whittaker_K({beta, m}, w);
        // K_{s i lambda, m}(-s eps i xt) = e^{s eps i pi/2 (1/2+m)} H^{s eps}_{eps lambda, m}(xt)
        Cplx ph = std::exp(Cplx(0, s * eps * 0.5 * pi) * (m + 0.5));
        return ph * trig_H({eps * lambda, m}, Cplx(xt, 0), s * eps > 0 ? Sign::Plus : Sign::Minus);
    }
};

FamilyEval make_eval(const ManifoldPoint& p, Sign family, Cplx k, double x) {
    if (x <= 0) throw DomainError("solutions require x > 0");
    const double s = double(sgn_of(family));
    if (k.real() == 0.0 && s * k.imag() <= 0.0)
        throw BranchCut("k on the excluded ray of this family");
    FamilyEval e;
    e.s = s;
    e.beta = Cplx(0, s) * p.lambda;
    e.w = Cplx(0, -2.0 * s) * k * x;
    e.real_k = (k.imag() == 0.0);
    e.eps = k.real() > 0 ? 1.0 : (k.real() < 0 ? -1.0 : 0.0);
    e.lambda = p.lambda;
    e.xt = 2.0 * std::abs(k) * x;
    return e;
}

// Removable quotient (g(mu_-) - or + g(mu_+))/mu with N(0) = 0, evaluated by a
// Richardson pair of symmetric differences when mu is tiny.
Cplx removable_quotient(const std::function<Cplx(Cplx)>& N, Cplx mu) {
    if (std::abs(mu) >= 1e-4) return N(mu) / mu;
    const double d = 3e-3;
    auto sym = [&](double dd) { return (N(Cplx(dd, 0)) - N(Cplx(-dd, 0))) / (2.0 * dd); };
    Cplx n1 = (4.0 * sym(0.5 * d) - sym(d)) / 3.0;           // N'(0) + O(d^4)
    Cplx n2 = (N(Cplx(d, 0)) + N(Cplx(-d, 0))) / (d * d);    // N''(0) + O(d^2)
    return n1 + 0.5 * mu * n2;
}

}  // namespace

Spinor xi(const ManifoldPoint& p, Sign family, const EnergyContext& ctx, double x) {
    if (in_exceptional(p, family))
        throw ExceptionalPoint("xi undefined on the exceptional set of its family");
    const FamilyEval e = make_eval(p, family, ctx.k, x);
    const Cplx si(0, e.s);
    const Cplx i_up = e.I(p.mu + 0.5);
    auto Nfun = [&](Cplx mm) { return e.I(mm - 0.5) + e.beta * e.I(mm + 0.5); };
    const Cplx q = removable_quotient(Nfun, p.mu);
    if (p.b_chart()) {
        const Cplx z = p.z();
        const Cplx pref = 1.0 / (2.0 * n_factor(p, family));
        return pref * Spinor(si * i_up + q * z, -si * z * i_up + q);
    }
    const Cplx zi = p.zinv();
    const Cplx pref = gamma(1.0 + p.mu - si * p.lambda) / (2.0 * (1.0 + si * zi));
    return pref * Spinor(si * zi * i_up + q, -si * i_up + q * zi);
}

Spinor zeta(const ManifoldPoint& p, Sign family, const EnergyContext& ctx, double x) {
    const FamilyEval e = make_eval(p, family, ctx.k, x);
    const Cplx si(0, e.s);
    const Cplx k_up = e.K(p.mu + 0.5);
    auto Nfun = [&](Cplx mm) { return e.K(mm - 0.5) - e.K(mm + 0.5); };
    const Cplx q = removable_quotient(Nfun, p.mu);
    const Spinor v(p.omega - p.lambda + si * p.mu, -p.mu - si * (p.omega + p.lambda));
    return Spinor(-si * k_up, k_up) - 0.5 * q * v;
}

Mat2 dirac_system_matrix(const ManifoldPoint& p, Cplx k, double x) {
    Mat2 M;
    M(0, 0) = 0;
    M(0, 1) = (p.lambda - p.omega) / x + k;
    M(1, 0) = -((p.lambda + p.omega) / x + k);
    M(1, 1) = 0;
    return M;
}

namespace {

Cplx sinhc2(Cplx mu, double L) {
    // 2 sinh(mu L)/mu, stable through mu = 0
    Cplx u = mu * L;
    if (std::abs(u) < 1e-4) {
        Cplx u2 = u * u;
        return 2.0 * L * (1.0 + u2 / 6.0 + u2 * u2 / 120.0);
    }
    return 2.0 * std::sinh(u) / mu;
}

}  // namespace

Mat2 bisolution(const ManifoldPoint& p, const EnergyContext& ctx, double x, double y) {
    if (x <= 0 || y <= 0) throw DomainError("bisolution requires x, y > 0");
    if (ctx.k == Cplx(0, 0)) {
        const double L = std::log(x / y);
        const Cplx S = sinhc2(p.mu, L);               // ((x/y)^mu - (y/x)^mu)/mu
        const Cplx P = 2.0 * std::cosh(p.mu * L);     // (x/y)^mu + (y/x)^mu
        Mat2 g;
        g(0, 0) = 0.5 * (p.omega - p.lambda) * S;
        g(0, 1) = 0.5 * P;
        g(1, 0) = -0.5 * P;
        g(1, 1) = -0.5 * (p.omega + p.lambda) * S;
        return g;
    }
    Sign fam;
    if (ctx.k.imag() > 0)
        fam = Sign::Plus;
    else if (ctx.k.imag() < 0)
        fam = Sign::Minus;
    else
        fam = in_exceptional(p, Sign::Plus) ? Sign::Minus : Sign::Plus;
    if (in_exceptional(p, fam)) fam = flip(fam);  // fall back to the other family if possible
    Spinor xx = xi(p, fam, ctx, x), zx = zeta(p, fam, ctx, x);
    Spinor xy = xi(p, fam, ctx, y), zy = zeta(p, fam, ctx, y);
    return outerT(xx, zy) - outerT(zx, xy);
}

Spinor ode_oracle(const ManifoldPoint& p, const EnergyContext& ctx, double seed_x,
                  const Spinor& seed_value, double x, double tol) {
    if (seed_x <= 0 || x <= 0) throw DomainError("ode_oracle requires positive abscissas");
    auto M = [&](double t) { return dirac_system_matrix(p, ctx.k, t); };
    return numerics::ode_rkf(M, seed_x, seed_value, x, tol);
}

Spinor apply_dirac_fd(const ManifoldPoint& p, const std::function<Spinor(double)>& f, double x) {
    const double h = std::max(1e-6, 1e-6 * x);
    auto d = [&](int comp) {
        auto g = [&](double t) { return comp == 0 ? f(t).up : f(t).down; };
        return (-g(x + 2 * h) + 8.0 * g(x + h) - 8.0 * g(x - h) + g(x - 2 * h)) / (12.0 * h);
    };
    const Spinor fx = f(x);
    const Cplx du = d(0), dd = d(1);
    return {-(p.lambda + p.omega) / x * fx.up - dd, du - (p.lambda - p.omega) / x * fx.down};
}

}  // namespace dc::solutions
