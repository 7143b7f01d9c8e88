#include "dc/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"
#include "dc/numerics.hpp"

namespace dc::resolvent {

using complexfn::cpow;
using complexfn::rgamma;
using manifold::in_exceptional;
using manifold::n_factor;
using solutions::xi;
using solutions::zeta;

namespace {

Sign kernel_family(const ManifoldPoint& p, Cplx k) {
    if (!manifold::in_upper_manifold(p)) throw DomainError("kernel requires Re(mu) > -1/2");
    if (k.imag() == 0.0) throw SpectrumHit("real k lies in the essential spectrum; use green_boundary");
    Sign fam = k.imag() > 0 ? Sign::Plus : Sign::Minus;
    if (in_exceptional(p, fam)) throw SpectrumHit("k lies in the point spectrum (exceptional set)");
    return fam;
}

Mat2 assemble(const Spinor& xi_x, const Spinor& zeta_x, const Spinor& xi_y, const Spinor& zeta_y,
              double x, double y) {
    if (y > x) return Mat2{} - outerT(xi_x, zeta_y);
    return Mat2{} - outerT(zeta_x, xi_y);
}

}  // namespace

Mat2 green_kernel(const ManifoldPoint& p, const EnergyContext& ctx, double x, double y) {
    const Sign fam = kernel_family(p, ctx.k);
    const Spinor xx = xi(p, fam, ctx, x), zx = zeta(p, fam, ctx, x);
    const Spinor xy = xi(p, fam, ctx, y), zy = zeta(p, fam, ctx, y);
    return assemble(xx, zx, xy, zy, x, y);
}

Mat2 green_boundary(const ManifoldPoint& p, double k, Sign side, double x, double y) {
    if (k == 0.0) throw DomainError("green_boundary requires k != 0");
    if (!manifold::in_upper_manifold(p)) throw DomainError("kernel requires Re(mu) > -1/2");
    if (in_exceptional(p, side)) throw ExceptionalPoint();
    const EnergyContext ctx(Cplx(k, 0));
    const Spinor xx = xi(p, side, ctx, x), zx = zeta(p, side, ctx, x);
    const Spinor xy = xi(p, side, ctx, y), zy = zeta(p, side, ctx, y);
    return assemble(xx, zx, xy, zy, x, y);
}

Mat2 green_zero(const ManifoldPoint& p, double x, double y) {
    if (p.mu.real() <= 0.0) throw DomainError("green_zero requires Re(mu) > 0");
    const Cplx z = p.z(), zi = p.zinv();
    Mat2 g;
    if (y > x) {
        const Cplx r = 0.5 * cpow(Cplx(x / y, 0), p.mu);
        g(0, 0) = r * z;
        g(0, 1) = -r;
        g(1, 0) = r;
        g(1, 1) = -r * zi;
    } else {
        const Cplx r = 0.5 * cpow(Cplx(y / x, 0), p.mu);
        g(0, 0) = r * z;
        g(0, 1) = r;
        g(1, 0) = -r;
        g(1, 1) = -r * zi;
    }
    return g;
}

Mat2 spectral_density(const ManifoldPoint& p, double k, double x, double y) {
    if (k == 0.0) throw DomainError("spectral_density requires k != 0");
    if (in_exceptional(p, Sign::Plus) || in_exceptional(p, Sign::Minus)) throw ExceptionalPoint();
    const EnergyContext ctx(Cplx(k, 0));
    const double eps = k > 0 ? 1.0 : -1.0;
    const Cplx pref = std::exp(eps * pi * p.lambda) / pi;
    const Spinor xp_x = xi(p, Sign::Plus, ctx, x), xm_y = xi(p, Sign::Minus, ctx, y);
    const Spinor xm_x = xi(p, Sign::Minus, ctx, x), xp_y = xi(p, Sign::Plus, ctx, y);
    const Mat2 a = pref * outerT(xp_x, xm_y);
    const Mat2 b = pref * outerT(xm_x, xp_y);
    if (frob(a - b) > 1e-8 * std::max(1.0, frob(a)))
        throw ConvergenceFailure("spectral density factorizations disagree");
    return a;
}

Mat2 spectral_density_zero_coeff(const ManifoldPoint& p, double x, double y) {
    using complexfn::gamma;
    const Cplx g2 = gamma(2.0 * p.mu + 1.0);
    const Cplx pref = cpow(Cplx(4.0 * x * y, 0), p.mu) /
                      (pi * g2 * g2 * n_factor(p, Sign::Plus) * n_factor(p, Sign::Minus));
    Mat2 m;
    if (p.b_chart()) {
        const Cplx z = p.z();
        m(0, 0) = z * z;
        m(0, 1) = z;
        m(1, 0) = z;
        m(1, 1) = 1;
    } else {
        // chart-normalized n_factor carries 1/z^2 relative to the b-chart product
        const Cplx zi = p.zinv();
        m(0, 0) = 1;
        m(0, 1) = zi;
        m(1, 0) = zi;
        m(1, 1) = zi * zi;
    }
    return pref * m;
}

SampledFunction sample_function(const std::function<Spinor(double)>& f, Cplx k,
                                int points_per_panel) {
    if (k.imag() == 0.0) throw DomainError("sampling scheme needs Im k != 0");
    const double X = 40.0 / std::abs(k.imag());
    const double osc = 2.5 / std::max(std::abs(k), 1e-10);
    numerics::QuadratureScheme s;
    s.points_per_panel = points_per_panel;
    s.panel_edges.push_back(0.0);
    double e = 1e-4;
    while (e < X) {
        s.panel_edges.push_back(e);
        e = std::min(e * 2.0, e + osc);
    }
    s.panel_edges.push_back(X);
    SampledFunction out;
    numerics::scheme_nodes(s, out.nodes, out.weights);
    out.values.reserve(out.nodes.size());
    for (double t : out.nodes) out.values.push_back(f(t));
    return out;
}

SampledFunction apply_resolvent(const ManifoldPoint& p, const EnergyContext& ctx,
                                const SampledFunction& f) {
    const Sign fam = kernel_family(p, ctx.k);
    const size_t n = f.nodes.size();
    std::vector<Spinor> xs(n), zs(n);
    for (size_t i = 0; i < n; ++i) {
        xs[i] = xi(p, fam, ctx, f.nodes[i]);
        zs[i] = zeta(p, fam, ctx, f.nodes[i]);
    }
    // strict prefix/suffix plus a symmetrized diagonal (keeps the discrete
    // bilinear form exactly self-transposed)
    std::vector<Cplx> pre(n + 1, 0), suf(n + 1, 0);
    for (size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] + f.weights[i] * dotT(xs[i], f.values[i]);
    for (size_t i = n; i-- > 0;) suf[i] = suf[i + 1] + f.weights[i] * dotT(zs[i], f.values[i]);
    SampledFunction g;
    g.nodes = f.nodes;
    g.weights = f.weights;
    g.values.resize(n);
    for (size_t i = 0; i < n; ++i) {
        Cplx diag_x = 0.5 * f.weights[i] * dotT(xs[i], f.values[i]);
        Cplx diag_z = 0.5 * f.weights[i] * dotT(zs[i], f.values[i]);
        g.values[i] = Spinor{} - (zs[i] * (pre[i] + diag_x) + xs[i] * (suf[i + 1] + diag_z));
    }
    return g;
}

Spinor apply_resolvent_at(const ManifoldPoint& p, const EnergyContext& ctx,
                          const std::function<Spinor(double)>& f, double x, double x_max) {
    const Sign fam = kernel_family(p, ctx.k);
    const double osc = 2.5 / std::max(std::abs(ctx.k), 1e-10);
    auto build = [&](double a, double b) {
        numerics::QuadratureScheme s;
        s.points_per_panel = 24;
        double e = a;
        s.panel_edges.push_back(a);
        double step = std::max(1e-4, a);
        while (e < b) {
            step = std::min(step * 2.0, osc);
            e = std::min(e + step, b);
            s.panel_edges.push_back(e);
        }
        return s;
    };
    auto inner = [&](double t) { return dotT(xi(p, fam, ctx, t), f(t)); };
    auto outer = [&](double t) { return dotT(zeta(p, fam, ctx, t), f(t)); };
    numerics::QuadratureScheme s1 = build(1e-6, x);
    numerics::QuadratureScheme s2 = build(x, x_max);
    const Cplx A = numerics::quad_halfline(inner, s1).value;
    const Cplx B = numerics::quad_halfline(outer, s2).value;
    return Spinor{} - (zeta(p, fam, ctx, x) * A + xi(p, fam, ctx, x) * B);
}

Mat2 elementary_kernel(Cplx lambda, Sign family, const EnergyContext& ctx, double x, double y) {
    const double s = double(sgn_of(family));
    const Cplx k = ctx.k;
    if (s > 0 && !(k.imag() < 0)) throw DomainError("plus-family resolvent needs Im k < 0");
    if (s < 0 && !(k.imag() > 0)) throw DomainError("minus-family resolvent needs Im k > 0");
    if ((Cplx(0, s) * lambda).real() <= -0.5)
        throw DomainError("elementary kernel requires Re(s i lambda) > -1/2");
    const Mat2 s2 = pauli(2);
    Mat2 proj_p, proj_m;  // (1 +- sigma_2)/2
    proj_p(0, 0) = 0.5; proj_p(1, 1) = 0.5;
    proj_m = proj_p;
    proj_p = proj_p + 0.5 * s2;
    proj_m = proj_m - 0.5 * s2;
    const Cplx il = iu * lambda;
    Mat2 g;
    if (s > 0) {
        if (y > x) {
            g = (-iu) * std::exp(iu * k * (x - y)) * cpow(Cplx(x / y, 0), il) * proj_p;
        } else {
            g = (-iu) * std::exp(-iu * k * (x - y)) * cpow(Cplx(x / y, 0), -il) * proj_m;
        }
    } else {
        if (y > x) {
            g = iu * std::exp(-iu * k * (x - y)) * cpow(Cplx(x / y, 0), -il) * proj_m;
        } else {
            g = iu * std::exp(iu * k * (x - y)) * cpow(Cplx(x / y, 0), il) * proj_p;
        }
    }
    return g;
}

Spinor jordan_chain(Cplx lambda, Sign family, Cplx k, int n, double x) {
    const double s = double(sgn_of(family));
    if (s * k.imag() <= 0) throw DomainError("chain eigenvalue must lie in C_family");
    const double r = 1.0 / std::sqrt(2.0);
    if (s > 0) {
        const Cplx v = cpow(Cplx(x, 0), iu * lambda + double(n)) * std::exp(iu * k * x);
        return {r * v, r * iu * v};
    }
    const Cplx v = cpow(Cplx(x, 0), -iu * lambda + double(n)) * std::exp(-iu * k * x);
    return {r * iu * v, r * v};
}

KernelGrid fill_grid(const std::function<Mat2(double, double)>& kernel,
                     const std::vector<double>& xs, const std::vector<double>& ys) {
    KernelGrid g;
    g.xs = xs;
    g.ys = ys;
    g.values.resize(xs.size() * ys.size());
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < ys.size(); ++j) g.values[i * ys.size() + j] = kernel(xs[i], ys[j]);
    return g;
}

}  // namespace dc::resolvent
