#include "dc/scattering.hpp"

#include <cmath>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"
#include "dc/numerics.hpp"
#include "dc/whittaker.hpp"

namespace dc::scattering {

using complexfn::gamma;
using manifold::in_exceptional;
using manifold::n_factor;
using whittaker::mellin_J_onesided;

MellinGrid make_grid(size_t n, double x_min, double x_max) {
    if (n == 0 || (n & (n - 1)) != 0) throw DomainError("grid size must be a power of two");
    MellinGrid g;
    g.n = n;
    g.h = std::log(x_max / x_min) / double(n);
    return g;
}

MellinSymbolResult mellin_forward(const MellinGrid& g, const std::vector<Cplx>& f) {
    if (f.size() != g.n) throw DomainError("grid size mismatch");
    std::vector<Cplx> phi(g.n);
    for (size_t j = 0; j < g.n; ++j) phi[j] = f[j] * std::sqrt(g.x(j));
    // M f(s_m) = h e^{-i s_m t_0} FFT_m(phi) with t_j = t_0 + j h
    numerics::fft(phi, -1);
    MellinSymbolResult out;
    out.values.resize(g.n);
    const double t0 = g.t(0);
    for (size_t m = 0; m < g.n; ++m) {
        const double s = g.s(m);
        out.values[m] = g.h * std::exp(Cplx(0, -s * t0)) * phi[m];
    }
    // aliasing diagnostic: relative mass in the top frequency octave
    double top = 0, tot = 0;
    const double s_max = pi / g.h;
    for (size_t m = 0; m < g.n; ++m) {
        const double a = std::norm(out.values[m]);
        tot += a;
        if (std::abs(g.s(m)) > 0.5 * s_max) top += a;
    }
    out.alias_warning = tot > 0 && top / tot > 1e-6;
    return out;
}

std::vector<Cplx> mellin_inverse(const MellinGrid& g, const std::vector<Cplx>& symbol) {
    if (symbol.size() != g.n) throw DomainError("grid size mismatch");
    std::vector<Cplx> work(g.n);
    const double t0 = g.t(0);
    for (size_t m = 0; m < g.n; ++m) {
        const double s = g.s(m);
        work[m] = symbol[m] * std::exp(Cplx(0, s * t0)) / g.h;
    }
    numerics::fft(work, +1);
    for (size_t j = 0; j < g.n; ++j) work[j] /= double(g.n) * std::sqrt(g.x(j));
    return work;
}

std::vector<Cplx> apply_inversion(const MellinGrid& g, const std::vector<Cplx>& f) {
    if (f.size() != g.n) throw DomainError("grid size mismatch");
    std::vector<Cplx> out(g.n);
    for (size_t j = 0; j < g.n; ++j) {
        const size_t jr = (g.n - j) % g.n;  // 1/x_j = x_{n-j} on the symmetric grid
        out[j] = f[jr] / g.x(j);
    }
    return out;
}

Spinor xi_mellin(const ManifoldPoint& p, Sign eps, Sign family, double s, Sign prescription) {
    if (in_exceptional(p, family)) throw ExceptionalPoint("Xi undefined on E^family");
    const double ed = double(sgn_of(eps));
    const double fd = double(sgn_of(family));
    const Cplx beta = ed * p.lambda;  // trig index eps lambda
    auto MJ = [&](Cplx m) { return mellin_J_onesided({beta, m}, 2.0, s, prescription); };
    // phase of I(-s eps i x~) -> J mapping carried by i^{-+ eps mu} prefactor of gather1/2
    const Cplx pref_phase = std::exp(Cplx(0, -fd * ed * 0.5 * pi) * p.mu);
    if (std::abs(p.mu) >= 0.05) {
        const Cplx mj_up = MJ(p.mu + 0.5), mj_dn = MJ(p.mu - 0.5);
        const Cplx base = pref_phase / (2.0 * n_factor(p, family) * p.mu);
        if (p.b_chart()) {
            const Cplx z = p.z();
            return base * Spinor(ed * p.omega * (-z) * mj_up + z * mj_dn,
                                 ed * p.omega * mj_up + mj_dn);
        }
        const Cplx zi = p.zinv();
        return base * Spinor(ed * p.omega * (-1.0) * mj_up + mj_dn,
                             ed * p.omega * zi * mj_up + zi * mj_dn);
    }
    // regularized variant: eps J_{mu+1/2}(1,-z) + [(J_{mu-1/2} + eps lambda J_{mu+1/2})/mu](z,1)
    const Cplx mj_up = MJ(p.mu + 0.5);
    auto Nf = [&](Cplx mm) { return MJ(mm - 0.5) + ed * p.lambda * MJ(mm + 0.5); };
    Cplx q;
    if (std::abs(p.mu) >= 1e-4) {
        q = Nf(p.mu) / p.mu;
    } else {
        const double d = 3e-3;
        auto sym = [&](double dd) { return (Nf(Cplx(dd, 0)) - Nf(Cplx(-dd, 0))) / (2.0 * dd); };
        Cplx n1 = (4.0 * sym(0.5 * d) - sym(d)) / 3.0;
        Cplx n2 = (Nf(Cplx(d, 0)) + Nf(Cplx(-d, 0))) / (d * d);
        q = n1 + 0.5 * p.mu * n2;
    }
    const Cplx base = pref_phase / (2.0 * n_factor(p, family));
    if (p.b_chart()) {
        const Cplx z = p.z();
        return base * Spinor(ed * mj_up + q * z, -ed * z * mj_up + q);
    }
    const Cplx zi = p.zinv();
    return base * Spinor(ed * zi * mj_up + q, -ed * mj_up + q * zi);
}

Spinor u_kernel(const ManifoldPoint& p, Sign family, Cplx k, double x) {
    if (k.imag() != 0.0 || k.real() == 0.0) throw DomainError("u_kernel needs real nonzero k");
    const double eps = k.real() > 0 ? 1.0 : -1.0;
    solutions::EnergyContext ctx(k);
    const Cplx pref = std::exp(0.5 * eps * pi * p.lambda) / std::sqrt(pi);
    return pref * solutions::xi(p, family, ctx, x);
}

ProjectiveValue scattering_value(const ManifoldPoint& p, Sign eps) {
    ProjectiveValue s = manifold::scattering_amplitude(p);
    if (s.kind != ProjectiveValue::Kind::Finite) return s;
    const double ed = double(sgn_of(eps));
    s.value *= std::exp(Cplx(0, -ed * pi) * p.mu);
    return s;
}

UResult apply_u(const ManifoldPoint& p, Sign family, const MellinGrid& g,
                const std::vector<Spinor>& f) {
    if (f.size() != g.n) throw DomainError("grid size mismatch");
    std::vector<Cplx> up(g.n), dn(g.n);
    for (size_t j = 0; j < g.n; ++j) {
        up[j] = f[j].up;
        dn[j] = f[j].down;
    }
    std::vector<Cplx> jup = apply_inversion(g, up);
    std::vector<Cplx> jdn = apply_inversion(g, dn);
    MellinSymbolResult mup = mellin_forward(g, jup);
    MellinSymbolResult mdn = mellin_forward(g, jdn);
    UResult out;
    out.alias_warning = mup.alias_warning || mdn.alias_warning;
    out.k.resize(2 * g.n);
    out.values.resize(2 * g.n);
    out.weights.resize(2 * g.n);
    for (Sign eps : {Sign::Minus, Sign::Plus}) {
        const double ed = double(sgn_of(eps));
        std::vector<Cplx> sym(g.n);
        for (size_t m = 0; m < g.n; ++m) {
            const Spinor Xi = xi_mellin(p, eps, family, g.s(m));
            sym[m] = Xi.up * mup.values[m] + Xi.down * mdn.values[m];
        }
        std::vector<Cplx> gx = mellin_inverse(g, sym);
        const Cplx pref = std::exp(0.5 * ed * pi * p.lambda) / std::sqrt(pi);
        for (size_t j = 0; j < g.n; ++j) {
            const size_t idx = eps == Sign::Plus ? g.n + j : g.n - 1 - j;
            out.k[idx] = ed * g.x(j);
            out.values[idx] = pref * gx[j];
            out.weights[idx] = g.x(j) * g.h;
        }
    }
    return out;
}

std::vector<Spinor> apply_u_transpose(const ManifoldPoint& p, Sign family, const MellinGrid& g,
                                      const std::vector<Cplx>& h) {
    if (h.size() != 2 * g.n) throw DomainError("k-side sample size mismatch");
    // (U_c)^T = J Xi_c(eps, -A) pref, summed over the two k-sign branches
    std::vector<Spinor> out(g.n);
    for (Sign eps : {Sign::Minus, Sign::Plus}) {
        const double ed = double(sgn_of(eps));
        std::vector<Cplx> hb(g.n);
        for (size_t j = 0; j < g.n; ++j) {
            const size_t idx = eps == Sign::Plus ? g.n + j : g.n - 1 - j;
            hb[j] = h[idx];
        }
        MellinSymbolResult mh = mellin_forward(g, hb);
        std::vector<Cplx> su(g.n), sd(g.n);
        for (size_t m = 0; m < g.n; ++m) {
            const Spinor Xi = xi_mellin(p, eps, family, -g.s(m));
            su[m] = Xi.up * mh.values[m];
            sd[m] = Xi.down * mh.values[m];
        }
        std::vector<Cplx> gu = apply_inversion(g, mellin_inverse(g, su));
        std::vector<Cplx> gd = apply_inversion(g, mellin_inverse(g, sd));
        const Cplx pref = std::exp(0.5 * ed * pi * p.lambda) / std::sqrt(pi);
        for (size_t j = 0; j < g.n; ++j) {
            out[j].up += pref * gu[j];
            out[j].down += pref * gd[j];
        }
    }
    return out;
}

std::vector<Spinor> dirac_on_grid(const ManifoldPoint& p, const MellinGrid& g,
                                  const std::vector<Spinor>& f) {
    const size_t n = g.n;
    std::vector<Spinor> out(n);
    auto dt = [&](const std::vector<Spinor>& v, size_t j, bool upc) -> Cplx {
        auto val = [&](long jj) -> Cplx {
            if (jj < 0 || jj >= long(n)) return 0;
            return upc ? v[jj].up : v[jj].down;
        };
        long J = long(j);
        return (-val(J + 2) + 8.0 * val(J + 1) - 8.0 * val(J - 1) + val(J - 2)) / (12.0 * g.h);
    };
    for (size_t j = 0; j < n; ++j) {
        const double x = g.x(j);
        const Cplx du = dt(f, j, true) / x;   // d/dx = e^{-t} d/dt
        const Cplx dd = dt(f, j, false) / x;
        out[j] = {-(p.lambda + p.omega) / x * f[j].up - dd,
                  du - (p.lambda - p.omega) / x * f[j].down};
    }
    return out;
}

double grid_norm(const MellinGrid& g, const std::vector<Spinor>& f) {
    double acc = 0;
    for (size_t j = 0; j < g.n; ++j) acc += norm2(f[j]) * g.x(j) * g.h;
    return std::sqrt(acc);
}

}  // namespace dc::scattering
