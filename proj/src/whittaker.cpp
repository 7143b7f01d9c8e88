#include "dc/whittaker.hpp"

#include <cmath>
#include <functional>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"

namespace dc::whittaker {

using complexfn::cpow;
using complexfn::gamma;
using complexfn::reg_1F1;
using complexfn::reg_2F1_boundary;
using complexfn::rgamma;
using complexfn::tricomi_U;

namespace {

void check_cut(Cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0) throw BranchCut("Whittaker argument on (-oo,0]");
}

double dist_2m_to_int(Cplx m) {
    Cplx tm = 2.0 * m;
    return std::abs(tm - Cplx(std::round(tm.real()), 0));
}

// K through the Tricomi solution; exact for any m, preferred in the
// cancellation band Re z > 16 and near degenerate 2m.
Cplx K_tricomi(Cplx beta, Cplx m, Cplx z) {
    return cpow(z, 0.5 + m) * std::exp(-0.5 * z) * tricomi_U(0.5 + m - beta, 1.0 + 2.0 * m, z);
}

// K through the I-combination (second line of the defining display).
Cplx K_combination(Cplx beta, Cplx m, Cplx z) {
    Cplx pref = pi / std::sin(2.0 * pi * m);
    Cplx t1 = whittaker_I({beta, m}, z) * rgamma(0.5 - m - beta);
    Cplx t2 = whittaker_I({beta, -m}, z) * rgamma(0.5 + m - beta);
    return pref * (t2 - t1);
}

}  // namespace

Cplx whittaker_I(const WhittakerParams& p, Cplx z) {
    check_cut(z);
    return cpow(z, 0.5 + p.m) * std::exp(-0.5 * z) * reg_1F1(0.5 + p.m - p.beta, 1.0 + 2.0 * p.m, z);
}

Cplx whittaker_K(const WhittakerParams& p, Cplx z) {
    check_cut(z);
    // the I-combination loses e^{Re z} digits when K is recessive
    if (z.real() > 9.0 || dist_2m_to_int(p.m) < 1e-6) return K_tricomi(p.beta, p.m, z);
    return K_combination(p.beta, p.m, z);
}

Cplx whittaker_K_rotated(const WhittakerParams& p, Cplx z, Sign rotation) {
    check_cut(z);
    const double s = double(sgn_of(rotation));
    auto eval = [&](Cplx m) -> Cplx {
        Cplx pref = pi / std::sin(2.0 * pi * m);
        Cplx t1 = std::exp(Cplx(0, s * pi) * (0.5 + m)) * whittaker_I({p.beta, m}, z) *
                  rgamma(0.5 - m + p.beta);
        Cplx t2 = std::exp(Cplx(0, s * pi) * (0.5 - m)) * whittaker_I({p.beta, -m}, z) *
                  rgamma(0.5 + m + p.beta);
        return pref * (t2 - t1);
    };
    if (dist_2m_to_int(p.m) < 1e-4) {
        // symmetric detuned pairs, Richardson in delta^2
        const double delta = 1e-3;
        Cplx pair1 = 0.5 * (eval(p.m + delta) + eval(p.m - delta));
        Cplx pair2 = 0.5 * (eval(p.m + 0.5 * delta) + eval(p.m - 0.5 * delta));
        return (4.0 * pair2 - pair1) / 3.0;
    }
    return eval(p.m);
}

Cplx whittaker_I_deriv(const WhittakerParams& p, Cplx z) {
    Cplx sq = cpow(z, Cplx(0.5, 0));
    return whittaker_I({p.beta - 0.5, p.m - 0.5}, z) / sq + ((0.5 - p.m) / z - 0.5) * whittaker_I(p, z);
}

Cplx whittaker_K_deriv(const WhittakerParams& p, Cplx z) {
    Cplx sq = cpow(z, Cplx(0.5, 0));
    return -whittaker_K({p.beta + 0.5, p.m - 0.5}, z) / sq + ((0.5 - p.m) / z + 0.5) * whittaker_K(p, z);
}

Cplx trig_J(const WhittakerParams& p, Cplx z) {
    check_cut(z);
    const double a = std::arg(z);
    if (a > -0.5 * pi) {
        return std::exp(Cplx(0, 0.5 * pi) * (0.5 + p.m)) * whittaker_I({iu * p.beta, p.m}, -iu * z);
    }
    return std::exp(Cplx(0, -0.5 * pi) * (0.5 + p.m)) * whittaker_I({-iu * p.beta, p.m}, iu * z);
}

Cplx trig_H(const WhittakerParams& p, Cplx z, Sign sign) {
    check_cut(z);
    const double hs = double(sgn_of(sign));
    const Cplx pref = std::exp(Cplx(0, -hs * 0.5 * pi) * (0.5 + p.m));
    const Cplx B = Cplx(0, hs) * p.beta;  // K index
    const Cplx u = Cplx(0, -hs) * z;
    const double au = std::arg(z) - hs * 0.5 * pi;
    if (au > -pi && au <= pi && !(u.imag() == 0.0 && u.real() <= 0.0)) {
        return pref * whittaker_K({B, p.m}, u);
    }
    // continuation across the cut: u = e^{i rot pi} v with v principal
    const Sign rot = au <= -pi ? Sign::Minus : Sign::Plus;
    return pref * whittaker_K_rotated({-B, p.m}, -u, rot);
}

namespace {

// Unregularized 2F1 series (upper/lower parameters may be large together).
Cplx series_2F1_unreg(Cplx a, Cplx b, Cplx c, Cplx w) {
    Cplx sum = 0, t = 1;
    for (int n = 0; n < 6000; ++n) {
        sum += t;
        t *= (a + double(n)) * (b + double(n)) * w / ((c + double(n)) * double(n + 1));
        if (std::abs(t) < 1e-18 * (std::abs(sum) + 1e-300)) return sum;
    }
    throw ConvergenceFailure("unregularized 2F1 series");
}

// log sin(pi z), overflow-safe; branch consistent within one assembly.
Cplx log_sin_pi_w(Cplx z) {
    if (z.imag() > 1.0)
        return Cplx(0, -pi) * z + std::log(1.0 - std::exp(Cplx(0, 2.0 * pi) * z)) +
               std::log(Cplx(0, 0.5));
    if (z.imag() < -1.0)
        return Cplx(0, pi) * z + std::log(1.0 - std::exp(Cplx(0, -2.0 * pi) * z)) +
               std::log(Cplx(0, -0.5));
    return std::log(std::sin(pi * z));
}

// Large-|s| Mellin transform of J assembled in log space (the linear-space
// Gamma/sin factors overflow past |s| ~ 140 while the result stays bounded).
Cplx mellin_J_logspace(const WhittakerParams& p, double v, double s, double sc) {
    using complexfn::lgamma;
    const Cplx is(0, s);
    const Cplx a = p.m + 0.5 + Cplx(0, sc) * p.beta;
    const Cplx b = p.m + 1.0 - is;
    const Cplx cc = 2.0 * p.m + 1.0;
    const Cplx e = cc - a - b;
    const Cplx half(0.5, 0);
    const Cplx L_common = (-0.5 + is) * std::log(Cplx(v, 0)) + (p.m + 1.0 - is) * std::log(2.0) +
                          (-p.m - 1.0 + is) * Cplx(0, sc * 0.5 * pi) + lgamma(p.m + 1.0 - is) +
                          std::log(Cplx(pi, 0)) - log_sin_pi_w(e);
    // inner functions at w = -1 through the Pfaff map to 1/2 (convergent for
    // the large joint upper/lower parameters)
    const Cplx ct1 = a + b - cc + 1.0;
    const Cplx L1 = -a * std::log(2.0) + std::log(series_2F1_unreg(a, ct1 - b, ct1, half)) -
                    lgamma(ct1) - lgamma(cc - a) - lgamma(cc - b);
    const Cplx L2 = -Cplx(0, sc * pi) * e - (cc - a) * std::log(2.0) +
                    std::log(series_2F1_unreg(cc - a, 1.0 - a, e + 1.0, half)) - lgamma(e + 1.0) -
                    lgamma(a) - lgamma(b);
    const double shift = std::max((L_common + L1).real(), (L_common + L2).real());
    return std::exp(shift) *
           (std::exp(L_common + L1 - shift) - std::exp(L_common + L2 - shift));
}

}  // namespace

Cplx mellin_J_onesided(const WhittakerParams& p, double v, double s, Sign prescription) {
    if (!(v > 0.0)) throw DomainError("mellin_J requires v > 0");
    if (p.m.real() <= -1.0) throw DomainError("mellin_J requires Re(m) > -1");
    const double sc = double(sgn_of(prescription));
    if (std::abs(s) + std::abs(p.beta.real()) > 60.0) return mellin_J_logspace(p, v, s, sc);
    const Cplx is(0, s);
    Cplx pref = cpow(Cplx(v, 0), -0.5 + is) * std::exp(std::log(2.0) * (p.m + 1.0 - is)) *
                std::exp(Cplx(0, sc * 0.5 * pi) * (-p.m - 1.0 + is)) * gamma(p.m + 1.0 - is);
    Cplx F = reg_2F1_boundary(p.m + 0.5 + Cplx(0, sc) * p.beta, p.m + 1.0 - is, 2.0 * p.m + 1.0, 2.0,
                              prescription);
    return pref * F;
}

Cplx mellin_J(const WhittakerParams& p, double v, double s) {
    Cplx a = mellin_J_onesided(p, v, s, Sign::Plus);
    Cplx b = mellin_J_onesided(p, v, s, Sign::Minus);
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    if (std::abs(a - b) > 1e-8 * scale)
        throw ConvergenceFailure("mellin_J: the two i0 prescriptions disagree");
    return 0.5 * (a + b);
}

namespace {

Cplx fd_deriv(const std::function<Cplx(Cplx)>& f, Cplx z) {
    const double h = 1e-3 * std::max(1.0, std::abs(z));
    return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

}  // namespace

Cplx recurrence_residual(RecurrenceKind kind, const WhittakerParams& p, Cplx z) {
    check_cut(z);
    const Cplx beta = p.beta, m = p.m;
    auto I = [](Cplx b, Cplx mm, Cplx zz) { return whittaker_I({b, mm}, zz); };
    auto K = [](Cplx b, Cplx mm, Cplx zz) { return whittaker_K({b, mm}, zz); };
    const Cplx sq = cpow(z, Cplx(0.5, 0));
    const bool is_K = kind >= RecurrenceKind::REK1 && kind <= RecurrenceKind::REK6;
    const bool is_RK = kind == RecurrenceKind::RERK1 || kind == RecurrenceKind::RERK2;
    std::function<Cplx(Cplx)> f;
    if (is_K || is_RK)
        f = [&](Cplx zz) { return K(beta, m, zz); };
    else
        f = [&](Cplx zz) { return I(beta, m, zz); };
    const Cplx fv = f(z);
    const Cplx fp = fd_deriv(f, z);

    switch (kind) {
        case RecurrenceKind::REI1:
            return sq * fp + (-0.5 - m) / sq * fv - 0.5 * sq * fv - (-0.5 - m - beta) * I(beta + 0.5, m + 0.5, z);
        case RecurrenceKind::REI2:
            return sq * fp + (-0.5 + m) / sq * fv + 0.5 * sq * fv - I(beta - 0.5, m - 0.5, z);
        case RecurrenceKind::REI3:
            return sq * fp + (-0.5 + m) / sq * fv - 0.5 * sq * fv - I(beta + 0.5, m - 0.5, z);
        case RecurrenceKind::REI4:
            return sq * fp + (-0.5 - m) / sq * fv + 0.5 * sq * fv - (0.5 + m - beta) * I(beta - 0.5, m + 0.5, z);
        case RecurrenceKind::REI5:
            return z * fp + beta * fv - 0.5 * z * fv - (0.5 + m + beta) * I(beta + 1.0, m, z);
        case RecurrenceKind::REI6:
            return z * fp - beta * fv + 0.5 * z * fv - (0.5 + m - beta) * I(beta - 1.0, m, z);
        case RecurrenceKind::REK1:
            return sq * fp + (-0.5 - m) / sq * fv - 0.5 * sq * fv + K(beta + 0.5, m + 0.5, z);
        case RecurrenceKind::REK2:
            return sq * fp + (-0.5 + m) / sq * fv + 0.5 * sq * fv - (-0.5 + m + beta) * K(beta - 0.5, m - 0.5, z);
        case RecurrenceKind::REK3:
            return sq * fp + (-0.5 + m) / sq * fv - 0.5 * sq * fv + K(beta + 0.5, m - 0.5, z);
        case RecurrenceKind::REK4:
            return sq * fp + (-0.5 - m) / sq * fv + 0.5 * sq * fv - (-0.5 - m + beta) * K(beta - 0.5, m + 0.5, z);
        case RecurrenceKind::REK5:
            return z * fp + beta * fv - 0.5 * z * fv + K(beta + 1.0, m, z);
        case RecurrenceKind::REK6:
            return z * fp - beta * fv + 0.5 * z * fv - (0.5 + m - beta) * (0.5 - m - beta) * K(beta - 1.0, m, z);
        case RecurrenceKind::RERI1: {
            const Cplx mu = m - 0.5;  // f = I_{beta, mu+1/2}
            return 2.0 * mu * fp + (2.0 * mu * mu / z - beta) * fv - I(beta, mu - 0.5, z);
        }
        case RecurrenceKind::RERI2: {
            const Cplx mu = m + 0.5;  // f = I_{beta, mu-1/2}
            return 2.0 * mu * fp + (-2.0 * mu * mu / z + beta) * fv - (mu * mu - beta * beta) * I(beta, mu + 0.5, z);
        }
        case RecurrenceKind::RERK1: {
            const Cplx mu = m - 0.5;  // f = K_{beta, mu+1/2}
            return 2.0 * mu * fp + (2.0 * mu * mu / z - beta) * fv + (mu + beta) * K(beta, mu - 0.5, z);
        }
        case RecurrenceKind::RERK2: {
            const Cplx mu = m + 0.5;  // f = K_{beta, mu-1/2}
            return 2.0 * mu * fp + (-2.0 * mu * mu / z + beta) * fv - (-mu + beta) * K(beta, mu + 0.5, z);
        }
    }
    throw DomainError("unknown recurrence kind");
}

void k_smallx_coeffs(const WhittakerParams& p, Cplx& c_plus, Cplx& c_minus) {
    c_plus = gamma(-2.0 * p.m) * rgamma(0.5 - p.m - p.beta);
    c_minus = gamma(2.0 * p.m) * rgamma(0.5 + p.m - p.beta);
}

}  // namespace dc::whittaker
