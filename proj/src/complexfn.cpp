#include "dc/complexfn.hpp"

#include <algorithm>
#include <cmath>

#include "dc/errors.hpp"
#include "dc/numerics.hpp"

namespace dc::complexfn {

namespace {

constexpr double kPoleTol = 1e-14;

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// Gamma on Re z >= 0.5 (no reflection).
Cplx gamma_right(Cplx z) {
    Cplx zm = z - 1.0;
    Cplx s = kLanczos[0];
    for (int i = 1; i < 15; ++i) s += kLanczos[i] / (zm + Cplx(double(i), 0));
    Cplx t = zm + kLanczosG + 0.5;
    return std::sqrt(2.0 * pi) * std::exp((zm + 0.5) * std::log(t) - t) * s;
}

// log(sin(pi z)), overflow-safe for large |Im z|; branch only matters inside exp().
Cplx log_sin_pi(Cplx z) {
    if (z.imag() > 1.0) {
        Cplx e = std::exp(Cplx(0, 2.0 * pi) * z);  // |e| < 1
        return Cplx(0, -pi) * z + std::log(1.0 - e) + std::log(Cplx(0, 0.5));
    }
    if (z.imag() < -1.0) {
        Cplx e = std::exp(Cplx(0, -2.0 * pi) * z);
        return Cplx(0, pi) * z + std::log(1.0 - e) + std::log(Cplx(0, -0.5));
    }
    return std::log(std::sin(pi * z));
}

bool near_nonpos_int(Cplx z, long& n) {
    double d = dist_to_nonpos_int(z, &n);
    return d <= kPoleTol * std::max(1.0, std::abs(z));
}

double dist_to_int(Cplx z) { return std::abs(z - Cplx(std::round(z.real()), 0)); }

}  // namespace

double dist_to_nonpos_int(Cplx z, long* n) {
    double r = std::min(0.0, std::round(z.real()));
    if (n) *n = long(r);
    return std::abs(z - Cplx(r, 0));
}

Cplx gamma(Cplx z) {
    long n;
    if (near_nonpos_int(z, n)) throw PoleAt(n);
    if (z.real() >= 0.5) return gamma_right(z);
    return pi / (std::exp(log_sin_pi(z)) * gamma_right(1.0 - z));  // reflection
}

Cplx rgamma(Cplx z) {
    long n;
    if (near_nonpos_int(z, n)) return Cplx(0, 0);
    if (z.real() >= 0.5) return 1.0 / gamma_right(z);
    return std::exp(log_sin_pi(z)) * gamma_right(1.0 - z) / pi;
}

Cplx lgamma(Cplx z) {
    long n;
    if (near_nonpos_int(z, n)) throw PoleAt(n);
    if (z.real() >= 0.5) {
        Cplx zm = z - 1.0;
        Cplx s = kLanczos[0];
        for (int i = 1; i < 15; ++i) s += kLanczos[i] / (zm + Cplx(double(i), 0));
        Cplx t = zm + kLanczosG + 0.5;
        return 0.5 * std::log(2.0 * pi) + (zm + 0.5) * std::log(t) - t + std::log(s);
    }
    return std::log(Cplx(pi, 0)) - log_sin_pi(z) - lgamma(1.0 - z);
}

Cplx digamma(Cplx z) {
    long n;
    if (near_nonpos_int(z, n)) throw PoleAt(n);
    if (z.real() < 0) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        Cplx cot;
        if (std::abs(z.imag()) > 20.0) {
            cot = z.imag() > 0 ? Cplx(0, -1) : Cplx(0, 1);
        } else {
            cot = std::cos(pi * z) / std::sin(pi * z);
        }
        return digamma(1.0 - z) - pi * cot;
    }
    Cplx acc = 0;
    while (z.real() < 8.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    Cplx inv = 1.0 / z, inv2 = inv * inv;
    Cplx r = std::log(z) - 0.5 * inv;
    static const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};
    Cplx p = inv2;
    for (int k = 0; k < 7; ++k) {
        r -= B[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return r + acc;
}

Cplx pochhammer(Cplx a, long n) {
    Cplx r = 1;
    for (long i = 0; i < n; ++i) r *= (a + Cplx(double(i), 0));
    return r;
}

Cplx cpow(Cplx z, Cplx a) {
    if (z.imag() == 0.0 && z.real() <= 0.0) {
        if (z.real() == 0.0 && a.real() > 0) return Cplx(0, 0);
        throw BranchCut("principal power on (-oo,0]");
    }
    if (a == Cplx(0, 0)) return Cplx(1, 0);
    return std::exp(a * std::log(z));
}

Cplx cpow_arg(double mod, double arg, Cplx a) {
    if (mod == 0.0) {
        if (a.real() > 0) return Cplx(0, 0);
        throw BranchCut("0^a with Re a <= 0");
    }
    return std::exp(a * Cplx(std::log(mod), arg));
}

// ---------------------------------------------------------------------------
// Tricomi U

namespace {

// Laplace integral on a rotated ray, Re a >= 2 assumed.
Cplx tricomi_U_integral(Cplx a, Cplx b, Cplx w, double arg_w) {
    const double mod_w = std::abs(w);
    double theta = std::clamp(-arg_w, -2.35, 2.35);
    const double decay = std::cos(arg_w + theta);
    if (decay < 0.2) throw DomainError("tricomi_U: argument too close to the cut");
    const Cplx eit(std::cos(theta), std::sin(theta));
    const Cplx pw = b - a - 1.0;
    const double rate = mod_w * decay;
    double L = 45.0 / rate;
    for (int it = 0; it < 3; ++it) {
        L = (45.0 + (std::max(a.real() - 1.0, 0.0) + std::max(pw.real(), 0.0)) * std::log1p(L)) / rate;
    }
    auto f = [&](double s) -> Cplx {
        Cplx t = eit * s;
        return std::exp(-w * t) * cpow_arg(s, 0.0, a - 1.0) * std::pow(1.0 + t, pw);
    };
    auto sch = numerics::graded_scheme(std::min(1e-8 / mod_w, 0.05 * L), L, 2.2, 20, true, 0.0);
    numerics::QuadResult q = numerics::quad_halfline(f, sch);
    return std::exp(Cplx(0, theta) * a) * rgamma(a) * q.value;
}

// U(-n, b, w) = (-1)^n sum_k C(n,k) (b+k)_{n-k} (-w)^k
Cplx tricomi_U_poly(long n, Cplx b, Cplx w) {
    Cplx sum = 0;
    double binom = 1;
    Cplx wp = 1;
    for (long k = 0; k <= n; ++k) {
        sum += binom * pochhammer(b + Cplx(double(k), 0), n - k) * wp;
        binom *= double(n - k) / double(k + 1);
        wp *= -w;
    }
    return (n % 2 == 0 ? 1.0 : -1.0) * sum;
}

}  // namespace

Cplx tricomi_U(Cplx a, Cplx b, Cplx w) { return tricomi_U(a, b, w, std::arg(w)); }

Cplx tricomi_U(Cplx a, Cplx b, Cplx w, double arg_w) {
    long n;
    if (near_nonpos_int(a, n)) return tricomi_U_poly(-n, b, w);
    if (a.real() >= 2.0) return tricomi_U_integral(a, b, w, arg_w);
    // shift a upward, then recur down: U(a-1) = (2a-b+w) U(a) - a(a-b+1) U(a+1)
    long shift = long(std::ceil(2.0 - a.real()));
    Cplx ah = a + Cplx(double(shift), 0);
    Cplx u1 = tricomi_U_integral(ah, b, w, arg_w);
    Cplx u2 = tricomi_U_integral(ah + 1.0, b, w, arg_w);
    for (long i = 0; i < shift; ++i) {
        Cplx cur = ah - Cplx(double(i), 0);
        Cplx u0 = (2.0 * cur - b + w) * u1 - cur * (cur - b + 1.0) * u2;
        u2 = u1;
        u1 = u0;
    }
    return u1;
}

// ---------------------------------------------------------------------------
// Regularized 1F1

namespace {

// Large-|z| route via the two Tricomi solutions, Re z >= 0.
Cplx reg_1F1_asymptotic(Cplx a, Cplx c, Cplx z) {
    const int sigma = z.imag() > 0.0 ? -1 : +1;
    Cplx u_rec = tricomi_U(a, c, z);
    Cplx u_dom = tricomi_U(c - a, c, -z, std::arg(z) + sigma * pi);
    Cplx ph1 = std::exp(Cplx(0, -sigma * pi) * a);
    Cplx ph2 = std::exp(Cplx(0, sigma * pi) * (c - a));
    return ph1 * rgamma(c - a) * u_rec + ph2 * rgamma(a) * std::exp(z) * u_dom;
}

}  // namespace

Cplx reg_1F1(Cplx a, Cplx c, Cplx z) {
    if (z == Cplx(0, 0)) return rgamma(c);
    if (z.real() < 0.0) return std::exp(z) * reg_1F1(c - a, c, -z);  // Kummer
    long n;
    if (near_nonpos_int(a, n)) return numerics::series_1F1(a, c, z);  // terminating
    const double loss = std::abs(z) - z.real();
    if (loss <= 12.0 && std::abs(z) <= 600.0) return numerics::series_1F1(a, c, z);
    return reg_1F1_asymptotic(a, c, z);
}

// ---------------------------------------------------------------------------
// Regularized 2F1

namespace {

Cplx reg_2F1_core(Cplx a, Cplx b, Cplx c, Cplx z, int depth);

// Peak log-magnitude of the series terms (cancellation estimate).
double series_growth_log(Cplx a, Cplx b, Cplx c, Cplx z) {
    const double lw = std::log(std::max(std::abs(z), 1e-300));
    const double nmax = 3.0 * (std::abs(a) + std::abs(b) + std::abs(c)) + 50.0;
    double cum = 0, peak = 0;
    for (double n = 0; n < nmax; ++n) {
        double lr = std::log(std::abs(a + n) * std::abs(b + n) + 1e-300) -
                    std::log(std::abs(c + n) * (n + 1.0)) + lw;
        cum += lr;
        peak = std::max(peak, cum);
        if (lr < -0.05 && n > std::max({std::abs(a), std::abs(b), std::abs(c)})) break;
    }
    return peak;
}

Cplx series_or_pfaff(Cplx a, Cplx b, Cplx c, Cplx z) {
    Cplx zp = z / (z - 1.0);
    if (std::abs(z) <= std::abs(zp)) {
        if (std::abs(z) > 0.95) throw ConvergenceFailure("2F1 argument too close to exp(i pi/3)");
        return numerics::series_2F1(a, b, c, z);
    }
    if (std::abs(zp) > 0.95) throw ConvergenceFailure("2F1 argument too close to exp(i pi/3)");
    return cpow(1.0 - z, -a) * numerics::series_2F1(a, c - b, c, zp);
}

// 1-z connection; requires c-a-b away from integers.
Cplx reg_2F1_one_minus(Cplx a, Cplx b, Cplx c, Cplx z, int depth) {
    Cplx w = 1.0 - z;
    Cplx s = pi / std::sin(pi * (c - a - b));
    Cplx t1 = reg_2F1_core(a, b, a + b - c + 1.0, w, depth + 1) * rgamma(c - a) * rgamma(c - b);
    Cplx t2 = cpow(w, c - a - b) * reg_2F1_core(c - a, c - b, c - a - b + 1.0, w, depth + 1) *
              rgamma(a) * rgamma(b);
    return s * (t1 - t2);
}

// 1/z connection; requires a-b away from integers and z off [0, oo).
Cplx reg_2F1_inverse(Cplx a, Cplx b, Cplx c, Cplx z, int depth) {
    Cplx w = 1.0 / z;
    Cplx s = pi / std::sin(pi * (b - a));
    Cplx t1 = cpow(-z, -a) * reg_2F1_core(a, a - c + 1.0, a - b + 1.0, w, depth + 1) * rgamma(b) *
              rgamma(c - a);
    Cplx t2 = cpow(-z, -b) * reg_2F1_core(b, b - c + 1.0, b - a + 1.0, w, depth + 1) * rgamma(a) *
              rgamma(c - b);
    return s * (t1 - t2);
}

Cplx reg_2F1_core(Cplx a, Cplx b, Cplx c, Cplx z, int depth) {
    if (z.imag() == 0.0 && z.real() >= 1.0) throw BranchCut("2F1 on [1, oo)");
    if (depth > 3) return series_or_pfaff(a, b, c, z);
    const double az = std::abs(z), ap = std::abs(z / (z - 1.0));
    const double kGrowthCap = 16.0;  // ~1e-16 e^16 = 1e-9 worst-case cancellation
    if (az <= 0.8 && series_growth_log(a, b, c, z) < kGrowthCap)
        return numerics::series_2F1(a, b, c, z);
    if (ap <= 0.8) {
        const Cplx zp = z / (z - 1.0);
        if (series_growth_log(a, c - b, c, zp) < kGrowthCap)
            return cpow(1.0 - z, -a) * numerics::series_2F1(a, c - b, c, zp);
        if (series_growth_log(c - a, b, c, zp) < kGrowthCap)
            return cpow(1.0 - z, -b) * numerics::series_2F1(c - a, b, c, zp);
    }
    const double a1z = std::abs(1.0 - z), ainv = std::abs(1.0 / z);
    const bool inv_ok = !(z.imag() == 0.0 && z.real() >= 0.0);
    const double delta = 1e-5;
    if (inv_ok && ainv <= 0.7 && ainv <= a1z) {
        if (dist_to_int(b - a) < 1e-4) {
            // detuned pair about the exact integer difference, linearly interpolated
            Cplx b0 = a + Cplx(std::round((b - a).real()), 0);
            Cplx bp = b0 + delta, bm = b0 - delta;
            Cplx fp = reg_2F1_inverse(a, bp, c, z, depth);
            Cplx fm = reg_2F1_inverse(a, bm, c, z, depth);
            Cplx tt = (b - bm) / (bp - bm);
            return fm + tt * (fp - fm);
        }
        return reg_2F1_inverse(a, b, c, z, depth);
    }
    if (a1z <= 0.95) {
        if (dist_to_int(c - a - b) < 1e-4) {
            Cplx c0 = a + b + Cplx(std::round((c - a - b).real()), 0);
            Cplx cp = c0 + delta, cm = c0 - delta;
            Cplx fp = reg_2F1_one_minus(a, b, cp, z, depth);
            Cplx fm = reg_2F1_one_minus(a, b, cm, z, depth);
            Cplx tt = (c - cm) / (cp - cm);
            return fm + tt * (fp - fm);
        }
        return reg_2F1_one_minus(a, b, c, z, depth);
    }
    if (inv_ok && ainv <= 0.95 && dist_to_int(b - a) >= 1e-4) return reg_2F1_inverse(a, b, c, z, depth);
    return series_or_pfaff(a, b, c, z);
}

}  // namespace

Cplx reg_2F1(Cplx a, Cplx b, Cplx c, Cplx z) { return reg_2F1_core(a, b, c, z, 0); }

Cplx reg_2F1_boundary(Cplx a, Cplx b, Cplx c, double x, Sign side) {
    if (!(x > 1.0)) throw DomainError("reg_2F1_boundary requires x > 1");
    const double sd = double(sgn_of(side));
    const Cplx w(1.0 - x, 0);  // negative real; the i0 side enters only through the power below
    auto eval_at_c = [&](Cplx cc) -> Cplx {
        Cplx t1 = reg_2F1(a, b, a + b - cc + 1.0, w) * rgamma(cc - a) * rgamma(cc - b);
        Cplx pw = std::exp((cc - a - b) * Cplx(std::log(x - 1.0), -sd * pi));
        Cplx t2 = pw * reg_2F1(cc - a, cc - b, cc - a - b + 1.0, w) * rgamma(a) * rgamma(b);
        if (t1 == Cplx(0, 0) && t2 == Cplx(0, 0)) throw IndeterminateConnection();
        return pi / std::sin(pi * (cc - a - b)) * (t1 - t2);
    };
    Cplx e = c - a - b;
    if (dist_to_int(e) < 1e-4) {
        const double delta = 1e-5;
        Cplx c0 = a + b + Cplx(std::round(e.real()), 0);
        Cplx cp = c0 + delta, cm = c0 - delta;
        Cplx fp = eval_at_c(cp), fm = eval_at_c(cm);
        Cplx tt = (c - cm) / (cp - cm);
        return fm + tt * (fp - fm);
    }
    return eval_at_c(c);
}

}  // namespace dc::complexfn
