#include "dc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"

namespace dc::numerics {

namespace {

struct GLRule {
    std::vector<double> x, w;
};

// Newton iteration on Legendre polynomials.
GLRule make_gl(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

const GLRule& gl_rule(int n) {
    static std::map<int, GLRule> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
    return it->second;
}

Cplx gl_panel(const std::function<Cplx(double)>& f, double a, double b, int n) {
    const GLRule& r = gl_rule(n);
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    Cplx s = 0, comp = 0;
    for (int i = 0; i < n; ++i) {
        Cplx t = f(c + h * r.x[i]) * r.w[i] - comp;
        Cplx u = s + t;
        comp = (u - s) - t;
        s = u;
    }
    return s * h;
}

}  // namespace

const std::vector<double>& gl_nodes(int n) { return gl_rule(n).x; }
const std::vector<double>& gl_weights(int n) { return gl_rule(n).w; }

QuadratureScheme graded_scheme(double x0, double x1, double ratio, int pts, bool from_zero,
                               double tail_scale) {
    QuadratureScheme s;
    s.points_per_panel = pts;
    s.tail_scale = tail_scale;
    if (from_zero) s.panel_edges.push_back(0.0);
    double e = x0;
    while (e < x1) {
        s.panel_edges.push_back(e);
        e *= ratio;
    }
    s.panel_edges.push_back(x1);
    return s;
}

QuadResult quad_halfline(const std::function<Cplx(double)>& f, const QuadratureScheme& scheme) {
    const int n = scheme.points_per_panel;
    const int nh = std::max(4, n / 2);
    Cplx total = 0;
    double err = 0;
    for (size_t i = 0; i + 1 < scheme.panel_edges.size(); ++i) {
        double a = scheme.panel_edges[i], b = scheme.panel_edges[i + 1];
        Cplx full = gl_panel(f, a, b, n);
        Cplx half = gl_panel(f, a, b, nh);
        total += full;
        err += std::abs(full - half);
    }
    if (scheme.tail_scale > 0) {
        // x = X - s*log(1-u), u in [0,1); assumes decay at least e^{-x/s}
        double X = scheme.panel_edges.back(), s = scheme.tail_scale;
        auto g = [&](double u) { return f(X - s * std::log1p(-u)) * (s / (1.0 - u)); };
        Cplx tail = gl_panel(g, 0.0, 1.0 - 1e-12, n) ;
        Cplx tail2 = gl_panel(g, 0.0, 1.0 - 1e-12, nh);
        total += tail;
        err += std::abs(tail - tail2);
    }
    return {total, err};
}

QuadResult quad_adaptive(const std::function<Cplx(double)>& f, double a, double b, double tol,
                         int max_depth, int pts) {
    struct Frame {
        double a, b;
        int depth;
    };
    std::vector<Frame> stack{{a, b, 0}};
    Cplx total = 0;
    double err = 0;
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        Cplx full = gl_panel(f, fr.a, fr.b, pts);
        Cplx half = gl_panel(f, fr.a, 0.5 * (fr.a + fr.b), pts) +
                    gl_panel(f, 0.5 * (fr.a + fr.b), fr.b, pts);
        double e = std::abs(full - half);
        if (e < tol * (1.0 + std::abs(half))) {
            total += half;
            err += e;
        } else if (fr.depth >= max_depth) {
            throw ToleranceNotMet();
        } else {
            stack.push_back({fr.a, 0.5 * (fr.a + fr.b), fr.depth + 1});
            stack.push_back({0.5 * (fr.a + fr.b), fr.b, fr.depth + 1});
        }
    }
    return {total, err};
}

void scheme_nodes(const QuadratureScheme& s, std::vector<double>& xs, std::vector<double>& ws) {
    xs.clear();
    ws.clear();
    const GLRule& r = gl_rule(s.points_per_panel);
    for (size_t i = 0; i + 1 < s.panel_edges.size(); ++i) {
        double a = s.panel_edges[i], b = s.panel_edges[i + 1];
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (int j = 0; j < s.points_per_panel; ++j) {
            xs.push_back(c + h * r.x[j]);
            ws.push_back(h * r.w[j]);
        }
    }
}

Spinor ode_rkf(const std::function<Mat2(double)>& M, double x0, const Spinor& f0, double x1,
               double tol) {
    // Cash-Karp tableau
    static const double a2 = 1. / 5, a3 = 3. / 10, a4 = 3. / 5, a5 = 1., a6 = 7. / 8;
    static const double b21 = 1. / 5;
    static const double b31 = 3. / 40, b32 = 9. / 40;
    static const double b41 = 3. / 10, b42 = -9. / 10, b43 = 6. / 5;
    static const double b51 = -11. / 54, b52 = 5. / 2, b53 = -70. / 27, b54 = 35. / 27;
    static const double b61 = 1631. / 55296, b62 = 175. / 512, b63 = 575. / 13824,
                        b64 = 44275. / 110592, b65 = 253. / 4096;
    static const double c1 = 37. / 378, c3 = 250. / 621, c4 = 125. / 594, c6 = 512. / 1771;
    static const double d1 = c1 - 2825. / 27648, d3 = c3 - 18575. / 48384,
                        d4 = c4 - 13525. / 55296, d5 = -277. / 14336, d6 = c6 - 1. / 4;

    if (x0 == x1) return f0;
    const double dir = x1 > x0 ? 1.0 : -1.0;
    double x = x0;
    Spinor f = f0;
    double h = dir * std::min(std::abs(x1 - x0) * 0.05, 0.1 * std::min(std::abs(x0), std::abs(x1)) + 1e-4);
    auto deriv = [&](double xx, const Spinor& ff) { return M(xx) * ff; };
    int steps = 0;
    while (dir * (x1 - x) > 0) {
        if (++steps > 2000000) throw StepFailure("step count exceeded");
        if (dir * (x + h - x1) > 0) h = x1 - x;
        Spinor k1 = deriv(x, f);
        Spinor k2 = deriv(x + a2 * h, f + h * b21 * k1);
        Spinor k3 = deriv(x + a3 * h, f + h * (b31 * k1 + b32 * k2));
        Spinor k4 = deriv(x + a4 * h, f + h * (b41 * k1 + b42 * k2 + b43 * k3));
        Spinor k5 = deriv(x + a5 * h, f + h * (b51 * k1 + b52 * k2 + b53 * k3 + b54 * k4));
        Spinor k6 = deriv(x + a6 * h, f + h * (b61 * k1 + b62 * k2 + b63 * k3 + b64 * k4 + b65 * k5));
        Spinor f5 = f + h * (c1 * k1 + c3 * k3 + c4 * k4 + c6 * k6);
        Spinor errv = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6);
        double scale = tol * (1.0 + std::sqrt(norm2(f)));
        double e = std::sqrt(norm2(errv)) / scale;
        if (e <= 1.0) {
            x += h;
            f = f5;
            h *= std::min(5.0, 0.9 * std::pow(std::max(e, 1e-10), -0.2));
        } else {
            h *= std::max(0.1, 0.9 * std::pow(e, -0.25));
        }
        if (std::abs(h) < 1e-14 * (std::abs(x) + 1e-14)) throw StepFailure();
    }
    return f;
}

Cplx series_1F1(Cplx a, Cplx c, Cplx z) {
    // regularized: sum (a)_n z^n / (Gamma(c+n) n!)
    using complexfn::rgamma;
    long N = -1;
    double d = complexfn::dist_to_nonpos_int(c, &N);
    Cplx sum = 0, comp = 0;
    auto add = [&](Cplx t) {
        Cplx y = t - comp;
        Cplx u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    };
    long n0 = 0;
    Cplx term;
    if (d < 0.5) {
        // c near the nonpositive integer N (<= 0): explicit leading terms with
        // rgamma, then recurrence from n0 = -N + 1
        const long nn = -N;
        Cplx poch = 1, zp = 1;
        double fact = 1;
        for (long n = 0; n <= nn; ++n) {
            add(poch * zp * rgamma(c + Cplx(double(n), 0)) / fact);
            poch *= (a + Cplx(double(n), 0));
            zp *= z;
            fact *= double(n + 1);
        }
        n0 = nn + 1;
        term = poch * zp / fact * rgamma(c + Cplx(double(n0), 0));
    } else {
        term = rgamma(c);
    }
    int small_count = 0;
    for (long n = n0; n < 10000; ++n) {
        add(term);
        Cplx next = term * (a + Cplx(double(n), 0)) * z /
                    ((c + Cplx(double(n), 0)) * Cplx(double(n + 1), 0));
        if (std::abs(next) <= 1e-17 * (std::abs(sum) + 1e-300)) {
            if (++small_count >= 2) return sum;
        } else {
            small_count = 0;
        }
        term = next;
    }
    throw ConvergenceFailure("1F1 series did not converge in 10000 terms");
}

Cplx series_2F1(Cplx a, Cplx b, Cplx c, Cplx z) {
    using complexfn::rgamma;
    if (std::abs(z) > 0.95 + 1e-12) throw DomainError("series_2F1 requires |z| <= 0.95");
    long N = -1;
    double d = complexfn::dist_to_nonpos_int(c, &N);
    Cplx sum = 0, comp = 0;
    auto add = [&](Cplx t) {
        Cplx y = t - comp;
        Cplx u = sum + y;
        comp = (u - sum) - y;
        sum = u;
    };
    long n0 = 0;
    Cplx term;
    if (d < 0.5) {
        const long nn = -N;
        Cplx pa = 1, pb = 1, zp = 1;
        double fact = 1;
        for (long n = 0; n <= nn; ++n) {
            add(pa * pb * zp * rgamma(c + Cplx(double(n), 0)) / fact);
            pa *= (a + Cplx(double(n), 0));
            pb *= (b + Cplx(double(n), 0));
            zp *= z;
            fact *= double(n + 1);
        }
        n0 = nn + 1;
        term = pa * pb * zp / fact * rgamma(c + Cplx(double(n0), 0));
    } else {
        term = rgamma(c);
    }
    int small_count = 0;
    for (long n = n0; n < 10000; ++n) {
        add(term);
        Cplx next = term * (a + Cplx(double(n), 0)) * (b + Cplx(double(n), 0)) * z /
                    ((c + Cplx(double(n), 0)) * Cplx(double(n + 1), 0));
        if (std::abs(next) <= 1e-17 * (std::abs(sum) + 1e-300)) {
            if (++small_count >= 2) return sum;
        } else {
            small_count = 0;
        }
        term = next;
    }
    throw ConvergenceFailure("2F1 series did not converge in 10000 terms");
}

Cplx laplace_K_oracle(Cplx beta, Cplx m, double x) {
    // K_{beta,m}(x) = x^{1/2+m} e^{-x/2} / Gamma(1/2+m-beta) *
    //                 Int_0^oo e^{-x t} t^{-1/2+m-beta} (1+t)^{-1/2+m+beta} dt
    using complexfn::cpow;
    Cplx a = 0.5 + m - beta;
    if (a.real() <= 0.0) throw DomainError("laplace_K_oracle requires Re(1/2+m-beta) > 0");
    if (x <= 0.0) throw DomainError("laplace_K_oracle requires x > 0");
    Cplx pm = -0.5 + m + beta;
    auto f = [&](double t) -> Cplx {
        return std::exp(-x * t) * cpow(Cplx(t, 0), a - 1.0) * cpow(Cplx(1.0 + t, 0), pm);
    };
    double L = (45.0 + 3.0 * (std::abs(a) + std::abs(pm))) / x;
    // endpoint panel must make the remaining t^{Re a} mass negligible
    double t0 = std::max(std::pow(1e-14 * a.real(), 1.0 / a.real()), 1e-290);
    auto sch = graded_scheme(std::min(t0, 0.1 * L), L, 2.0, 24, true, 0.0);
    QuadResult q = quad_halfline(f, sch);
    return cpow(Cplx(x, 0), 0.5 + m) * std::exp(-0.5 * x) * complexfn::rgamma(a) * q.value;
}

void fft(std::vector<Cplx>& a, int sign) {
    const size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw DomainError("fft size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * pi / double(len);
        Cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            Cplx w = 1.0;
            for (size_t j = 0; j < len / 2; ++j) {
                Cplx u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

std::vector<double> fd_weights(double x0, const std::vector<double>& xs, int m) {
    // Fornberg's algorithm
    const int n = int(xs.size()) - 1;
    std::vector<std::vector<std::vector<double>>> d(
        m + 1, std::vector<std::vector<double>>(n + 1, std::vector<double>(n + 1, 0.0)));
    d[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int i = 1; i <= n; ++i) {
        double c2 = 1.0;
        for (int j = 0; j < i; ++j) {
            double c3 = xs[i] - xs[j];
            c2 *= c3;
            for (int k = 0; k <= std::min(i, m); ++k) {
                d[k][i][j] = ((xs[i] - x0) * d[k][i - 1][j] - (k > 0 ? k * d[k - 1][i - 1][j] : 0.0)) / c3;
            }
        }
        for (int k = 0; k <= std::min(i, m); ++k) {
            d[k][i][i] = c1 / c2 *
                         ((k > 0 ? k * d[k - 1][i - 1][i - 1] : 0.0) - (xs[i - 1] - x0) * d[k][i - 1][i - 1]);
        }
        c1 = c2;
    }
    std::vector<double> w(n + 1);
    for (int j = 0; j <= n; ++j) w[j] = d[m][n][j];
    return w;
}

}  // namespace dc::numerics
