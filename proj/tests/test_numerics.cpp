#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"
#include "dc/numerics.hpp"

using namespace dc;
using namespace dc::numerics;

TEST_CASE("quad_halfline closed forms") {
    // fine grading near 0 resolves integrable endpoint singularities
    auto sch = graded_scheme(1e-22, 60.0, 2.0, 24, true, 2.0);

    auto q1 = quad_halfline([](double x) { return Cplx(std::exp(-x), 0); }, sch);
    CHECK(std::abs(q1.value - 1.0) < 1e-12);

    auto q2 = quad_halfline([](double x) { return Cplx(std::exp(-x) / std::sqrt(x), 0); }, sch);
    CHECK(std::abs(q2.value - std::sqrt(pi)) < 1e-10);

    auto q3 = quad_halfline([](double x) { return std::exp(Cplx(0, x)) * std::exp(-x); }, sch);
    CHECK(std::abs(q3.value - 1.0 / Cplx(1, -1)) < 1e-12);
}

TEST_CASE("quad_halfline error estimate is conservative") {
    auto sch = graded_scheme(1e-22, 60.0, 2.0, 24, true, 2.0);
    struct Case {
        std::function<Cplx(double)> f;
        Cplx exact;
    };
    std::vector<Case> battery = {
        {[](double x) { return Cplx(std::exp(-x), 0); }, Cplx(1, 0)},
        {[](double x) { return Cplx(x * std::exp(-x), 0); }, Cplx(1, 0)},
        {[](double x) { return Cplx(std::exp(-x) / std::sqrt(x), 0); }, Cplx(std::sqrt(pi), 0)},
        {[](double x) { return std::exp(Cplx(0, x)) * std::exp(-x); }, 1.0 / Cplx(1, -1)},
    };
    for (auto& c : battery) {
        auto q = quad_halfline(c.f, sch);
        double true_err = std::abs(q.value - c.exact);
        CHECK(true_err <= 3.0 * q.error_estimate + 1e-15);
    }
}

TEST_CASE("ode_rkf free system and reversal") {
    // constant M: matches matrix exponential for M = [[0,-k],[k,0]]
    const Cplx k(0.7, 0.2);
    auto M = [&](double) {
        Mat2 m;
        m(0, 1) = -k;
        m(1, 0) = k;
        return m;
    };
    Spinor f0{1.0, 0.5};
    double L = 3.0;
    Spinor f1 = ode_rkf(M, 1.0, f0, 1.0 + L, 1e-12);
    // exp(L*M) = [[cos kL, -sin kL],[sin kL, cos kL]]
    Cplx c = std::cos(k * L), s = std::sin(k * L);
    Spinor expect{c * f0.up - s * f0.down, s * f0.up + c * f0.down};
    CHECK(abs(f1 - expect) < 1e-10 * abs(expect));

    Spinor back = ode_rkf(M, 1.0 + L, f1, 1.0, 1e-12);
    CHECK(abs(back - f0) < 1e-10);

    // linearity
    Spinor g1 = ode_rkf(M, 1.0, f0 * Cplx(2.5, -1), 1.0 + L, 1e-12);
    CHECK(abs(g1 - f1 * Cplx(2.5, -1)) < 1e-9 * abs(g1));
}

TEST_CASE("ode_rkf tolerance scaling") {
    const Cplx k(1.0, 0.0);
    auto M = [&](double) {
        Mat2 m;
        m(0, 1) = -k;
        m(1, 0) = k;
        return m;
    };
    Spinor f0{1.0, 0.0};
    double L = 10.0;
    auto err_at = [&](double tol) {
        Spinor f = ode_rkf(M, 1.0, f0, 1.0 + L, tol);
        Spinor expect{std::cos(k * L), std::sin(k * L)};
        return abs(f - expect);
    };
    double e8 = err_at(1e-8), e12 = err_at(1e-12);
    CHECK(e12 < e8);
    CHECK(e12 < 1e-9);
    // global error scales at least as tol^0.8
    CHECK(e12 <= std::max(e8, 1e-15) * std::pow(1e-4, 0.8) * 1e3 + 1e-12);
}

TEST_CASE("series oracles") {
    using complexfn::rgamma;
    // 1F1(1;2;1) = e - 1 (regularized by Gamma(2) = 1)
    CHECK(std::abs(series_1F1({1, 0}, {2, 0}, {1, 0}) - (std::exp(1.0) - 1.0)) < 1e-14);
    // (a, c, 0) -> 1/Gamma(c)
    CHECK(std::abs(series_1F1({0.3, 0.1}, {3, 0}, {0, 0}) - 0.5) < 1e-14);
    // 2F1(1,1;2;z) = -log(1-z)/z
    Cplx z(0.5, 0.2);
    CHECK(std::abs(series_2F1({1, 0}, {1, 0}, {2, 0}, z) - (-std::log(1.0 - z) / z)) < 1e-13);
}

TEST_CASE("laplace_K_oracle closed form") {
    CHECK(std::abs(laplace_K_oracle({0, 0}, {0.5, 0}, 1.0) - std::exp(-0.5)) < 1e-10);
    CHECK(std::abs(laplace_K_oracle({0, 0}, {0.5, 0}, 3.0) - std::exp(-1.5)) < 1e-10);
}

TEST_CASE("richardson") {
    CHECK(std::abs(richardson(1.0 + 0.1, 1.0 + 0.05) - 1.0) < 1e-14);  // linear-in-eps
    CHECK(std::abs(richardson(2.0, 2.0) - 2.0) < 1e-14);               // constant
    double v = richardson(1.0 + 0.01, 1.0 + 0.0025);                   // quadratic -> O(eps^2)
    CHECK(std::abs(v - 1.0) < 0.01);
}

TEST_CASE("fft round trip and delta") {
    std::vector<Cplx> v(64);
    for (size_t i = 0; i < v.size(); ++i) v[i] = Cplx(std::sin(0.3 * double(i)), std::cos(0.17 * double(i)));
    auto w = v;
    fft(w, -1);
    fft(w, +1);
    for (size_t i = 0; i < v.size(); ++i) CHECK(std::abs(w[i] / double(v.size()) - v[i]) < 1e-12);
}

TEST_CASE("fd_weights reproduce derivatives") {
    std::vector<double> xs = {-0.2, -0.1, 0.0, 0.15, 0.3};
    auto w = fd_weights(0.05, xs, 1);
    double d = 0;
    for (size_t i = 0; i < xs.size(); ++i) d += w[i] * std::sin(xs[i]);
    CHECK(std::abs(d - std::cos(0.05)) < 1e-4);
}
