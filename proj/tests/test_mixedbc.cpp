#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dc/complexfn.hpp"
#include "dc/errors.hpp"
#include "dc/mixedbc.hpp"

using namespace dc;
using namespace dc::mixedbc;
using complexfn::gamma;
using manifold::ManifoldPoint;
using manifold::point_from_triple;
using manifold::ProjectiveValue;

namespace {

ManifoldPoint region_b_point() {
    return point_from_triple({0.4, 0}, {std::sqrt(0.12), 0}, {0.2, 0});
}

ManifoldPoint spiral_point() {
    // Im mu large enough that two lattice points fit inside the band
    Cplx mu(0.2, 0.5), omega(0.5, 0);
    Cplx lambda = std::sqrt(omega * omega - mu * mu);
    return point_from_triple(omega, lambda, mu);
}

}  // namespace

TEST_CASE("c coefficient") {
    auto p = region_b_point();
    auto cp = c_coeff(p, Sign::Plus);
    auto cm = c_coeff(p, Sign::Minus);
    REQUIRE(cp.kind == ProjectiveValue::Kind::Finite);
    REQUIRE(cm.kind == ProjectiveValue::Kind::Finite);
    // real p in region B: c_+ = conj(c_-)
    CHECK(std::abs(cp.value - std::conj(cm.value)) < 1e-12 * std::abs(cp.value));

    // golden route through the direct Gamma evaluation
    Cplx mu = p.mu, lam = p.lambda, om = p.omega;
    Cplx direct = om / (lam - iu * mu) * gamma(2.0 * mu + 1.0) / gamma(1.0 - 2.0 * mu) *
                  gamma(1.0 - mu - iu * lam) / gamma(1.0 + mu - iu * lam);
    CHECK(std::abs(cp.value - direct) < 1e-12 * std::abs(direct));

    // omega = 0 on the quadric: c is 0 or infinity, never indeterminate
    auto e = point_from_triple({0, 0}, {0.7, 0}, {0, 0.7});  // E_0^+
    CHECK(c_coeff(e, Sign::Plus).kind == ProjectiveValue::Kind::Zero);
    CHECK(c_coeff(e, Sign::Minus).kind == ProjectiveValue::Kind::Inf);

    CHECK_THROWS_AS(c_coeff(point_from_triple({5, 0}, {4, 0}, {3, 0}), Sign::Plus), DomainError);
}

TEST_CASE("admissibility") {
    CHECK(admissible(Cplx(1, 1), Sign::Plus, Cplx(0.1, 0)));
    CHECK(!admissible(Cplx(1, 1), Sign::Minus, Cplx(0.1, 0)));
    CHECK(!admissible(Cplx(2, 0), Sign::Plus, Cplx(0, 0.3)));
    CHECK(admissible(Cplx(2, 0), Sign::Plus, Cplx(0, 1)));
    CHECK(!admissible(Cplx(2, 0), Sign::Minus, Cplx(0, 1)));
    CHECK(!admissible(Cplx(0, 0), Sign::Plus, Cplx(0, 1)));
}

TEST_CASE("circle locus for real mu (kappa-phase sweep)") {
    // for mu = 0.2 the band holds at most one lattice point per family and kappa;
    // the circle is traced by sweeping arg(kappa) at fixed |kappa|
    auto p = region_b_point();
    auto cp = c_coeff(p, Sign::Plus);
    double r_expect = 0.5 * std::pow(std::abs(cp.value), 1.0 / (2.0 * p.mu.real()));
    Window w{-4.0 * r_expect, 4.0 * r_expect, -4.0 * r_expect, 4.0 * r_expect};
    int found = 0;
    for (int j = 0; j < 12; ++j) {
        MixedBoundaryData data{p, std::exp(Cplx(0, 2.0 * pi * j / 12.0))};
        auto evs = eigenvalues(data, w);
        CHECK(evs.geometry == LocusGeometry::Circle);
        CHECK(evs.finite);
        for (auto& e : evs.entries) {
            ++found;
            CHECK(std::abs(std::abs(e.k) - r_expect) < 1e-10 * r_expect);
            CHECK(e.residual < 1e-12);
            CHECK(matching_residual(data, e.k, e.sign) < 1e-6);
            CHECK(admissible(e.k, e.sign, data.p.lambda));
        }
    }
    CHECK(found >= 4);
}

TEST_CASE("spiral locus and slope") {
    auto p = spiral_point();
    auto cp = c_coeff(p, Sign::Plus);
    REQUIRE(cp.kind == ProjectiveValue::Kind::Finite);
    // center the family-+ lattice so that two points sit inside the band
    MixedBoundaryData data{p, cp.value * std::exp(Cplx(0, -2.0))};
    Window w{-50, 50, -50, 50};
    auto evs = eigenvalues(data, w);
    CHECK(evs.geometry == LocusGeometry::Spiral);
    CHECK(evs.finite);
    REQUIRE(evs.entries.size() >= 2);
    const Cplx mu = data.p.mu;
    const double dln_expect = std::abs((pi * iu / mu).real());
    const double darg_expect = std::abs((pi * iu / mu).imag());
    const double slope_expect = mu.imag() / mu.real();
    // consecutive same-family radii obey the log-linear spiral law
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        std::vector<double> radii;
        for (auto& e : evs.entries)
            if (e.sign == s) radii.push_back(std::abs(e.k));
        std::sort(radii.begin(), radii.end());
        for (size_t i = 0; i + 1 < radii.size(); ++i) {
            double dln = std::log(radii[i + 1] / radii[i]);
            CHECK(std::abs(dln - slope_expect * darg_expect) < 1e-6);
            CHECK(std::abs(dln - dln_expect) < 1e-6);
        }
    }
    for (auto& e : evs.entries) {
        CHECK(e.residual < 1e-10);
        CHECK(matching_residual(data, e.k, e.sign) < 1e-6);
    }
}

TEST_CASE("half-line locus for imaginary mu") {
    Cplx mu(0, 0.3), omega(0.35, 0);
    Cplx lambda = std::sqrt(omega * omega - mu * mu);
    auto p = point_from_triple(omega, lambda, mu);
    auto cp = c_coeff(p, Sign::Plus);
    REQUIRE(cp.kind == ProjectiveValue::Kind::Finite);
    // |kappa| = |c| puts the whole ladder inside the band
    MixedBoundaryData data{p, Cplx(std::abs(cp.value), 0)};
    Window w{-30, 30, -30, 30};
    auto evs = eigenvalues(data, w);
    CHECK(evs.geometry == LocusGeometry::HalfLineDiscrete);
    CHECK(!evs.finite);
    REQUIRE(evs.entries.size() >= 2);
    // all on a common ray: equal arguments within each family
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        double arg0 = 0;
        bool first = true;
        for (auto& e : evs.entries) {
            if (e.sign != s) continue;
            if (first) {
                arg0 = std::arg(e.k);
                first = false;
            } else {
                CHECK(std::abs(std::arg(e.k) - arg0) < 1e-10);
            }
        }
    }
}

TEST_CASE("no eigenvalues when c degenerates") {
    auto e = point_from_triple({0, 0}, {0.7, 0}, {0, 0.7});  // E_0^+, c in {0, inf}
    for (Cplx kappa : {Cplx(0.5, 0), Cplx(0, 1.5), Cplx(-0.3, 0.7)}) {
        MixedBoundaryData data{e, kappa};
        auto evs = eigenvalues(data, {-20, 20, -20, 20});
        CHECK(evs.entries.empty());  // in particular disjoint from C_+
    }
}

TEST_CASE("mu = 0 logarithmic case") {
    Cplx lambda(0.6, 0);
    Cplx nu(0.4, 0.9);
    auto evs = eigenvalues_mu0(Sign::Plus, lambda, nu);
    for (auto& e : evs) {
        CHECK(e.residual < 1e-12);
        double sd = double(sgn_of(e.sign));
        CHECK(sd * e.k.imag() > 0);
    }
    // existence predicate: s i lambda in N kills the half-plane
    auto none_plus = eigenvalues_mu0(Sign::Plus, Cplx(0, -2), nu);  // i lambda = 2
    for (auto& e : none_plus) CHECK(e.sign != Sign::Plus);
    // Re(exp(...)) <= 0 suppresses the eigenvalue
    auto evs2 = eigenvalues_mu0(Sign::Plus, lambda, nu + Cplx(0, pi));
    CHECK(evs2.size() + evs.size() >= 1);  // complementary existence
    CHECK_THROWS_AS(eigenvalues_mu0(Sign::Plus, Cplx(0, 0), nu), DomainError);
}

TEST_CASE("zero fiber eigenvalues") {
    CHECK(zero_fiber_eigen(iu, Cplx(1, 2)));
    CHECK(!zero_fiber_eigen(iu, Cplx(1, -2)));
    CHECK(!zero_fiber_eigen(Cplx(1, 0), Cplx(1, 2)));
    CHECK(!zero_fiber_eigen(iu, Cplx(3, 0)));
    CHECK_THROWS_AS(zero_fiber_eigen(iu, Cplx(0, 0)), DomainError);
}

TEST_CASE("ODE verification of a non-real eigenvalue") {
    auto p = region_b_point();
    auto cp = c_coeff(p, Sign::Plus);
    // kappa = c+ puts the family-+ point at arg(c/kappa) = 0, i.e. k on i R_+
    MixedBoundaryData data{p, cp.value};
    double r = 0.5 * std::pow(std::abs(cp.value / data.kappa), 1.0 / (2.0 * p.mu.real()));
    Window w{-4.0 * r, 4.0 * r, -4.0 * r, 4.0 * r};
    auto evs = eigenvalues(data, w);
    const Eigenvalue* best = nullptr;
    for (auto& e : evs.entries)
        if (!best || std::abs(e.k.imag()) > std::abs(best->k.imag())) best = &e;
    REQUIRE(best != nullptr);
    auto v = verify_eigen_ode(data, best->k, best->sign);
    CHECK(v.match_residual < 1e-6);
    CHECK(v.decays);

    // a non-eigenvalue k fails the two-sided match
    Cplx off = best->k * Cplx(1.17, 0.05);
    auto bad = verify_eigen_ode(data, off, best->sign);
    CHECK(bad.match_residual > 1e-3);
}

TEST_CASE("real eigenvalue for |Im lambda| > 1/2 decays polynomially") {
    Cplx lambda(0.3, 0.8), mu(0.3, 0);
    Cplx omega = std::sqrt(lambda * lambda + mu * mu);
    auto p = point_from_triple(omega, lambda, mu);
    // choose kappa so that the family-+ lattice hits the real axis at n = 0
    auto cp = c_coeff(p, Sign::Plus);
    REQUIRE(cp.kind == ProjectiveValue::Kind::Finite);
    Cplx kappa = cp.value / std::exp(Cplx(0, 0.3 * pi));  // c/kappa = e^{i 0.3 pi}
    MixedBoundaryData data{p, kappa};
    // k = +-(i/2) e^w with w = (0.3 pi i)/(2 mu): Im w = pi/2 -> real k
    auto evs = eigenvalues(data, {-30, 30, -30, 30});
    const Eigenvalue* real_ev = nullptr;
    for (auto& e : evs.entries)
        if (e.k.imag() == 0.0) real_ev = &e;
    REQUIRE(real_ev != nullptr);
    CHECK(real_ev->sign == Sign::Plus);  // sgn Im lambda
    CHECK(matching_residual(data, real_ev->k, real_ev->sign) < 1e-6);
    auto v = verify_eigen_ode(data, real_ev->k, real_ev->sign);
    CHECK(v.match_residual < 1e-5);
    CHECK(v.decays);  // tail ratio ~ 2^{1 - 2 |Im lambda|} within 20%
}

TEST_CASE("boundary function structure") {
    MixedBoundaryData data{region_b_point(), Cplx(2, 1)};
    Spinor f = boundary_function(data, 0.5);
    Cplx xp = std::pow(0.5, data.p.mu.real()), xm = std::pow(0.5, -data.p.mu.real());
    Cplx up_want = (data.p.omega - data.p.lambda) * (xp + data.kappa * xm);
    CHECK(std::abs(f.up - up_want) < 1e-13 * std::abs(up_want));
}
