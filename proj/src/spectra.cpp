#include "dc/spectra.hpp"

#include <cmath>

#include "dc/errors.hpp"

namespace dc::spectra {

namespace {

constexpr double kTol = 1e-12;

bool is_real(Cplx z) { return std::abs(z.imag()) <= kTol * std::max(1.0, std::abs(z)); }

// Im(conj(b) a), the reality invariant of the ray.
double ray_imag(const ManifoldPoint& p) { return std::imag(std::conj(p.b) * p.a); }

bool ray_real(const ManifoldPoint& p) {
    return std::abs(ray_imag(p)) <= kTol * std::max(std::abs(p.a), std::abs(p.b));
}

}  // namespace

Region phase_region(double omega, double lambda) {
    const double q = omega * omega - lambda * lambda;
    if (std::abs(omega) <= kTol && std::abs(lambda) <= kTol) return Region::D;
    if (std::abs(q) <= kTol) return Region::C;
    if (q >= 0.25 - kTol) return Region::A;
    if (q > 0.0) return Region::B;
    return Region::E;
}

SelfAdjointness self_adjointness(double omega, double lambda) {
    SelfAdjointness r;
    switch (phase_region(omega, lambda)) {
        case Region::A:
            r = {true, {0, 0}, HomogeneousExtensions::NotApplicable};
            break;
        case Region::B:
            r = {false, {1, 1}, HomogeneousExtensions::Two};
            break;
        case Region::C:
            r = {false, {1, 1}, HomogeneousExtensions::One};
            break;
        case Region::D:
            r = {false, {1, 1}, HomogeneousExtensions::Circle};
            break;
        case Region::E:
            r = {false, {1, 1}, HomogeneousExtensions::None};
            break;
    }
    return r;
}

std::pair<PointSet, PointSet> minmax_point_spectrum(Cplx omega, Cplx lambda, Cplx mu) {
    if (mu.real() <= -0.5) throw DomainError("normalization requires Re(mu) > -1/2");
    if (mu.real() >= 0.5) {
        // E^+- membership away from the zero fiber: mu -+ i lambda in -N
        auto in_e = [&](double s) {
            Cplx q = mu - Cplx(0, s) * lambda;
            double r = std::round(q.real());
            return r <= 0.0 && std::abs(q - Cplx(r, 0)) <= kTol;
        };
        if (in_e(+1.0)) return {PointSet::UpperHalf, PointSet::UpperHalf};
        if (in_e(-1.0)) return {PointSet::LowerHalf, PointSet::LowerHalf};
        return {PointSet::Empty, PointSet::Empty};
    }
    if (std::abs(lambda.imag()) <= 0.5) return {PointSet::NonRealPlane, PointSet::Empty};
    return {PointSet::PuncturedPlane, PointSet::Empty};
}

DpFragment dp_spectrum(const ManifoldPoint& p) {
    if (!manifold::in_upper_manifold(p)) throw DomainError("D_p defined for Re(mu) > -1/2");
    if (manifold::in_exceptional(p, Sign::Plus))
        return {DpSpectrum::RealLineUnionUpperHalf, PointSet::UpperHalf};
    if (manifold::in_exceptional(p, Sign::Minus))
        return {DpSpectrum::RealLineUnionLowerHalf, PointSet::LowerHalf};
    return {DpSpectrum::RealLine, PointSet::Empty};
}

NumericalRangeTag numerical_range_min(Cplx omega, Cplx lambda) {
    const double io = std::abs(omega.imag()), il = std::abs(lambda.imag());
    if (io <= kTol && il <= kTol) return NumericalRangeTag::RealLine;
    if (io < il - kTol)
        return lambda.imag() > 0 ? NumericalRangeTag::OpenLowerHalf : NumericalRangeTag::OpenUpperHalf;
    if (std::abs(io - il) <= kTol)
        return lambda.imag() > 0 ? NumericalRangeTag::OpenLowerHalfPlusZero
                                 : NumericalRangeTag::OpenUpperHalfPlusZero;
    return NumericalRangeTag::FullPlane;
}

NumericalRangeTag numerical_range_dp(const ManifoldPoint& p) {
    if (!manifold::in_upper_manifold(p)) throw DomainError("D_p defined for Re(mu) > -1/2");
    const bool params_real = is_real(p.omega) && is_real(p.lambda);
    const bool rr = ray_real(p);
    if (params_real && !rr) {
        return ray_imag(p) > 0 ? NumericalRangeTag::RealLineUnionLowerHalf
                               : NumericalRangeTag::RealLineUnionUpperHalf;
    }
    if (std::abs(p.mu.real()) <= kTol && ray_imag(p) * p.lambda.imag() < -kTol)
        return NumericalRangeTag::FullPlane;
    if (p.mu.real() < -kTol && !rr) return NumericalRangeTag::FullPlane;
    return numerical_range_min(p.omega, p.lambda);
}

Dissipativity dissipative(const ManifoldPoint& p, Sign sign) {
    if (!manifold::in_upper_manifold(p)) throw DomainError("D_p defined for Re(mu) > -1/2");
    const double s = double(sgn_of(sign));
    const bool params_real = is_real(p.omega) && is_real(p.lambda);
    const double ri = ray_imag(p);
    bool d = false;
    if (params_real && -s * ri >= -kTol) d = true;
    const bool lam_half = s * p.lambda.imag() < -kTol &&
                          std::abs(p.omega.imag()) <= std::abs(p.lambda.imag()) + kTol;
    if (lam_half && p.mu.real() > kTol) d = true;
    if (lam_half && std::abs(p.mu.real()) <= kTol && s * ri <= kTol) d = true;
    if (lam_half && p.mu.real() < -kTol && std::abs(ri) <= kTol) d = true;
    return {d, d};
}

std::vector<double> channel_omegas(int d, long ell) {
    if (d < 1) throw DomainError("dimension must be >= 1");
    if (d == 1) {
        if (ell != 0 && ell != 1) throw DomainError("d = 1 has only sectors ell in {0, 1}");
        return {0.0};
    }
    if (d == 2) {
        const double w = double(ell) - 0.5;
        return {std::abs(w), -std::abs(w)};
    }
    if (ell < 1) throw DomainError("d >= 3 requires ell >= 1");
    const double w = double(ell) + 0.5 * double(d - 3);
    return {w, -w};
}

HomogeneousSaSummary homogeneous_sa_summary(int d, double lambda) {
    const double l2 = lambda * lambda;
    if (d == 1) return {lambda == 0.0, lambda == 0.0, false};
    if (d == 2) return {false, l2 <= 1.0, l2 <= 1.0 && lambda != 0.0};
    const double crit = 0.25 * double(d) * double(d - 2);
    const double outer = 0.25 * double(d - 1) * double(d - 1);
    return {l2 <= crit, l2 <= outer, l2 > crit && l2 <= outer};
}

SpectrumReport classify(const ManifoldPoint& p) {
    SpectrumReport r;
    const bool params_real = is_real(p.omega) && is_real(p.lambda);
    r.params_real = params_real;
    r.region = params_real ? phase_region(p.omega.real(), p.lambda.real()) : Region::E;
    if (params_real) {
        auto sa = self_adjointness(p.omega.real(), p.lambda.real());
        r.deficiency = sa.deficiency;
        r.homogeneous = sa.homogeneous;
    } else {
        r.deficiency = {0, 0};
        r.homogeneous = HomogeneousExtensions::NotApplicable;
    }
    auto mm = minmax_point_spectrum(p.omega, p.lambda, p.mu);
    r.point_max = mm.first;
    r.point_min = mm.second;
    auto dp = dp_spectrum(p);
    r.point_dp = dp.point;
    r.spectrum_dp = dp.spectrum;
    r.domain_gap = std::abs(p.mu.real()) < 0.5 ? 2 : 0;
    r.numrange_min = numerical_range_min(p.omega, p.lambda);
    r.numrange_dp = numerical_range_dp(p);
    r.dissipative_plus = dissipative(p, Sign::Plus).dissipative;
    r.dissipative_minus = dissipative(p, Sign::Minus).dissipative;
    return r;
}

const char* to_string(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::C: return "C";
        case Region::D: return "D";
        case Region::E: return "E";
    }
    return "?";
}

const char* to_string(PointSet s) {
    switch (s) {
        case PointSet::Empty: return "empty";
        case PointSet::UpperHalf: return "C+";
        case PointSet::LowerHalf: return "C-";
        case PointSet::NonRealPlane: return "C\\R";
        case PointSet::PuncturedPlane: return "Cx";
    }
    return "?";
}

const char* to_string(DpSpectrum s) {
    switch (s) {
        case DpSpectrum::RealLine: return "R";
        case DpSpectrum::RealLineUnionUpperHalf: return "R u C+";
        case DpSpectrum::RealLineUnionLowerHalf: return "R u C-";
    }
    return "?";
}

const char* to_string(NumericalRangeTag t) {
    switch (t) {
        case NumericalRangeTag::RealLine: return "R";
        case NumericalRangeTag::OpenLowerHalf: return "C- (open)";
        case NumericalRangeTag::OpenUpperHalf: return "C+ (open)";
        case NumericalRangeTag::OpenLowerHalfPlusZero: return "C- u {0}";
        case NumericalRangeTag::OpenUpperHalfPlusZero: return "C+ u {0}";
        case NumericalRangeTag::FullPlane: return "C";
        case NumericalRangeTag::RealLineUnionLowerHalf: return "R u C-";
        case NumericalRangeTag::RealLineUnionUpperHalf: return "R u C+";
    }
    return "?";
}

const char* to_string(HomogeneousExtensions h) {
    switch (h) {
        case HomogeneousExtensions::NotApplicable: return "n/a";
        case HomogeneousExtensions::Two: return "two";
        case HomogeneousExtensions::One: return "one";
        case HomogeneousExtensions::Circle: return "circle";
        case HomogeneousExtensions::None: return "none";
    }
    return "?";
}

}  // namespace dc::spectra
