#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dc/manifold.hpp"

namespace dc::spectra {

using manifold::ManifoldPoint;

enum class Region { A, B, C, D, E };

enum class PointSet { Empty, UpperHalf, LowerHalf, NonRealPlane, PuncturedPlane };

enum class DpSpectrum { RealLine, RealLineUnionUpperHalf, RealLineUnionLowerHalf };

enum class NumericalRangeTag {
    RealLine,
    OpenLowerHalf,
    OpenUpperHalf,
    OpenLowerHalfPlusZero,
    OpenUpperHalfPlusZero,
    FullPlane,
    RealLineUnionLowerHalf,
    RealLineUnionUpperHalf,
};

enum class HomogeneousExtensions { NotApplicable, Two, One, Circle, None };

struct SelfAdjointness {
    bool essentially_self_adjoint;
    std::pair<int, int> deficiency;  // (0,0) or (1,1)
    HomogeneousExtensions homogeneous;
};

struct SpectrumReport {
    bool params_real;  // region/deficiency data apply only to real (omega, lambda)
    Region region;
    std::string essential = "R";  // essential spectrum, index zero
    PointSet point_min;
    PointSet point_max;
    PointSet point_dp;
    DpSpectrum spectrum_dp;
    int domain_gap;  // dim Dom(max)/Dom(min): 0 or 2
    std::pair<int, int> deficiency;
    HomogeneousExtensions homogeneous;
    NumericalRangeTag numrange_min;
    NumericalRangeTag numrange_dp;
    bool dissipative_plus;
    bool dissipative_minus;
};

Region phase_region(double omega, double lambda);
SelfAdjointness self_adjointness(double omega, double lambda);

// (max, min) point spectra of the closed realizations, Re mu > -1/2.
std::pair<PointSet, PointSet> minmax_point_spectrum(Cplx omega, Cplx lambda, Cplx mu);

struct DpFragment {
    DpSpectrum spectrum;
    PointSet point;
};
DpFragment dp_spectrum(const ManifoldPoint& p);

NumericalRangeTag numerical_range_min(Cplx omega, Cplx lambda);
NumericalRangeTag numerical_range_dp(const ManifoldPoint& p);

struct Dissipativity {
    bool dissipative;
    bool maximal;
};
Dissipativity dissipative(const ManifoldPoint& p, Sign sign);

// Radial channel values of omega in dimension d, angular sector ell.
std::vector<double> channel_omegas(int d, long ell);

struct HomogeneousSaSummary {
    bool essentially_self_adjoint;
    bool homogeneous_sa_exists;
    bool second_family;  // lies in the detached branch of the second family
};
HomogeneousSaSummary homogeneous_sa_summary(int d, double lambda);

// Full classification for one manifold point with real (omega, lambda) inputs allowed complex.
SpectrumReport classify(const ManifoldPoint& p);

const char* to_string(Region r);
const char* to_string(PointSet s);
const char* to_string(DpSpectrum s);
const char* to_string(NumericalRangeTag t);
const char* to_string(HomogeneousExtensions h);

}  // namespace dc::spectra
