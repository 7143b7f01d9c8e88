#pragma once

#include <stdexcept>
#include <string>

namespace dc {

// Base of all domain/convergence errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct PoleAt : Error {
    long n;
    explicit PoleAt(long n_) : Error("pole at nonpositive integer " + std::to_string(n_)), n(n_) {}
};

struct BranchCut : Error {
    explicit BranchCut(const std::string& w = "argument on the branch cut") : Error(w) {}
};

struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& w = "series/quadrature failed to converge") : Error(w) {}
};

struct IndeterminateConnection : Error {
    explicit IndeterminateConnection(const std::string& w = "connection formula 0/0") : Error(w) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& w = "argument outside the operation domain") : Error(w) {}
};

struct OffQuadric : Error {
    explicit OffQuadric(const std::string& w = "triple does not satisfy omega^2 = lambda^2 + mu^2") : Error(w) {}
};

struct ZeroTriple : Error {
    ZeroTriple() : Error("triple is (0,0,0); use the zero-fiber constructor") {}
};

struct ZeroRay : Error {
    ZeroRay() : Error("(a,b) = (0,0) is not a projective ray") {}
};

struct ChartPole : Error {
    explicit ChartPole(const std::string& w = "solution has a pole on this chart") : Error(w) {}
};

struct ExceptionalPoint : Error {
    explicit ExceptionalPoint(const std::string& w = "point lies on the exceptional set") : Error(w) {}
};

struct SpectrumHit : Error {
    explicit SpectrumHit(const std::string& w = "spectral parameter lies in the spectrum") : Error(w) {}
};

struct StepFailure : Error {
    explicit StepFailure(const std::string& w = "adaptive integrator step size underflow") : Error(w) {}
};

struct ToleranceNotMet : Error {
    explicit ToleranceNotMet(const std::string& w = "quadrature error estimate above tolerance") : Error(w) {}
};

}  // namespace dc
