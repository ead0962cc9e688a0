#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace epsteinlab {

// Every failure raised by the library derives from Error so callers (the CLI
// in particular) can map families of failures onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigInvalid : public Error {
public:
    using Error::Error;
};

class ChartMismatch : public Error {
public:
    ChartMismatch() : Error("fields live on different grid charts") {}
};

class MaskTooSparse : public Error {
public:
    MaskTooSparse(int i, int j)
        : Error("node (" + std::to_string(i) + "," + std::to_string(j) +
                ") lacks a finite-difference stencil"),
          i(i), j(j) {}
    int i, j;
};

class DegenerateMetric : public Error {
public:
    explicit DegenerateMetric(std::size_t node)
        : Error("metric is not positive definite at node " + std::to_string(node)), node(node) {}
    std::size_t node;
};

class CriticalPoint : public Error {
public:
    explicit CriticalPoint(std::complex<double> z)
        : Error("holomorphic map has vanishing derivative near z = (" + std::to_string(z.real()) +
                ", " + std::to_string(z.imag()) + ")"),
          z(z) {}
    std::complex<double> z;
};

class UnsupportedDimension : public Error {
public:
    explicit UnsupportedDimension(int d)
        : Error("dimension " + std::to_string(d) + " is not supported (only d = 3)"), d(d) {}
    int d;
};

class DegenerateFrame : public Error {
public:
    DegenerateFrame() : Error("horosphere frame vectors are linearly dependent") {}
};

class NoRealRoot : public Error {
public:
    NoRealRoot() : Error("envelope line misses the hyperboloid (invalid section)") {}
};

class SingularEnvelope : public Error {
public:
    explicit SingularEnvelope(std::vector<std::size_t> nodes)
        : Error("Epstein envelope is singular at " + std::to_string(nodes.size()) + " node(s)"),
          nodes(std::move(nodes)) {}
    std::vector<std::size_t> nodes;
};

class DegenerateSurface : public Error {
public:
    explicit DegenerateSurface(std::size_t node)
        : Error("first fundamental form degenerates at node " + std::to_string(node)), node(node) {}
    std::size_t node;
};

class EigenvalueMinusOne : public Error {
public:
    explicit EigenvalueMinusOne(std::size_t node)
        : Error("E + B is singular at node " + std::to_string(node)), node(node) {}
    std::size_t node;
};

class SingularDictionary : public Error {
public:
    explicit SingularDictionary(std::size_t node)
        : Error("E + B* is singular at node " + std::to_string(node)), node(node) {}
    std::size_t node;
};

class DegenerateFrontCoefficients : public Error {
public:
    DegenerateFrontCoefficients()
        : Error("a - b + c = 0: use the trace residual tr(B*) + 2 instead") {}
};

class NotElliptic : public Error {
public:
    explicit NotElliptic(double disc)
        : Error("b^2 - 4ac = " + std::to_string(disc) + " is not positive"), discriminant(disc) {}
    double discriminant;
};

class NewtonDiverged : public Error {
public:
    explicit NewtonDiverged(std::vector<double> trace)
        : Error("Newton iteration failed to converge"), trace(std::move(trace)) {}
    std::vector<double> trace;
};

class ZeroDifferential : public Error {
public:
    ZeroDifferential() : Error("quadratic differential vanishes; horizontal direction undefined") {}
};

class StepTooLarge : public Error {
public:
    StepTooLarge() : Error("finite-difference step leaves the upper half-plane") {}
};

class UnknownSuite : public Error {
public:
    explicit UnknownSuite(const std::string& name) : Error("unknown suite '" + name + "'") {}
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace epsteinlab
