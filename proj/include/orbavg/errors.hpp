#pragma once

#include <stdexcept>
#include <string>

namespace orbavg {

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Point too close to (or on) a chart singularity: vanishing node, e2 = 0, ...
struct SingularChartError : std::runtime_error {
    explicit SingularChartError(const std::string& what) : std::runtime_error(what) {}
};

// Orbit crossing / vanishing mutual distance inside an average or a flow.
struct CollisionError : std::runtime_error {
    explicit CollisionError(const std::string& what) : std::runtime_error(what) {}
};

// Truncated series cannot reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
    ConvergenceError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
    double residual;
};

// Confocal coordinates degenerate (lambda <= 1 or |mu| >= 1).
struct DegenerateGeometryError : std::runtime_error {
    explicit DegenerateGeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Root searches
struct NoRootError : std::runtime_error {
    explicit NoRootError(const std::string& what) : std::runtime_error(what) {}
};
struct LevelSetLeavesChartError : std::runtime_error {
    explicit LevelSetLeavesChartError(const std::string& what) : std::runtime_error(what) {}
};

// Finite differences past their stable order.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Asymptotic regime assumption violated; carries the measured order.
struct RegimeError : std::runtime_error {
    RegimeError(const std::string& what, double measured_exponent_)
        : std::runtime_error(what), measured_exponent(measured_exponent_) {}
    double measured_exponent;
};

// Flow stopped near a collision; last good time is reported.
struct CollisionApproachError : std::runtime_error {
    CollisionApproachError(const std::string& what, double t_last_)
        : std::runtime_error(what), t_last(t_last_) {}
    double t_last;
};

}  // namespace orbavg
