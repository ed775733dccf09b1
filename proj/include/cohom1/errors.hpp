#pragma once

#include <stdexcept>
#include <string>

namespace cohom1 {

// All failure modes surfaced by the library derive from Error so the CLI
// can map them onto a single "invalid input / no solution" exit path.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A product of two expressions that both depend on undetermined
// coefficients was requested at an order where the result would no longer
// be affine in those coefficients.
struct AffineOverflow : Error {
    using Error::Error;
};

// A series or matrix inverse does not exist at the requested order, or its
// leading part depends on undetermined coefficients.
struct NotInvertible : Error {
    using Error::Error;
};

// A function declared even (resp. odd) has a coefficient of the wrong
// parity.
struct ParityViolation : Error {
    using Error::Error;
};

// A metric series does not match the structural expansion expected near
// the singular orbit.
struct ExpansionMismatch : Error {
    using Error::Error;
};

// The input data violates the schema or an algebraic invariant.
struct InvalidInput : Error {
    using Error::Error;
};

// A diagonal metric with a zero entry was supplied.
struct ZeroMetricEntry : Error {
    using Error::Error;
};

// An oracle restricted to trivial isotropy received data with dim h > 0.
struct NonTrivialIsotropy : Error {
    using Error::Error;
};

// Mixed p-m metric entries were requested although the isotropy
// representations make them inconsistent with smoothness.
struct ConditionStarViolated : Error {
    using Error::Error;
};

// The order-by-order solve hit an inconsistent linear condition.
struct ObstructionAtOrder : Error {
    int order;
    ObstructionAtOrder(int ord, const std::string& msg) : Error(msg), order(ord) {}
};

// The residual decay of a candidate solution does not certify the claimed
// truncation order.
struct CertificationFailed : Error {
    using Error::Error;
};

// The numerical continuation lost positive definiteness of the metric.
struct PositivityLost : Error {
    double t;
    PositivityLost(double tt, const std::string& msg) : Error(msg), t(tt) {}
};

// The adaptive integrator could not reach the requested time.
struct StepFailure : Error {
    using Error::Error;
};

}  // namespace cohom1
