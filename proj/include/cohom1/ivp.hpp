#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cohom1/compat.hpp"

namespace cohom1 {

// Transverse coordinate convention for the solve.
enum class Gauge {
    Arclength,       // metric dt^2 + g_t
    Reparametrized,  // metric h(t)^2 dt^2 + g_t with h = h0 + t^2 psi_h
};

// One initial value problem near the singular orbit: solve the tangential
// curvature equation (and its soliton / lapse companions) order by order
// in t, starting from the order-0 system of module compat.
struct IVPProblem {
    FibrationData data;
    CompatTarget target;
    // Values for the free order-0 parameters, keyed by the unknown name
    // ("phi2(0)") or the bare function name ("phi2").  Unassigned free
    // parameters default to 0.
    std::map<std::string, Rational> free_values;
    int order = 20;                  // truncation order N (even, >= 0)
    Gauge gauge = Gauge::Arclength;
    Rational h0 = 1;                 // lapse value at t = 0 (reparametrized)
    TruncatedSeries beta;            // prescribed Ric(unit normal, unit normal)
};

// Where a coefficient came from, for the provenance table.
struct CoefficientRecord {
    std::string name;        // function / potential / lapse unknown name
    int power = 0;           // exponent of t inside that function's series
    Rational value;
    std::string provenance;  // "compatibility", "free", "free (default 0)",
                             // "solved (order k)", "undetermined (order k): set to 0"
};

// Taylor solution to order N.  The coefficient functions are exact
// rational polynomials in t (even exponents only); enough of the input is
// retained that the solution certifies and integrates on its own.
struct IVPSolution {
    FibrationData data;
    CompatTarget target;
    Gauge gauge = Gauge::Arclength;
    Rational h0 = 1;
    TruncatedSeries beta;
    int order = 0;
    std::vector<TruncatedSeries> phi;          // one per coefficient function
    std::optional<TruncatedSeries> potential;  // soliton psi, with v = u' and u = t^2 psi
    std::optional<TruncatedSeries> lapse;      // psi_h, with h = h0 + t^2 psi_h
    CompatReport compat;                       // the order-0 system
    std::vector<CoefficientRecord> table;
    std::vector<std::string> warnings;
};

// Order-by-order Taylor solve of the tangential equation for the target
// (all three kinds), in the gauge requested by the problem.  Per even
// order 2m: introduces one unknown per coefficient function (plus the
// potential or lapse unknown), extracts each shipped constraint
// combination of the curvature equation at its order d_k - 2 + 2m
// (plus the soliton scalar row at order 2m, or the first-order lapse
// replacement row at order 2m + 1), and solves the batch exactly.
// Throws ObstructionAtOrder when a batch is inconsistent, InvalidLapse
// for h0 <= 0, InvalidInput on malformed problems.
IVPSolution solve_series(const IVPProblem& p);

// solve_series restricted to soliton targets (checks the target kind).
IVPSolution solve_soliton(const IVPProblem& p);

// solve_series in the reparametrized gauge with the given prescribed
// normal component beta (an exact even series).
IVPSolution solve_reparametrized(const IVPProblem& p, const TruncatedSeries& beta);

struct CertificateRow {
    std::string label;
    double slope = 0;     // fitted log-log decay rate of the residual
    bool skipped = false; // residual identically zero to the computed order
    bool passed = false;
};

struct CertificateReport {
    double threshold = 0;          // required slope: order + 1 - 0.2
    std::vector<CertificateRow> rows;
    // For Einstein targets: largest order e such that all coefficients of
    // ricci_cc - lambda through t^e are exactly zero (capped at order + 4).
    std::optional<int> normal_exact_through;
    bool passed = true;
};

// Recomputes the full residual of the solution in exact arithmetic, then
// checks the numerical decay of every constraint combination (and the
// scalar row where present): samples t in {10^-1, ..., 10^-3} and fits
// the log-log slope, requiring slope >= N + 1 - 0.2.  Identically zero
// residuals pass as "skipped".  Throws CertificationFailed when a row
// fails, unless throw_on_failure is false.
CertificateReport residual_certificate(const IVPSolution& sol, bool throw_on_failure = true);

// A lapse that cannot start a reparametrized solve (h0 <= 0).
struct InvalidLapse : Error {
    using Error::Error;
};

}  // namespace cohom1
