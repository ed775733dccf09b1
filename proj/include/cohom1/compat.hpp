#pragma once

#include <string>
#include <vector>

#include "cohom1/cohom1_ricci.hpp"
#include "cohom1/linsolve.hpp"
#include "cohom1/smoothness.hpp"

namespace cohom1 {

// Target of the curvature equation on the tangential block.
struct CompatTarget {
    enum class Kind { Tensor, Einstein, Soliton };
    Kind kind = Kind::Einstein;
    Rational lambda = 0;       // Einstein / soliton constant
    Rational inv_m = 0;        // soliton 1/m (0 = gradient soliton)
    SeriesMatrix prescribed;   // Kind::Tensor: prescribed tangential block

    static CompatTarget einstein(const Rational& l) {
        CompatTarget t;
        t.kind = Kind::Einstein;
        t.lambda = l;
        return t;
    }
    static CompatTarget soliton(const Rational& l, const Rational& im) {
        CompatTarget t;
        t.kind = Kind::Soliton;
        t.lambda = l;
        t.inv_m = im;
        return t;
    }
    static CompatTarget tensor(SeriesMatrix T) {
        CompatTarget t;
        t.kind = Kind::Tensor;
        t.prescribed = std::move(T);
        return t;
    }
};

// One invariant combination of curvature-equation entries together with
// the order at which the solver extracts it.  `a` holds (row, col, coeff)
// triples over n positions; `scalar_equation` marks the normal-direction
// scalar row used for solitons (its combination is implicit).
struct InvariantCombo {
    std::string label;
    int order = 0;
    std::vector<std::tuple<int, int, Rational>> a;
    Rational scale = 1;
    bool channel = false;
    bool scalar_equation = false;
};

// The invariant combinations whose order-0 extraction forms the
// compatibility system: one trace per irreducible K module of m, the
// entries on the trivial part of m, one combination per declared
// equivalence channel, the normalized p trace, and for solitons the
// scalar row.
std::vector<InvariantCombo> invariant_combinations(const FibrationData& data,
                                                   const CompatTarget& target);

struct CompatRow {
    std::string label;
    AffineScalar equation;  // == 0, in the order-0 unknowns
    std::string status;     // "solved <name>", "redundant", "obstructed"
};

// The linear system in the order-0 values of the coefficient functions.
struct CompatReport {
    UnknownTable tab;
    std::vector<CompatRow> rows;
    LinearSolveOutcome outcome;
    std::vector<std::string> free_names;   // resolved names of free unknowns
    bool consistent() const { return outcome.consistent(); }
};

// Substitutes one unknown per coefficient function value at 0 (plus the
// potential value for solitons) into the curvature equation and extracts
// the linear conditions that order-by-order solvability imposes: one row
// per shipped invariant constraint combination (m-block combinations at
// order 0, p-block combinations at the t^2 coefficient), the normalized
// p-trace row, and for solitons the scalar-equation row.  Rows are then
// solved in that order.
// Throws ConditionStarViolated when mixed p-m ansatz entries are present
// but the module pairing test fails.
CompatReport build_system(const FibrationData& data, const CompatTarget& target);

// Order-0 / t^2 contributions of the second fundamental form, affine in
// the unknown entries of A(0) and B(0):
//   mm0  = -(dim p + 1) A(0) - 1/4 tr(A0^-1 A1) A1 + 1/2 A1 A0^-1 A1 + 2 C0 C0^T
//   pp2  = -2 dim(p) B(0) - tr B(0) Id + 1/2 tr(A0^-1 A1 A0^-1 A1) Id
//          - tr(A0^-1 A(0)) Id + tr(C0^T A0^-1 C0) Id
struct ExtrinsicConstants {
    AffineMatrix mm0;   // m x m
    AffineMatrix pp2;   // p x p
};
ExtrinsicConstants extrinsic_L_constants(const MetricExpansion& exp);

// Structural identities of the order-0 curvature, checked from scratch
// against the symbolic evaluation (nothing is transcribed):
//  - Ric(0)|_{m x m} carries no dependence on the p-block or mixed-block
//    function values;
//  - tr Ric(0) over each irreducible module in m, shifted by
//    (dim p + 1) tr A(0) over the module, is constant;
//  - entries of Ric(0) on the trivial part of m, shifted by
//    (dim p + 1) A(0), are constant;
//  - the normalized p-trace t^2 coefficient, shifted by 3 tr B(0), has no
//    B-block dependence left.
struct CancellationReport {
    std::vector<std::string> checks;    // human-readable, all performed
    std::vector<std::string> failures;  // empty on success
    bool ok() const { return failures.empty(); }
};
CancellationReport verify_cancellations(const FibrationData& data);

// Metric inverse with truncation caps tight enough that no coefficient
// quadratic in the order-0 unknowns is ever formed: the p block stops at
// absolute order 1, the m and mixed blocks at order 2.
SeriesMatrix compat_metric_inverse(const FibrationData& data, const SeriesMatrix& P);

// Ids of unknowns whose function appears in a p-block (resp. mixed
// p-m block) ansatz entry.
std::vector<bool> p_block_functions(const FibrationData& data);
std::vector<bool> mixed_block_functions(const FibrationData& data);

}  // namespace cohom1
