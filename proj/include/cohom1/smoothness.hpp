#pragma once

#include <string>
#include <vector>

#include "cohom1/liealg.hpp"
#include "cohom1/matrix.hpp"

namespace cohom1 {

// Leading structure of the metric endomorphism near t = 0, split along
// n = p + m (p positions first in all matrices here):
//   P|_p  = t^2 Id + t^4 B(t)
//   P|_m  = A0 + t A1 + t^2 A(t)
//   P|_mp = t^2 C0 + t^3 C(t)
// A0, A1, C0 are constant; A, B, C are series whose coefficients may
// carry affine unknowns.
struct MetricExpansion {
    int dim_p = 0, dim_m = 0;
    RationalMatrix A0, A1;  // m x m
    RationalMatrix C0;      // m x p
    SeriesMatrix A, B, C;   // m x m, p x p, m x p
};

// Substitute the even coefficient functions phi_k (series in t with even
// exponents only) and the named parameter values into the ansatz, and
// assemble the full symmetric P over n positions.
// Throws ParityViolation if any phi_k has an odd-exponent coefficient,
// InvalidInput on missing ansatz/parameters.
SeriesMatrix build_P(const FibrationData& data, const std::vector<TruncatedSeries>& phi);

// Split P into the block expansion above.  Throws ExpansionMismatch if P
// does not have the required leading shape (wrong low-order terms, or
// unknowns in the constant blocks A0, A1, C0).
MetricExpansion extract_expansion(const FibrationData& data, const SeriesMatrix& P);

// Reassemble a MetricExpansion into the full P (inverse of
// extract_expansion; used for round-trip checks).
SeriesMatrix assemble_P(const FibrationData& data, const MetricExpansion& exp);

// Block inverse of a metric with the expansion shape: Schur complement
// on the p block (leading t^2 Id) against the m block (leading A0).
// Valid through absolute order max_abs_order.
SeriesMatrix metric_inverse(const FibrationData& data, const SeriesMatrix& P, int max_abs_order);

struct AnsatzReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Substitute one fresh unknown constant per coefficient function into
// the ansatz and check it against the shipped constraint combinations:
// each combination must concentrate all unknown dependence at its
// declared exponent d (coefficients elsewhere constant), use even
// exponents only, and the p/m/mixed blocks must carry the expansion
// shape.  `tab` receives the unknowns used for reporting.
AnsatzReport validate_ansatz(const FibrationData& data, UnknownTable& tab);

}  // namespace cohom1
