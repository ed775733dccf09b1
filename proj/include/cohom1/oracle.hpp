#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohom1/liealg.hpp"

namespace cohom1 {

// Independent cross-checks implemented from first principles, sharing as
// little code as possible with the production path.

// Killing form via explicit ad matrices and matrix products.
RationalMatrix killing_via_ad(const FibrationData& data);

// Ricci tensor of (G/H, P) through the Koszul formula: Levi-Civita
// connection coefficients, curvature by commutators, trace in the first
// slot.  P is a constant metric on n in the n-basis order.
RationalMatrix koszul_ricci(const FibrationData& data, const RationalMatrix& P);

// Ricci tensor computed in a g-orthonormal frame (Gram-Schmidt in
// floating point), including the mean-curvature vector term for
// non-unimodular algebras.  Returned in the same n-basis order.
std::vector<std::vector<double>> orthonormal_basis_ricci(const FibrationData& data,
                                                         const RationalMatrix& P);

// One row of the closed-form solution table.
struct ClosedForm {
    std::string name;
    std::string description;
    // coefficient of t^(2m+2) in the metric function, m = 0, 1, ...
    std::vector<Rational> coefficients;
    Rational lambda;
};

// Exact germs known in closed form: the round sphere (sin^2), the flat
// cone (t^2), and the Gaussian soliton potential.
std::vector<ClosedForm> closed_form_catalog();

}  // namespace cohom1
