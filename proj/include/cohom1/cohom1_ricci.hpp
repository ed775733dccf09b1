#pragma once

#include <vector>

#include "cohom1/homogeneous.hpp"
#include "cohom1/matrix.hpp"

namespace cohom1 {

// Curvature assembly for metrics dt^2 + g_t on I x (G/H), with g_t given
// by the series endomorphism P(t) in a Q-orthonormal basis of n.  All
// components are computed in arc-length gauge; reparametrized lapses are
// handled by the series solver, not here.
//
// P may be singular at t = 0 (the p-block vanishes like t^2), so several
// of these series are Laurent: they are never evaluated at t = 0, only
// their coefficients are consumed.

// Entrywise d/dt.
SeriesMatrix matrix_derivative(const SeriesMatrix& P);

// Second-fundamental-form contribution as a bilinear form:
//   L = -1/4 tr(P^-1 P') P' + 1/2 P' P^-1 P' - 1/2 P''.
SeriesMatrix shape_L(const SeriesMatrix& P, const SeriesMatrix& Pinv);

// Tangential Ricci of the ambient metric: Ric_GH(P) + L(P).
SeriesMatrix ricci_m_tangential(const FibrationData& data, const SeriesMatrix& P,
                                const SeriesMatrix& Pinv);

// Normal component Ric(c', c') = 1/4 tr((P^-1 P')^2) - 1/2 tr(P^-1 P'').
TruncatedSeries ricci_cc(const SeriesMatrix& P, const SeriesMatrix& Pinv);

// Mixed components Ric(e_u, c') =
//   1/2 sum_{k,s} Gamma_uk^s (P^-1 P')_ks - 1/2 sum_{k,s} Gamma_ks^s (P^-1 P')_ku
// (indices over n).  Identically zero for abelian algebras.
std::vector<TruncatedSeries> ricci_uc(const FibrationData& data, const SeriesMatrix& P,
                                      const SeriesMatrix& Pinv);

// Residual of the contracted differential identity div S = 1/2 d(tr S)
// in the normal direction, for an invariant symmetric 2-tensor S whose
// tangential block is `tangential`, normal component is Ric(c',c') of P
// itself, and mixed components are `mixed` (empty means zero).  With the
// candidate's own curvature substituted the residual vanishes
// identically; substituting a target tensor instead turns it into the
// first-order consistency check used to replace the normal equation.
//
// Explicitly, with s = ricci_cc(P), M = P^-1 P', d_k = sum_s Gamma_ks^s:
//   res = s' + 1/2 tr(M) s - 1/2 tr(P^-1 S M) - sum_k d_k (P^-1 mu)_k
//         - 1/2 d/dt [ s + tr(P^-1 S) ].
TruncatedSeries second_bianchi_residual(const FibrationData& data, const SeriesMatrix& P,
                                        const SeriesMatrix& Pinv, const SeriesMatrix& tangential,
                                        const std::vector<TruncatedSeries>& mixed = {});

}  // namespace cohom1
