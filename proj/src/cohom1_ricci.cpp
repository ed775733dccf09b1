#include "cohom1/cohom1_ricci.hpp"

namespace cohom1 {

namespace {

SeriesMatrix scale(const TruncatedSeries& f, const SeriesMatrix& a) {
    return a.map([&f](const TruncatedSeries& s) { return f * s; });
}

// sum_s Gamma_ks^s per n-position (n-restricted ad trace).
std::vector<Rational> diag_bracket_trace(const ContractionTables& ct) {
    std::vector<Rational> d(ct.dim, Rational(0));
    for (const auto& e : ct.nz)
        if (e.b == e.c) d[e.a] += e.v;
    return d;
}

}  // namespace

SeriesMatrix matrix_derivative(const SeriesMatrix& P) {
    return P.map([](const TruncatedSeries& s) { return s.derivative(); });
}

SeriesMatrix shape_L(const SeriesMatrix& P, const SeriesMatrix& Pinv) {
    SeriesMatrix Pd = matrix_derivative(P);
    SeriesMatrix Pdd = matrix_derivative(Pd);
    TruncatedSeries tr = (Pinv * Pd).trace();
    SeriesMatrix out = scale(AffineScalar(Rational(-1, 4)) * tr, Pd);
    out += scale(TruncatedSeries(Rational(1, 2)), Pd * Pinv * Pd);
    out += scale(TruncatedSeries(Rational(-1, 2)), Pdd);
    return out;
}

SeriesMatrix ricci_m_tangential(const FibrationData& data, const SeriesMatrix& P,
                                const SeriesMatrix& Pinv) {
    return ricci_gh(data, P, Pinv) + shape_L(P, Pinv);
}

TruncatedSeries ricci_cc(const SeriesMatrix& P, const SeriesMatrix& Pinv) {
    SeriesMatrix Pd = matrix_derivative(P);
    SeriesMatrix M = Pinv * Pd;
    return AffineScalar(Rational(1, 4)) * (M * M).trace() -
           AffineScalar(Rational(1, 2)) * (Pinv * matrix_derivative(Pd)).trace();
}

std::vector<TruncatedSeries> ricci_uc(const FibrationData& data, const SeriesMatrix& P,
                                      const SeriesMatrix& Pinv) {
    ContractionTables ct(data);
    SeriesMatrix M = Pinv * matrix_derivative(P);
    std::vector<TruncatedSeries> out(ct.dim);
    for (const auto& e : ct.nz)  // e: Gamma_{ab}^c
        out[e.a] += AffineScalar(Rational(1, 2) * e.v) * M(e.b, e.c);
    std::vector<Rational> d = diag_bracket_trace(ct);
    for (int k = 0; k < ct.dim; ++k) {
        if (d[k] == 0) continue;
        for (int u = 0; u < ct.dim; ++u) out[u] -= AffineScalar(Rational(1, 2) * d[k]) * M(k, u);
    }
    return out;
}

TruncatedSeries second_bianchi_residual(const FibrationData& data, const SeriesMatrix& P,
                                        const SeriesMatrix& Pinv, const SeriesMatrix& tangential,
                                        const std::vector<TruncatedSeries>& mixed) {
    ContractionTables ct(data);
    int n = ct.dim;
    SeriesMatrix Pd = matrix_derivative(P);
    SeriesMatrix M = Pinv * Pd;
    TruncatedSeries s = ricci_cc(P, Pinv);
    SeriesMatrix PinvS = Pinv * tangential;

    TruncatedSeries res = s.derivative();
    res += AffineScalar(Rational(1, 2)) * (M.trace() * s);
    res -= AffineScalar(Rational(1, 2)) * (PinvS * M).trace();
    if (!mixed.empty()) {
        std::vector<Rational> d = diag_bracket_trace(ct);
        for (int k = 0; k < n; ++k) {
            if (d[k] == 0) continue;
            for (int w = 0; w < n; ++w) res -= AffineScalar(d[k]) * (Pinv(k, w) * mixed[w]);
        }
    }
    res -= AffineScalar(Rational(1, 2)) * (s + PinvS.trace()).derivative();
    return res;
}

}  // namespace cohom1
