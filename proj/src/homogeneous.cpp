#include "cohom1/homogeneous.hpp"

namespace cohom1 {

ContractionTables::ContractionTables(const FibrationData& data) {
    dim = data.dim_n();
    for (const auto& g : data.gamma) {
        int a = data.pos_in_n[g.i], b = data.pos_in_n[g.j], c = data.pos_in_n[g.u];
        if (a >= 0 && b >= 0 && c >= 0) nz.push_back({a, b, c, g.v});
    }
    RationalMatrix B = killing_form(data);
    killing_n = B.submatrix(data.n_basis, data.n_basis);
    trace_ad_n.resize(dim);
    for (int p = 0; p < dim; ++p) trace_ad_n[p] = data.trace_ad[data.n_basis[p]];
    unimodular = data.unimodular;
}

RationalMatrix ricci_gh(const FibrationData& data, const RationalMatrix& P) {
    ContractionTables ct(data);
    return ricci_gh_core(ct, P, inverse(P));
}

SeriesMatrix ricci_gh(const FibrationData& data, const SeriesMatrix& P, const SeriesMatrix& Pinv) {
    ContractionTables ct(data);
    return ricci_gh_core(ct, P, Pinv);
}

RationalMatrix ricci_gh_naive(const FibrationData& data, const RationalMatrix& P) {
    int n = data.dim_n();
    RationalMatrix Pinv = inverse(P);
    RationalMatrix B = killing_form(data).submatrix(data.n_basis, data.n_basis);
    auto G = [&](int a, int b, int c) {
        return data.gamma_at(data.n_basis[a], data.n_basis[b], data.n_basis[c]);
    };
    RationalMatrix ric(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            Rational t1 = 0, t2 = 0;
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    for (int p = 0; p < n; ++p)
                        for (int q = 0; q < n; ++q) {
                            t1 += G(r, u, p) * G(s, v, q) * Pinv(r, s) * P(p, q);
                            for (int k = 0; k < n; ++k)
                                for (int l = 0; l < n; ++l)
                                    t2 += G(r, k, p) * G(s, l, q) * Pinv(r, s) * Pinv(k, l) *
                                          P(p, u) * P(q, v);
                        }
            ric(u, v) = Rational(-1, 2) * t1 + Rational(1, 4) * t2 - Rational(1, 2) * B(u, v);
        }
    if (!data.unimodular) {
        std::vector<Rational> z = z_vector(data, P);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int l = 0; l < n; ++l)
                    for (int t = 0; t < n; ++t)
                        ric(u, v) -= z[l] * (G(l, u, t) * P(t, v) + G(l, v, t) * P(t, u)) / 2;
    }
    return ric;
}

RationalMatrix ricci_diagonal(const FibrationData& data, const std::vector<Rational>& x) {
    int n = data.dim_n();
    for (const auto& xi : x)
        if (xi == 0) throw ZeroMetricEntry("diagonal metric entry is zero");
    ContractionTables ct(data);
    RationalMatrix ric(n, n);
    for (const auto& e1 : ct.nz)
        for (const auto& e2 : ct.nz) {
            // quadratic term: same (r, k), contributes x_u x_v / (4 x_r x_k)
            if (e1.a == e2.a && e1.b == e2.b) {
                int u = e1.c, v = e2.c, r = e1.a, k = e1.b;
                ric(u, v) += x[u] * x[v] / (4 * x[r] * x[k]) * e1.v * e2.v;
            }
            // bracket term: e = (r, u, p), same r and p, contributes
            // -x_p / (2 x_r); equals the -2 x_k^2 part of the closed form
            // whenever the skew relations apply
            if (e1.a == e2.a && e1.c == e2.c) {
                int r = e1.a, p = e1.c;
                ric(e1.b, e2.b) -= x[p] / (2 * x[r]) * e1.v * e2.v;
            }
        }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) ric(u, v) -= Rational(1, 2) * ct.killing_n(u, v);
    // mean-curvature term (symmetrized), diagonal z_l = trace_ad_l / x_l
    if (!ct.unimodular)
        for (const auto& e : ct.nz) {  // e: (l, u, t); P_tv = x_v delta_tv
            Rational w = ct.trace_ad_n[e.a] / x[e.a] * e.v * x[e.c] / 2;
            ric(e.b, e.c) -= w;
            ric(e.c, e.b) -= w;
        }
    return ric;
}

std::vector<Rational> z_vector(const FibrationData& data, const RationalMatrix& P) {
    int n = data.dim_n();
    RationalMatrix Pinv = inverse(P);
    std::vector<Rational> z(n, Rational(0));
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) z[l] += data.trace_ad[data.n_basis[k]] * Pinv(k, l);
    return z;
}

}  // namespace cohom1
