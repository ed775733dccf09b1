#include "cohom1/oracle.hpp"

#include <cmath>

namespace cohom1 {

RationalMatrix killing_via_ad(const FibrationData& data) {
    int d = data.dim();
    std::vector<RationalMatrix> ad;
    ad.reserve(d);
    for (int x = 0; x < d; ++x) {
        RationalMatrix m(d, d);
        for (int y = 0; y < d; ++y)
            for (int t = 0; t < d; ++t) m(t, y) = data.gamma_at(x, y, t);
        ad.push_back(std::move(m));
    }
    RationalMatrix B(d, d);
    for (int x = 0; x < d; ++x)
        for (int y = x; y < d; ++y) {
            Rational tr = (ad[x] * ad[y]).trace();
            B(x, y) = tr;
            B(y, x) = tr;
        }
    return B;
}

RationalMatrix koszul_ricci(const FibrationData& data, const RationalMatrix& P) {
    if (data.dim_h != 0)
        throw NonTrivialIsotropy("koszul oracle requires trivial isotropy");
    int n = data.dim_n();
    RationalMatrix Pinv = inverse(P);
    auto G = [&](int a, int b, int c) {
        return data.gamma_at(data.n_basis[a], data.n_basis[b], data.n_basis[c]);
    };
    // gb(i,j,k) = g([e_i,e_j], e_k)
    auto gb = [&](int i, int j, int k) {
        Rational s = 0;
        for (int t = 0; t < n; ++t) s += G(i, j, t) * P(t, k);
        return s;
    };
    // Koszul: g(D_i e_j, e_k) = (gb(i,j,k) - gb(j,k,i) + gb(k,i,j)) / 2
    std::vector<RationalMatrix> chr(n, RationalMatrix(n, n));  // chr[i](j,l)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> kos(n);
            for (int k = 0; k < n; ++k)
                kos[k] = (gb(i, j, k) - gb(j, k, i) + gb(k, i, j)) / 2;
            for (int l = 0; l < n; ++l) {
                Rational s = 0;
                for (int k = 0; k < n; ++k) s += Pinv(l, k) * kos[k];
                chr[i](j, l) = s;
            }
        }
    // Ric(u,v) = sum_a component_a of R(e_a, e_u) e_v
    RationalMatrix ric(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            Rational s = 0;
            for (int a = 0; a < n; ++a) {
                for (int l = 0; l < n; ++l)
                    s += chr[u](v, l) * chr[a](l, a) - chr[a](v, l) * chr[u](l, a);
                for (int t = 0; t < n; ++t) s -= G(a, u, t) * chr[t](v, a);
            }
            ric(u, v) = s;
        }
    return ric;
}

std::vector<std::vector<double>> orthonormal_basis_ricci(const FibrationData& data,
                                                         const RationalMatrix& P) {
    int n = data.dim_n();
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = to_double(P(i, j));
    auto gdot = [&](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s += x[i] * g[i][j] * y[j];
        return s;
    };
    // Gram-Schmidt w.r.t. g
    std::vector<std::vector<double>> X;
    for (int i = 0; i < n; ++i) {
        std::vector<double> v(n, 0.0);
        v[i] = 1.0;
        for (const auto& prev : X) {
            double c = gdot(v, prev);
            for (int k = 0; k < n; ++k) v[k] -= c * prev[k];
        }
        double nn = std::sqrt(gdot(v, v));
        for (int k = 0; k < n; ++k) v[k] /= nn;
        X.push_back(v);
    }
    auto brk = [&](const std::vector<double>& x, const std::vector<double>& y) {
        std::vector<double> out(n, 0.0);
        auto GG = [&](int a, int b, int c) {
            return to_double(data.gamma_at(data.n_basis[a], data.n_basis[b], data.n_basis[c]));
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (x[i] == 0.0 || y[j] == 0.0) continue;
                for (int t = 0; t < n; ++t) out[t] += GG(i, j, t) * x[i] * y[j];
            }
        return out;
    };
    RationalMatrix Bq = killing_form(data).submatrix(data.n_basis, data.n_basis);
    std::vector<std::vector<double>> ric(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> e(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) e[i][i] = 1.0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            double s = -0.5 * to_double(Bq(u, v));
            for (int i = 0; i < n; ++i)
                s -= 0.5 * gdot(brk(X[i], e[u]), brk(X[i], e[v]));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto bij = brk(X[i], X[j]);
                    s += 0.25 * gdot(bij, e[u]) * gdot(bij, e[v]);
                }
            ric[u][v] = s;
        }
    if (!data.unimodular) {
        // g(Z, e_k) = sum_i g([e_k, X_i], X_i); solve P z = rhs
        std::vector<double> rhs(n, 0.0);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) rhs[k] += gdot(brk(e[k], X[i]), X[i]);
        RationalMatrix Pinv = inverse(P);
        std::vector<double> z(n, 0.0);
        for (int l = 0; l < n; ++l)
            for (int k = 0; k < n; ++k) z[l] += to_double(Pinv(l, k)) * rhs[k];
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                ric[u][v] -= 0.5 * (gdot(brk(z, e[u]), e[v]) + gdot(brk(z, e[v]), e[u]));
    }
    return ric;
}

std::vector<ClosedForm> closed_form_catalog() {
    std::vector<ClosedForm> table;
    {
        // sin^2 t = sum_{m>=1} (-1)^{m+1} 2^{2m-1} t^{2m} / (2m)!
        ClosedForm f;
        f.name = "sphere_sin2";
        f.description = "round 3-sphere: metric function sin^2(t), Einstein constant 2";
        Rational fact = 2, pw = 2;
        for (int m = 1; m <= 8; ++m) {
            if (m > 1) {
                fact *= Rational(2 * m - 1) * Rational(2 * m);
                pw *= 4;
            }
            f.coefficients.push_back(Rational(m % 2 ? 1 : -1) * pw / fact);
        }
        f.lambda = 2;
        table.push_back(f);
    }
    {
        ClosedForm f;
        f.name = "flatcone_t2";
        f.description = "flat plane under rotation: metric function t^2, Ricci flat";
        f.coefficients = {Rational(1)};
        f.lambda = 0;
        table.push_back(f);
    }
    {
        ClosedForm f;
        f.name = "gaussian_potential";
        f.description = "gaussian soliton on flat space: potential derivative v = lambda t";
        f.coefficients = {Rational(1)};  // coefficient of lambda*t in v
        f.lambda = 1;
        table.push_back(f);
    }
    return table;
}

}  // namespace cohom1
