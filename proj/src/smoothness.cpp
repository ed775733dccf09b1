#include "cohom1/smoothness.hpp"

#include "cohom1/errors.hpp"

namespace cohom1 {

namespace {

const SmoothnessData& smooth_of(const FibrationData& data) {
    if (!data.smoothness)
        throw InvalidInput("no smoothness section for '" + data.name + "'");
    return *data.smoothness;
}

// Series for one ansatz entry given the phi assignment.
TruncatedSeries entry_series(const FibrationData& data, const std::vector<SmoothnessTerm>& terms,
                             const std::vector<TruncatedSeries>& phi) {
    TruncatedSeries s;
    for (const auto& t : terms) {
        Rational c = t.c;
        if (!t.param.empty()) {
            auto it = data.parameters.find(t.param);
            if (it == data.parameters.end())
                throw InvalidInput("unknown parameter '" + t.param + "'");
            c *= it->second;
        }
        TruncatedSeries piece = TruncatedSeries::monomial(t.d, AffineScalar(c));
        if (t.phi >= 0) {
            if (t.phi >= static_cast<int>(phi.size()))
                throw InvalidInput("coefficient function index out of range");
            piece = piece * phi[t.phi];
        }
        s += piece;
    }
    return s;
}

}  // namespace

SeriesMatrix build_P(const FibrationData& data, const std::vector<TruncatedSeries>& phi) {
    const SmoothnessData& sd = smooth_of(data);
    if (phi.size() != sd.functions.size())
        throw InvalidInput("expected one series per coefficient function");
    for (size_t k = 0; k < phi.size(); ++k)
        if (!phi[k].is_even())
            throw ParityViolation("coefficient function '" + sd.functions[k] + "' is not even");
    int n = data.dim_n();
    SeriesMatrix P(n, n);
    for (const auto& [key, terms] : sd.ansatz) {
        int a = data.pos_in_n[key.first], b = data.pos_in_n[key.second];
        if (a < 0 || b < 0) throw InvalidInput("ansatz entry outside n");
        TruncatedSeries s = entry_series(data, terms, phi);
        P(a, b) = s;
        P(b, a) = s;
    }
    return P;
}

MetricExpansion extract_expansion(const FibrationData& data, const SeriesMatrix& P) {
    MetricExpansion out;
    int np = data.dim_p(), nm = data.dim_m();
    out.dim_p = np;
    out.dim_m = nm;
    out.A0 = RationalMatrix(nm, nm);
    out.A1 = RationalMatrix(nm, nm);
    out.C0 = RationalMatrix(nm, np);
    out.A = SeriesMatrix(nm, nm);
    out.B = SeriesMatrix(np, np);
    out.C = SeriesMatrix(nm, np);

    auto constant_at = [](const TruncatedSeries& s, int e, const char* what) {
        AffineScalar c = s.coeff(e);
        if (!c.is_constant())
            throw ExpansionMismatch(std::string("unknowns in constant block ") + what);
        return c.constant();
    };
    auto require_ord = [](const TruncatedSeries& s, int e, const char* what) {
        if (s.ord() < e)
            throw ExpansionMismatch(std::string("low-order term in block ") + what);
    };

    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            TruncatedSeries s = P(i, j) - TruncatedSeries::monomial(2, AffineScalar(
                                              Rational(i == j ? 1 : 0)));
            require_ord(s, 4, "p");
            out.B(i, j) = s.shifted(-4);
        }
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j) {
            const TruncatedSeries& s = P(np + i, np + j);
            require_ord(s, 0, "m");
            out.A0(i, j) = constant_at(s, 0, "A0");
            out.A1(i, j) = constant_at(s, 1, "A1");
            TruncatedSeries rest = s - TruncatedSeries(out.A0(i, j)) -
                                   TruncatedSeries::monomial(1, AffineScalar(out.A1(i, j)));
            out.A(i, j) = rest.shifted(-2);
        }
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < np; ++j) {
            const TruncatedSeries& s = P(np + i, j);
            require_ord(s, 2, "mixed");
            out.C0(i, j) = constant_at(s, 2, "C0");
            TruncatedSeries rest = s - TruncatedSeries::monomial(2, AffineScalar(out.C0(i, j)));
            out.C(i, j) = rest.shifted(-3);
        }
    return out;
}

SeriesMatrix assemble_P(const FibrationData& data, const MetricExpansion& exp) {
    int np = exp.dim_p, nm = exp.dim_m;
    SeriesMatrix P(np + nm, np + nm);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j)
            P(i, j) = TruncatedSeries::monomial(2, AffineScalar(Rational(i == j ? 1 : 0))) +
                      exp.B(i, j).shifted(4);
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
            P(np + i, np + j) = TruncatedSeries(exp.A0(i, j)) +
                                TruncatedSeries::monomial(1, AffineScalar(exp.A1(i, j))) +
                                exp.A(i, j).shifted(2);
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < np; ++j) {
            TruncatedSeries s = TruncatedSeries::monomial(2, AffineScalar(exp.C0(i, j))) +
                                exp.C(i, j).shifted(3);
            P(np + i, j) = s;
            P(j, np + i) = s;
        }
    (void)data;
    return P;
}

SeriesMatrix metric_inverse(const FibrationData& data, const SeriesMatrix& P, int max_abs_order) {
    int np = data.dim_p(), nm = data.dim_m(), n = np + nm;
    std::vector<int> ip(np), im(nm);
    for (int i = 0; i < np; ++i) ip[i] = i;
    for (int i = 0; i < nm; ++i) im[i] = np + i;
    SeriesMatrix out(n, n);
    if (nm == 0) {
        return inverse_shifted(P, 2, max_abs_order);
    }
    if (np == 0) {
        return inverse_shifted(P, 0, max_abs_order);
    }
    int work = max_abs_order + 4;  // headroom for the Schur products
    SeriesMatrix Pp = P.submatrix(ip, ip), Pm = P.submatrix(im, im);
    SeriesMatrix Pc = P.submatrix(im, ip);  // m x p
    SeriesMatrix Minv = inverse_shifted(Pm, 0, work);
    SeriesMatrix Sp = Pp - truncated(Pc.transposed() * Minv * Pc, work);
    SeriesMatrix Spinv = inverse_shifted(Sp, 2, max_abs_order);
    SeriesMatrix cross = truncated(Spinv * Pc.transposed() * Minv, max_abs_order);
    SeriesMatrix Mm =
        truncated(Minv + Minv * Pc * Spinv * Pc.transposed() * Minv, max_abs_order);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) out(i, j) = Spinv(i, j).truncated(max_abs_order);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < nm; ++j) {
            out(i, np + j) = -cross(i, j);
            out(np + j, i) = -cross(i, j);
        }
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j) out(np + i, np + j) = Mm(i, j).truncated(max_abs_order);
    return out;
}

AnsatzReport validate_ansatz(const FibrationData& data, UnknownTable& tab) {
    const SmoothnessData& sd = smooth_of(data);
    AnsatzReport rep;
    std::vector<TruncatedSeries> phi;
    phi.reserve(sd.functions.size());
    for (const auto& f : sd.functions)
        phi.push_back(TruncatedSeries(AffineScalar::unknown(tab.add(f + "(0)"))));
    SeriesMatrix P = build_P(data, phi);
    try {
        MetricExpansion exp = extract_expansion(data, P);
        (void)exp;
    } catch (const ExpansionMismatch& e) {
        rep.problems.push_back(e.what());
    }
    for (size_t c = 0; c < sd.constraints.size(); ++c) {
        const auto& con = sd.constraints[c];
        TruncatedSeries combo;
        for (const auto& [i, j, coeff] : con.a) {
            int a = data.pos_in_n[i], b = data.pos_in_n[j];
            if (a < 0 || b < 0) {
                rep.problems.push_back("constraint entry outside n");
                continue;
            }
            combo += AffineScalar(coeff) * P(a, b);
        }
        bool saw_unknown = false;
        for (int e = combo.ord(); e <= std::min(combo.hi(), con.d + 6); ++e) {
            AffineScalar a = combo.coeff(e);
            if (a.is_zero()) continue;
            if (e % 2 != 0)
                rep.problems.push_back("constraint " + std::to_string(c) +
                                       ": odd exponent " + std::to_string(e));
            if (!a.is_constant()) {
                if (e != con.d)
                    rep.problems.push_back("constraint " + std::to_string(c) +
                                           ": unknown dependence at exponent " +
                                           std::to_string(e) + " != " + std::to_string(con.d));
                else
                    saw_unknown = true;
            }
        }
        if (!saw_unknown)
            rep.problems.push_back("constraint " + std::to_string(c) +
                                   " carries no coefficient function at its exponent");
    }
    return rep;
}

}  // namespace cohom1
