#include "cohom1/compat.hpp"

#include <functional>

#include "cohom1/errors.hpp"

namespace cohom1 {

namespace {

using RowSpec = InvariantCombo;

bool has_mixed_entry(const FibrationData& d) {
    if (!d.smoothness) return false;
    for (const auto& [key, terms] : d.smoothness->ansatz) {
        bool a = d.in_I(key.first), b = d.in_I(key.second);
        if (a != b) return true;
    }
    return false;
}

}  // namespace

// Row specifications follow the invariant structure of the order-0
// curvature: the trace over each irreducible K module of m, the entries
// on the trivial part of m, one combination per declared equivalence
// channel between m modules, the normalized p trace, and for solitons
// the scalar row.  Entries of the metric not hit by any of these stay
// unconstrained here; their values are free.
std::vector<InvariantCombo> invariant_combinations(const FibrationData& d,
                                                   const CompatTarget& target) {
    std::vector<RowSpec> specs;
    auto pos = [&](int i) { return d.pos_in_n[i]; };
    for (size_t m = 0; m < d.m_irr.size(); ++m) {
        RowSpec s;
        s.label = "m module " + std::to_string(m) + " trace";
        s.order = 0;
        for (int u : d.m_irr[m]) s.a.emplace_back(pos(u), pos(u), Rational(1));
        specs.push_back(std::move(s));
    }
    for (size_t i = 0; i < d.m0.size(); ++i)
        for (size_t j = i; j < d.m0.size(); ++j) {
            RowSpec s;
            s.label = "m trivial entry " + std::to_string(d.m0[i]) + "," +
                      std::to_string(d.m0[j]);
            s.order = 0;
            s.channel = i != j;
            s.a.emplace_back(pos(d.m0[i]), pos(d.m0[j]), Rational(1));
            specs.push_back(std::move(s));
        }
    for (size_t q = 0; q < d.equivalences.size(); ++q) {
        const auto& eq = d.equivalences[q];
        bool in_m = true;
        for (int u : eq.space_a) in_m = in_m && d.in_J(u);
        for (int u : eq.space_b) in_m = in_m && d.in_J(u);
        if (!in_m) continue;
        auto add_channel = [&](const std::vector<std::tuple<int, int, Rational>>& pairing,
                               int channel_no) {
            RowSpec s;
            s.label = "equivalence " + std::to_string(q) + " channel " +
                      std::to_string(channel_no);
            s.order = 0;
            s.channel = true;
            for (const auto& [i, j, c] : pairing) s.a.emplace_back(pos(i), pos(j), c);
            specs.push_back(std::move(s));
        };
        add_channel(eq.map, 0);
        for (size_t cs = 0; cs < eq.complex_structures.size(); ++cs) {
            // pair J u with the partner of u
            std::vector<std::tuple<int, int, Rational>> pairing;
            for (const auto& [i, i2, c2] : eq.complex_structures[cs])
                for (const auto& [i1, j, c] : eq.map)
                    if (i1 == i) pairing.emplace_back(i2, j, c2 * c);
            add_channel(pairing, static_cast<int>(cs) + 1);
        }
    }
    if (d.dim_p() > 0) {
        RowSpec s;
        s.label = "p trace";
        s.order = 2;
        s.scale = Rational(1, d.dim_p());
        for (int u = 0; u < d.dim_p(); ++u) s.a.emplace_back(u, u, Rational(1));
        specs.push_back(std::move(s));
    }
    if (target.kind == CompatTarget::Kind::Soliton) {
        RowSpec s;
        s.label = "normal equation";
        s.scalar_equation = true;
        specs.push_back(std::move(s));
    }
    return specs;
}

namespace {

// Evaluates every row at one rational assignment of the order-0 values
// (metric function values, then for solitons the potential value last).
std::vector<Rational> evaluate_rows(const FibrationData& d, const CompatTarget& target,
                                    const std::vector<RowSpec>& specs,
                                    const std::vector<Rational>& vals) {
    size_t r = d.smoothness->functions.size();
    std::vector<TruncatedSeries> phi;
    for (size_t k = 0; k < r; ++k) phi.push_back(TruncatedSeries(vals[k]));
    Rational psi0 = target.kind == CompatTarget::Kind::Soliton ? vals[r] : Rational(0);

    SeriesMatrix P = build_P(d, phi);
    SeriesMatrix Pinv = metric_inverse(d, P, 4);
    SeriesMatrix E = ricci_m_tangential(d, P, Pinv);
    switch (target.kind) {
        case CompatTarget::Kind::Einstein:
            E -= TruncatedSeries(target.lambda) * P;
            break;
        case CompatTarget::Kind::Soliton: {
            // Hess(u) on the orbit is u'/2 * P'; v = u' = 2 t psi
            TruncatedSeries half_v = TruncatedSeries::monomial(1, AffineScalar(psi0));
            E += half_v * matrix_derivative(P);
            E -= TruncatedSeries(target.lambda) * P;
            break;
        }
        case CompatTarget::Kind::Tensor:
            E -= target.prescribed;
            break;
    }
    std::vector<Rational> out;
    out.reserve(specs.size());
    for (const auto& s : specs) {
        if (s.scalar_equation) {
            // Ric(c',c') + u'' - (1/m)(u')^2 - lambda at order 0; u''(0) =
            // 2 psi(0) and u'(0) = 0.
            Rational v = ricci_cc(P, Pinv).coeff(0).constant();
            out.push_back(v + 2 * psi0 - target.lambda);
            continue;
        }
        Rational v = 0;
        for (const auto& [i, j, c] : s.a) v += c * E(i, j).coeff(s.order).constant();
        out.push_back(v * s.scale);
    }
    return out;
}

// Reconstructs each row as an affine function of the order-0 values by
// probing (constant term, then one unit probe per unknown), and checks
// affineness exactly at an extra deterministic point.
std::vector<AffineScalar> probe_rows(const FibrationData& d, const CompatTarget& target,
                                     const std::vector<RowSpec>& specs, int nu) {
    std::vector<Rational> zero(nu, Rational(0));
    std::vector<Rational> base = evaluate_rows(d, target, specs, zero);
    std::vector<AffineScalar> rows(base.begin(), base.end());
    for (int k = 0; k < nu; ++k) {
        std::vector<Rational> v = zero;
        v[k] = 1;
        std::vector<Rational> at = evaluate_rows(d, target, specs, v);
        for (size_t q = 0; q < specs.size(); ++q)
            rows[q] += AffineScalar::unknown(k, at[q] - base[q]);
    }
    std::vector<Rational> pt(nu);
    for (int k = 0; k < nu; ++k) pt[k] = rat(2 * k + 3, k + 2);
    std::vector<Rational> at = evaluate_rows(d, target, specs, pt);
    for (size_t q = 0; q < specs.size(); ++q) {
        AffineScalar predicted = rows[q];
        for (int k = 0; k < nu; ++k) predicted.substitute(k, AffineScalar(pt[k]));
        if (predicted.constant() != at[q])
            throw Error("row '" + specs[q].label + "' is not affine in the order-0 values");
    }
    return rows;
}

}  // namespace

std::vector<bool> p_block_functions(const FibrationData& data) {
    std::vector<bool> out(data.smoothness->functions.size(), false);
    for (const auto& [key, terms] : data.smoothness->ansatz)
        if (data.in_I(key.first) && data.in_I(key.second))
            for (const auto& t : terms)
                if (t.phi >= 0) out[t.phi] = true;
    return out;
}

std::vector<bool> mixed_block_functions(const FibrationData& data) {
    std::vector<bool> out(data.smoothness->functions.size(), false);
    for (const auto& [key, terms] : data.smoothness->ansatz)
        if (data.in_I(key.first) != data.in_I(key.second))
            for (const auto& t : terms)
                if (t.phi >= 0) out[t.phi] = true;
    return out;
}

CompatReport build_system(const FibrationData& data, const CompatTarget& target) {
    if (!data.smoothness) throw InvalidInput("no smoothness section for '" + data.name + "'");
    if (!check_condition_star(data) && has_mixed_entry(data))
        throw ConditionStarViolated(
            "mixed p-m entries present but the module pairing test fails");

    CompatReport rep;
    for (const auto& f : data.smoothness->functions) rep.tab.add(f + "(0)");
    bool soliton = target.kind == CompatTarget::Kind::Soliton;
    if (soliton) rep.tab.add("potential(0)");
    int nu = rep.tab.size();

    std::vector<RowSpec> specs = invariant_combinations(data, target);
    std::vector<AffineScalar> exprs = probe_rows(data, target, specs, nu);

    std::vector<LinearRow> lin;
    for (size_t q = 0; q < specs.size(); ++q)
        lin.push_back({exprs[q], specs[q].channel ? PivotPreference::LowestId
                                                  : PivotPreference::HighestId});
    rep.outcome = solve_linear_batch(lin);

    for (size_t q = 0; q < specs.size(); ++q) {
        CompatRow row;
        row.label = specs[q].label;
        row.equation = exprs[q];
        row.status = "solved";
        rep.rows.push_back(std::move(row));
    }
    for (int r : rep.outcome.redundant_rows) rep.rows[r].status = "redundant";
    for (int r : rep.outcome.obstruction_rows) rep.rows[r].status = "obstructed";
    for (const auto& [r, pivot] : rep.outcome.row_pivot)
        rep.rows[r].status = "solved " + rep.tab.name(pivot);
    // every table unknown not pinned by a row is a free value, whether or
    // not it appeared in any equation
    rep.outcome.free_ids.clear();
    for (int id = 0; id < nu; ++id)
        if (!rep.outcome.solved.count(id)) rep.outcome.free_ids.push_back(id);
    for (int id : rep.outcome.free_ids) rep.free_names.push_back(rep.tab.name(id));
    return rep;
}

ExtrinsicConstants extrinsic_L_constants(const MetricExpansion& exp) {
    int np = exp.dim_p, nm = exp.dim_m;
    auto coeff0 = [](const SeriesMatrix& s) {
        return s.map([](const TruncatedSeries& f) { return f.coeff(0); });
    };
    AffineMatrix A0m(nm, nm), B0(np, np);
    A0m = coeff0(exp.A);
    B0 = coeff0(exp.B);
    auto lift = [](const RationalMatrix& m) {
        return m.map([](const Rational& q) { return AffineScalar(q); });
    };
    ExtrinsicConstants out{AffineMatrix(nm, nm), AffineMatrix(np, np)};

    AffineScalar tr_line1, tr_line2, tr_mixed;  // tr(A0^-1 A1), etc.
    if (nm > 0) {
        RationalMatrix A0inv = inverse(exp.A0);
        RationalMatrix K = A0inv * exp.A1;
        RationalMatrix fixed = (Rational(-1, 4) * K.trace()) * exp.A1 +
                               Rational(1, 2) * (exp.A1 * K) +
                               Rational(2) * (exp.C0 * exp.C0.transposed());
        out.mm0 = AffineScalar(Rational(-(np + 1))) * A0m + lift(fixed);
        tr_line1 = AffineScalar(Rational(1, 2) * (K * K).trace());
        tr_line2 = (lift(A0inv) * A0m).trace();
        tr_mixed = AffineScalar((exp.C0.transposed() * A0inv * exp.C0).trace());
    }
    AffineScalar diag = tr_line1 - tr_line2 + tr_mixed - B0.trace();
    out.pp2 = AffineScalar(Rational(-2 * np)) * B0;
    for (int i = 0; i < np; ++i) out.pp2(i, i) += diag;
    return out;
}

CancellationReport verify_cancellations(const FibrationData& data) {
    CancellationReport rep;
    if (!data.smoothness) throw InvalidInput("no smoothness section for '" + data.name + "'");
    int r = static_cast<int>(data.smoothness->functions.size());
    int np = data.dim_p(), nm = data.dim_m();

    // observables: all m x m entries at order 0, then the p diagonal at
    // the t^2 coefficient
    std::vector<RowSpec> specs;
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j) {
            RowSpec s;
            s.label = "m entry " + std::to_string(i) + "," + std::to_string(j);
            s.order = 0;
            s.a.emplace_back(np + i, np + j, Rational(1));
            specs.push_back(std::move(s));
        }
    for (int u = 0; u < np; ++u) {
        RowSpec s;
        s.label = "p diagonal " + std::to_string(u);
        s.order = 2;
        s.a.emplace_back(u, u, Rational(1));
        specs.push_back(std::move(s));
    }
    // plain curvature, no target
    CompatTarget none = CompatTarget::tensor(SeriesMatrix(data.dim_n(), data.dim_n()));
    std::vector<AffineScalar> obs = probe_rows(data, none, specs, r);
    auto ric_m = [&](int i, int j) { return obs[i * nm + j]; };
    auto ric_p = [&](int u) { return obs[nm * nm + u]; };

    // the affine coefficient of unknown k inside expr
    auto dep = [](const AffineScalar& e, int k) {
        auto it = e.linear().find(k);
        return it == e.linear().end() ? Rational(0) : it->second;
    };

    std::vector<bool> pfun = p_block_functions(data), mfun = mixed_block_functions(data);

    // (1) no B- or C-block dependence in Ric(0)|_{m x m}
    rep.checks.push_back("m-block order-0 entries free of p/mixed function values");
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
            for (int k = 0; k < r; ++k)
                if ((pfun[k] || mfun[k]) && dep(ric_m(i, j), k) != 0)
                    rep.failures.push_back("m entry depends on '" +
                                           data.smoothness->functions[k] + "'");

    // build tr A(0) per module as affine in the unknowns
    UnknownTable tab;
    std::vector<TruncatedSeries> phi;
    for (const auto& f : data.smoothness->functions)
        phi.push_back(TruncatedSeries(AffineScalar::unknown(tab.add(f))));
    SeriesMatrix P = build_P(data, phi);

    // (2) per irreducible module: tr Ric(0) + (dim p + 1) tr A(0) constant
    for (size_t m = 0; m < data.m_irr.size(); ++m) {
        rep.checks.push_back("module " + std::to_string(m) + " trace shift constant");
        AffineScalar e;
        for (int u : data.m_irr[m]) {
            int q = data.pos_in_n[u] - np;
            e += ric_m(q, q) + AffineScalar(Rational(np + 1)) * P(np + q, np + q).coeff(2);
        }
        if (!e.is_constant())
            rep.failures.push_back("module " + std::to_string(m) +
                                   " trace has leftover dependence: " + e.str(&tab));
    }

    // (3) trivial m part: entrywise shift constant
    for (int u : data.m0)
        for (int v : data.m0) {
            rep.checks.push_back("m0 entry shift constant");
            int qu = data.pos_in_n[u] - np, qv = data.pos_in_n[v] - np;
            AffineScalar e =
                ric_m(qu, qv) + AffineScalar(Rational(np + 1)) * P(np + qu, np + qv).coeff(2);
            if (!e.is_constant())
                rep.failures.push_back("m0 entry has leftover dependence: " + e.str(&tab));
        }

    // (4) normalized p trace + 3 tr B(0) has no B-block dependence
    rep.checks.push_back("p trace shifted by 3 tr B(0) free of B values");
    AffineScalar e;
    for (int u = 0; u < np; ++u)
        e += AffineScalar(rat(1, np)) * ric_p(u) + AffineScalar(Rational(3)) * P(u, u).coeff(4);
    for (int k = 0; k < r; ++k)
        if (pfun[k] && dep(e, k) != 0)
            rep.failures.push_back("p trace keeps B dependence on '" +
                                   data.smoothness->functions[k] + "': " + e.str(&tab));
    return rep;
}

SeriesMatrix compat_metric_inverse(const FibrationData& data, const SeriesMatrix& P) {
    // rational evaluations make the generous cap safe
    return metric_inverse(data, P, 4);
}

}  // namespace cohom1
