#include "cohom1/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "cohom1/errors.hpp"
#include "cohom1/homogeneous.hpp"
#include "cohom1/smoothness.hpp"

namespace cohom1 {

namespace {

struct SolveCtx {
    const FibrationData& d;
    const CompatTarget& target;
    bool soliton = false;
    bool reparam = false;
    Rational h0 = 1;
    TruncatedSeries beta;
    int r = 0;      // number of coefficient functions
    int extra = 0;  // 1 when a potential or lapse unknown rides along
};

// The full residual state for one exact coefficient assignment: the
// tangential equation E = Ric|n - T|n entrywise, and the scalar equation
// (soliton normal equation, or the first-order replacement equation in
// the reparametrized gauge).
struct Residuals {
    SeriesMatrix E;
    TruncatedSeries scalar;
    bool has_scalar = false;
};

TruncatedSeries trace_product(const SeriesMatrix& a, const SeriesMatrix& b) {
    TruncatedSeries t;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
    return t;
}

Residuals evaluate_residuals(const SolveCtx& ctx, const std::vector<TruncatedSeries>& phi,
                             const TruncatedSeries& psi, const TruncatedSeries& psih,
                             int cap) {
    const FibrationData& d = ctx.d;
    Residuals out;
    SeriesMatrix P = build_P(d, phi);
    SeriesMatrix Pinv = metric_inverse(d, P, cap);

    if (!ctx.reparam) {
        out.E = ricci_m_tangential(d, P, Pinv);
        if (ctx.soliton) {
            // u = t^2 psi, v = u'; Hess(u) on the orbit is (v/2) P'
            TruncatedSeries u = psi.shifted(2);
            TruncatedSeries v = u.derivative();
            TruncatedSeries half_v = AffineScalar(rat(1, 2)) * v;
            SeriesMatrix Pd = matrix_derivative(P);
            for (int i = 0; i < out.E.rows(); ++i)
                for (int j = 0; j < out.E.cols(); ++j) out.E(i, j) += half_v * Pd(i, j);
            out.scalar = ricci_cc(P, Pinv) + v.derivative() -
                         AffineScalar(ctx.target.inv_m) * (v * v) -
                         TruncatedSeries(ctx.target.lambda);
            out.has_scalar = true;
        }
        switch (ctx.target.kind) {
            case CompatTarget::Kind::Einstein:
            case CompatTarget::Kind::Soliton:
                out.E -= TruncatedSeries(ctx.target.lambda) * P;
                break;
            case CompatTarget::Kind::Tensor:
                out.E -= ctx.target.prescribed;
                break;
        }
        return out;
    }

    // reparametrized gauge: metric h^2 dt^2 + g_t with h = h0 + t^2 psi_h.
    // Substituting d/ds = h^-1 d/dt into the arc-length formulas gives
    //   Ric|n = Ric_GH + h^-2 L + (h'/2h^3) P'
    //   Ric(unit normal, unit normal) = h^-2 ricci_cc + (h'/2h^3) tr(P^-1 P')
    TruncatedSeries h = TruncatedSeries(ctx.h0) + psih.shifted(2);
    TruncatedSeries hv = h.inverse(cap);
    TruncatedSeries h2 = (hv * hv).truncated(cap);
    TruncatedSeries q =
        AffineScalar(rat(1, 2)) * ((h.derivative() * h2).truncated(cap) * hv).truncated(cap);
    SeriesMatrix Pd = matrix_derivative(P);
    SeriesMatrix L = shape_L(P, Pinv);
    out.E = ricci_gh(d, P, Pinv);
    for (int i = 0; i < out.E.rows(); ++i)
        for (int j = 0; j < out.E.cols(); ++j) out.E(i, j) += h2 * L(i, j) + q * Pd(i, j);
    switch (ctx.target.kind) {
        case CompatTarget::Kind::Einstein:
            out.E -= TruncatedSeries(ctx.target.lambda) * P;
            break;
        case CompatTarget::Kind::Tensor:
            out.E -= ctx.target.prescribed;
            break;
        case CompatTarget::Kind::Soliton:
            throw InvalidInput("soliton targets are not supported in the reparametrized gauge");
    }
    // First-order replacement for the normal equation (contracted
    // differential identity of the target, normal component beta/h^2):
    //   1/2 [ (beta/h^2)' + tr(P^-1 P') beta/h^2 - tr(P^-1 T') ] = 0.
    // This is odd in t; the solver extracts it at odd orders.
    TruncatedSeries trM = trace_product(Pinv, Pd);
    TruncatedSeries h3 = (h2 * hv).truncated(cap);
    TruncatedSeries trTd =
        ctx.target.kind == CompatTarget::Kind::Einstein
            ? AffineScalar(ctx.target.lambda) * trM
            : trace_product(Pinv, matrix_derivative(ctx.target.prescribed));
    TruncatedSeries s = (ctx.beta.derivative() * h2) -
                        AffineScalar(Rational(2)) *
                            ((ctx.beta * h.derivative()).truncated(cap) * h3).truncated(cap) +
                        ((ctx.beta * h2).truncated(cap) * trM).truncated(cap) - trTd;
    out.scalar = AffineScalar(rat(1, 2)) * s;
    out.has_scalar = true;
    return out;
}

// Reads one combination value off the residuals.
Rational combo_value(const Residuals& res, const InvariantCombo& c) {
    if (c.scalar_equation) return res.scalar.coeff(c.order).constant();
    Rational v = 0;
    for (const auto& [i, j, k] : c.a) v += k * res.E(i, j).coeff(c.order).constant();
    return v * c.scale;
}

// Reconstructs each row of `f` as an affine function of `nu` values by
// probing (base point, one unit probe per unknown), then checks
// affineness exactly at a deterministic extra point.
std::vector<AffineScalar> probe_affine(
    int nu, const std::vector<std::string>& labels,
    const std::function<std::vector<Rational>(const std::vector<Rational>&)>& f) {
    std::vector<Rational> zero(nu, Rational(0));
    std::vector<Rational> base = f(zero);
    std::vector<AffineScalar> rows(base.begin(), base.end());
    for (int k = 0; k < nu; ++k) {
        std::vector<Rational> v = zero;
        v[k] = 1;
        std::vector<Rational> at = f(v);
        for (size_t q = 0; q < rows.size(); ++q)
            rows[q] += AffineScalar::unknown(k, at[q] - base[q]);
    }
    std::vector<Rational> pt(nu);
    for (int k = 0; k < nu; ++k) pt[k] = rat(2 * k + 3, k + 2);
    std::vector<Rational> at = f(pt);
    for (size_t q = 0; q < rows.size(); ++q) {
        AffineScalar predicted = rows[q];
        for (int k = 0; k < nu; ++k) predicted.substitute(k, AffineScalar(pt[k]));
        if (predicted.constant() != at[q])
            throw Error("row '" + labels[q] + "' is not affine in the current unknowns");
    }
    return rows;
}

// Order-0 system in the reparametrized gauge.  Unknown 0 is the lapse
// value psi_h(0); unknowns 1..r are the function values.  Uses the same
// invariant combinations as module compat, evaluated in the h-gauge, plus
// sub-order diagnostics (which catch a lapse value incompatible with the
// leading metric shape) and the replacement row.
CompatReport reparam_order0(const SolveCtx& ctx) {
    const FibrationData& d = ctx.d;
    CompatReport rep;
    rep.tab.add("lapse(0)");
    for (const auto& f : d.smoothness->functions) rep.tab.add(f + "(0)");
    int nu = rep.tab.size();

    std::vector<InvariantCombo> specs = invariant_combinations(d, ctx.target);
    std::vector<InvariantCombo> all;
    for (const auto& s : specs) {
        for (int sub = s.order - 2; sub < s.order; ++sub) {
            if (sub < -2 || (s.order - sub) % 2 != 0) continue;
            InvariantCombo c = s;
            c.order = sub;
            c.label += " (order " + std::to_string(sub) + ")";
            all.push_back(std::move(c));
        }
        all.push_back(s);
    }
    for (int sub : {-1, 1}) {
        InvariantCombo geo;
        geo.label = sub == 1 ? "replacement equation"
                             : "replacement equation (order -1)";
        geo.order = sub;
        geo.scalar_equation = true;
        all.push_back(std::move(geo));
    }

    std::vector<std::string> labels;
    for (const auto& c : all) labels.push_back(c.label);
    auto eval = [&](const std::vector<Rational>& vals) {
        std::vector<TruncatedSeries> phi;
        for (int k = 0; k < ctx.r; ++k) phi.push_back(TruncatedSeries(vals[1 + k]));
        TruncatedSeries psih(vals[0]);
        Residuals res = evaluate_residuals(ctx, phi, TruncatedSeries(), psih, 4);
        std::vector<Rational> out;
        for (const auto& c : all) out.push_back(combo_value(res, c));
        return out;
    };
    std::vector<AffineScalar> exprs = probe_affine(nu, labels, eval);

    std::vector<LinearRow> lin;
    for (size_t q = 0; q < all.size(); ++q)
        lin.push_back({exprs[q], all[q].scalar_equation || all[q].channel
                                     ? PivotPreference::LowestId
                                     : PivotPreference::HighestId});
    rep.outcome = solve_linear_batch(lin);
    for (size_t q = 0; q < all.size(); ++q)
        rep.rows.push_back({all[q].label, exprs[q], "solved"});
    for (int r2 : rep.outcome.redundant_rows) rep.rows[r2].status = "redundant";
    for (int r2 : rep.outcome.obstruction_rows) rep.rows[r2].status = "obstructed";
    for (const auto& [r2, pivot] : rep.outcome.row_pivot)
        rep.rows[r2].status = "solved " + rep.tab.name(pivot);
    rep.outcome.free_ids.clear();
    for (int id = 0; id < nu; ++id)
        if (!rep.outcome.solved.count(id)) rep.outcome.free_ids.push_back(id);
    for (int id : rep.outcome.free_ids) rep.free_names.push_back(rep.tab.name(id));
    return rep;
}

// The per-batch row plan: one row per shipped constraint combination,
// extracted at order d_k - 2 + 2m, plus the scalar row at order 2m.
std::vector<InvariantCombo> batch_combos(const SolveCtx& ctx, int m) {
    std::vector<InvariantCombo> combos;
    const auto& cons = ctx.d.smoothness->constraints;
    for (size_t k = 0; k < cons.size(); ++k) {
        InvariantCombo c;
        c.label = "constraint " + std::to_string(k);
        c.order = cons[k].d - 2 + 2 * m;
        for (const auto& [i, j, coeff] : cons[k].a)
            c.a.emplace_back(ctx.d.pos_in_n[i], ctx.d.pos_in_n[j], coeff);
        combos.push_back(std::move(c));
    }
    if (ctx.soliton || ctx.reparam) {
        InvariantCombo c;
        c.label = ctx.soliton ? "normal equation" : "replacement equation";
        c.order = ctx.soliton ? 2 * m : 2 * m + 1;  // the replacement row is odd in t
        c.scalar_equation = true;
        combos.push_back(std::move(c));
    }
    return combos;
}

std::string extra_name(const SolveCtx& ctx) { return ctx.soliton ? "potential" : "lapse"; }

IVPSolution run(const IVPProblem& p) {
    const FibrationData& d = p.data;
    if (!d.smoothness) throw InvalidInput("no smoothness section for '" + d.name + "'");
    if (p.order < 0 || p.order % 2 != 0)
        throw InvalidInput("truncation order must be even and nonnegative");
    SolveCtx ctx{d, p.target};
    ctx.soliton = p.target.kind == CompatTarget::Kind::Soliton;
    ctx.reparam = p.gauge == Gauge::Reparametrized;
    ctx.h0 = p.h0;
    ctx.beta = p.beta;
    ctx.r = static_cast<int>(d.smoothness->functions.size());
    ctx.extra = (ctx.soliton || ctx.reparam) ? 1 : 0;
    if (ctx.reparam) {
        if (ctx.soliton)
            throw InvalidInput("soliton targets are not supported in the reparametrized gauge");
        if (p.h0 <= 0) throw InvalidLapse("lapse value at t = 0 must be positive");
        if (!p.beta.exact() || !p.beta.is_even())
            throw InvalidInput("prescribed normal component must be an exact even series");
        for (int e = std::min(p.beta.ord(), 0); e <= p.beta.max_deg(); ++e)
            if (e < 0 && !p.beta.coeff(e).is_zero())
                throw InvalidInput("prescribed normal component has negative exponents");
    }
    if (p.target.kind == CompatTarget::Kind::Tensor &&
        (p.target.prescribed.rows() != d.dim_n() || p.target.prescribed.cols() != d.dim_n()))
        throw InvalidInput("prescribed tensor must be dim(n) x dim(n)");

    IVPSolution sol;
    sol.data = d;
    sol.target = p.target;
    sol.gauge = p.gauge;
    sol.h0 = p.h0;
    sol.beta = p.beta;
    sol.order = p.order;

    // ---- order 0: the compatibility system ----
    sol.compat = ctx.reparam ? reparam_order0(ctx) : build_system(d, p.target);
    if (!sol.compat.consistent()) {
        std::string labels;
        for (int r2 : sol.compat.outcome.obstruction_rows) {
            if (!labels.empty()) labels += ", ";
            labels += sol.compat.rows[r2].label;
        }
        throw ObstructionAtOrder(0, "order 0 system inconsistent: " + labels);
    }

    // resolve the free parameters, then the solved values
    int nu0 = sol.compat.tab.size();
    std::map<int, Rational> free_val;
    std::map<std::string, bool> consumed;
    for (const auto& [k, v] : p.free_values) consumed[k] = false;
    std::vector<bool> is_free(nu0, false);
    for (int id : sol.compat.outcome.free_ids) is_free[id] = true;
    std::vector<Rational> v0(nu0, Rational(0));
    std::vector<std::string> prov(nu0);
    for (int id = 0; id < nu0; ++id) {
        std::string nm = sol.compat.tab.name(id);
        std::string bare = nm.size() > 3 ? nm.substr(0, nm.size() - 3) : nm;  // strip "(0)"
        auto it = p.free_values.find(nm);
        if (it == p.free_values.end()) it = p.free_values.find(bare);
        if (!is_free[id]) {
            if (it != p.free_values.end())
                throw InvalidInput("'" + nm + "' is determined by the order-0 system, not free");
            continue;
        }
        if (it != p.free_values.end()) {
            free_val[id] = it->second;
            consumed[it->first] = true;
            v0[id] = it->second;
            prov[id] = "free";
        } else {
            free_val[id] = 0;
            prov[id] = "free (default 0)";
        }
    }
    for (const auto& [k, used] : consumed)
        if (!used) throw InvalidInput("unknown free parameter '" + k + "'");
    for (const auto& [id, expr] : sol.compat.outcome.solved) {
        AffineScalar e = expr;
        for (const auto& [fid, fv] : free_val) e.substitute(fid, AffineScalar(fv));
        if (!e.is_constant())
            throw Error("order-0 value of '" + sol.compat.tab.name(id) +
                        "' did not reduce to a constant");
        v0[id] = e.constant();
        prov[id] = "compatibility";
    }

    // map order-0 table ids onto functions / the extra unknown
    std::vector<TruncatedSeries> phi(ctx.r);
    TruncatedSeries psi, psih;
    auto record = [&](const std::string& name, int power, const Rational& val,
                      const std::string& pv) {
        sol.table.push_back({name, power, val, pv});
    };
    for (int k = 0; k < ctx.r; ++k) {
        int id = ctx.reparam ? 1 + k : k;
        phi[k] = TruncatedSeries(v0[id]);
        record(d.smoothness->functions[k], 0, v0[id], prov[id]);
    }
    if (ctx.soliton) {
        psi = TruncatedSeries(v0[ctx.r]);
        record("potential", 0, v0[ctx.r], prov[ctx.r]);
    }
    if (ctx.reparam) {
        psih = TruncatedSeries(v0[0]);
        record("lapse", 0, v0[0], prov[0]);
    }

    // ---- batches m = 1 .. N/2 ----
    // Unknown 0 is the extra (potential / lapse) coefficient at t^(2m);
    // unknowns 1..r (or 0..r-1 without an extra) are the function
    // coefficients.  Constraint rows prefer the highest id so they never
    // pivot the extra unknown while a function direction is available;
    // the scalar row prefers the lowest.
    for (int m = 1; 2 * m <= p.order; ++m) {
        int nu = ctx.r + ctx.extra;
        int cap = 2 * m + 4;
        std::vector<InvariantCombo> combos = batch_combos(ctx, m);
        std::vector<std::string> labels;
        for (const auto& c : combos) labels.push_back(c.label);
        auto eval = [&](const std::vector<Rational>& vals) {
            std::vector<TruncatedSeries> phi2 = phi;
            TruncatedSeries psi2 = psi, psih2 = psih;
            for (int k = 0; k < ctx.r; ++k)
                phi2[k].set_coeff(2 * m, phi2[k].coeff(2 * m) + AffineScalar(vals[ctx.extra + k]));
            if (ctx.soliton) psi2.set_coeff(2 * m, psi2.coeff(2 * m) + AffineScalar(vals[0]));
            if (ctx.reparam) psih2.set_coeff(2 * m, psih2.coeff(2 * m) + AffineScalar(vals[0]));
            Residuals res = evaluate_residuals(ctx, phi2, psi2, psih2, cap);
            std::vector<Rational> out;
            for (const auto& c : combos) out.push_back(combo_value(res, c));
            return out;
        };
        std::vector<AffineScalar> exprs = probe_affine(nu, labels, eval);
        std::vector<LinearRow> lin;
        for (size_t q = 0; q < combos.size(); ++q)
            lin.push_back({exprs[q], combos[q].scalar_equation ? PivotPreference::LowestId
                                                               : PivotPreference::HighestId});
        LinearSolveOutcome out = solve_linear_batch(lin);
        if (!out.consistent())
            throw ObstructionAtOrder(2 * m, "order " + std::to_string(2 * m) +
                                                " system inconsistent: " +
                                                combos[out.obstruction_rows.front()].label);
        auto unknown_name = [&](int id) {
            if (ctx.extra && id == 0) return extra_name(ctx);
            return d.smoothness->functions[id - ctx.extra];
        };
        std::set<int> undetermined;
        for (int id = 0; id < nu; ++id)
            if (!out.solved.count(id)) {
                undetermined.insert(id);
                sol.warnings.push_back("order " + std::to_string(2 * m) + ": direction '" +
                                       unknown_name(id) + "' undetermined, set to 0");
            }
        std::vector<Rational> vals(nu, Rational(0));
        for (const auto& [id, expr] : out.solved) {
            AffineScalar e = expr;
            for (int u : undetermined) e.substitute(u, AffineScalar());
            if (!e.is_constant())
                throw Error("batch value of '" + unknown_name(id) +
                            "' did not reduce to a constant");
            vals[id] = e.constant();
        }
        for (int k = 0; k < ctx.r; ++k) {
            Rational v = vals[ctx.extra + k];
            phi[k].set_coeff(2 * m, phi[k].coeff(2 * m) + AffineScalar(v));
            record(d.smoothness->functions[k], 2 * m, v,
                   undetermined.count(ctx.extra + k)
                       ? "undetermined (order " + std::to_string(2 * m) + "): set to 0"
                       : "solved (order " + std::to_string(2 * m) + ")");
        }
        if (ctx.extra) {
            Rational v = vals[0];
            if (ctx.soliton) psi.set_coeff(2 * m, psi.coeff(2 * m) + AffineScalar(v));
            if (ctx.reparam) psih.set_coeff(2 * m, psih.coeff(2 * m) + AffineScalar(v));
            record(extra_name(ctx), 2 * m, v,
                   undetermined.count(0)
                       ? "undetermined (order " + std::to_string(2 * m) + "): set to 0"
                       : "solved (order " + std::to_string(2 * m) + ")");
        }
    }

    sol.phi = std::move(phi);
    if (ctx.soliton) sol.potential = psi;
    if (ctx.reparam) sol.lapse = psih;
    return sol;
}

}  // namespace

IVPSolution solve_series(const IVPProblem& p) { return run(p); }

IVPSolution solve_soliton(const IVPProblem& p) {
    if (p.target.kind != CompatTarget::Kind::Soliton)
        throw InvalidInput("solve_soliton requires a soliton target");
    return run(p);
}

IVPSolution solve_reparametrized(const IVPProblem& p, const TruncatedSeries& beta) {
    IVPProblem q = p;
    q.gauge = Gauge::Reparametrized;
    q.beta = beta;
    return run(q);
}

CertificateReport residual_certificate(const IVPSolution& sol, bool throw_on_failure) {
    const FibrationData& d = sol.data;
    if (!d.smoothness) throw InvalidInput("no smoothness section for '" + d.name + "'");
    SolveCtx ctx{d, sol.target};
    ctx.soliton = sol.target.kind == CompatTarget::Kind::Soliton;
    ctx.reparam = sol.gauge == Gauge::Reparametrized;
    ctx.h0 = sol.h0;
    ctx.beta = sol.beta;
    ctx.r = static_cast<int>(d.smoothness->functions.size());
    ctx.extra = (ctx.soliton || ctx.reparam) ? 1 : 0;

    int cap = sol.order + 8;
    Residuals res = evaluate_residuals(ctx, sol.phi,
                                       sol.potential ? *sol.potential : TruncatedSeries(),
                                       sol.lapse ? *sol.lapse : TruncatedSeries(), cap);

    CertificateReport rep;
    rep.threshold = sol.order + 1 - 0.2;

    auto fit_row = [&](const std::string& label, const TruncatedSeries& resid) {
        CertificateRow row;
        row.label = label;
        TruncatedSeries t = resid.truncated(std::min(resid.hi(), cap));
        if (t.identically_zero()) {
            row.skipped = true;
            row.passed = true;
            rep.rows.push_back(row);
            return;
        }
        // sample t in {10^-1, 10^-1.2, ..., 10^-3} and fit log|r| vs log t
        std::vector<double> xs, ys;
        for (int j = 0; j <= 10; ++j) {
            double x = -1.0 - 0.2 * j;
            double tv = std::pow(10.0, x);
            double v = 0;
            for (int e = t.ord(); e <= t.max_deg(); ++e) {
                AffineScalar c = t.coeff(e);
                if (c.is_zero()) continue;
                v += c.constant().get_d() * std::pow(tv, e);
            }
            if (std::abs(v) < 1e-300) continue;  // underflow guard
            xs.push_back(x);
            ys.push_back(std::log10(std::abs(v)));
        }
        if (xs.size() < 3) {
            // residual too small to measure anywhere on the grid
            row.skipped = true;
            row.passed = true;
            rep.rows.push_back(row);
            return;
        }
        double mx = 0, my = 0;
        for (size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
        mx /= static_cast<double>(xs.size());
        my /= static_cast<double>(xs.size());
        double num = 0, den = 0;
        for (size_t i = 0; i < xs.size(); ++i) {
            num += (xs[i] - mx) * (ys[i] - my);
            den += (xs[i] - mx) * (xs[i] - mx);
        }
        row.slope = num / den;
        row.passed = row.slope >= rep.threshold;
        rep.rows.push_back(row);
    };

    const auto& cons = d.smoothness->constraints;
    for (size_t k = 0; k < cons.size(); ++k) {
        TruncatedSeries combo;
        for (const auto& [i, j, coeff] : cons[k].a)
            combo += AffineScalar(coeff) * res.E(d.pos_in_n[i], d.pos_in_n[j]);
        fit_row("constraint " + std::to_string(k), combo);
    }
    if (res.has_scalar)
        fit_row(ctx.soliton ? "normal equation" : "replacement equation", res.scalar);

    if (sol.target.kind == CompatTarget::Kind::Einstein && !ctx.reparam) {
        SeriesMatrix P = build_P(d, sol.phi);
        SeriesMatrix Pinv = metric_inverse(d, P, cap);
        TruncatedSeries s = ricci_cc(P, Pinv) - TruncatedSeries(sol.target.lambda);
        int limit = std::min(sol.order + 4, std::min(s.hi(), cap));
        int through = limit;
        for (int e = std::min(s.ord(), 0); e <= limit; ++e)
            if (!s.coeff(e).is_zero()) {
                through = e - 1;
                break;
            }
        rep.normal_exact_through = through;
    }

    for (const auto& row : rep.rows) rep.passed = rep.passed && row.passed;
    if (!rep.passed && throw_on_failure) {
        std::string msg = "residual decay does not certify order " + std::to_string(sol.order) + ":";
        for (const auto& row : rep.rows)
            if (!row.passed)
                msg += " [" + row.label + " slope " + std::to_string(row.slope) + "]";
        throw CertificationFailed(msg);
    }
    return rep;
}

}  // namespace cohom1
