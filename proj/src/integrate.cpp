#include "cohom1/integrate.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <stdexcept>

#include "cohom1/homogeneous.hpp"
#include "cohom1/smoothness.hpp"

namespace cohom1 {

namespace {

namespace ode = boost::numeric::odeint;
using State = std::vector<double>;
using Mat = DenseMatrix<double>;

double eval_d(const TruncatedSeries& s, double t) {
    if (s.identically_zero()) return 0;
    double acc = 0;
    for (int e = s.max_deg(); e >= s.ord(); --e) acc = acc * t + s.coeff(e).constant().get_d();
    return acc * std::pow(t, s.ord());
}

// Inverse through a Cholesky factorization; reports loss of positive
// definiteness with the trajectory time.
Mat spd_inverse(const Mat& a, double t) {
    int n = a.rows();
    Mat L(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            if (i == j) {
                if (s <= 0)
                    throw PositivityLost(t, "metric lost positive definiteness at t = " +
                                                std::to_string(t));
                L(i, i) = std::sqrt(s);
            } else {
                L(i, j) = s / L(j, j);
            }
        }
    }
    // columns of the inverse from L L^T x = e_k
    Mat inv(n, n);
    for (int k = 0; k < n; ++k) {
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) {
            double s = i == k ? 1.0 : 0.0;
            for (int j = 0; j < i; ++j) s -= L(i, j) * y[j];
            y[i] = s / L(i, i);
        }
        for (int i = n - 1; i >= 0; --i) {
            double s = y[i];
            for (int j = i + 1; j < n; ++j) s -= L(j, i) * inv(j, k);
            inv(i, k) = s / L(i, i);
        }
    }
    return inv;
}

struct Flow {
    const FibrationData* data = nullptr;
    ContractionTables ct;
    CompatTarget target;
    Gauge gauge = Gauge::Arclength;
    TruncatedSeries beta;
    std::vector<std::pair<int, int>> entries;  // basis-index pairs
    std::vector<std::pair<int, int>> pos;      // same pairs as n-positions
    bool soliton = false;
    bool reparam = false;
    int nslots = 0;
    // Budget on right-hand-side evaluations: an overly tight tolerance
    // drives the step controller into ever smaller steps without ever
    // raising an error on its own, so the flow itself gives up once the
    // work clearly exceeds any reasonable integration.
    mutable long evals = 0;
    static constexpr long kEvalBudget = 2'000'000;

    explicit Flow(const IVPSolution& sol)
        : data(&sol.data), ct(sol.data), target(sol.target), gauge(sol.gauge), beta(sol.beta) {
        if (!sol.data.smoothness) throw InvalidInput("continuation needs the metric ansatz");
        for (const auto& [e, terms] : sol.data.smoothness->ansatz) {
            entries.push_back(e);
            pos.emplace_back(sol.data.pos_in_n[e.first], sol.data.pos_in_n[e.second]);
        }
        soliton = target.kind == CompatTarget::Kind::Soliton;
        reparam = gauge == Gauge::Reparametrized;
        nslots = static_cast<int>(entries.size());
    }

    int state_size() const { return 2 * nslots + (soliton ? 1 : 0) + (reparam ? 1 : 0); }

    Mat unpack(const State& y, int off) const {
        int n = data->dim_n();
        Mat P(n, n);
        for (int k = 0; k < nslots; ++k) {
            auto [i, j] = pos[k];
            P(i, j) = y[off + k];
            P(j, i) = y[off + k];
        }
        return P;
    }

    Mat target_matrix(double t, const Mat& P, const Mat& Pd, double v) const {
        int n = data->dim_n();
        Mat T(n, n);
        switch (target.kind) {
            case CompatTarget::Kind::Einstein:
            case CompatTarget::Kind::Soliton:
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) T(i, j) = target.lambda.get_d() * P(i, j);
                break;
            case CompatTarget::Kind::Tensor:
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) T(i, j) = eval_d(target.prescribed(i, j), t);
                break;
        }
        if (soliton)
            // tangential potential term: Ric + (v/2) P' = T
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) T(i, j) -= 0.5 * v * Pd(i, j);
        return T;
    }

    // tr(P^-1 dT/dt) for the lapse equation.
    double target_trace_derivative(const Mat& Pinv, const Mat& Pd, double t) const {
        if (target.kind == CompatTarget::Kind::Tensor) {
            double s = 0;
            int n = data->dim_n();
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    s += Pinv(i, j) * eval_d(target.prescribed(j, i).derivative(), t);
            return s;
        }
        return target.lambda.get_d() * (Pinv * Pd).trace();
    }

    void operator()(const State& y, State& dy, double t) const {
        if (++evals > kEvalBudget)
            throw StepFailure("adaptive step control exceeded its work budget; "
                              "the requested tolerance appears unreachable");
        Mat P = unpack(y, 0);
        Mat Pd = unpack(y, nslots);
        double v = soliton ? y[2 * nslots] : 0;
        double h = reparam ? y[2 * nslots] : 1;
        Mat Pinv = spd_inverse(P, t);
        Mat M = Pinv * Pd;
        double trM = M.trace();
        Mat ric = ricci_gh_core<double>(ct, P, Pinv);
        Mat T = target_matrix(t, P, Pd, v);
        dy.assign(y.size(), 0.0);

        double hdot = 0;
        if (reparam && !beta.identically_zero()) {
            // (beta h^-2)' + tr(P^-1 P') beta h^-2 = tr(P^-1 T')
            double b = eval_d(beta, t), bd = eval_d(beta.derivative(), t);
            double rhs = target_trace_derivative(Pinv, Pd, t) - (bd + trM * b) / (h * h);
            hdot = -rhs * h * h * h / (2 * b);
        }

        // solve the tangential equation for P''
        Mat Pdd(P.rows(), P.cols());
        if (!reparam) {
            // Ric_GH - 1/4 trM P' + 1/2 P' P^-1 P' - 1/2 P'' = T
            Pdd = 2.0 * (ric - T) + (-0.5 * trM) * Pd + Pd * M;
        } else {
            // Ric_GH + h^-2 (-1/4 trM P' + 1/2 P' P^-1 P' - 1/2 P'') + (h'/2h^3) P' = T
            Pdd = (2 * h * h) * (ric - T) + (-0.5 * trM) * Pd + Pd * M + (hdot / h) * Pd;
        }

        for (int k = 0; k < nslots; ++k) {
            auto [i, j] = pos[k];
            dy[k] = Pd(i, j);
            dy[nslots + k] = Pdd(i, j);
        }
        if (soliton) {
            // ricci_cc + v' - (1/m) v^2 = lambda, with
            // ricci_cc = 1/4 tr(M^2) - 1/2 tr(P^-1 P'')
            double rcc = 0.25 * (M * M).trace() - 0.5 * (Pinv * Pdd).trace();
            dy[2 * nslots] = target.lambda.get_d() + target.inv_m.get_d() * v * v - rcc;
        }
        if (reparam) dy[2 * nslots] = hdot;
        for (double d : dy)
            if (!std::isfinite(d))
                throw StepFailure("dynamics became non-finite at t = " + std::to_string(t));
    }
};

TrajectorySample make_sample(const Flow& f, double t, const State& y) {
    TrajectorySample s;
    s.t = t;
    s.g.assign(y.begin(), y.begin() + f.nslots);
    s.gdot.assign(y.begin() + f.nslots, y.begin() + 2 * f.nslots);
    if (f.soliton) s.v = y[2 * f.nslots];
    if (f.reparam) s.h = y[2 * f.nslots];
    return s;
}

Trajectory run_flow(const Flow& f, State y, double t0, double t_max, double reltol, int samples) {
    if (!(t0 > 0) || !(t_max > t0)) throw InvalidInput("need 0 < t0 < t_max");
    if (!(reltol > 0)) throw InvalidInput("reltol must be positive");
    if (samples < 2) throw InvalidInput("need at least two sample points");

    std::vector<double> times(samples);
    for (int k = 0; k < samples; ++k) times[k] = t0 + (t_max - t0) * k / (samples - 1);

    Trajectory traj;
    traj.entries = f.entries;
    traj.has_potential = f.soliton;
    traj.has_lapse = f.reparam;

    auto stepper = ode::make_controlled<ode::runge_kutta_dopri5<State>>(reltol, reltol);
    try {
        ode::integrate_times(stepper, std::cref(f), y, times.begin(), times.end(),
                             (t_max - t0) / (10.0 * samples),
                             [&](const State& s, double t) { traj.samples.push_back(make_sample(f, t, s)); });
    } catch (const PositivityLost&) {
        throw;
    } catch (const ode::no_progress_error& e) {
        throw StepFailure(std::string("adaptive step control gave up: ") + e.what());
    } catch (const ode::step_adjustment_error& e) {
        throw StepFailure(std::string("step size underflow: ") + e.what());
    } catch (const std::overflow_error& e) {
        throw StepFailure(std::string("adaptive step control gave up: ") + e.what());
    }
    return traj;
}

}  // namespace

Trajectory continue_solution(const IVPSolution& sol, double t0, double t_max, double reltol,
                             int samples) {
    Flow f(sol);
    SeriesMatrix P = build_P(sol.data, sol.phi);

    State y(f.state_size(), 0.0);
    for (int k = 0; k < f.nslots; ++k) {
        auto [i, j] = f.pos[k];
        y[k] = eval_d(P(i, j), t0);
        y[f.nslots + k] = eval_d(P(i, j).derivative(), t0);
    }
    if (f.soliton) {
        TruncatedSeries v = sol.potential ? sol.potential->shifted(2).derivative() : TruncatedSeries();
        y[2 * f.nslots] = eval_d(v, t0);
    }
    if (f.reparam) {
        double h = sol.h0.get_d();
        if (sol.lapse) h += t0 * t0 * eval_d(*sol.lapse, t0);
        y[2 * f.nslots] = h;
    }

    // handoff check: the series' own derivative must agree with the flow
    // to within the requested tolerance at t0
    State dy_flow;
    f(y, dy_flow, t0);
    double scale = 1.0, err = 0.0;
    for (double c : y) scale = std::max(scale, std::abs(c));
    for (int k = 0; k < f.nslots; ++k) {
        auto [i, j] = f.pos[k];
        err = std::max(err, std::abs(dy_flow[f.nslots + k] -
                                     eval_d(P(i, j).derivative().derivative(), t0)));
    }
    if (f.soliton && sol.potential) {
        TruncatedSeries vd = sol.potential->shifted(2).derivative().derivative();
        err = std::max(err, std::abs(dy_flow[2 * f.nslots] - eval_d(vd, t0)));
    }
    if (err > reltol * scale)
        throw InvalidInput("series residual at t0 (" + std::to_string(err) +
                           ") exceeds reltol; hand off earlier or raise the order");

    return run_flow(f, std::move(y), t0, t_max, reltol, samples);
}

Trajectory resume(const IVPSolution& sol, const TrajectorySample& state, double t_max,
                  double reltol, int samples) {
    Flow f(sol);
    if (static_cast<int>(state.g.size()) != f.nslots ||
        static_cast<int>(state.gdot.size()) != f.nslots)
        throw InvalidInput("sample state does not match the ansatz entry count");
    State y(f.state_size(), 0.0);
    std::copy(state.g.begin(), state.g.end(), y.begin());
    std::copy(state.gdot.begin(), state.gdot.end(), y.begin() + f.nslots);
    if (f.soliton) y[2 * f.nslots] = state.v;
    if (f.reparam) y[2 * f.nslots] = state.h;
    return run_flow(f, std::move(y), state.t, t_max, reltol, samples);
}

}  // namespace cohom1
