#pragma once

#include <utility>
#include <vector>

#include "cohom1/ivp.hpp"

namespace cohom1 {

// One point of a numerically continued trajectory: the distinct metric
// entries (in the ansatz entry order), their t-derivatives, and the
// companion scalars where present.
struct TrajectorySample {
    double t = 0;
    std::vector<double> g;     // metric entry values
    std::vector<double> gdot;  // metric entry derivatives
    double v = 0;              // soliton potential derivative u'
    double h = 1;              // lapse value (reparametrized gauge)
};

struct Trajectory {
    std::vector<std::pair<int, int>> entries;  // (i, j) basis indices per g slot
    bool has_potential = false;
    bool has_lapse = false;
    std::vector<TrajectorySample> samples;
};

// Continue a certified series solution numerically from t0 to t_max with
// an adaptive embedded Runge-Kutta pair (order 5(4)), sampling on a
// uniform grid of `samples` points (including both ends).  The series
// provides the initial state at t0; its residual there must already be
// below reltol.  Throws InvalidInput on bad arguments or a too-large
// handoff residual, StepFailure when the tolerance is unreachable, and
// PositivityLost (with the time) when the metric degenerates.
Trajectory continue_solution(const IVPSolution& sol, double t0, double t_max, double reltol,
                             int samples = 101);

// Re-enter the flow from a previously sampled state: same equations and
// target as `sol`, initial data taken from `state` instead of the series.
Trajectory resume(const IVPSolution& sol, const TrajectorySample& state, double t_max,
                  double reltol, int samples = 101);

}  // namespace cohom1
