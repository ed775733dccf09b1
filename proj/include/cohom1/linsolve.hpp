#pragma once

#include <map>
#include <set>
#include <vector>

#include "cohom1/affine.hpp"

namespace cohom1 {

enum class PivotPreference { HighestId, LowestId };

struct LinearRow {
    AffineScalar expr;  // the equation expr == 0
    PivotPreference pref = PivotPreference::HighestId;
};

struct LinearSolveOutcome {
    // Unknown id -> affine expression in the free ids.
    std::map<int, AffineScalar> solved;
    // Ids that appeared but were never pinned down.
    std::vector<int> free_ids;
    // Indices of input rows that reduced to a nonzero constant.
    std::vector<int> obstruction_rows;
    // Indices of rows that reduced to 0 == 0 (redundant).
    std::vector<int> redundant_rows;
    // Row index -> the unknown that row was solved for.
    std::map<int, int> row_pivot;

    bool consistent() const { return obstruction_rows.empty(); }
};

// Exact Gaussian elimination on a batch of affine equations, processed in
// order.  Each row is reduced modulo the previously solved unknowns, then
// solved for one remaining unknown chosen by its pivot preference.
inline LinearSolveOutcome solve_linear_batch(const std::vector<LinearRow>& rows) {
    LinearSolveOutcome out;
    std::set<int> seen;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        AffineScalar e = rows[r].expr;
        for (const auto& [id, v] : rows[r].expr.linear()) {
            seen.insert(id);
            auto it = out.solved.find(id);
            if (it != out.solved.end()) e.substitute(id, it->second);
        }
        if (e.is_constant()) {
            if (e.constant() == 0)
                out.redundant_rows.push_back(r);
            else
                out.obstruction_rows.push_back(r);
            continue;
        }
        int pivot = rows[r].pref == PivotPreference::HighestId
                        ? e.linear().rbegin()->first
                        : e.linear().begin()->first;
        Rational k = e.coeff(pivot);
        AffineScalar rest = e;
        rest.substitute(pivot, AffineScalar());
        AffineScalar value = (-rest) / k;
        for (auto& [id, expr] : out.solved) expr.substitute(pivot, value);
        out.solved[pivot] = value;
        out.row_pivot[r] = pivot;
    }
    for (int id : seen)
        if (!out.solved.count(id)) out.free_ids.push_back(id);
    return out;
}

}  // namespace cohom1
