#pragma once
// Exact primal simplex over the rationals with Bland's rule. Two entry
// points cover everything the library needs: maximize a linear functional
// of a free variable over {x : Ax <= b}, and find a nonnegative solution
// of an equality system. No tolerances anywhere; infeasibility and
// unboundedness are reported as statuses, never guessed.

#include "slackfc/matrix.hpp"

#include <optional>

namespace sfc {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;  // optimal objective value when status == Optimal
    Vec x;      // optimizer, or a feasible point when Unbounded
    Vec ray;    // improving direction when Unbounded
};

// max c.x subject to A x <= b, x free.
LpResult solve_lp_max(const Mat& A, const Vec& b, const Vec& c);

// A point of {x : A x <= b}, or nullopt when the polyhedron is empty.
std::optional<Vec> find_feasible(const Mat& A, const Vec& b);

// A nonnegative solution of E y = d, or nullopt when none exists.
std::optional<Vec> solve_eq_nonneg(const Mat& E, const Vec& d);

} // namespace sfc
