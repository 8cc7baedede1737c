#pragma once

#include <optional>
#include <vector>

#include "crnreal/matrix.hpp"

namespace crnreal::lp {

/// maximize c.x  subject to  A x = b,  0 <= x <= upper.
///
/// Without an objective the problem is a pure feasibility query. An empty
/// `upper` means no variable is capped; otherwise it has one entry per column
/// and std::nullopt marks an uncapped variable.
struct Problem {
  Matrix A;
  RatVector b;
  std::optional<RatVector> objective;
  std::vector<std::optional<Rational>> upper;
};

enum class Status { Infeasible, Optimal, Unbounded };

struct Outcome {
  Status status = Status::Infeasible;
  /// Feasible point; empty when infeasible. For Unbounded it is the last
  /// basic feasible solution visited.
  RatVector point;
  /// Exact maximum; meaningful only when Optimal (0 for feasibility queries).
  Rational value;
};

/// Two-phase dense-tableau simplex in exact arithmetic with Bland's rule.
/// Throws Error(DimensionMismatch) on malformed input.
Outcome solve(const Problem& problem);

/// Exact residual check: A x == b, x >= 0 and x <= upper.
bool is_feasible(const Problem& problem, const RatVector& x);

}  // namespace crnreal::lp
