#include "crnreal/lp.hpp"

#include <utility>

#include "crnreal/error.hpp"

namespace crnreal::lp {

namespace {

void validate(const Problem& p) {
  if (p.A.rows() != p.b.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "lp: constraint matrix rows != right-hand side length");
  }
  if (p.objective && p.objective->size() != p.A.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "lp: objective length != number of variables");
  }
  if (!p.upper.empty() && p.upper.size() != p.A.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "lp: upper-bound list length != number of variables");
  }
}

// Dense simplex tableau. The last column holds the right-hand side; the
// reduced-cost row stores c_j - z_j, so its rhs entry is minus the current
// objective value.
class Tableau {
 public:
  enum class Result { Optimal, Unbounded };

  Tableau(std::vector<RatVector> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  void set_objective(const RatVector& cost) {
    const std::size_t w = cost.size();
    reduced_.assign(w + 1, Rational(0));
    for (std::size_t j = 0; j < w; ++j) {
      reduced_[j] = cost[j];
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational cb = cost[basis_[r]];
      if (sgn(cb) == 0) {
        continue;
      }
      for (std::size_t j = 0; j <= w; ++j) {
        reduced_[j] -= cb * rows_[r][j];
      }
    }
  }

  // Bland's rule: lowest-index improving column enters; among tied ratio
  // rows the one whose basic variable has the lowest index leaves.
  Result run(const std::vector<bool>& allowed) {
    const std::size_t rhs = reduced_.size() - 1;
    for (;;) {
      std::size_t enter = rhs;
      for (std::size_t j = 0; j < rhs; ++j) {
        if (allowed[j] && sgn(reduced_[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == rhs) {
        return Result::Optimal;
      }
      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (sgn(rows_[r][enter]) <= 0) {
          continue;
        }
        Rational ratio = rows_[r][rhs] / rows_[r][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_.size()) {
        return Result::Unbounded;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[j];
    for (auto& x : prow) {
      x *= inv;
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (k == r || sgn(rows_[k][j]) == 0) {
        continue;
      }
      const Rational f = rows_[k][j];
      for (std::size_t c = 0; c < prow.size(); ++c) {
        rows_[k][c] -= f * prow[c];
      }
    }
    if (!reduced_.empty() && sgn(reduced_[j]) != 0) {
      const Rational f = reduced_[j];
      for (std::size_t c = 0; c < prow.size(); ++c) {
        reduced_[c] -= f * prow[c];
      }
    }
    basis_[r] = j;
  }

  // Pivots artificial variables (index >= first_artificial) out of the basis
  // where possible; rows where that is impossible are linearly dependent on
  // the others and get dropped.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < first_artificial) {
        ++r;
        continue;
      }
      std::size_t j = 0;
      while (j < first_artificial && sgn(rows_[r][j]) == 0) {
        ++j;
      }
      if (j < first_artificial) {
        pivot(r, j);
        ++r;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  Rational objective_value() const { return -reduced_.back(); }

  RatVector basic_solution(std::size_t variables) const {
    RatVector x(variables);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < variables) {
        x[basis_[r]] = rows_[r].back();
      }
    }
    return x;
  }

 private:
  std::vector<RatVector> rows_;
  std::vector<std::size_t> basis_;
  RatVector reduced_;
};

}  // namespace

Outcome solve(const Problem& problem) {
  validate(problem);
  const std::size_t n0 = problem.A.cols();
  std::vector<std::size_t> capped;
  for (std::size_t j = 0; j < problem.upper.size(); ++j) {
    if (problem.upper[j]) {
      capped.push_back(j);
    }
  }
  const std::size_t n = n0 + capped.size();  // structural + slack
  const std::size_t m = problem.A.rows() + capped.size();
  const std::size_t width = n + m;           // + artificials

  std::vector<RatVector> rows(m, RatVector(width + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < problem.A.rows(); ++r) {
    for (std::size_t j = 0; j < n0; ++j) {
      rows[r][j] = problem.A(r, j);
    }
    rows[r][width] = problem.b[r];
  }
  for (std::size_t k = 0; k < capped.size(); ++k) {
    auto& row = rows[problem.A.rows() + k];
    row[capped[k]] = 1;
    row[n0 + k] = 1;
    row[width] = *problem.upper[capped[k]];
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (sgn(rows[r][width]) < 0) {
      for (auto& x : rows[r]) {
        x = -x;
      }
    }
    rows[r][n + r] = 1;
    basis[r] = n + r;
  }

  Tableau tableau(std::move(rows), std::move(basis));

  RatVector phase1(width);
  for (std::size_t j = n; j < width; ++j) {
    phase1[j] = -1;
  }
  tableau.set_objective(phase1);
  tableau.run(std::vector<bool>(width, true));
  if (sgn(tableau.objective_value()) < 0) {
    return Outcome{Status::Infeasible, {}, 0};
  }
  tableau.expel_artificials(n);

  RatVector phase2(width);
  if (problem.objective) {
    for (std::size_t j = 0; j < n0; ++j) {
      phase2[j] = (*problem.objective)[j];
    }
  }
  std::vector<bool> allowed(width, false);
  for (std::size_t j = 0; j < n; ++j) {
    allowed[j] = true;
  }
  tableau.set_objective(phase2);
  const auto result = tableau.run(allowed);

  RatVector x = tableau.basic_solution(n);
  x.resize(n0);
  if (result == Tableau::Result::Unbounded) {
    return Outcome{Status::Unbounded, std::move(x), 0};
  }
  Rational value = problem.objective ? dot(*problem.objective, x) : Rational(0);
  return Outcome{Status::Optimal, std::move(x), std::move(value)};
}

bool is_feasible(const Problem& problem, const RatVector& x) {
  validate(problem);
  if (x.size() != problem.A.cols()) {
    return false;
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) < 0) {
      return false;
    }
    if (!problem.upper.empty() && problem.upper[j] && x[j] > *problem.upper[j]) {
      return false;
    }
  }
  return problem.A * x == problem.b;
}

}  // namespace crnreal::lp
