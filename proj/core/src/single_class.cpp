#include "crnreal/single_class.hpp"

#include <algorithm>
#include <utility>

#include "crnreal/lp.hpp"

namespace crnreal {

namespace {

// Decomposition LP at vertex i: variables c_ij for j != i, in increasing j,
// constraints sum_j c_ij (y_j - y_i) = w_i.
lp::Problem decomposition_problem(const NetReactionData& data, std::size_t i) {
  const std::size_t n = data.dimension();
  const std::size_t m = data.size();
  lp::Problem p;
  p.A = Matrix(n, m - 1);
  p.b = data.net().column(i);
  for (std::size_t j = 0, col = 0; j < m; ++j) {
    if (j == i) {
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) {
      p.A(r, col) = data.sources()(r, j) - data.sources()(r, i);
    }
    ++col;
  }
  return p;
}

// max t subject to t <= c_col, t <= 1 on top of the decomposition. The cap
// sits on t rather than on c_col: every solution may need c_col > 1.
// Variables are c, then t, then the slack s of c_col - t - s = 0.
lp::Problem positivity_problem(const lp::Problem& base, std::size_t col) {
  const std::size_t vars = base.A.cols();
  lp::Problem p;
  p.A = Matrix(base.A.rows() + 1, vars + 2);
  for (std::size_t r = 0; r < base.A.rows(); ++r) {
    for (std::size_t c = 0; c < vars; ++c) {
      p.A(r, c) = base.A(r, c);
    }
  }
  const std::size_t last = base.A.rows();
  p.A(last, col) = 1;
  p.A(last, vars) = -1;
  p.A(last, vars + 1) = -1;
  p.b = base.b;
  p.b.emplace_back(0);
  p.objective = RatVector(vars + 2);
  (*p.objective)[vars] = 1;
  p.upper.assign(vars + 2, std::nullopt);
  p.upper[vars] = Rational(1);
  return p;
}

std::size_t target_of(std::size_t i, std::size_t col) {
  return col < i ? col : col + 1;
}

}  // namespace

SingleClassOutcome realize_single_class(const NetReactionData& data) {
  SingleClassOutcome out;
  const std::size_t m = data.size();
  if (m < 2) {
    out.reason = "a single linkage class needs at least two vertices";
    return out;
  }

  std::vector<lp::Problem> problems;
  problems.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    problems.push_back(decomposition_problem(data, i));
    if (lp::solve(problems.back()).status == lp::Status::Infeasible) {
      out.reason = "net reaction vector of vertex " + std::to_string(i) +
                   " is not a nonnegative combination of y_j - y_" +
                   std::to_string(i);
      return out;
    }
  }

  std::vector<Edge> edges;
  std::vector<Rational> rates;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t vars = m - 1;
    RatVector sum(vars);
    std::size_t witnesses = 0;
    std::vector<std::size_t> kept;
    for (std::size_t col = 0; col < vars; ++col) {
      const auto res = lp::solve(positivity_problem(problems[i], col));
      if (res.status != lp::Status::Optimal || sgn(res.value) <= 0) {
        continue;
      }
      kept.push_back(col);
      sum = sum + RatVector(res.point.begin(), res.point.begin() + vars);
      ++witnesses;
    }
    for (auto col : kept) {
      edges.push_back({i, target_of(i, col)});
      rates.push_back(sum[col] / witnesses);
    }
  }
  out.maximal_edges = edges;

  Matrix q(m, m);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    q(edges[k].target, edges[k].source) += rates[k];
    q(edges[k].source, edges[k].source) -= rates[k];
  }
  const auto kernel = kernel_basis(q);
  if (kernel.size() != 1) {
    out.reason = "Kirchhoff matrix of the maximal realization has a " +
                 std::to_string(kernel.size()) + "-dimensional kernel";
    return out;
  }
  if (std::any_of(kernel.front().begin(), kernel.front().end(),
                  [](const Rational& x) { return sgn(x) == 0; })) {
    out.reason =
        "kernel of the maximal realization's Kirchhoff matrix lacks full "
        "support";
    return out;
  }

  std::vector<RatVector> vertices;
  for (std::size_t i = 0; i < m; ++i) {
    vertices.push_back(data.sources().column(i));
  }
  out.realization.emplace(
      EGraph(data.dimension(), std::move(vertices), std::move(edges)),
      std::move(rates));
  out.exists = true;
  return out;
}

}  // namespace crnreal
