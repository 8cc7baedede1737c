#pragma once

// Shared test inputs and independent oracles.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "crnreal/cone.hpp"
#include "crnreal/lp.hpp"
#include "crnreal/matrix.hpp"
#include "crnreal/network.hpp"

namespace fixtures {

using crnreal::Edge;
using crnreal::EGraph;
using crnreal::MassActionSystem;
using crnreal::Matrix;
using crnreal::NetReactionData;
using crnreal::RatVector;
using crnreal::Rational;

inline MassActionSystem system(std::size_t n, std::vector<RatVector> vertices,
                               std::vector<Edge> edges,
                               std::vector<Rational> rates = {}) {
  if (rates.empty()) {
    rates.assign(edges.size(), Rational(1));
  }
  return MassActionSystem(EGraph(n, std::move(vertices), std::move(edges)),
                          std::move(rates));
}

// Five-vertex two-class input: classes {0,1} and {2,3,4}.
inline NetReactionData two_class_type1() {
  return NetReactionData(Matrix{{1, 2, 3, 3, 3}, {0, 0, 0, 1, 2}},
                         Matrix{{1, -1, 0, 0, 0}, {0, 0, 1, 0, -1}});
}

inline NetReactionData collinear_pair() {
  return NetReactionData(Matrix{{1, 2}, {0, 0}}, Matrix{{-1, 1}, {0, 0}});
}

inline Matrix mixed_generators_w() {
  return Matrix{{1, 1, -2, 1, -1}, {1, -1, 0, 0, 0}};
}

inline Matrix parallel_cycles_w() {
  return Matrix{{1, -1, 1, -1}, {0, 0, 0, 0}};
}

// (0,0) <-> (1,0) and (0,1) <-> (1,1), unit rates: deficiency one with two
// deficiency-zero classes sharing the x direction.
inline MassActionSystem parallel_cycles() {
  return system(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
}

// X1 <-> 2X1, X1 + X2 <-> X3 <-> X2 in (X1, X2, X3).
inline MassActionSystem edelstein() {
  return system(3, {{1, 0, 0}, {2, 0, 0}, {1, 1, 0}, {0, 0, 1}, {0, 1, 0}},
                {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {3, 4}, {4, 3}});
}

// L + 2R + P <-> 3R + Q, R + 2L + P <-> 3L + Q, P <-> 0 <-> Q in (L, R, P, Q).
inline MassActionSystem symmetry_breaking() {
  return system(4,
                {{1, 2, 1, 0},
                 {0, 3, 0, 1},
                 {2, 1, 1, 0},
                 {3, 0, 0, 1},
                 {0, 0, 1, 0},
                 {0, 0, 0, 0},
                 {0, 0, 0, 1}},
                {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}, {5, 6}, {6, 5}});
}

// Seven vertices, two linkage classes, three terminal components, s = 2.
inline EGraph three_terminal_graph() {
  return EGraph(2,
                {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {3, 0}, {2, 1}},
                {{0, 1}, {0, 2}, {2, 3}, {3, 2}, {4, 5}, {5, 4}, {5, 6}});
}

// Weakly reversible triangle: one terminal component, s = 2.
inline EGraph triangle_graph() {
  return EGraph(2, {{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}});
}

// (0,0) -> (0,2), (0,0) -> (2,0) and the same source with an extra target
// (1,1); both have net vector (4,4) at the origin.
inline MassActionSystem origin_fan(const Rational& k12, const Rational& k13) {
  return system(2, {{0, 0}, {0, 2}, {2, 0}}, {{0, 1}, {0, 2}}, {k12, k13});
}
inline MassActionSystem origin_fan_with_diagonal() {
  return system(2, {{0, 0}, {0, 2}, {2, 0}, {1, 1}}, {{0, 1}, {0, 2}, {0, 3}},
                {1, 1, 2});
}

// ---------------------------------------------------------------- random

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long between(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                            long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = rng.between(lo, hi);
    }
  }
  return m;
}

// ------------------------------------------------------------------ oracles

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) {
        s.push_back(j);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Unique solution of A_S x = b restricted to columns S, if any.
inline std::optional<RatVector> solve_on(const Matrix& a, const RatVector& b,
                                         const std::vector<std::size_t>& cols) {
  const Matrix sub = a.select_columns(cols);
  Matrix aug = sub.hcat(Matrix::from_columns({b}, a.rows()));
  const auto red = crnreal::rref(aug);
  if (red.pivots.size() != cols.size() ||
      std::find(red.pivots.begin(), red.pivots.end(), cols.size()) !=
          red.pivots.end()) {
    return std::nullopt;
  }
  RatVector x(a.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    x[cols[i]] = red.reduced(i, cols.size());
  }
  return x;
}

struct LpOracle {
  bool feasible = false;
  bool unbounded = false;
  Rational value;
};

// Standard-form LP max c.x, A x = b, x >= 0 by enumerating basic feasible
// solutions and extreme directions. Upper bounds must already be folded in.
inline LpOracle lp_oracle(const Matrix& a, const RatVector& b,
                          const std::optional<RatVector>& c) {
  LpOracle out;
  if (a.rows() == 0 || crnreal::is_zero(b)) {
    out.feasible = true;  // x = 0
  }
  std::optional<Rational> best;
  if (out.feasible && c) {
    best = Rational(0);
  }
  for (const auto& s : subsets(a.cols())) {
    if (const auto x = solve_on(a, b, s)) {
      if (std::all_of(x->begin(), x->end(),
                      [](const Rational& v) { return sgn(v) >= 0; })) {
        out.feasible = true;
        if (c) {
          const Rational v = crnreal::dot(*c, *x);
          if (!best || v > *best) {
            best = v;
          }
        }
      }
    }
  }
  if (!out.feasible || !c) {
    return out;
  }
  for (const auto& s : subsets(a.cols())) {
    const auto k = crnreal::kernel_basis(a.select_columns(s));
    if (k.size() != 1) {
      continue;
    }
    const int sign = sgn(k.front().front());
    if (sign == 0 || !std::all_of(k.front().begin(), k.front().end(),
                                  [&](const Rational& v) { return sgn(v) == sign; })) {
      continue;
    }
    Rational gain = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      gain += (*c)[s[i]] * k.front()[i] * sign;
    }
    if (sgn(gain) > 0) {
      out.unbounded = true;
      return out;
    }
  }
  out.value = *best;
  return out;
}

// Folds per-variable upper bounds into slack columns.
inline crnreal::lp::Problem with_slacks(const crnreal::lp::Problem& p) {
  std::vector<std::size_t> capped;
  for (std::size_t i = 0; i < p.upper.size(); ++i) {
    if (p.upper[i]) {
      capped.push_back(i);
    }
  }
  const std::size_t n = p.A.cols();
  crnreal::lp::Problem out;
  out.A = Matrix(p.A.rows() + capped.size(), n + capped.size());
  out.b = p.b;
  for (std::size_t r = 0; r < p.A.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out.A(r, c) = p.A(r, c);
    }
  }
  for (std::size_t k = 0; k < capped.size(); ++k) {
    out.A(p.A.rows() + k, capped[k]) = 1;
    out.A(p.A.rows() + k, n + k) = 1;
    out.b.push_back(*p.upper[capped[k]]);
  }
  if (p.objective) {
    RatVector c = *p.objective;
    c.resize(n + capped.size());
    out.objective = c;
  }
  return out;
}

// True iff d is a nonnegative combination of others (LP membership).
inline bool in_cone(const RatVector& d, const std::vector<RatVector>& others) {
  if (others.empty()) {
    return crnreal::is_zero(d);
  }
  crnreal::lp::Problem p;
  p.A = Matrix::from_columns(others, d.size());
  p.b = d;
  return crnreal::lp::solve(p).status != crnreal::lp::Status::Infeasible;
}

inline std::set<RatVector> as_set(const std::vector<crnreal::Ray>& rays) {
  std::set<RatVector> out;
  for (const auto& r : rays) {
    out.insert(r.coords());
  }
  return out;
}

}  // namespace fixtures
