#include "crnreal/cone.hpp"

#include <algorithm>
#include <utility>

#include "crnreal/error.hpp"

namespace crnreal {

Ray::Ray(const RatVector& direction) {
  bool any_positive = false;
  for (const auto& x : direction) {
    const int s = sgn(x);
    if (s < 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "ray has a negative entry: " + to_string(direction));
    }
    any_positive = any_positive || s > 0;
  }
  if (!any_positive) {
    throw Error(ErrorKind::InvalidArgument, "ray must be nonzero");
  }
  coords_ = primitive_integer(direction);
}

std::vector<std::size_t> Ray::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (sgn(coords_[i]) != 0) {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

struct DdRay {
  RatVector t;
  // zeros[i]: constraint row i is already processed and tight at this ray.
  std::vector<bool> zeros;
};

std::size_t count(const std::vector<bool>& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), true));
}

std::vector<bool> intersect(const std::vector<bool>& a,
                            const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] && b[i];
  }
  return out;
}

bool contains(const std::vector<bool>& super, const std::vector<bool>& sub) {
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub[i] && !super[i]) {
      return false;
    }
  }
  return true;
}

bool adjacent(const std::vector<DdRay>& rays, std::size_t p, std::size_t n,
              const Matrix& constraints, AdjacencyTest test) {
  const std::size_t dim = constraints.cols();
  const auto common = intersect(rays[p].zeros, rays[n].zeros);
  if (dim >= 2 && count(common) < dim - 2) {
    return false;
  }
  if (test == AdjacencyTest::Algebraic) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < common.size(); ++i) {
      if (common[i]) {
        active.push_back(i);
      }
    }
    return rank(constraints.select_rows(active)) + 2 == dim;
  }
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (r != p && r != n && contains(rays[r].zeros, common)) {
      return false;
    }
  }
  return true;
}

// Rows of `constraints` whose span has full column rank, picked greedily in
// row order.
std::vector<std::size_t> initial_rows(const Matrix& constraints) {
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0;
       r < constraints.rows() && chosen.size() < constraints.cols(); ++r) {
    chosen.push_back(r);
    if (rank(constraints.select_rows(chosen)) != chosen.size()) {
      chosen.pop_back();
    }
  }
  return chosen;
}

// Generators of the pointed cone {t : C t >= 0}, C of full column rank.
std::vector<RatVector> double_description(const Matrix& constraints,
                                          AdjacencyTest test) {
  const std::size_t m = constraints.rows();
  const std::size_t k = constraints.cols();
  const auto init = initial_rows(constraints);
  if (init.size() != k) {
    throw Error(ErrorKind::InvalidArgument,
                "double description needs a full column rank constraint matrix");
  }

  // {t : K t >= 0} is simplicial; its generators are the columns of K^-1.
  const Matrix square = constraints.select_rows(init);
  const Matrix inverse =
      rref(square.hcat(Matrix::identity(k))).reduced.transpose();
  std::vector<DdRay> rays;
  for (std::size_t j = 0; j < k; ++j) {
    DdRay ray{primitive_integer(inverse.row(k + j)), std::vector<bool>(m, false)};
    for (auto i : init) {
      ray.zeros[i] = sgn(dot(constraints.row(i), ray.t)) == 0;
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_init(m, false);
  for (auto i : init) {
    in_init[i] = true;
  }
  for (std::size_t h = 0; h < m; ++h) {
    if (in_init[h]) {
      continue;
    }
    const RatVector row = constraints.row(h);
    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    std::vector<DdRay> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = dot(row, rays[r].t);
      const int s = sgn(value[r]);
      if (s > 0) {
        plus.push_back(r);
      } else if (s < 0) {
        minus.push_back(r);
      }
      if (s >= 0) {
        DdRay kept = rays[r];
        kept.zeros[h] = s == 0;
        next.push_back(std::move(kept));
      }
    }
    for (auto p : plus) {
      for (auto n : minus) {
        if (!adjacent(rays, p, n, constraints, test)) {
          continue;
        }
        RatVector t = value[p] * rays[n].t - value[n] * rays[p].t;
        DdRay fresh{primitive_integer(t),
                    intersect(rays[p].zeros, rays[n].zeros)};
        fresh.zeros[h] = true;
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  std::vector<RatVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) {
    out.push_back(std::move(r.t));
  }
  return out;
}

}  // namespace

std::vector<Ray> extreme_rays(const Matrix& W) {
#if defined(CRNREAL_DD_RANK_ADJACENCY)
  return extreme_rays(W, AdjacencyTest::Algebraic);
#else
  return extreme_rays(W, AdjacencyTest::Combinatorial);
#endif
}

std::vector<Ray> extreme_rays(const Matrix& W, AdjacencyTest adjacency) {
  const auto basis_vectors = kernel_basis(W);
  if (basis_vectors.empty()) {
    return {};
  }
  const Matrix basis = Matrix::from_columns(basis_vectors, W.cols());
  std::vector<Ray> out;
  for (const auto& t : double_description(basis, adjacency)) {
    out.emplace_back(basis * t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ray> extreme_rays_bruteforce(const Matrix& W) {
  const std::size_t m = W.cols();
  if (m > kBruteforceColumnLimit) {
    throw Error(ErrorKind::SizeLimit,
                "brute-force ray enumeration is limited to " +
                    std::to_string(kBruteforceColumnLimit) + " columns, got " +
                    std::to_string(m));
  }
  std::vector<Ray> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::size_t{1} << j)) {
        cols.push_back(j);
      }
    }
    const auto kernel = kernel_basis(W.select_columns(cols));
    if (kernel.size() != 1) {
      continue;
    }
    const auto& v = kernel.front();
    const int sign = sgn(v.front());
    const bool one_signed = std::all_of(
        v.begin(), v.end(), [&](const Rational& x) { return sgn(x) == sign; });
    if (sign == 0 || !one_signed) {
      continue;
    }
    RatVector x(m);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      x[cols[i]] = sign > 0 ? v[i] : Rational(-v[i]);
    }
    out.emplace_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GeneratorKind classify_generator(const Ray& d, const MassActionSystem& sys) {
  const auto data = net_reaction_data(sys);
  if (d.size() != data.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "ray length differs from the number of vertices");
  }
  if (!is_zero(data.net() * d.coords())) {
    throw Error(ErrorKind::NotInKernel,
                "ray " + to_string(d.coords()) +
                    " is not in the kernel of the net reaction matrix");
  }
  return is_zero(kirchhoff_matrix(sys) * d.coords())
             ? GeneratorKind::Cyclic
             : GeneratorKind::Stoichiometric;
}

std::vector<std::size_t> support_union(const std::vector<Ray>& rays) {
  std::vector<std::size_t> out;
  for (const auto& r : rays) {
    const auto s = r.support();
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace crnreal
