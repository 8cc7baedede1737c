#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "crnreal/matrix.hpp"
#include "crnreal/network.hpp"

namespace crnreal {

/// Extreme ray of ker(W) ∩ R^m_{>=0}: a nonnegative, nonzero integer vector
/// whose nonzero entries are coprime.
class Ray {
 public:
  /// Normalizes any nonnegative nonzero rational vector.
  explicit Ray(const RatVector& direction);

  const RatVector& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  /// Indices of the nonzero entries, ascending.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Ray&, const Ray&) = default;
  friend bool operator<(const Ray& a, const Ray& b) {
    return a.coords_ < b.coords_;
  }

 private:
  RatVector coords_;
};

enum class AdjacencyTest { Combinatorial, Algebraic };

/// Minimal generating set of ker(W) ∩ R^m_{>=0}, lexicographically sorted.
///
/// The kernel is parametrized as x = B t with B = kernel_basis(W), and the
/// rays of {t : B t >= 0} are found by the double description method,
/// inserting the rows of B in their natural order.
std::vector<Ray> extreme_rays(const Matrix& W);
std::vector<Ray> extreme_rays(const Matrix& W, AdjacencyTest adjacency);

/// Same contract as extreme_rays, by enumerating every column subset S and
/// keeping those where W restricted to S has a one-dimensional kernel spanned
/// by a strictly one-signed vector. Throws Error(SizeLimit) when W has more
/// than 12 columns.
std::vector<Ray> extreme_rays_bruteforce(const Matrix& W);

constexpr std::size_t kBruteforceColumnLimit = 12;

enum class GeneratorKind { Cyclic, Stoichiometric };

/// Cyclic when A_k d = 0, stoichiometric otherwise. Throws
/// Error(NotInKernel) when W d != 0 for the system's net reaction matrix.
GeneratorKind classify_generator(const Ray& d, const MassActionSystem& sys);

/// Union of the supports of the rays.
std::vector<std::size_t> support_union(const std::vector<Ray>& rays);

}  // namespace crnreal
