#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "crnreal/network.hpp"

namespace crnreal {

/// Target structure of a generated weakly reversible system.
///  SingleClass  one linkage class, deficiency 1
///  TypeI        at least two classes, deficiency 1 carried by the last class
///  TypeII       at least two classes of deficiency 0, total deficiency 1
///  DefZero      every class affinely independent, total deficiency 0
///  DefTwoPlus   total deficiency 2, carried by the last class
enum class GenType { SingleClass, TypeI, TypeII, DefZero, DefTwoPlus };

std::string_view to_string(GenType type);

struct GenSpec {
  std::size_t dimension = 2;
  std::size_t classes = 1;
  GenType type = GenType::SingleClass;
  /// One entry per class, each >= 2. Empty selects default_sizes().
  std::vector<std::size_t> class_sizes;
  /// Rates are p/q with 1 <= p <= max_rate_numerator, 1 <= q <= max_rate_denominator.
  std::uint64_t max_rate_numerator = 5;
  std::uint64_t max_rate_denominator = 3;
  std::uint64_t seed = 0;
};

std::vector<std::size_t> default_sizes(GenType type, std::size_t classes);

/// Smallest dimension that fits the requested classes.
std::size_t required_dimension(const GenSpec& spec);

/// Default class sizes and dimension max(2, required).
GenSpec default_spec(GenType type, std::size_t classes, std::uint64_t seed);

/// Weakly reversible system with integer vertices in [0, 6]^n whose
/// structure matches spec.type. Deterministic in spec. Throws
/// Error(Unsatisfiable) for inconsistent specs.
MassActionSystem generate(const GenSpec& spec);

/// Random two-dimensional system with 2..max_vertices vertices, roughly
/// half of them weakly reversible. No isolated vertices.
MassActionSystem random_system(std::uint64_t seed, std::size_t max_vertices = 7);

}  // namespace crnreal
