#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crnreal/cone.hpp"
#include "crnreal/network.hpp"

namespace crnreal {

enum class Flag { None = 0, SingleClass = 1, TypeI = 2, TypeII = 3 };

enum class RealizationType { SingleClass, TypeI, TypeII };

std::string_view to_string(Flag flag);
std::string_view to_string(RealizationType type);

using RayPair = std::pair<std::size_t, std::size_t>;

struct Diagnostics {
  /// dim ker(W).
  std::size_t kernel_dim = 0;
  std::vector<Ray> rays;
  /// Which test ended the search with flag 0; empty on success.
  std::string rejected_by;
  /// Ray index pairs tried, in order.
  std::vector<RayPair> attempted_pairs;
  std::optional<RayPair> selected_pair;
};

struct RealizationOutcome {
  Flag flag = Flag::None;
  /// Weakly reversible deficiency-one system whose vertices are the input
  /// columns in input order. Present iff flag > 0.
  std::optional<MassActionSystem> realization;
  /// Linkage classes as input column indices, ordered by smallest member.
  Partition linkage_classes;
  std::optional<RealizationType> type;
  Diagnostics diagnostics;
};

struct SearchOptions {
  /// Order in which ray pairs are tried. Empty means lexicographic.
  std::vector<RayPair> pair_order;
};

/// Decides whether (Ys, W) has a weakly reversible deficiency-one
/// realization on the vertices Ys and returns one. Ray pairs are tried in
/// lexicographic order and the first success is returned.
///
/// Every positive outcome is checked with verify_outcome before it is
/// returned; a failure there throws std::logic_error.
RealizationOutcome realize_def_one(const NetReactionData& data);
RealizationOutcome realize_def_one(const NetReactionData& data,
                                   const SearchOptions& options);

/// True iff out carries a weakly reversible realization of deficiency one
/// that reproduces W, whose linkage classes and type label agree with its
/// structure. Always false for flag 0.
bool verify_outcome(const NetReactionData& data, const RealizationOutcome& out);

}  // namespace crnreal
