#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crnreal/network.hpp"

namespace crnreal {

struct SingleClassOutcome {
  bool exists = false;
  /// Present iff exists. Vertices are the columns of Ys in input order.
  std::optional<MassActionSystem> realization;
  /// Every edge i -> j that carries positive rate in some realization whose
  /// targets are all among the given source vertices.
  std::vector<Edge> maximal_edges;
  /// Why the search failed; empty on success.
  std::string reason;
};

/// Decides whether (Ys, W) has a weakly reversible realization with exactly
/// one linkage class on the given vertices, and builds one.
///
///  1. Each column must decompose as w_i = sum_j c_ij (y_j - y_i), c >= 0.
///  2. Edge i -> j is kept when some such decomposition has c_ij > 0
///     (maximize c_ij subject to c_ij <= 1). The rates at vertex i are the
///     average of the witnesses of its kept edges.
///  3. The result is accepted iff the Kirchhoff matrix of the kept edges has
///     a one-dimensional kernel with full support.
///
/// Fewer than two vertices never admit a realization.
SingleClassOutcome realize_single_class(const NetReactionData& data);

}  // namespace crnreal
