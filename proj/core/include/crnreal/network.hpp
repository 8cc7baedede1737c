#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "crnreal/matrix.hpp"
#include "crnreal/rational.hpp"

namespace crnreal {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Euclidean embedded graph: distinct vertices in Q^n joined by directed
/// edges. Self-loops, duplicate edges and isolated vertices are rejected.
class EGraph {
 public:
  EGraph(std::size_t dimension, std::vector<RatVector> vertices,
         std::vector<Edge> edges);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  const RatVector& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// n x m matrix with the vertices as columns.
  Matrix vertex_matrix() const;
  /// n x |E| matrix of reaction vectors y' - y, in edge order.
  Matrix reaction_vectors() const;

  friend bool operator==(const EGraph&, const EGraph&) = default;

 private:
  std::size_t dimension_;
  std::vector<RatVector> vertices_;
  std::vector<Edge> edges_;
};

/// E-graph plus one strictly positive rate constant per edge (same order).
class MassActionSystem {
 public:
  MassActionSystem(EGraph graph, std::vector<Rational> rates);

  const EGraph& graph() const noexcept { return graph_; }
  const std::vector<Rational>& rates() const noexcept { return rates_; }
  /// Rate of source -> target, or 0 when the edge is absent.
  Rational rate(std::size_t source, std::size_t target) const;

  friend bool operator==(const MassActionSystem&,
                         const MassActionSystem&) = default;

 private:
  EGraph graph_;
  std::vector<Rational> rates_;
};

/// Source-vertex matrix Ys and net-reaction-vector matrix W, both n x m.
/// Columns of Ys are pairwise distinct; zero columns of W are allowed.
class NetReactionData {
 public:
  NetReactionData(Matrix sources, Matrix net);

  const Matrix& sources() const noexcept { return sources_; }
  const Matrix& net() const noexcept { return net_; }
  std::size_t dimension() const noexcept { return sources_.rows(); }
  std::size_t size() const noexcept { return sources_.cols(); }

  /// Restriction to the given columns, in the given order.
  NetReactionData select(std::span<const std::size_t> columns) const;

  friend bool operator==(const NetReactionData&,
                         const NetReactionData&) = default;

 private:
  Matrix sources_;
  Matrix net_;
};

using Partition = std::vector<std::vector<std::size_t>>;

struct SccDecomposition {
  Partition components;
  Partition terminal;
};

struct StructureReport {
  Partition linkage_classes;
  Partition terminal_components;
  std::size_t vertex_count = 0;
  std::size_t stoichiometric_dimension = 0;
  std::size_t deficiency = 0;
  std::vector<std::size_t> class_deficiencies;
  bool weakly_reversible = false;
};

/// Connected components of the underlying undirected graph, each sorted,
/// ordered by smallest member.
Partition linkage_classes(const EGraph& g);

/// Tarjan decomposition. Components and the terminal subset are ordered by
/// smallest member.
SccDecomposition strongly_connected_components(const EGraph& g);

bool is_weakly_reversible(const EGraph& g);

StructureReport structure_report(const EGraph& g);

/// m x m matrix with [A]_{ji} = k_{i->j} and diagonal minus the total
/// outgoing rate.
Matrix kirchhoff_matrix(const MassActionSystem& sys);

/// Columns follow the vertex order; vertices with no outgoing edge get a
/// zero net reaction vector.
NetReactionData net_reaction_data(const MassActionSystem& sys);

/// Right-hand side sum_{i->j} k_{i->j} x^{y_i} (y_j - y_i), evaluated
/// exactly. Requires integer vertex coordinates and x > 0.
RatVector mass_action_rhs(const MassActionSystem& sys, const RatVector& x);

/// Net reaction vectors agree at every vertex that is a source in either
/// system.
bool dynamically_equivalent(const MassActionSystem& a,
                            const MassActionSystem& b);

/// {v_i - v_0 : i > 0} linearly independent.
bool affinely_independent(const std::vector<RatVector>& vertices);

}  // namespace crnreal
