#include "crnreal/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "crnreal/error.hpp"

namespace crnreal {

namespace {

std::vector<std::vector<std::size_t>> out_adjacency(const EGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.source].push_back(e.target);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
  }
  return adj;
}

void sort_partition(Partition& p) {
  for (auto& block : p) {
    std::sort(block.begin(), block.end());
  }
  std::sort(p.begin(), p.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

}  // namespace

EGraph::EGraph(std::size_t dimension, std::vector<RatVector> vertices,
               std::vector<Edge> edges)
    : dimension_(dimension),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
  std::set<RatVector> seen;
  for (const auto& v : vertices_) {
    if (v.size() != dimension_) {
      throw Error(ErrorKind::DimensionMismatch,
                  "vertex " + to_string(v) + " does not have dimension " +
                      std::to_string(dimension_));
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate vertex " + to_string(v));
    }
  }
  std::set<Edge> seen_edges;
  std::vector<bool> touched(vertices_.size(), false);
  for (const auto& e : edges_) {
    if (e.source >= vertices_.size() || e.target >= vertices_.size()) {
      throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    }
    if (e.source == e.target) {
      throw Error(ErrorKind::InvalidArgument,
                  "self-loop at vertex " + std::to_string(e.source));
    }
    if (!seen_edges.insert(e).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate edge " + std::to_string(e.source) + " -> " +
                      std::to_string(e.target));
    }
    touched[e.source] = touched[e.target] = true;
  }
  for (std::size_t i = 0; i < touched.size(); ++i) {
    if (!touched[i]) {
      throw Error(ErrorKind::InvalidArgument,
                  "isolated vertex " + std::to_string(i));
    }
  }
}

Matrix EGraph::vertex_matrix() const {
  return Matrix::from_columns(vertices_, dimension_);
}

Matrix EGraph::reaction_vectors() const {
  Matrix out(dimension_, edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    for (std::size_t r = 0; r < dimension_; ++r) {
      out(r, k) = vertices_[edges_[k].target][r] - vertices_[edges_[k].source][r];
    }
  }
  return out;
}

MassActionSystem::MassActionSystem(EGraph graph, std::vector<Rational> rates)
    : graph_(std::move(graph)), rates_(std::move(rates)) {
  if (rates_.size() != graph_.edges().size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "expected one rate constant per edge");
  }
  for (const auto& k : rates_) {
    if (sgn(k) <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "rate constants must be strictly positive, got " +
                      to_string(k));
    }
  }
}

Rational MassActionSystem::rate(std::size_t source, std::size_t target) const {
  const auto& edges = graph_.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].source == source && edges[k].target == target) {
      return rates_[k];
    }
  }
  return 0;
}

NetReactionData::NetReactionData(Matrix sources, Matrix net)
    : sources_(std::move(sources)), net_(std::move(net)) {
  if (sources_.rows() != net_.rows() || sources_.cols() != net_.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "source matrix and net reaction matrix differ in shape");
  }
  std::set<RatVector> seen;
  for (std::size_t c = 0; c < sources_.cols(); ++c) {
    if (!seen.insert(sources_.column(c)).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate source vertex " + to_string(sources_.column(c)));
    }
  }
}

NetReactionData NetReactionData::select(
    std::span<const std::size_t> columns) const {
  return NetReactionData(sources_.select_columns(columns),
                         net_.select_columns(columns));
}

Partition linkage_classes(const EGraph& g) {
  const std::size_t m = g.vertex_count();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : g.edges()) {
    const auto a = find(e.source);
    const auto b = find(e.target);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < m; ++i) {
    blocks[find(i)].push_back(i);
  }
  Partition out;
  for (auto& [root, members] : blocks) {
    out.push_back(std::move(members));
  }
  sort_partition(out);
  return out;
}

SccDecomposition strongly_connected_components(const EGraph& g) {
  const std::size_t m = g.vertex_count();
  const auto adj = out_adjacency(g);
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(m, unvisited);
  std::vector<std::size_t> low(m, 0);
  std::vector<bool> on_stack(m, false);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> component_of(m, 0);
  Partition components;
  std::size_t counter = 0;

  // Iterative Tarjan: each frame is (vertex, next neighbour position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < m; ++root) {
    if (index[root] != unvisited) {
      continue;
    }
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos == 0 && index[v] == unvisited) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (pos < adj[v].size()) {
        const std::size_t w = adj[v][pos++];
        if (index[w] == unvisited) {
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (low[done] == index[done]) {
        std::vector<std::size_t> comp;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        components.push_back(std::move(comp));
      }
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  sort_partition(components);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (auto v : components[c]) {
      component_of[v] = c;
    }
  }
  std::vector<bool> has_exit(components.size(), false);
  for (const auto& e : g.edges()) {
    if (component_of[e.source] != component_of[e.target]) {
      has_exit[component_of[e.source]] = true;
    }
  }
  Partition terminal;
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (!has_exit[c]) {
      terminal.push_back(components[c]);
    }
  }
  return {std::move(components), std::move(terminal)};
}

bool is_weakly_reversible(const EGraph& g) {
  return linkage_classes(g).size() ==
         strongly_connected_components(g).components.size();
}

StructureReport structure_report(const EGraph& g) {
  StructureReport report;
  report.linkage_classes = linkage_classes(g);
  const auto scc = strongly_connected_components(g);
  report.terminal_components = scc.terminal;
  report.weakly_reversible =
      report.linkage_classes.size() == scc.components.size();
  report.vertex_count = g.vertex_count();
  report.stoichiometric_dimension = rank(g.reaction_vectors());
  report.deficiency = report.vertex_count - report.linkage_classes.size() -
                      report.stoichiometric_dimension;

  std::vector<std::size_t> class_of(g.vertex_count());
  for (std::size_t c = 0; c < report.linkage_classes.size(); ++c) {
    for (auto v : report.linkage_classes[c]) {
      class_of[v] = c;
    }
  }
  std::vector<std::vector<RatVector>> class_vectors(
      report.linkage_classes.size());
  for (const auto& e : g.edges()) {
    class_vectors[class_of[e.source]].push_back(g.vertex(e.target) -
                                                g.vertex(e.source));
  }
  for (std::size_t c = 0; c < report.linkage_classes.size(); ++c) {
    const std::size_t s_c =
        rank(Matrix::from_columns(class_vectors[c], g.dimension()));
    report.class_deficiencies.push_back(report.linkage_classes[c].size() - 1 -
                                        s_c);
  }
  return report;
}

Matrix kirchhoff_matrix(const MassActionSystem& sys) {
  const auto& g = sys.graph();
  Matrix a(g.vertex_count(), g.vertex_count());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    a(e.target, e.source) += sys.rates()[k];
    a(e.source, e.source) -= sys.rates()[k];
  }
  return a;
}

NetReactionData net_reaction_data(const MassActionSystem& sys) {
  const auto& g = sys.graph();
  Matrix w(g.dimension(), g.vertex_count());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    for (std::size_t r = 0; r < g.dimension(); ++r) {
      w(r, e.source) +=
          sys.rates()[k] * (g.vertex(e.target)[r] - g.vertex(e.source)[r]);
    }
  }
  return NetReactionData(g.vertex_matrix(), std::move(w));
}

RatVector mass_action_rhs(const MassActionSystem& sys, const RatVector& x) {
  const auto& g = sys.graph();
  if (x.size() != g.dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "state vector length differs from network dimension");
  }
  for (const auto& xi : x) {
    if (sgn(xi) <= 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "mass-action evaluation needs a strictly positive state");
    }
  }
  std::vector<Rational> monomial(g.vertex_count(), Rational(1));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (std::size_t r = 0; r < g.dimension(); ++r) {
      const Rational& y = g.vertex(i)[r];
      if (!is_integer(y)) {
        throw Error(ErrorKind::InvalidArgument,
                    "exact monomial evaluation needs integer vertex "
                    "coordinates, got " + to_string(g.vertex(i)));
      }
      const Integer& e = y.get_num();
      if (!e.fits_slong_p()) {
        throw Error(ErrorKind::InvalidArgument, "exponent out of range");
      }
      const long p = e.get_si();
      Rational base = p >= 0 ? x[r] : Rational(1 / x[r]);
      Integer num;
      Integer den;
      const unsigned long ap = static_cast<unsigned long>(p >= 0 ? p : -p);
      mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), ap);
      mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), ap);
      monomial[i] *= Rational(num, den);
    }
  }
  RatVector out(g.dimension());
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    const Rational flux = sys.rates()[k] * monomial[e.source];
    for (std::size_t r = 0; r < g.dimension(); ++r) {
      out[r] += flux * (g.vertex(e.target)[r] - g.vertex(e.source)[r]);
    }
  }
  return out;
}

bool dynamically_equivalent(const MassActionSystem& a,
                            const MassActionSystem& b) {
  if (a.graph().dimension() != b.graph().dimension()) {
    throw Error(ErrorKind::DimensionMismatch,
                "systems live in different dimensions");
  }
  auto net_map = [](const MassActionSystem& s) {
    const auto data = net_reaction_data(s);
    std::map<RatVector, RatVector> out;
    for (std::size_t i = 0; i < data.size(); ++i) {
      auto w = data.net().column(i);
      if (!is_zero(w)) {
        out.emplace(data.sources().column(i), std::move(w));
      }
    }
    return out;
  };
  // Zero net vectors are dropped on both sides, which is the same as
  // comparing over the union of source vertices with empty sums as zero.
  return net_map(a) == net_map(b);
}

bool affinely_independent(const std::vector<RatVector>& vertices) {
  if (vertices.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                "affinely_independent: empty vertex list");
  }
  std::vector<RatVector> diffs;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    diffs.push_back(vertices[i] - vertices[0]);
  }
  return rank(Matrix::from_columns(diffs, vertices[0].size())) == diffs.size();
}

}  // namespace crnreal
