#include "crnreal/deficiency_one.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "crnreal/error.hpp"
#include "crnreal/single_class.hpp"

namespace crnreal {

std::string_view to_string(Flag flag) {
  switch (flag) {
    case Flag::None:
      return "none";
    case Flag::SingleClass:
      return "single-class";
    case Flag::TypeI:
      return "type-I";
    case Flag::TypeII:
      return "type-II";
  }
  return "unknown";
}

std::string_view to_string(RealizationType type) {
  switch (type) {
    case RealizationType::SingleClass:
      return "SingleClass";
    case RealizationType::TypeI:
      return "TypeI";
    case RealizationType::TypeII:
      return "TypeII";
  }
  return "unknown";
}

namespace {

using Support = std::vector<std::size_t>;

Support merge(const Support& a, const Support& b) {
  Support out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

// True iff the sets are pairwise disjoint and cover 0..m-1.
bool is_partition(const std::vector<Support>& sets, std::size_t m) {
  std::vector<int> hits(m, 0);
  for (const auto& s : sets) {
    if (s.empty()) {
      return false;
    }
    for (auto i : s) {
      ++hits[i];
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

// Realizes every class separately and joins the results on the global
// vertex set. Returns nullopt as soon as one class fails.
std::optional<MassActionSystem> realize_classes(const NetReactionData& data,
                                                const Partition& classes) {
  std::vector<std::pair<Edge, Rational>> edges;
  for (const auto& cls : classes) {
    const auto local = realize_single_class(data.select(cls));
    if (!local.exists) {
      return std::nullopt;
    }
    const auto& sys = *local.realization;
    for (std::size_t e = 0; e < sys.graph().edges().size(); ++e) {
      const auto& edge = sys.graph().edges()[e];
      edges.push_back({{cls[edge.source], cls[edge.target]}, sys.rates()[e]});
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<RatVector> vertices;
  for (std::size_t i = 0; i < data.size(); ++i) {
    vertices.push_back(data.sources().column(i));
  }
  std::vector<Edge> edge_list;
  std::vector<Rational> rates;
  for (auto& [edge, rate] : edges) {
    edge_list.push_back(edge);
    rates.push_back(std::move(rate));
  }
  return MassActionSystem(
      EGraph(data.dimension(), std::move(vertices), std::move(edge_list)),
      std::move(rates));
}

Partition canonical(Partition classes) {
  for (auto& c : classes) {
    std::sort(c.begin(), c.end());
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

RealizationOutcome finish(const NetReactionData& data, RealizationOutcome out,
                          MassActionSystem sys, Partition classes, Flag flag,
                          RealizationType type) {
  out.flag = flag;
  out.type = type;
  out.realization.emplace(std::move(sys));
  out.linkage_classes = canonical(std::move(classes));
  out.diagnostics.rejected_by.clear();
  if (!verify_outcome(data, out)) {
    throw std::logic_error(
        "assembled realization failed verification for flag " +
        std::to_string(static_cast<int>(flag)));
  }
  return out;
}

std::vector<RayPair> lexicographic_pairs(std::size_t r) {
  std::vector<RayPair> out;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

RealizationOutcome realize_def_one(const NetReactionData& data) {
  return realize_def_one(data, SearchOptions{});
}

RealizationOutcome realize_def_one(const NetReactionData& data,
                                   const SearchOptions& options) {
  const std::size_t m = data.size();
  RealizationOutcome out;
  auto& diag = out.diagnostics;
  diag.kernel_dim = nullity(data.net());
  diag.rays = extreme_rays(data.net());
  const std::size_t r = diag.rays.size();
  const std::size_t w = diag.kernel_dim;

  if (r < 2) {
    diag.rejected_by = "r = " + std::to_string(r) + " < 2";
    return out;
  }
  if (support_union(diag.rays).size() != m) {
    diag.rejected_by = "ray supports do not cover all vertices";
    return out;
  }

  if (r == 2) {
    Partition all(1, Support(m));
    std::iota(all.front().begin(), all.front().end(), std::size_t{0});
    if (auto sys = realize_classes(data, all)) {
      return finish(data, std::move(out), std::move(*sys), std::move(all),
                    Flag::SingleClass, RealizationType::SingleClass);
    }
    diag.rejected_by = "r = 2 but no single linkage class realization exists";
    return out;
  }

  std::vector<Support> supports;
  for (const auto& ray : diag.rays) {
    supports.push_back(ray.support());
  }
  const auto pairs =
      options.pair_order.empty() ? lexicographic_pairs(r) : options.pair_order;
  for (const auto& [i, j] : pairs) {
    if (i >= r || j >= r || i == j) {
      throw Error(ErrorKind::InvalidArgument,
                  "ray pair (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") is out of range");
    }
    diag.attempted_pairs.emplace_back(i, j);
    std::vector<Support> rest;
    for (std::size_t p = 0; p < r; ++p) {
      if (p != i && p != j) {
        rest.push_back(supports[p]);
      }
    }

    if (r == w) {
      Partition classes = rest;
      classes.push_back(merge(supports[i], supports[j]));
      if (!is_partition(classes, m)) {
        continue;
      }
      if (auto sys = realize_classes(data, classes)) {
        diag.selected_pair = RayPair{i, j};
        return finish(data, std::move(out), std::move(*sys),
                      std::move(classes), Flag::TypeI, RealizationType::TypeI);
      }
    } else if (r == w + 1) {
      Partition classes = rest;
      if (!is_partition(classes, m)) {
        continue;
      }
      const bool one_dim = std::all_of(
          classes.begin(), classes.end(), [&](const Support& cls) {
            return nullity(data.net().select_columns(cls)) == 1;
          });
      if (!one_dim) {
        continue;
      }
      if (auto sys = realize_classes(data, classes)) {
        diag.selected_pair = RayPair{i, j};
        return finish(data, std::move(out), std::move(*sys),
                      std::move(classes), Flag::TypeII,
                      RealizationType::TypeII);
      }
    }
  }

  if (r != w && r != w + 1) {
    diag.rejected_by = "r = " + std::to_string(r) + " differs from dim ker(W) = " +
                       std::to_string(w) + " and from dim ker(W) + 1";
  } else {
    diag.rejected_by = "no ray pair yields a realization";
  }
  return out;
}

bool verify_outcome(const NetReactionData& data, const RealizationOutcome& out) {
  if (out.flag == Flag::None || !out.realization || !out.type) {
    return false;
  }
  const auto& sys = *out.realization;
  const auto& g = sys.graph();
  if (g.dimension() != data.dimension()) {
    return false;
  }

  // Net reaction vectors must agree at every vertex; a vertex absent from
  // one side counts as a zero net vector there.
  std::map<RatVector, RatVector> expected;
  for (std::size_t i = 0; i < data.size(); ++i) {
    expected.emplace(data.sources().column(i), data.net().column(i));
  }
  const auto produced = net_reaction_data(sys);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto it = expected.find(g.vertex(v));
    const RatVector net = produced.net().column(v);
    if (it == expected.end()) {
      if (!is_zero(net)) {
        return false;
      }
      continue;
    }
    if (it->second != net) {
      return false;
    }
    expected.erase(it);
  }
  for (const auto& [vertex, net] : expected) {
    if (!is_zero(net)) {
      return false;
    }
  }

  const auto report = structure_report(g);
  if (!report.weakly_reversible || report.deficiency != 1) {
    return false;
  }

  // Linkage classes, expressed in input column indices.
  std::map<RatVector, std::size_t> column_of;
  for (std::size_t i = 0; i < data.size(); ++i) {
    column_of.emplace(data.sources().column(i), i);
  }
  Partition mapped;
  for (const auto& cls : report.linkage_classes) {
    std::vector<std::size_t> c;
    for (auto v : cls) {
      const auto it = column_of.find(g.vertex(v));
      if (it == column_of.end()) {
        return false;
      }
      c.push_back(it->second);
    }
    mapped.push_back(std::move(c));
  }
  if (canonical(std::move(mapped)) != out.linkage_classes) {
    return false;
  }

  const std::size_t classes = report.linkage_classes.size();
  const std::size_t sum = std::accumulate(report.class_deficiencies.begin(),
                                          report.class_deficiencies.end(),
                                          std::size_t{0});
  switch (*out.type) {
    case RealizationType::SingleClass:
      return out.flag == Flag::SingleClass && classes == 1;
    case RealizationType::TypeI:
      return out.flag == Flag::TypeI && classes > 1 && sum == 1;
    case RealizationType::TypeII:
      return out.flag == Flag::TypeII && sum == 0;
  }
  return false;
}

}  // namespace crnreal
