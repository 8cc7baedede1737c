#include "crnreal/generator.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "crnreal/error.hpp"

namespace crnreal {

std::string_view to_string(GenType type) {
  switch (type) {
    case GenType::SingleClass:
      return "single";
    case GenType::TypeI:
      return "type1";
    case GenType::TypeII:
      return "type2";
    case GenType::DefZero:
      return "def0";
    case GenType::DefTwoPlus:
      return "def2";
  }
  return "unknown";
}

namespace {

constexpr int kGridMax = 6;
constexpr int kAttempts = 1000;

// Modulo mapping keeps the stream identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool one_in(std::uint64_t n) { return below(n) == 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::size_t extras(GenType type, std::size_t cls, std::size_t classes) {
  const bool last = cls + 1 == classes;
  switch (type) {
    case GenType::SingleClass:
      return 1;
    case GenType::TypeI:
      return last ? 1 : 0;
    case GenType::DefTwoPlus:
      return last ? 2 : 0;
    case GenType::TypeII:
    case GenType::DefZero:
      return 0;
  }
  return 0;
}

std::vector<std::size_t> sizes_of(const GenSpec& spec) {
  return spec.class_sizes.empty() ? default_sizes(spec.type, spec.classes)
                                  : spec.class_sizes;
}

// Number of affine directions spanned by each class.
std::vector<std::size_t> class_dims(const GenSpec& spec) {
  const auto sizes = sizes_of(spec);
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    dims.push_back(sizes[i] - 1 - extras(spec.type, i, spec.classes));
  }
  return dims;
}

[[noreturn]] void unsatisfiable(const std::string& why) {
  throw Error(ErrorKind::Unsatisfiable, why);
}

void validate(const GenSpec& spec) {
  if (spec.classes == 0) {
    unsatisfiable("at least one linkage class is required");
  }
  if (spec.type == GenType::SingleClass && spec.classes != 1) {
    unsatisfiable("single-class systems have exactly one linkage class");
  }
  if ((spec.type == GenType::TypeI || spec.type == GenType::TypeII) &&
      spec.classes < 2) {
    unsatisfiable(std::string(to_string(spec.type)) +
                  " systems need at least two linkage classes");
  }
  const auto sizes = sizes_of(spec);
  if (sizes.size() != spec.classes) {
    unsatisfiable("expected " + std::to_string(spec.classes) +
                  " class sizes, got " + std::to_string(sizes.size()));
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const std::size_t need = 2 + extras(spec.type, i, spec.classes);
    if (sizes[i] < need) {
      unsatisfiable("class " + std::to_string(i) + " needs at least " +
                    std::to_string(need) + " vertices");
    }
  }
  if (spec.max_rate_numerator == 0 || spec.max_rate_denominator == 0) {
    unsatisfiable("rate bounds must be positive");
  }
  const std::size_t need = required_dimension(spec);
  if (spec.dimension < need) {
    unsatisfiable("dimension " + std::to_string(spec.dimension) +
                  " is below the required " + std::to_string(need));
  }
}

bool matches(const GenSpec& spec, const StructureReport& report) {
  if (!report.weakly_reversible ||
      report.linkage_classes.size() != spec.classes) {
    return false;
  }
  const std::size_t sum =
      std::accumulate(report.class_deficiencies.begin(),
                      report.class_deficiencies.end(), std::size_t{0});
  switch (spec.type) {
    case GenType::SingleClass:
    case GenType::TypeI:
      return report.deficiency == 1 && sum == 1;
    case GenType::TypeII:
      return report.deficiency == 1 && sum == 0;
    case GenType::DefZero:
      return report.deficiency == 0;
    case GenType::DefTwoPlus:
      return report.deficiency == 2;
  }
  return false;
}

RatVector random_direction(Rng& rng, std::size_t n) {
  RatVector v(n);
  while (is_zero(v)) {
    for (auto& x : v) {
      x = static_cast<long>(rng.below(3)) - 1;
    }
  }
  return v;
}

// count vectors in {-1,0,1}^n, linearly independent.
std::vector<RatVector> independent_directions(Rng& rng, std::size_t n,
                                              std::size_t count) {
  while (true) {
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(random_direction(rng, n));
    }
    if (count == 0 || rank(Matrix::from_columns(out, n)) == count) {
      return out;
    }
  }
}

// Direction sets per class. For TypeII the first direction of every class
// but the last is a coupling direction and the last class uses their sum,
// so the only linear relation among all directions touches every class.
std::vector<std::vector<RatVector>> class_directions(
    Rng& rng, const GenSpec& spec, const std::vector<std::size_t>& dims) {
  const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                            std::size_t{0});
  const bool coupled = spec.type == GenType::TypeII;
  auto pool =
      independent_directions(rng, spec.dimension, coupled ? total - 1 : total);
  std::vector<std::vector<RatVector>> out(dims.size());
  std::size_t next = 0;
  RatVector coupling(spec.dimension);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::size_t own = dims[i];
    if (coupled && i + 1 == dims.size()) {
      out[i].push_back(coupling);
      --own;
    }
    for (std::size_t k = 0; k < own; ++k) {
      out[i].push_back(pool[next++]);
    }
    if (coupled && i + 1 < dims.size()) {
      coupling = coupling + out[i].front();
    }
  }
  return out;
}

// Offsets from the base point: 0, each direction, then `extra` further
// points inside the span of the directions.
std::optional<std::vector<RatVector>> class_offsets(
    Rng& rng, const std::vector<RatVector>& dirs, std::size_t extra,
    std::size_t n) {
  std::vector<RatVector> out{RatVector(n)};
  out.insert(out.end(), dirs.begin(), dirs.end());
  for (std::size_t e = 0; e < extra; ++e) {
    bool placed = false;
    for (int attempt = 0; attempt < 50 && !placed; ++attempt) {
      RatVector p(n);
      for (const auto& d : dirs) {
        p = p + Rational(static_cast<long>(rng.below(4)) - 1) * d;
      }
      if (std::find(out.begin(), out.end(), p) == out.end()) {
        out.push_back(std::move(p));
        placed = true;
      }
    }
    if (!placed) {
      return std::nullopt;
    }
  }
  return out;
}

std::optional<RatVector> place(Rng& rng, const std::vector<RatVector>& offsets,
                               std::size_t n) {
  RatVector base(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational lo = 0;
    Rational hi = kGridMax;
    for (const auto& o : offsets) {
      lo = std::max(lo, Rational(-o[c]));
      hi = std::min(hi, Rational(kGridMax - o[c]));
    }
    if (lo > hi) {
      return std::nullopt;
    }
    const long span = Rational(hi - lo).get_num().get_si() + 1;
    base[c] = lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(span)));
  }
  return base;
}

Rational random_rate(Rng& rng, std::uint64_t max_num, std::uint64_t max_den) {
  const unsigned long num = 1 + rng.below(max_num);
  const unsigned long den = 1 + rng.below(max_den);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Random cycle through all members plus each remaining ordered pair with
// probability 1/3.
void strongly_connect(Rng& rng, std::vector<std::size_t> members,
                      std::set<Edge>& edges) {
  rng.shuffle(members);
  for (std::size_t k = 0; k < members.size(); ++k) {
    edges.insert({members[k], members[(k + 1) % members.size()]});
  }
  for (auto a : members) {
    for (auto b : members) {
      if (a != b && !edges.contains({a, b}) && rng.one_in(3)) {
        edges.insert({a, b});
      }
    }
  }
}

std::optional<MassActionSystem> attempt(Rng& rng, const GenSpec& spec,
                                        const std::vector<std::size_t>& dims) {
  const std::size_t n = spec.dimension;
  const auto dirs = class_directions(rng, spec, dims);
  std::vector<RatVector> vertices;
  std::vector<std::size_t> owner;
  std::set<RatVector> seen;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const auto offsets =
        class_offsets(rng, dirs[i], extras(spec.type, i, spec.classes), n);
    if (!offsets) {
      return std::nullopt;
    }
    const auto base = place(rng, *offsets, n);
    if (!base) {
      return std::nullopt;
    }
    for (const auto& o : *offsets) {
      RatVector v = *base + o;
      if (!seen.insert(v).second) {
        return std::nullopt;
      }
      vertices.push_back(std::move(v));
      owner.push_back(i);
    }
  }

  // Shuffle the global vertex order so classes are not contiguous.
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);
  std::vector<RatVector> shuffled;
  std::vector<std::vector<std::size_t>> members(dims.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    shuffled.push_back(vertices[order[pos]]);
    members[owner[order[pos]]].push_back(pos);
  }

  std::set<Edge> edges;
  for (const auto& cls : members) {
    strongly_connect(rng, cls, edges);
  }
  std::vector<Rational> rates;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    rates.push_back(
        random_rate(rng, spec.max_rate_numerator, spec.max_rate_denominator));
  }
  MassActionSystem sys(
      EGraph(n, std::move(shuffled), {edges.begin(), edges.end()}),
      std::move(rates));
  if (!matches(spec, structure_report(sys.graph()))) {
    return std::nullopt;
  }
  return sys;
}

}  // namespace

std::vector<std::size_t> default_sizes(GenType type, std::size_t classes) {
  std::vector<std::size_t> sizes(classes, 2);
  if (classes == 0) {
    return sizes;
  }
  switch (type) {
    case GenType::SingleClass:
    case GenType::TypeI:
      sizes.back() = 3;
      break;
    case GenType::DefTwoPlus:
      sizes.back() = 4;
      break;
    case GenType::TypeII:
    case GenType::DefZero:
      break;
  }
  return sizes;
}

std::size_t required_dimension(const GenSpec& spec) {
  const auto dims = class_dims(spec);
  const std::size_t total = std::accumulate(dims.begin(), dims.end(),
                                            std::size_t{0});
  return spec.type == GenType::TypeII && total > 0 ? total - 1 : total;
}

GenSpec default_spec(GenType type, std::size_t classes, std::uint64_t seed) {
  GenSpec spec;
  spec.type = type;
  spec.classes = classes;
  spec.class_sizes = default_sizes(type, classes);
  spec.seed = seed;
  spec.dimension = std::max<std::size_t>(2, required_dimension(spec));
  return spec;
}

MassActionSystem generate(const GenSpec& spec) {
  validate(spec);
  const auto dims = class_dims(spec);
  Rng rng(spec.seed);
  for (int i = 0; i < kAttempts; ++i) {
    if (auto sys = attempt(rng, spec, dims)) {
      return std::move(*sys);
    }
  }
  unsatisfiable("no " + std::string(to_string(spec.type)) +
                " system found on the grid after " +
                std::to_string(kAttempts) + " attempts");
}

MassActionSystem random_system(std::uint64_t seed, std::size_t max_vertices) {
  if (max_vertices < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "random systems need room for two vertices");
  }
  Rng rng(seed);
  const std::size_t m = 2 + rng.below(max_vertices - 1);
  std::set<RatVector> seen;
  while (seen.size() < m) {
    seen.insert(RatVector{static_cast<long>(rng.below(5)),
                          static_cast<long>(rng.below(5))});
  }
  std::vector<RatVector> vertices(seen.begin(), seen.end());
  rng.shuffle(vertices);

  std::set<Edge> edges;
  const auto mode = rng.below(3);
  if (mode == 2) {
    // Strongly connected blocks: weakly reversible by construction.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    std::size_t start = 0;
    while (start < m) {
      const std::size_t left = m - start;
      std::size_t size = left <= 3 ? left : 2 + rng.below(left - 1);
      if (left - size == 1) {
        ++size;
      }
      strongly_connect(rng, {order.begin() + static_cast<long>(start),
                             order.begin() + static_cast<long>(start + size)},
                       edges);
      start += size;
    }
  } else {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b && rng.one_in(4)) {
          edges.insert({a, b});
        }
      }
    }
    for (std::size_t v = 0; v < m; ++v) {
      const bool touched = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return e.source == v || e.target == v;
      });
      if (!touched) {
        edges.insert({v, (v + 1 + rng.below(m - 1)) % m});
      }
    }
    if (mode == 1) {
      const std::vector<Edge> forward(edges.begin(), edges.end());
      for (const auto& e : forward) {
        edges.insert({e.target, e.source});
      }
    }
  }

  std::vector<Rational> rates;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    rates.push_back(random_rate(rng, 5, 3));
  }
  return MassActionSystem(EGraph(2, std::move(vertices), {edges.begin(), edges.end()}),
                          std::move(rates));
}

}  // namespace crnreal
