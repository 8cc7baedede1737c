// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "crnreal/cone.hpp"
#include "crnreal/deficiency_one.hpp"
#include "crnreal/generator.hpp"
#include "crnreal/lp.hpp"
#include "fixtures.hpp"

using namespace crnreal;

namespace {

// Thrown by require() with a description of the first violated check.
struct Violation {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw Violation{what};
  }
}

std::string str(const RatVector& v) { return to_string(v); }

std::string str(const Partition& p) {
  std::ostringstream out;
  for (const auto& cls : p) {
    out << '{';
    for (std::size_t i = 0; i < cls.size(); ++i) {
      out << (i ? "," : "") << cls[i];
    }
    out << '}';
  }
  return out.str();
}

std::set<std::size_t> as_index_set(const std::vector<std::size_t>& v) {
  return {v.begin(), v.end()};
}

std::size_t class_nullity(const NetReactionData& data, const std::vector<std::size_t>& cls) {
  return nullity(data.select(cls).net());
}

// Linkage classes with their deficiencies, in structure-report order.
struct ClassInfo {
  Partition classes;
  std::vector<std::size_t> deficiencies;
};

ClassInfo class_info(const MassActionSystem& sys) {
  const auto report = structure_report(sys.graph());
  return {report.linkage_classes, report.class_deficiencies};
}

GenSpec spec_for(GenType type, std::uint64_t seed) {
  fixtures::Rng rng(seed * 104729 + static_cast<std::uint64_t>(type) * 31);
  std::size_t classes = 1;
  if (type == GenType::TypeI || type == GenType::TypeII) {
    classes = static_cast<std::size_t>(rng.between(2, 4));
  }
  auto spec = default_spec(type, classes, seed);
  for (auto& s : spec.class_sizes) {
    s += static_cast<std::size_t>(rng.between(0, 1));
  }
  spec.dimension = std::max<std::size_t>(2, required_dimension(spec)) +
                   static_cast<std::size_t>(rng.between(0, 1));
  return spec;
}

// ------------------------------------------------------------------ criteria

void two_class_end_to_end() {
  const NetReactionData data(Matrix{{1, 2, 3, 3, 3}, {0, 0, 0, 1, 2}},
                             Matrix{{1, -1, 0, 0, 0}, {0, 0, 1, 0, -1}});
  const auto out = realize_def_one(data);
  require(out.flag == Flag::TypeI, "flag " + std::string(to_string(out.flag)));
  require(fixtures::as_set(out.diagnostics.rays) ==
              std::set<RatVector>{{1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 1}},
          "unexpected rays");
  require(out.linkage_classes == Partition{{0, 1}, {2, 3, 4}},
          "classes " + str(out.linkage_classes));
  require(verify_outcome(data, out), "verify_outcome rejected the realization");
}

void one_ray_rejected() {
  const NetReactionData data(Matrix{{1, 2}, {0, 0}}, Matrix{{-1, 1}, {0, 0}});
  const auto out = realize_def_one(data);
  require(out.flag == Flag::None, "flag " + std::string(to_string(out.flag)));
  require(out.diagnostics.rejected_by.find("r = 1") != std::string::npos,
          "diagnostic '" + out.diagnostics.rejected_by + "'");
}

void mixed_generator_cone() {
  const Matrix w{{1, 1, -2, 1, -1}, {1, -1, 0, 0, 0}};
  const std::set<RatVector> want{
      {1, 1, 1, 0, 0}, {0, 0, 0, 1, 1}, {1, 1, 0, 0, 2}, {0, 0, 1, 2, 0}};
  require(fixtures::as_set(extreme_rays(w)) == want, "extreme rays differ");
}

void type_cones() {
  const auto one = fixtures::two_class_type1();
  const auto rays_one = extreme_rays(one.net());
  require(rays_one.size() == 3, "type I instance: r = " + std::to_string(rays_one.size()));
  require(fixtures::as_set(rays_one) ==
              std::set<RatVector>{{1, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 1}},
          "type I instance: rays differ");
  require(class_nullity(one, {0, 1}) == 1 && class_nullity(one, {2, 3, 4}) == 2,
          "type I instance: per-class kernel dimensions");

  const auto two = net_reaction_data(fixtures::parallel_cycles());
  const auto rays_two = extreme_rays(two.net());
  require(rays_two.size() == 4, "type II instance: r = " + std::to_string(rays_two.size()));
  require(fixtures::as_set(rays_two) ==
              std::set<RatVector>{{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}},
          "type II instance: rays differ");
  require(class_nullity(two, {0, 1}) == 1 && class_nullity(two, {2, 3}) == 1,
          "type II instance: per-class kernel dimensions");
}

void deficiency_arithmetic() {
  const auto edelstein = structure_report(fixtures::edelstein().graph());
  require(edelstein.vertex_count == 5 && edelstein.linkage_classes.size() == 2 &&
              edelstein.stoichiometric_dimension == 2 && edelstein.deficiency == 1,
          "three-species network: deficiency " + std::to_string(edelstein.deficiency));
  const auto sb = structure_report(fixtures::symmetry_breaking().graph());
  require(sb.vertex_count == 7 && sb.linkage_classes.size() == 3 &&
              sb.stoichiometric_dimension == 3 && sb.deficiency == 1,
          "symmetry-breaking network: deficiency " + std::to_string(sb.deficiency));
  const auto seven = structure_report(fixtures::three_terminal_graph());
  require(seven.vertex_count == 7 && seven.linkage_classes.size() == 2 &&
              seven.stoichiometric_dimension == 2 && seven.deficiency == 3 &&
              seven.terminal_components.size() == 3,
          "seven-vertex graph");
  const auto tri = structure_report(fixtures::triangle_graph());
  require(tri.vertex_count == 3 && tri.deficiency == 0 && tri.terminal_components.size() == 1,
          "triangle");
}

void oracle_equivalence() {
  fixtures::Rng rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const auto m = static_cast<std::size_t>(rng.between(1, 8));
    const auto n = static_cast<std::size_t>(rng.between(1, 3));
    const Matrix w = fixtures::random_matrix(rng, n, m, -2, 2);
    require(fixtures::as_set(extreme_rays(w)) ==
                fixtures::as_set(extreme_rays_bruteforce(w)),
            "instance " + std::to_string(i));
  }
}

void structure_suite() {
  constexpr std::uint64_t kInstances = 200;
  // Support cover, image equals the stoichiometric subspace, kernel
  // dimension: over every weakly reversible family.
  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    for (auto type : {GenType::SingleClass, GenType::TypeI, GenType::TypeII, GenType::DefZero,
                      GenType::DefTwoPlus}) {
      const auto sys = generate(spec_for(type, seed));
      const auto data = net_reaction_data(sys);
      const auto report = structure_report(sys.graph());
      const std::string tag = std::string(to_string(type)) + " seed " + std::to_string(seed);
      const auto rays = extreme_rays(data.net());
      require(support_union(rays).size() == data.size(), "support cover, " + tag);
      require(column_space_equal(data.net(), sys.graph().reaction_vectors()),
              "image of W, " + tag);
      const std::size_t k = nullity(data.net());
      const std::size_t l = report.linkage_classes.size();
      if (l == 1) {
        require(k == report.deficiency + 1, "single-class kernel dimension, " + tag);
      }
      if (report.deficiency == 1) {
        require(k == l + 1, "deficiency-one kernel dimension, " + tag);
      }
    }
  }

  for (std::uint64_t seed = 0; seed < kInstances; ++seed) {
    const std::string tag = " seed " + std::to_string(seed);

    // Single class, deficiency one: two proper covering supports.
    {
      const auto data = net_reaction_data(generate(spec_for(GenType::SingleClass, seed)));
      const auto rays = extreme_rays(data.net());
      require(rays.size() == 2, "single-class r = " + std::to_string(rays.size()) + tag);
      require(rays[0].support().size() < data.size() &&
                  rays[1].support().size() < data.size() &&
                  support_union(rays).size() == data.size(),
              "single-class supports" + tag);
    }

    // Type I: l - 1 rays on the deficiency-zero classes, two proper rays
    // covering the deficiency-one class.
    {
      const auto sys = generate(spec_for(GenType::TypeI, seed));
      const auto data = net_reaction_data(sys);
      const auto info = class_info(sys);
      const auto rays = extreme_rays(data.net());
      const std::size_t l = info.classes.size();
      require(rays.size() == l + 1, "type I r = " + std::to_string(rays.size()) + tag);
      std::size_t whole = 0;
      std::vector<std::size_t> partial;
      for (std::size_t c = 0; c < l; ++c) {
        const auto cls = as_index_set(info.classes[c]);
        require(class_nullity(data, info.classes[c]) == info.deficiencies[c] + 1,
                "type I per-class kernel dimension" + tag);
        for (std::size_t i = 0; i < rays.size(); ++i) {
          const auto supp = as_index_set(rays[i].support());
          const bool inside = std::includes(cls.begin(), cls.end(), supp.begin(), supp.end());
          if (!inside) {
            continue;
          }
          if (info.deficiencies[c] == 0) {
            require(supp == cls, "type I deficiency-zero class support" + tag);
            ++whole;
          } else {
            require(supp.size() < cls.size(), "type I proper support" + tag);
            partial.push_back(i);
          }
        }
        if (info.deficiencies[c] == 1) {
          require(partial.size() == 2, "type I rays in the deficiency-one class" + tag);
          std::set<std::size_t> cover = as_index_set(rays[partial[0]].support());
          const auto second = rays[partial[1]].support();
          cover.insert(second.begin(), second.end());
          require(cover == cls, "type I cover of the deficiency-one class" + tag);
        }
      }
      require(whole == l - 1 && partial.size() == 2, "type I support pattern" + tag);
    }

    // Type II: one ray per class with full class support, two rays meeting
    // every class in a nonempty proper subset.
    {
      const auto sys = generate(spec_for(GenType::TypeII, seed));
      const auto data = net_reaction_data(sys);
      const auto info = class_info(sys);
      const auto rays = extreme_rays(data.net());
      const std::size_t l = info.classes.size();
      require(rays.size() == l + 2, "type II r = " + std::to_string(rays.size()) + tag);
      std::size_t whole = 0;
      std::size_t crossing = 0;
      for (const auto& d : rays) {
        const auto supp = as_index_set(d.support());
        bool is_class = false;
        bool meets_all_properly = true;
        for (const auto& c : info.classes) {
          const auto cls = as_index_set(c);
          if (supp == cls) {
            is_class = true;
          }
          std::size_t common = 0;
          for (auto v : cls) {
            common += supp.count(v);
          }
          if (common == 0 || common == cls.size()) {
            meets_all_properly = false;
          }
        }
        whole += is_class ? 1 : 0;
        crossing += meets_all_properly ? 1 : 0;
      }
      for (const auto& c : info.classes) {
        require(class_nullity(data, c) == 1, "type II per-class kernel dimension" + tag);
      }
      require(whole == l && crossing == 2, "type II support pattern" + tag);
    }
  }
}

void round_trip() {
  for (auto [type, flag] : {std::pair{GenType::SingleClass, Flag::SingleClass},
                            std::pair{GenType::TypeI, Flag::TypeI},
                            std::pair{GenType::TypeII, Flag::TypeII}}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto sys = generate(spec_for(type, seed + 1000));
      const auto data = net_reaction_data(sys);
      const auto out = realize_def_one(data);
      const std::string tag = std::string(to_string(type)) + " seed " + std::to_string(seed);
      require(out.flag == flag, "flag " + std::string(to_string(out.flag)) + ", " + tag +
                                    ": " + out.diagnostics.rejected_by);
      require(verify_outcome(data, out), "verify_outcome, " + tag);
    }
  }
}

bool has_positive_kernel_vector(const Matrix& a) {
  // A v = 0 with v >= 1, written as A u = -A 1 with u >= 0.
  lp::Problem p;
  p.A = a;
  p.b = a * RatVector(a.cols(), Rational(1));
  for (auto& x : p.b) {
    x = -x;
  }
  return lp::solve(p).status != lp::Status::Infeasible;
}

void kirchhoff_duality() {
  int wr = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto sys = random_system(seed);
    const auto a = kirchhoff_matrix(sys);
    const bool reversible = is_weakly_reversible(sys.graph());
    wr += reversible ? 1 : 0;
    const std::string tag = "seed " + std::to_string(seed);
    require(reversible == has_positive_kernel_vector(a), "positive kernel vector, " + tag);
    require(nullity(a) == strongly_connected_components(sys.graph()).terminal.size(),
            "kernel dimension, " + tag);
  }
  require(wr > 0 && wr < 200, "sample lacks one of the two kinds");
}

void equivalence_certificate() {
  // Solve k12 (0,2) + k13 (2,0) = (4,4) for the rates of the two-edge fan.
  const Matrix reactions{{0, 2}, {2, 0}};
  const auto k = fixtures::solve_on(reactions, RatVector{4, 4}, {0, 1});
  require(k.has_value() && *k == RatVector{2, 2},
          "rates " + (k ? str(*k) : std::string("unsolvable")));
  const auto fan = fixtures::origin_fan((*k)[0], (*k)[1]);
  const auto diagonal = fixtures::origin_fan_with_diagonal();
  require(dynamically_equivalent(fan, diagonal), "not dynamically equivalent");
  require(net_reaction_data(fan).net().column(0) == RatVector{4, 4}, "net vector of the fan");
  require(!dynamically_equivalent(fixtures::origin_fan(1, 2), diagonal),
          "wrong rates accepted");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria{
      {"two-class matrices realize as type I with the expected rays", two_class_end_to_end},
      {"collinear pair is rejected with r = 1", one_ray_rejected},
      {"mixed cyclic and stoichiometric generators", mixed_generator_cone},
      {"type I and type II cones with per-class kernel dimensions", type_cones},
      {"deficiency arithmetic of the reference networks", deficiency_arithmetic},
      {"double description agrees with brute force on 200 matrices", oracle_equivalence},
      {"kernel dimensions and ray supports on 200 generated systems each", structure_suite},
      {"round trip on 100 generated systems per type", round_trip},
      {"weak reversibility and Kirchhoff kernel duality on 200 graphs", kirchhoff_duality},
      {"dynamical equivalence of the origin fans", equivalence_certificate},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const Violation& v) {
      ok = false;
      detail = v.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("[%s] AC%zu %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), static_cast<long long>(ms),
                detail.empty() ? "" : ": ", detail.c_str());
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
