#include "crnreal_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "crnreal/deficiency_one.hpp"
#include "crnreal/error.hpp"
#include "crnreal/generator.hpp"
#include "crnreal/io.hpp"

namespace crnreal::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  }
}

std::string infer_format(const std::string& path) {
  const auto dot = path.rfind('.');
  return dot != std::string::npos && path.substr(dot) == ".json" ? "matrices"
                                                                 : "ode";
}

NetReactionData load_input(const std::string& path, std::string format,
                           const std::string& extra) {
  if (format.empty()) {
    format = infer_format(path);
  }
  const std::string text = read_file(path);
  NetReactionData data = [&] {
    if (format == "ode") {
      return io::parse_ode(text);
    }
    if (format == "network") {
      return net_reaction_data(io::parse_network_json(text));
    }
    return io::parse_matrices_json(text);
  }();
  if (!extra.empty()) {
    data = io::add_extra_vertices(data, io::parse_vertex_list(extra));
    // ODE columns are ordered by monomial; keep that order with the extras.
    if (format == "ode") {
      data = io::sorted_columns(data);
    }
  }
  return data;
}

void print_diagnostics(const RealizationOutcome& out, std::ostream& err) {
  const auto& d = out.diagnostics;
  err << "dim ker(W) = " << d.kernel_dim << ", r = " << d.rays.size() << '\n';
  for (std::size_t i = 0; i < d.rays.size(); ++i) {
    err << "  d" << i + 1 << " = " << to_string(d.rays[i].coords()) << '\n';
  }
  for (const auto& [i, j] : d.attempted_pairs) {
    err << "  tried pair (" << i + 1 << ", " << j + 1 << ")\n";
  }
  if (!d.rejected_by.empty()) {
    err << "rejected: " << d.rejected_by << '\n';
  }
}

std::optional<GenType> parse_gen_type(const std::string& name) {
  for (auto t : {GenType::SingleClass, GenType::TypeI, GenType::TypeII,
                 GenType::DefZero, GenType::DefTwoPlus}) {
    if (to_string(t) == name) {
      return t;
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() ||
        item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::InvalidArgument,
                  "class sizes must be a comma-separated list of integers");
    }
    out.push_back(std::stoul(item));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Decide and construct weakly reversible deficiency-one "
               "realizations of polynomial systems."};
  app.name(args.empty() ? "crn-realize" : args.front());
  app.require_subcommand(1);

  const std::vector<std::string> formats{"ode", "matrices", "network"};

  auto* check = app.add_subcommand("check", "Run the realization search");
  std::string input;
  std::string format;
  std::string extra;
  std::string dot_path;
  std::string json_path;
  bool verbose = false;
  check->add_option("input", input, "ODE text or JSON file")->required();
  check->add_option("--format", format, "Input format (default: from extension)")
      ->check(CLI::IsMember(formats));
  check->add_option("--extra-vertices", extra,
                    "Additional source vertices with zero net vector, e.g. \"3,1;0,2\"");
  check->add_option("--dot", dot_path, "Write the realization as Graphviz DOT");
  check->add_option("--json", json_path,
                    "Write the JSON outcome here instead of standard output");
  check->add_flag("--verbose,-v", verbose, "Print search diagnostics");

  auto* gen = app.add_subcommand("gen", "Generate a random weakly reversible system");
  std::string gen_type = "single";
  std::size_t classes = 0;
  std::string sizes;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string gen_format = "network";
  gen->add_option("--type", gen_type, "single, type1, type2, def0 or def2")
      ->check(CLI::IsMember({"single", "type1", "type2", "def0", "def2"}));
  gen->add_option("--classes", classes, "Number of linkage classes");
  gen->add_option("--sizes", sizes, "Vertices per class, e.g. \"2,4\"");
  gen->add_option("--dim", dim, "Dimension (default: smallest that fits, at least 2)");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("-o,--output", output, "Output file (default: standard output)");
  gen->add_option("--format", gen_format, "Output format")
      ->check(CLI::IsMember(formats));

  auto* analyze = app.add_subcommand("analyze", "Structure report of a network file");
  std::string network_path;
  analyze->add_option("network", network_path, "Network JSON file")->required();

  auto* equiv = app.add_subcommand("equiv", "Test dynamical equivalence of two networks");
  std::string first_path;
  std::string second_path;
  equiv->add_option("first", first_path, "Network JSON file")->required();
  equiv->add_option("second", second_path, "Network JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
      reversed.pop_back();
    }
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check) {
      const auto data = load_input(input, format, extra);
      const auto outcome = realize_def_one(data);
      if (verbose) {
        print_diagnostics(outcome, err);
      }
      const std::string json = io::outcome_json(outcome);
      if (json_path.empty()) {
        out << json;
      } else {
        write_file(json_path, json);
        out << io::summary(outcome) << '\n';
      }
      if (!dot_path.empty()) {
        if (outcome.realization) {
          write_file(dot_path,
                     io::to_dot(*outcome.realization, outcome.linkage_classes));
        } else {
          err << "no realization; DOT file not written\n";
        }
      }
      return outcome.flag == Flag::None ? kExitNoRealization : kExitRealized;
    }

    if (*gen) {
      const GenType type = *parse_gen_type(gen_type);
      if (classes == 0) {
        classes = type == GenType::SingleClass || type == GenType::DefZero ? 1 : 2;
      }
      GenSpec spec = default_spec(type, classes, seed);
      if (!sizes.empty()) {
        spec.class_sizes = parse_sizes(sizes);
        spec.dimension = std::max<std::size_t>(2, required_dimension(spec));
      }
      if (dim != 0) {
        spec.dimension = dim;
      }
      const auto sys = generate(spec);
      std::string text;
      if (gen_format == "network") {
        text = io::network_json(sys);
      } else if (gen_format == "matrices") {
        text = io::matrices_json(net_reaction_data(sys));
      } else {
        text = io::emit_ode(net_reaction_data(sys));
      }
      if (output.empty()) {
        out << text;
      } else {
        write_file(output, text);
      }
      return 0;
    }

    if (*analyze) {
      const auto sys = io::parse_network_json(read_file(network_path));
      out << io::report_json(structure_report(sys.graph()));
      return 0;
    }

    if (*equiv) {
      const auto a = io::parse_network_json(read_file(first_path));
      const auto b = io::parse_network_json(read_file(second_path));
      const bool same = dynamically_equivalent(a, b);
      out << (same ? "equivalent" : "not equivalent") << '\n';
      return same ? 0 : kExitNoRealization;
    }
  } catch (const std::exception& e) {
    err << app.get_name() << ": error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace crnreal::cli
