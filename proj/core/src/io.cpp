#include "crnreal/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "crnreal/error.hpp"

namespace crnreal::io {

namespace {

using Json = nlohmann::ordered_json;
using Exponents = std::vector<unsigned long>;

// ---------------------------------------------------------------- ODE text

struct Term {
  Rational coefficient;
  std::map<std::size_t, unsigned long> powers;  // variable index (0-based)
  std::size_t line = 0;
  // (variable, column) of every factor, for error positions.
  std::vector<std::pair<std::size_t, std::size_t>> factors;
};

struct Equation {
  std::size_t variable = 0;  // 0-based
  std::vector<Term> terms;
};

class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t number)
      : text_(line), line_(number) {}

  std::size_t column() const { return pos_ + 1; }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) {
      fail(std::string("expected ") + what);
    }
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  // Next character without skipping whitespace.
  char raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    throw ParseError(line_, column(), what);
  }
  [[noreturn]] void fail_at(std::size_t column, const std::string& what) {
    throw ParseError(line_, column, what);
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::size_t parse_variable(LineCursor& cur) {
  cur.peek();
  const std::size_t col = cur.column();
  cur.expect('x', "a variable such as x1");
  const std::string index = cur.digits();
  if (index.empty()) {
    cur.fail("expected a variable index after 'x'");
  }
  if (index.size() > 9) {
    cur.fail_at(col, "variable index too large");
  }
  const std::size_t i = std::stoul(index);
  if (i == 0) {
    cur.fail_at(col, "variables are numbered from x1");
  }
  return i - 1;
}

unsigned long parse_exponent(LineCursor& cur) {
  if (cur.peek() == '-') {
    cur.fail("negative exponent");
  }
  const std::string e = cur.digits();
  if (e.empty()) {
    cur.fail("expected a nonnegative integer exponent");
  }
  if (cur.raw() == '.' || cur.raw() == '/') {
    cur.fail("non-integer exponent");
  }
  if (e.size() > 9) {
    cur.fail("exponent too large");
  }
  return std::stoul(e);
}

void parse_factor(LineCursor& cur, Term& term) {
  cur.peek();
  const std::size_t col = cur.column();
  const std::size_t var = parse_variable(cur);
  unsigned long power = 1;
  if (cur.accept('^')) {
    power = parse_exponent(cur);
  }
  term.powers[var] += power;
  term.factors.emplace_back(var, col);
}

Term parse_term(LineCursor& cur, bool negative, std::size_t line) {
  Term term;
  term.line = line;
  term.coefficient = 1;
  if (std::isdigit(static_cast<unsigned char>(cur.peek())) != 0) {
    std::string text = cur.digits();
    if (cur.accept('/')) {
      const std::string den = cur.digits();
      if (den.empty()) {
        cur.fail("expected a denominator");
      }
      if (den.find_first_not_of('0') == std::string::npos) {
        cur.fail("zero denominator");
      }
      text += "/" + den;
    }
    if (cur.raw() == '.') {
      cur.fail("coefficients must be integers or fractions p/q");
    }
    term.coefficient = parse_rational(text);
    if (!cur.accept('*')) {
      if (cur.peek() == 'x') {
        cur.fail("expected '*' between coefficient and variable");
      }
      if (negative) {
        term.coefficient = -term.coefficient;
      }
      return term;
    }
  }
  parse_factor(cur, term);
  while (cur.accept('*')) {
    parse_factor(cur, term);
  }
  if (negative) {
    term.coefficient = -term.coefficient;
  }
  return term;
}

Equation parse_equation(std::string_view line, std::size_t number) {
  LineCursor cur(line, number);
  Equation eq;
  eq.variable = parse_variable(cur);
  cur.expect('\'', "' after the variable");
  cur.expect('=', "'='");
  if (cur.done()) {
    cur.fail("missing right-hand side");
  }
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (cur.accept('+')) {
      negative = false;
    } else if (!first) {
      cur.fail("expected '+' or '-'");
    }
    eq.terms.push_back(parse_term(cur, negative, number));
    first = false;
  }
  return eq;
}

// --------------------------------------------------------------- JSON input

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return Rational(Integer(j.dump(), 10));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, where + ": " + e.what());
    }
  }
  throw Error(ErrorKind::Parse,
              where + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

Json rational_to_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) {
    return q.get_num().get_si();
  }
  return to_string(q);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Convert the byte offset into a line and column.
    const std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, "invalid JSON");
  }
}

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw Error(ErrorKind::Parse, std::string("missing field \"") + name + "\"");
  }
  return obj.at(name);
}

std::size_t count_field(const Json& obj, const char* name) {
  const Json& j = field(obj, name);
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
    throw Error(ErrorKind::Parse,
                std::string("field \"") + name + "\" must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols,
                        const char* name) {
  if (!j.is_array() || j.size() != rows) {
    throw Error(ErrorKind::Parse, std::string(name) + " must have " +
                                      std::to_string(rows) + " rows");
  }
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw Error(ErrorKind::Parse, std::string(name) + " row " +
                                        std::to_string(r) + " must have " +
                                        std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = rational_from_json(
          j[r][c], std::string(name) + "[" + std::to_string(r) + "][" +
                       std::to_string(c) + "]");
    }
  }
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(rational_to_json(m(r, c)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json vector_to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back(rational_to_json(x));
  }
  return out;
}

Json network_to_json(const MassActionSystem& sys) {
  const auto& g = sys.graph();
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) {
    vertices.push_back(vector_to_json(v));
  }
  Json edges = Json::array();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    edges.push_back({{"from", g.edges()[e].source},
                     {"to", g.edges()[e].target},
                     {"rate", rational_to_json(sys.rates()[e])}});
  }
  return {{"n", g.dimension()}, {"vertices", vertices}, {"edges", edges}};
}

Json partition_to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& cls : p) {
    out.push_back(cls);
  }
  return out;
}

}  // namespace

NetReactionData parse_ode(std::string_view text) {
  std::vector<Equation> equations;
  std::map<std::size_t, std::size_t> line_of;  // variable -> line
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      auto eq = parse_equation(line, number);
      if (line_of.contains(eq.variable)) {
        const auto col = line.find_first_not_of(" \t") + 1;
        throw ParseError(number, col,
                         "duplicate equation for x" +
                             std::to_string(eq.variable + 1) +
                             " (first given on line " +
                             std::to_string(line_of[eq.variable]) + ")");
      }
      line_of[eq.variable] = number;
      equations.push_back(std::move(eq));
    }
    start = end + 1;
  }
  if (equations.empty()) {
    throw ParseError(1, 1, "no equations");
  }
  const std::size_t n = line_of.rbegin()->first + 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (!line_of.contains(i)) {
      throw ParseError(number, 1,
                       "missing equation for x" + std::to_string(i + 1));
    }
  }

  std::map<Exponents, RatVector> columns;
  for (const auto& eq : equations) {
    for (const auto& term : eq.terms) {
      for (const auto& [var, col] : term.factors) {
        if (var >= n) {
          throw ParseError(term.line, col,
                           "x" + std::to_string(var + 1) + " has no equation");
        }
      }
      Exponents e(n, 0);
      for (const auto& [var, power] : term.powers) {
        e[var] = power;
      }
      auto [it, inserted] = columns.try_emplace(std::move(e), RatVector(n));
      it->second[eq.variable] += term.coefficient;
    }
  }

  std::vector<RatVector> ys;
  std::vector<RatVector> ws;
  for (const auto& [exponents, net] : columns) {
    if (is_zero(net)) {
      continue;
    }
    RatVector y;
    for (auto p : exponents) {
      y.emplace_back(p);
    }
    ys.push_back(std::move(y));
    ws.push_back(net);
  }
  return NetReactionData(Matrix::from_columns(ys, n), Matrix::from_columns(ws, n));
}

std::string emit_ode(const NetReactionData& data) {
  const std::size_t n = data.dimension();
  const std::size_t m = data.size();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      const auto& y = data.sources()(r, j);
      if (!is_integer(y) || sgn(y) < 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "source vertex " + to_string(data.sources().column(j)) +
                        " is not a nonnegative integer exponent vector");
      }
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < n; ++i) {
    out << 'x' << i + 1 << "' =";
    bool first = true;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& c = data.net()(i, j);
      if (sgn(c) == 0) {
        continue;
      }
      std::string monomial;
      for (std::size_t r = 0; r < n; ++r) {
        const auto& p = data.sources()(r, j);
        if (sgn(p) == 0) {
          continue;
        }
        if (!monomial.empty()) {
          monomial += '*';
        }
        monomial += 'x' + std::to_string(r + 1);
        if (p != 1) {
          monomial += '^' + to_string(p);
        }
      }
      const Rational magnitude = abs(c);
      out << (sgn(c) < 0 ? (first ? " -" : " - ") : (first ? " " : " + "));
      if (monomial.empty()) {
        out << to_string(magnitude);
      } else if (magnitude == 1) {
        out << monomial;
      } else {
        out << to_string(magnitude) << '*' << monomial;
      }
      first = false;
    }
    if (first) {
      out << " 0";
    }
    out << '\n';
  }
  return out.str();
}

std::vector<RatVector> parse_vertex_list(std::string_view text) {
  std::vector<RatVector> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(';', start), text.size());
    const std::string_view item = text.substr(start, end - start);
    if (item.find_first_not_of(" \t") != std::string_view::npos) {
      RatVector v;
      std::size_t s = 0;
      while (s <= item.size()) {
        const std::size_t e = std::min(item.find(',', s), item.size());
        v.push_back(parse_rational(item.substr(s, e - s)));
        s = e + 1;
      }
      out.push_back(std::move(v));
    }
    start = end + 1;
  }
  return out;
}

NetReactionData add_extra_vertices(const NetReactionData& data,
                                   const std::vector<RatVector>& vertices) {
  const std::size_t n = data.dimension();
  std::vector<RatVector> ys;
  std::vector<RatVector> ws;
  for (std::size_t j = 0; j < data.size(); ++j) {
    ys.push_back(data.sources().column(j));
    ws.push_back(data.net().column(j));
  }
  for (const auto& v : vertices) {
    if (v.size() != n) {
      throw Error(ErrorKind::InvalidArgument,
                  "extra vertex " + to_string(v) + " has length " +
                      std::to_string(v.size()) + ", expected " +
                      std::to_string(n));
    }
    if (std::find(ys.begin(), ys.end(), v) != ys.end()) {
      throw Error(ErrorKind::InvalidArgument,
                  "extra vertex " + to_string(v) + " is already a source vertex");
    }
    ys.push_back(v);
    ws.emplace_back(n);
  }
  return NetReactionData(Matrix::from_columns(ys, n), Matrix::from_columns(ws, n));
}

NetReactionData sorted_columns(const NetReactionData& data) {
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<RatVector> ys;
  for (std::size_t j = 0; j < data.size(); ++j) {
    ys.push_back(data.sources().column(j));
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ys[a] < ys[b]; });
  return data.select(order);
}

NetReactionData parse_matrices_json(std::string_view text) {
  const Json j = parse_json(text);
  const std::size_t n = count_field(j, "n");
  const std::size_t m = count_field(j, "m");
  Matrix y = matrix_from_json(field(j, "Y"), n, m, "Y");
  Matrix w = matrix_from_json(field(j, "W"), n, m, "W");
  return NetReactionData(std::move(y), std::move(w));
}

std::string matrices_json(const NetReactionData& data) {
  Json j = {{"n", data.dimension()},
            {"m", data.size()},
            {"Y", matrix_to_json(data.sources())},
            {"W", matrix_to_json(data.net())}};
  return j.dump(2) + "\n";
}

MassActionSystem parse_network_json(std::string_view text) {
  const Json j = parse_json(text);
  const std::size_t n = count_field(j, "n");
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) {
    throw Error(ErrorKind::Parse, "\"vertices\" must be an array");
  }
  std::vector<RatVector> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i].is_array() || vs[i].size() != n) {
      throw Error(ErrorKind::Parse, "vertex " + std::to_string(i) +
                                        " must have " + std::to_string(n) +
                                        " coordinates");
    }
    RatVector v;
    for (std::size_t c = 0; c < n; ++c) {
      v.push_back(rational_from_json(
          vs[i][c], "vertices[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    }
    vertices.push_back(std::move(v));
  }
  const Json& es = field(j, "edges");
  if (!es.is_array()) {
    throw Error(ErrorKind::Parse, "\"edges\" must be an array");
  }
  std::vector<Edge> edges;
  std::vector<Rational> rates;
  for (std::size_t e = 0; e < es.size(); ++e) {
    edges.push_back({count_field(es[e], "from"), count_field(es[e], "to")});
    rates.push_back(
        rational_from_json(field(es[e], "rate"), "edges[" + std::to_string(e) + "].rate"));
  }
  return MassActionSystem(EGraph(n, std::move(vertices), std::move(edges)),
                          std::move(rates));
}

std::string network_json(const MassActionSystem& sys) {
  return network_to_json(sys).dump(2) + "\n";
}

std::string outcome_json(const RealizationOutcome& out) {
  const auto& d = out.diagnostics;
  Json rays = Json::array();
  for (const auto& r : d.rays) {
    rays.push_back(vector_to_json(r.coords()));
  }
  Json pairs = Json::array();
  for (const auto& [i, j] : d.attempted_pairs) {
    pairs.push_back({i, j});
  }
  Json diagnostics = {
      {"kernel_dim", d.kernel_dim},
      {"r", d.rays.size()},
      {"rays", rays},
      {"rejected_by", d.rejected_by.empty() ? Json(nullptr) : Json(d.rejected_by)},
      {"attempted_pairs", pairs},
      {"selected_pair", d.selected_pair
                            ? Json{d.selected_pair->first, d.selected_pair->second}
                            : Json(nullptr)},
  };
  Json j = {
      {"schema_version", 1},
      {"flag", static_cast<int>(out.flag)},
      {"type", out.type ? Json(std::string(to_string(*out.type))) : Json(nullptr)},
      {"message", summary(out)},
      {"linkage_classes", partition_to_json(out.linkage_classes)},
      {"realization",
       out.realization ? network_to_json(*out.realization) : Json(nullptr)},
      {"diagnostics", diagnostics},
  };
  return j.dump(2) + "\n";
}

std::string report_json(const StructureReport& report) {
  Json j = {
      {"vertex_count", report.vertex_count},
      {"linkage_classes", partition_to_json(report.linkage_classes)},
      {"terminal_components", partition_to_json(report.terminal_components)},
      {"stoichiometric_dimension", report.stoichiometric_dimension},
      {"deficiency", report.deficiency},
      {"class_deficiencies", report.class_deficiencies},
      {"weakly_reversible", report.weakly_reversible},
  };
  return j.dump(2) + "\n";
}

std::string to_dot(const MassActionSystem& sys, const Partition& classes) {
  const auto& g = sys.graph();
  std::ostringstream out;
  out << "digraph realization {\n";
  out << "  node [shape=box];\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out << "  subgraph cluster_" << c << " {\n";
    out << "    label=\"L" << c + 1 << "\";\n";
    for (auto v : classes[c]) {
      out << "    v" << v << " [label=\"" << to_string(g.vertex(v)) << "\"];\n";
    }
    out << "  }\n";
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    out << "  v" << g.edges()[e].source << " -> v" << g.edges()[e].target
        << " [label=\"" << to_string(sys.rates()[e]) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string summary(const RealizationOutcome& out) {
  switch (out.flag) {
    case Flag::None:
      return "no weakly reversible deficiency-one realization (" +
             out.diagnostics.rejected_by + ")";
    case Flag::SingleClass:
      return "weakly reversible deficiency-one realization with a single "
             "linkage class";
    case Flag::TypeI:
      return "weakly reversible deficiency-one realization of Type I with " +
             std::to_string(out.linkage_classes.size()) + " linkage classes";
    case Flag::TypeII:
      return "weakly reversible deficiency-one realization of Type II with " +
             std::to_string(out.linkage_classes.size()) + " linkage classes";
  }
  return {};
}

}  // namespace crnreal::io
