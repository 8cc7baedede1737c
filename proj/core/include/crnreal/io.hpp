#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crnreal/deficiency_one.hpp"
#include "crnreal/network.hpp"

namespace crnreal::io {

/// Parses a polynomial system, one equation per line:
///
///   x1' = -x1 + x1^2
///   x2' = 1/2*x1^3 - x1^3*x2^2
///
/// Every variable x1..xn needs exactly one equation. Terms are an optional
/// integer or p/q coefficient followed by '*'-separated factors x<j> or
/// x<j>^<k> with k a nonnegative integer. Blank lines and text after '#'
/// are ignored. Equal monomials merge into one column; monomials whose
/// coefficients all cancel are dropped. Columns are sorted
/// lexicographically by exponent vector. Throws ParseError.
NetReactionData parse_ode(std::string_view text);

/// Inverse of parse_ode for integer, nonnegative source vertices. Zero
/// columns of W are not representable and vanish.
std::string emit_ode(const NetReactionData& data);

/// Parses "3,1;2,0" into vertices.
std::vector<RatVector> parse_vertex_list(std::string_view text);

/// Appends each vertex as a column with zero net reaction vector. Throws
/// Error(InvalidArgument) for a wrong length or an existing vertex.
NetReactionData add_extra_vertices(const NetReactionData& data,
                                   const std::vector<RatVector>& vertices);

/// Columns reordered lexicographically by source vertex.
NetReactionData sorted_columns(const NetReactionData& data);

/// {"n": .., "m": .., "Y": [[..]], "W": [[..]]}, entries integers or "p/q".
NetReactionData parse_matrices_json(std::string_view text);
std::string matrices_json(const NetReactionData& data);

/// {"n": .., "vertices": [[..]], "edges": [{"from", "to", "rate"}]}.
MassActionSystem parse_network_json(std::string_view text);
std::string network_json(const MassActionSystem& sys);

std::string outcome_json(const RealizationOutcome& out);
std::string report_json(const StructureReport& report);

/// Graphviz digraph with one cluster per linkage class and rates as edge
/// labels.
std::string to_dot(const MassActionSystem& sys, const Partition& classes);

/// One-line human readable summary of an outcome.
std::string summary(const RealizationOutcome& out);

}  // namespace crnreal::io
