#pragma once

#include "qlcft/extension.hpp"
#include "qlcft/field_spec.hpp"

#include <string>

namespace qlcft {

/// Graphviz digraph of the extension classes of degree <= max_degree, one
/// node or edge per line. Nodes are labeled degree/reality/sigma-class (and
/// the norm index for the class-field filter); an edge x -> y means y covers
/// x in the embedding order. Uses the spec levels as given.
std::string emit_lattice(const FieldSpec& spec, std::int64_t max_degree, ExtensionFilter filter);

} // namespace qlcft
