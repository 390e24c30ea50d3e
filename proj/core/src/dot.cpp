#include "qlcft/dot.hpp"

#include "qlcft/norm.hpp"

#include <sstream>

namespace qlcft {

std::string emit_lattice(const FieldSpec& spec, std::int64_t max_degree, ExtensionFilter filter) {
  const auto exts = enumerate_extensions(spec, max_degree, filter);
  const std::size_t n = exts.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false)); // below[i][j]: i strictly inside j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      below[i][j] = i != j && embeds(exts[i], exts[j]);

  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < n; ++i) {
    const FiniteExtension& x = exts[i];
    out << "  n" << i << " [label=\"" << degree(x) << '/' << (x.is_real() ? "real" : "nonreal") << '/'
        << to_string(sigma_class(spec, x));
    if (filter == ExtensionFilter::ClassFields) out << "/i=" << index(spec, norm_group(spec, x));
    out << "\"];\n";
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool covers = true;
      for (std::size_t k = 0; k < n && covers; ++k)
        if (below[i][k] && below[k][j]) covers = false;
      if (covers) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

} // namespace qlcft
