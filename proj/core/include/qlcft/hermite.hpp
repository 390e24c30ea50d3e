#pragma once

#include <cstdint>
#include <vector>

namespace qlcft {

using IntRow = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntRow>;

/// Hermite normal form of the row lattice spanned by `rows` together with
/// modulus * Z^ncols.
///
/// Returns an ncols x ncols upper-triangular basis H with positive diagonal,
/// each diagonal entry dividing `modulus`, and 0 <= H[i][j] < H[j][j] for
/// i < j. Because modulus * e_j always lies in the lattice, every entry is
/// kept reduced modulo `modulus` during elimination, so intermediate values
/// stay below modulus^2. Requires modulus >= 1 and modulus^2 < 2^63.
IntMatrix hermite_form_mod(const IntMatrix& rows, std::size_t ncols, std::int64_t modulus);

} // namespace qlcft
