#include "qlcft/hermite.hpp"

#include "qlcft/arith.hpp"

#include <stdexcept>
#include <utility>

namespace qlcft {

IntMatrix hermite_form_mod(const IntMatrix& rows, std::size_t ncols, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("hermite_form_mod: modulus must be positive");
  if (modulus > (std::int64_t{1} << 31))
    throw std::overflow_error("hermite_form_mod: modulus too large for int64 elimination");

  IntMatrix work;
  work.reserve(rows.size());
  for (const IntRow& r : rows) {
    if (r.size() != ncols) throw std::invalid_argument("hermite_form_mod: ragged rows");
    IntRow reduced(ncols);
    for (std::size_t j = 0; j < ncols; ++j) reduced[j] = mod(r[j], modulus);
    work.push_back(std::move(reduced));
  }

  IntMatrix basis;
  for (std::size_t col = 0; col < ncols; ++col) {
    // modulus * e_col joins the candidates for this pivot; later columns are
    // covered by their own modulus rows, which licenses the reductions below.
    IntRow pivot(ncols, 0);
    pivot[col] = modulus;
    IntMatrix rest;
    for (IntRow& r : work) {
      if (r[col] == 0) {
        rest.push_back(std::move(r));
        continue;
      }
      const auto [g, x, y] = extended_gcd(pivot[col], r[col]);
      const std::int64_t pc = pivot[col] / g;
      const std::int64_t rc = r[col] / g;
      IntRow np(ncols), nr(ncols);
      for (std::size_t j = col; j < ncols; ++j) {
        // [x y; -rc pc] has determinant 1.
        np[j] = mod(x * pivot[j] + y * r[j], modulus);
        nr[j] = mod(pc * r[j] - rc * pivot[j], modulus);
      }
      np[col] = g; // g | modulus, so g <= modulus; keep it exact
      nr[col] = 0;
      pivot = std::move(np);
      rest.push_back(std::move(nr));
    }
    work = std::move(rest);
    basis.push_back(std::move(pivot));
  }

  // Reduce entries above each pivot.
  for (std::size_t j = 0; j < ncols; ++j) {
    const std::int64_t d = basis[j][j];
    for (std::size_t i = 0; i < j; ++i) {
      const std::int64_t q = (basis[i][j] - mod(basis[i][j], d)) / d;
      if (q == 0) continue;
      for (std::size_t k = j; k < ncols; ++k) basis[i][k] -= q * basis[j][k];
    }
  }
  return basis;
}

} // namespace qlcft
