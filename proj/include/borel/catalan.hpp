#pragma once

#include <vector>

#include "borel/bigint.hpp"
#include "borel/ideal.hpp"
#include "borel/monomial.hpp"

namespace borel {

/// Staircase array attached to a monomial shape x_{i_1}...x_{i_d}: row j has
/// i_j boxes, the top row is all ones, and each later entry is the sum of
/// the first k entries of the previous row (all of them when that row is
/// shorter).  The bottom row is the w-vector of the principal Borel ideal.
struct CatalanDiagram {
  Monomial shape;
  std::vector<std::vector<BigInt>> rows;

  const std::vector<BigInt>& bottom_row() const { return rows.back(); }
  /// Sum of the entries of row j (1-based): the number of degree-j minimal
  /// generators of the j-truncation.
  BigInt row_sum(int j) const;
};

/// Throws for the shape 1 (the diagram needs at least one row).
CatalanDiagram catalan_diagram(const Monomial& shape);

/// w-vector of Borel(m) at degree deg(m), read off the diagram bottom row.
WTable w_principal(const Monomial& m);

/// w-vector of sfBorel(m) for squarefree m of degree d: w_i is the bottom
/// row entry of the diagram of shape tau(m) at position i-d+1.
WTable w_sq_principal(const Monomial& m);

} // namespace borel
