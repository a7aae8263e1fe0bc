#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

/// Execution policy for the enumeration kernels.  `parallel` uses OpenMP
/// worksharing when compiled in and falls back to the serial code path
/// otherwise; `serial` is the reference implementation the tests compare
/// against.  Both policies produce identical, deterministic output.
enum class Exec { serial, parallel };

/// All monomials of degree deg(bound) preceding `bound` in the Borel order:
/// index sequences j_1 <= ... <= j_d with j_t <= i_t (strictly increasing
/// when `squarefree`).  Output is in descending lex order.  For the unit
/// bound the result is {1}.
std::vector<Monomial> expand_orbit(const Monomial& bound, bool squarefree,
                                   Exec exec = Exec::parallel);

/// Counts of the expand_orbit output grouped by max index (slot i-1 holds
/// the count for max index i); counting only, nothing is materialized.
std::vector<std::uint64_t> count_orbit_by_max(const Monomial& bound, bool squarefree,
                                              Exec exec = Exec::parallel);

/// Visit every monomial of the given degree over nvars variables, in
/// descending lex order.  Serial building block.
void for_each_monomial(int nvars, int degree,
                       const std::function<void(const Monomial&)>& visit);

/// Number of degree-`degree` monomials satisfying the predicate.
std::uint64_t count_monomials_where(int nvars, int degree,
                                    const std::function<bool(const Monomial&)>& pred,
                                    Exec exec = Exec::parallel);

} // namespace borel
