#pragma once

#include <string>
#include <vector>

#include "borel/betti.hpp"
#include "borel/catalan.hpp"
#include "borel/ideal.hpp"
#include "borel/monomial.hpp"
#include "borel/poly.hpp"
#include "borel/stanley.hpp"

namespace borel {

/// Plain-text output, parseable by the parse module: letters for x_1..x_26
/// when the ambient ring allows it, x-notation otherwise.
std::string render_monomial(const Monomial& m);
std::string render_var(int index, int nvars);
/// "borel{...}@n" / "sfborel{...}@n".
std::string render_ideal(const BorelIdeal& b);

/// "1+t+t^2-41t^5" style, ascending degree.
std::string render_unipoly(const UniPoly& p, const std::string& var = "t");
/// Sum of "c t^d / (1-t)^e" terms.
std::string render_hilbert_terms(const HilbertSeries& series);
/// "h / (1-t)^dim" (just "h" when dim is 0).
std::string render_hilbert_normal_form(const HilbertSeries& series);

/// Terms "c t^i u^j" joined with +/-.
std::string render_bipoly(const BiPoly& p);

/// Macaulay2-style diagram: a "total:" line, then one line per row j-i.
std::string render_betti_table(const BettiTable& table);

/// The staircase with aligned columns, then the bottom row labeled "w:".
std::string render_catalan_diagram(const CatalanDiagram& diagram);

/// One "m : [vars]" line per summand.
std::string render_stanley(const StanleyDecomposition& decomp);

/// "P3 P4 P5" for a sorted list of prime indices.
std::string render_primes(const std::vector<int>& ps);

std::string render_bigint_row(const std::vector<BigInt>& row);

} // namespace borel
