#pragma once

#include <map>
#include <utility>
#include <vector>

#include "borel/ideal.hpp"
#include "borel/monomial.hpp"
#include "borel/poly.hpp"

namespace borel {

/// One summand f * k[Z_f] of a Stanley decomposition of S/B.
struct StanleySummand {
  Monomial base;
  std::vector<int> vars; // ascending variable indices

  bool operator==(const StanleySummand&) const = default;
  /// True iff mu = base * (monomial supported on vars).
  bool contains(const Monomial& mu) const;
};

struct StanleyDecomposition {
  BorelIdeal ambient;
  std::vector<StanleySummand> summands;
};

/// Stanley decomposition of S/B built along the truncation filtration: at
/// each degree s < max generator degree, the degree-s minimal generators m
/// of the s-truncation that lie outside B contribute
/// m * k[x_j : m x_j outside the (s+1)-truncation].
/// The zero ideal yields the single summand 1 * k[x_1..x_n]; the unit ideal
/// is rejected (S/B = 0).
StanleyDecomposition stanley_decomposition(const BorelIdeal& b);

/// Stanley depth and depth of S/B; both equal n - q, where q is the largest
/// variable index dividing a Borel generator.
std::pair<int, int> stanley_depth_depth(const BorelIdeal& b);

/// Hilbert series of S/B from the decomposition, with terms aggregated by
/// (degree, |Z|) and the normal form over (1-t)^(n - codim).
HilbertSeries hilbert_series(const BorelIdeal& b);

/// dim_k (S/B)_t for t = 0..cutoff.
std::vector<BigInt> hilbert_values(const BorelIdeal& b, int cutoff);

/// Multiplicity of S/B: the number of top-dimensional Stanley summands
/// (|Z| = n - codim).
BigInt multiplicity(const BorelIdeal& b);

/// Summands grouped by j = n - |Z|; group j is nonempty exactly for
/// codim <= j <= pdim.
std::map<int, std::vector<StanleySummand>> grouped_view(const StanleyDecomposition& d);

} // namespace borel
