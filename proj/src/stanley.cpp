#include "borel/stanley.hpp"

#include <algorithm>

namespace borel {

bool StanleySummand::contains(const Monomial& mu) const {
  if (!base.divides(mu)) return false;
  Monomial rest = mu.divided_by(base);
  for (int v : rest.support())
    if (!std::binary_search(vars.begin(), vars.end(), v)) return false;
  return true;
}

StanleyDecomposition stanley_decomposition(const BorelIdeal& b) {
  if (b.is_unit()) throw domain_error("S/B is zero for the unit ideal");
  if (b.is_squarefree_kind())
    throw domain_error("Stanley decomposition is implemented for the Borel kind");
  const int n = b.nvars();
  StanleyDecomposition decomp{b, {}};

  if (b.is_zero()) {
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i + 1;
    decomp.summands.push_back({Monomial(n), std::move(all)});
    return decomp;
  }

  const int d = b.max_degree();
  std::vector<BorelIdeal> trunc; // trunc[i-1] = i-truncation, i = 1..d
  for (int i = 1; i <= d; ++i) trunc.push_back(truncate_ideal(b, i));

  for (int s = 0; s < d; ++s) {
    std::vector<Monomial> level;
    if (s == 0) {
      level.push_back(Monomial(n)); // trunc_0(B) = (1)
    } else {
      for (const Monomial& m : trunc[static_cast<size_t>(s) - 1].min_gens())
        if (m.degree() == s && !b.contains(m)) level.push_back(m);
    }
    const BorelIdeal& next = trunc[static_cast<size_t>(s)];
    for (const Monomial& m : level) {
      std::vector<int> z;
      for (int j = 1; j <= n; ++j)
        if (!next.contains(m.times_var(j))) z.push_back(j);
      decomp.summands.push_back({m, std::move(z)});
    }
  }
  return decomp;
}

std::pair<int, int> stanley_depth_depth(const BorelIdeal& b) {
  if (b.is_zero() || b.is_unit())
    throw domain_error("depth computation requires a nonzero proper ideal");
  if (b.is_squarefree_kind())
    throw domain_error("depth formula is implemented for the Borel kind");
  int q = 0;
  for (const Monomial& m : b.bgens()) q = std::max(q, m.max_index());
  const int depth = b.nvars() - q;
  return {depth, depth};
}

HilbertSeries hilbert_series(const BorelIdeal& b) {
  StanleyDecomposition decomp = stanley_decomposition(b);
  const int n = b.nvars();
  const int dim = b.is_zero() ? n : n - codim_pdim(b).codim;

  std::map<std::pair<int, int>, BigInt> grouped; // (degree, |Z|) -> count
  for (const StanleySummand& s : decomp.summands)
    grouped[{s.base.degree(), static_cast<int>(s.vars.size())}] += 1;

  HilbertSeries series;
  series.dim = dim;
  for (const auto& [key, count] : grouped)
    series.terms.push_back({count, key.first, key.second});
  std::sort(series.terms.begin(), series.terms.end(), [](const auto& a, const auto& b2) {
    return a.degree != b2.degree ? a.degree < b2.degree : a.pole > b2.pole;
  });

  // h(t) = sum of c * t^deg * (1-t)^(dim - pole); every pole is <= dim.
  UniPoly h;
  for (const auto& term : series.terms) {
    UniPoly part = UniPoly::constant(term.coeff).times_t_pow(term.degree);
    h = h + part * UniPoly::one_minus_t_pow(dim - term.pole);
  }
  series.h = std::move(h);
  return series;
}

std::vector<BigInt> hilbert_values(const BorelIdeal& b, int cutoff) {
  if (cutoff < 0) throw domain_error("cutoff must be nonnegative");
  if (b.is_unit()) return std::vector<BigInt>(static_cast<size_t>(cutoff) + 1, 0);
  return hilbert_series(b).values(cutoff);
}

BigInt multiplicity(const BorelIdeal& b) {
  if (b.is_zero() || b.is_unit())
    throw domain_error("multiplicity requires a nonzero proper ideal");
  const int top = b.nvars() - codim_pdim(b).codim;
  StanleyDecomposition decomp = stanley_decomposition(b);
  BigInt count = 0;
  for (const StanleySummand& s : decomp.summands)
    if (static_cast<int>(s.vars.size()) == top) ++count;
  return count;
}

std::map<int, std::vector<StanleySummand>> grouped_view(const StanleyDecomposition& d) {
  std::map<int, std::vector<StanleySummand>> groups;
  const int n = d.ambient.nvars();
  for (const StanleySummand& s : d.summands)
    groups[n - static_cast<int>(s.vars.size())].push_back(s);
  return groups;
}

} // namespace borel
