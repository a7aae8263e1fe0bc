#pragma once

#include <random>
#include <vector>

#include "borel/ideal.hpp"
#include "borel/monomial.hpp"

namespace borel::testing {

// Deterministic corpus: n in 2..5, 1-3 Borel generators, degrees 1..4,
// drawn from a fixed-seed mt19937 so failures reproduce exactly.
inline constexpr unsigned kCorpusSeed = 0x5eed01u;

inline std::vector<BorelIdeal> random_borel_corpus(int count, unsigned seed = kCorpusSeed) {
  std::mt19937 rng(seed);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  std::vector<BorelIdeal> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const int n = draw(2, 5);
    const int k = draw(1, 3);
    std::vector<Monomial> gens;
    for (int g = 0; g < k; ++g) {
      const int d = draw(1, 4);
      std::vector<int> idx(static_cast<size_t>(d));
      for (int& v : idx) v = draw(1, n);
      std::sort(idx.begin(), idx.end());
      gens.push_back(Monomial::from_factorization(n, idx));
    }
    out.push_back(BorelIdeal::borel(std::move(gens), n));
  }
  return out;
}

// Squarefree companion corpus: strictly increasing index picks.
inline std::vector<BorelIdeal> random_sqfree_corpus(int count, unsigned seed = kCorpusSeed + 1) {
  std::mt19937 rng(seed);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
  std::vector<BorelIdeal> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    const int n = draw(3, 6);
    const int k = draw(1, 3);
    std::vector<Monomial> gens;
    for (int g = 0; g < k; ++g) {
      const int d = draw(1, std::min(4, n));
      std::vector<int> pool(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i + 1;
      std::vector<int> idx;
      for (int take = 0; take < d; ++take) {
        int at = draw(0, static_cast<int>(pool.size()) - 1);
        idx.push_back(pool[static_cast<size_t>(at)]);
        pool.erase(pool.begin() + at);
      }
      std::sort(idx.begin(), idx.end());
      gens.push_back(Monomial::from_factorization(n, idx));
    }
    out.push_back(BorelIdeal::sqfree(std::move(gens), n));
  }
  return out;
}

// All monomials of the exact degree over n variables, descending lex.
inline std::vector<Monomial> all_monomials(int nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars) {
      if (left == 0) out.emplace_back(nvars, e);
      return;
    }
    for (int take = left; take >= 0; --take) {
      e[static_cast<size_t>(var)] = take;
      self(self, var + 1, left - take);
    }
    e[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0, degree);
  return out;
}

// Degrees 0..max_degree inclusive.
inline std::vector<Monomial> all_monomials_upto(int nvars, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto batch = all_monomials(nvars, d);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

} // namespace borel::testing
