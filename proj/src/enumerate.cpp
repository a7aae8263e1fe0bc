#include "borel/enumerate.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace borel {

namespace {

// Extend a partial index sequence (positions 0..t-1 fixed) over all
// admissible completions, invoking `emit` on each full sequence.
template <typename Emit>
void dfs_extend(const std::vector<int>& bound, bool squarefree, std::vector<int>& seq,
                size_t t, Emit&& emit) {
  const size_t d = bound.size();
  if (t == d) {
    emit(seq);
    return;
  }
  int lo = t == 0 ? 1 : (squarefree ? seq[t - 1] + 1 : seq[t - 1]);
  for (int j = lo; j <= bound[t]; ++j) {
    seq[t] = j;
    dfs_extend(bound, squarefree, seq, t + 1, emit);
  }
}

// Partial sequences of length `len`, in DFS order.  Used to split the walk
// into independent branches for OpenMP.
std::vector<std::vector<int>> prefixes_of_length(const std::vector<int>& bound,
                                                 bool squarefree, size_t len) {
  std::vector<std::vector<int>> out;
  std::vector<int> seq(len);
  auto rec = [&](auto&& self, size_t t) -> void {
    if (t == len) {
      out.push_back(seq);
      return;
    }
    int lo = t == 0 ? 1 : (squarefree ? seq[t - 1] + 1 : seq[t - 1]);
    for (int j = lo; j <= bound[t]; ++j) {
      seq[t] = j;
      self(self, t + 1);
    }
  };
  rec(rec, 0);
  return out;
}

size_t parallel_grain() {
#ifdef _OPENMP
  return static_cast<size_t>(4 * std::max(1, omp_get_max_threads()));
#else
  return 1;
#endif
}

// Pick the shortest prefix length giving enough branches to share out.
size_t split_length(const std::vector<int>& bound, bool squarefree, size_t want) {
  size_t len = 0;
  size_t count = 1;
  while (len < bound.size() && count < want) {
    ++len;
    count = prefixes_of_length(bound, squarefree, len).size();
  }
  return len;
}

template <typename PerBranch>
void run_branches(const std::vector<int>& bound, bool squarefree, Exec exec,
                  std::vector<std::vector<int>>& prefixes, PerBranch&& body) {
  if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(prefixes.size()); ++b)
      body(static_cast<size_t>(b));
    return;
#endif
  }
  for (size_t b = 0; b < prefixes.size(); ++b) body(b);
}

} // namespace

std::vector<Monomial> expand_orbit(const Monomial& bound, bool squarefree, Exec exec) {
  const int n = bound.nvars();
  if (bound.is_unit()) return {Monomial(n)};
  if (squarefree && !bound.is_squarefree())
    throw domain_error("squarefree expansion requires a squarefree bound");
  const std::vector<int> f = bound.factorization();
  std::vector<int> seq(f.size());

  if (exec == Exec::serial) {
    std::vector<Monomial> out;
    dfs_extend(f, squarefree, seq, 0,
               [&](const std::vector<int>& s) { out.push_back(Monomial::from_factorization(n, s)); });
    return out;
  }

  size_t len = split_length(f, squarefree, parallel_grain());
  auto prefixes = prefixes_of_length(f, squarefree, len);
  std::vector<std::vector<Monomial>> per_branch(prefixes.size());
  run_branches(f, squarefree, exec, prefixes, [&](size_t b) {
    std::vector<int> s(f.size());
    std::copy(prefixes[b].begin(), prefixes[b].end(), s.begin());
    dfs_extend(f, squarefree, s, len, [&](const std::vector<int>& full) {
      per_branch[b].push_back(Monomial::from_factorization(n, full));
    });
  });

  std::vector<Monomial> out;
  for (auto& chunk : per_branch)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  return out;
}

std::vector<std::uint64_t> count_orbit_by_max(const Monomial& bound, bool squarefree,
                                              Exec exec) {
  const int n = bound.nvars();
  std::vector<std::uint64_t> counts(static_cast<size_t>(n), 0);
  if (bound.is_unit()) return counts;
  if (squarefree && !bound.is_squarefree())
    throw domain_error("squarefree expansion requires a squarefree bound");
  const std::vector<int> f = bound.factorization();

  if (exec == Exec::serial) {
    std::vector<int> seq(f.size());
    dfs_extend(f, squarefree, seq, 0,
               [&](const std::vector<int>& s) { ++counts[static_cast<size_t>(s.back()) - 1]; });
    return counts;
  }

  size_t len = split_length(f, squarefree, parallel_grain());
  auto prefixes = prefixes_of_length(f, squarefree, len);
  std::vector<std::vector<std::uint64_t>> per_branch(prefixes.size());
  run_branches(f, squarefree, exec, prefixes, [&](size_t b) {
    std::vector<std::uint64_t> local(static_cast<size_t>(n), 0);
    std::vector<int> s(f.size());
    std::copy(prefixes[b].begin(), prefixes[b].end(), s.begin());
    dfs_extend(f, squarefree, s, len, [&](const std::vector<int>& full) {
      ++local[static_cast<size_t>(full.back()) - 1];
    });
    per_branch[b] = std::move(local);
  });
  for (const auto& local : per_branch)
    for (size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
  return counts;
}

namespace {

// Descending-lex odometer over exponent vectors of fixed total degree:
// start with everything on x_1 and repeatedly shift weight rightward.
template <typename Visit>
void walk_monomials(int nvars, int degree, Visit&& visit) {
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  e[0] = degree;
  for (;;) {
    visit(e);
    int i = nvars - 2;
    while (i >= 0 && e[static_cast<size_t>(i)] == 0) --i;
    if (i < 0) return;
    --e[static_cast<size_t>(i)];
    int tail = e[static_cast<size_t>(nvars) - 1] + 1;
    e[static_cast<size_t>(nvars) - 1] = 0;
    e[static_cast<size_t>(i) + 1] = tail;
  }
}

} // namespace

void for_each_monomial(int nvars, int degree,
                       const std::function<void(const Monomial&)>& visit) {
  if (degree == 0) {
    visit(Monomial(nvars));
    return;
  }
  walk_monomials(nvars, degree, [&](const std::vector<int>& e) { visit(Monomial(nvars, e)); });
}

std::uint64_t count_monomials_where(int nvars, int degree,
                                    const std::function<bool(const Monomial&)>& pred,
                                    Exec exec) {
  if (degree == 0) return pred(Monomial(nvars)) ? 1 : 0;
  if (nvars == 1) return pred(Monomial(nvars, {degree})) ? 1 : 0;

  if (exec == Exec::serial) {
    std::uint64_t count = 0;
    walk_monomials(nvars, degree, [&](const std::vector<int>& e) {
      if (pred(Monomial(nvars, e))) ++count;
    });
    return count;
  }

  // Split on the exponent of x_1; the sub-walks are independent.
  std::vector<std::uint64_t> per_branch(static_cast<size_t>(degree) + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int e1 = 0; e1 <= degree; ++e1) {
    std::uint64_t local = 0;
    int rest = degree - e1;
    if (rest == 0) {
      std::vector<int> e(static_cast<size_t>(nvars), 0);
      e[0] = e1;
      if (pred(Monomial(nvars, e))) ++local;
    } else {
      walk_monomials(nvars - 1, rest, [&](const std::vector<int>& tail) {
        std::vector<int> e(static_cast<size_t>(nvars));
        e[0] = e1;
        std::copy(tail.begin(), tail.end(), e.begin() + 1);
        if (pred(Monomial(nvars, e))) ++local;
      });
    }
    per_branch[static_cast<size_t>(e1)] = local;
  }
  std::uint64_t count = 0;
  for (std::uint64_t c : per_branch) count += c;
  return count;
}

} // namespace borel
