#include "borel/oracle.hpp"

#include <algorithm>
#include <set>

namespace borel {
namespace oracle {

namespace {

std::vector<Monomial> sorted_desc(std::set<Monomial, LexGreater> s) {
  return {s.begin(), s.end()};
}

} // namespace

bool NaiveMonomialIdeal::operator==(const NaiveMonomialIdeal& other) const {
  if (nvars != other.nvars) return false;
  NaiveMonomialIdeal a = minimized(*this);
  NaiveMonomialIdeal b = minimized(other);
  return a.gens == b.gens;
}

bool naive_membership(const NaiveMonomialIdeal& ideal, const Monomial& mu) {
  for (const Monomial& g : ideal.gens)
    if (g.divides(mu)) return true;
  return false;
}

NaiveMonomialIdeal minimized(NaiveMonomialIdeal ideal) {
  std::set<Monomial, LexGreater> unique(ideal.gens.begin(), ideal.gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& g : unique) {
    bool redundant = false;
    for (const Monomial& other : unique) {
      if (other == g) continue;
      if (other.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return NaiveMonomialIdeal{ideal.nvars, std::move(kept)};
}

NaiveMonomialIdeal naive_borel_closure(const std::vector<Monomial>& t, int nvars, int dmax) {
  for (const Monomial& m : t)
    if (m.degree() > dmax) throw domain_error("dmax below a generator degree");

  std::set<Monomial, LexGreater> seen;
  std::vector<Monomial> work;
  for (const Monomial& m : t) {
    Monomial widened = m.with_nvars(nvars);
    if (seen.insert(widened).second) work.push_back(widened);
  }
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    // single Borel moves x_j -> x_i, i < j
    for (int j = 2; j <= nvars; ++j) {
      if (m.exponent(j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        Monomial moved = m.divided_by_var(j).times_var(i);
        if (seen.insert(moved).second) work.push_back(moved);
      }
    }
    // stay within the degree budget while multiplying up
    if (m.degree() < dmax) {
      for (int i = 1; i <= nvars; ++i) {
        Monomial up = m.times_var(i);
        if (seen.insert(up).second) work.push_back(up);
      }
    }
  }
  return minimized(NaiveMonomialIdeal{nvars, {seen.begin(), seen.end()}});
}

NaiveMonomialIdeal naive_sq_borel_closure(const std::vector<Monomial>& t, int nvars) {
  std::set<Monomial, LexGreater> found;
  for (const Monomial& m : t) {
    if (!m.is_squarefree()) throw domain_error("squarefree closure requires squarefree input");
    const std::vector<int> bound = m.factorization();
    const int d = m.degree();
    // all strictly increasing index sequences, checked entrywise
    std::vector<int> pick(static_cast<size_t>(d));
    auto rec = [&](auto&& self, int pos, int lo) -> void {
      if (pos == d) {
        found.insert(Monomial::from_factorization(nvars, pick));
        return;
      }
      for (int v = lo; v <= nvars; ++v) {
        if (v > bound[static_cast<size_t>(pos)]) break;
        pick[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, v + 1);
      }
    };
    if (d == 0)
      found.insert(Monomial(nvars));
    else
      rec(rec, 0, 1);
  }
  return minimized(NaiveMonomialIdeal{nvars, {found.begin(), found.end()}});
}

std::vector<int> naive_ass(const NaiveMonomialIdeal& expanded, int dmax) {
  const int n = expanded.nvars;
  std::set<int> primes;
  for (int deg = 0; deg <= dmax; ++deg) {
    for_each_monomial(n, deg, [&](const Monomial& mu) {
      if (naive_membership(expanded, mu)) return;
      // annihilator type: which variables push mu inside?
      int p = 0;
      bool prefix = true;
      for (int j = 1; j <= n; ++j) {
        if (naive_membership(expanded, mu.times_var(j))) {
          if (j != p + 1) prefix = false;
          p = j;
        }
      }
      if (p == 0 || !prefix) return;
      if (p < n) {
        Monomial probe = mu;
        for (int k = 0; k < dmax; ++k) probe = probe.times_var(p + 1);
        if (naive_membership(expanded, probe)) return;
      }
      primes.insert(p);
    });
  }
  return {primes.begin(), primes.end()};
}

BigInt naive_std_count(const NaiveMonomialIdeal& ideal, int t, Exec exec) {
  return BigInt(count_monomials_where(
      ideal.nvars, t, [&](const Monomial& mu) { return !naive_membership(ideal, mu); }, exec));
}

NaiveMonomialIdeal naive_ideal_op(const NaiveMonomialIdeal& a, const NaiveMonomialIdeal& b,
                                  IdealOp op, int colon_var_index) {
  if (op != IdealOp::colon && a.nvars != b.nvars) throw domain_error("ambient nvars mismatch");
  std::vector<Monomial> gens;
  switch (op) {
    case IdealOp::intersect:
      for (const Monomial& u : a.gens)
        for (const Monomial& v : b.gens) gens.push_back(lcm(u, v));
      break;
    case IdealOp::product:
      for (const Monomial& u : a.gens)
        for (const Monomial& v : b.gens) gens.push_back(u * v);
      break;
    case IdealOp::colon:
      for (const Monomial& u : a.gens)
        gens.push_back(u.exponent(colon_var_index) > 0 ? u.divided_by_var(colon_var_index) : u);
      break;
  }
  return minimized(NaiveMonomialIdeal{a.nvars, std::move(gens)});
}

NaiveMonomialIdeal naive_alexander_dual(const NaiveMonomialIdeal& sqf) {
  const int n = sqf.nvars;
  if (n > 30) throw domain_error("naive dual limited to small nvars");
  std::vector<unsigned> supports;
  for (const Monomial& g : sqf.gens) {
    if (!g.is_squarefree()) throw domain_error("naive dual requires squarefree generators");
    unsigned mask = 0;
    for (int v : g.support()) mask |= 1u << (v - 1);
    supports.push_back(mask);
  }
  // all covers, then inclusion-minimal ones
  std::vector<unsigned> covers;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool hits_all = true;
    for (unsigned s : supports) {
      if ((s & mask) == 0) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) covers.push_back(mask);
  }
  std::set<Monomial, LexGreater> gens;
  for (unsigned c : covers) {
    bool minimal = true;
    for (unsigned other : covers) {
      if (other != c && (other & c) == other) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    std::vector<int> indices;
    for (int v = 1; v <= n; ++v)
      if (c & (1u << (v - 1))) indices.push_back(v);
    gens.insert(Monomial::from_factorization(n, indices));
  }
  return NaiveMonomialIdeal{n, sorted_desc(std::move(gens))};
}

} // namespace oracle
} // namespace borel
