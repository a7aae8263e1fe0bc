#include "borel/primes.hpp"

#include <algorithm>
#include <set>

namespace borel {

namespace {

void require_proper(const BorelIdeal& b) {
  if (b.is_zero() || b.is_unit())
    throw domain_error("associated primes undefined for the zero and unit ideals");
  if (b.is_squarefree_kind())
    throw domain_error("associated primes of a squarefree Borel ideal: use the Alexander dual");
}

std::vector<int> sorted(std::set<int> s) { return {s.begin(), s.end()}; }

} // namespace

bool is_p_socle(const BorelIdeal& b, const Monomial& mu, int p) {
  if (b.is_squarefree_kind())
    throw domain_error("socle test requires the Borel kind");
  if (p < 1 || p > b.nvars()) throw domain_error("prime index out of range");
  if (b.contains(mu)) return false;
  if (!b.contains(mu.times_var(p))) return false;
  if (p == b.nvars()) return true;
  // Anything in later variables annihilating mu Borel-moves to a power of
  // x_{p+1}, and a generator needs at most max_degree copies of it.
  Monomial probe = mu;
  for (int k = 0; k < b.max_degree(); ++k) probe = probe.times_var(p + 1);
  return !b.contains(probe);
}

std::vector<int> ass_socle(const BorelIdeal& b) {
  require_proper(b);
  std::set<int> primes;
  for (int p = 1; p <= b.nvars(); ++p) {
    for (const Monomial& m : b.bgens()) {
      if (m.exponent(p) == 0) continue;
      if (is_p_socle(b, m.divided_by_var(p), p)) {
        primes.insert(p);
        break;
      }
    }
  }
  return sorted(std::move(primes));
}

std::vector<BorelIdeal> truncation_trace(const BorelIdeal& b) {
  std::vector<BorelIdeal> trace;
  for (int i = 1; i <= b.max_degree(); ++i) trace.push_back(truncate_ideal(b, i));
  return trace;
}

std::vector<int> ass_trunc(const BorelIdeal& b) {
  require_proper(b);
  std::set<int> primes;
  const std::vector<BorelIdeal> trace = truncation_trace(b);
  for (size_t idx = 0; idx < trace.size(); ++idx) {
    const int degree = static_cast<int>(idx) + 1;
    for (const Monomial& m : trace[idx].bgens())
      if (m.degree() == degree) primes.insert(m.max_index());
  }
  return sorted(std::move(primes));
}

std::vector<int> ass_principal(const Monomial& m) {
  if (m.is_unit()) throw domain_error("associated primes undefined for the unit generator");
  return m.support();
}

BorelIdeal principal_from_primes(const std::vector<int>& ps, int nvars) {
  Monomial m(nvars);
  for (int p : ps) m = m.times_var(p);
  return BorelIdeal::borel({m}, nvars);
}

BorelIdeal alexander_dual_principal(const Monomial& m, int nvars) {
  if (!m.is_squarefree()) throw domain_error("Alexander dual requires a squarefree monomial");
  if (m.is_unit()) throw domain_error("Alexander dual undefined for the unit ideal");
  const std::vector<int> f = m.factorization();
  std::vector<Monomial> gens;
  for (size_t j = 0; j < f.size(); ++j) {
    // Generator x_{j+1} x_{j+2} ... x_{i_j}; redundant when the next index
    // follows immediately (i_{j+1} == i_j + 1).
    if (j + 1 < f.size() && f[j + 1] == f[j] + 1) continue;
    std::vector<int> run;
    for (int v = static_cast<int>(j) + 1; v <= f[j]; ++v) run.push_back(v);
    gens.push_back(Monomial::from_factorization(nvars, run));
  }
  return BorelIdeal::sqfree(std::move(gens), nvars);
}

BorelIdeal alexander_dual(const BorelIdeal& b) {
  if (!b.is_squarefree_kind())
    throw domain_error("Alexander dual is defined for squarefree Borel ideals");
  if (b.is_zero() || b.is_unit())
    throw domain_error("Alexander dual undefined for the zero and unit ideals");
  BorelIdeal dual = alexander_dual_principal(b.bgens().front(), b.nvars());
  for (size_t i = 1; i < b.bgens().size(); ++i)
    dual = intersect(dual, alexander_dual_principal(b.bgens()[i], b.nvars()));
  return dual;
}

} // namespace borel
