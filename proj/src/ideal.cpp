#include "borel/ideal.hpp"

#include <algorithm>
#include <set>

#include "borel/catalan.hpp"
#include "borel/enumerate.hpp"

namespace borel {

// ---------------------------------------------------------------- WTable

void WTable::add(int degree, int max_index, BigInt count) {
  if (count == 0) return;
  entries_[{degree, max_index}] += std::move(count);
}

const BigInt& WTable::w(int degree, int max_index) const {
  static const BigInt zero = 0;
  auto it = entries_.find({degree, max_index});
  return it == entries_.end() ? zero : it->second;
}

BigInt WTable::w_le(int degree, int max_index) const {
  BigInt sum = 0;
  for (int i = 1; i <= max_index; ++i) sum += w(degree, i);
  return sum;
}

BigInt WTable::degree_total(int degree) const {
  BigInt sum = 0;
  for (const auto& [key, count] : entries_)
    if (key.first == degree) sum += count;
  return sum;
}

std::vector<int> WTable::degrees() const {
  std::vector<int> out;
  for (const auto& [key, count] : entries_)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  return out;
}

int WTable::max_index(int degree) const {
  int best = 0;
  for (const auto& [key, count] : entries_)
    if (key.first == degree) best = std::max(best, key.second);
  return best;
}

// ------------------------------------------------------------ BorelIdeal

namespace {

// Keep the Borel-order minimal elements: m is redundant as soon as it
// precedes some other element (then m lies in the ideal the other spans).
std::vector<Monomial> minimize_bgens(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), LexGreater{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& other : gens) {
      if (&other == &m || other == m) continue;
      if (borel_precedes(m, other)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(m);
  }
  return kept;
}

bool sqf_contains(const std::vector<Monomial>& bgens, const Monomial& m) {
  // m lies in the ideal iff for some generator t = x_{i_1}...x_{i_d}, m is
  // divisible by at least j variables of index <= i_j for every j.  Taking
  // the j smallest support indices of m is the greedy witness.
  std::vector<int> supp = m.support();
  for (const Monomial& t : bgens) {
    std::vector<int> f = t.factorization();
    if (f.size() > supp.size()) continue;
    bool ok = true;
    for (size_t j = 0; j < f.size(); ++j) {
      if (supp[j] > f[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

} // namespace

BorelIdeal::BorelIdeal(Kind kind, int nvars, std::vector<Monomial> bgens)
    : kind_(kind), nvars_(nvars), bgens_(std::move(bgens)),
      cache_(std::make_shared<Cache>()) {}

BorelIdeal BorelIdeal::borel(std::vector<Monomial> gens, int nvars) {
  if (nvars < 1) throw domain_error("nvars must be positive");
  for (Monomial& g : gens) g = g.with_nvars(nvars);
  return BorelIdeal(Kind::borel, nvars, minimize_bgens(std::move(gens)));
}

BorelIdeal BorelIdeal::sqfree(std::vector<Monomial> gens, int nvars) {
  if (nvars < 1) throw domain_error("nvars must be positive");
  for (Monomial& g : gens) {
    if (!g.is_squarefree())
      throw domain_error("squarefree Borel ideal requires squarefree generators");
    g = g.with_nvars(nvars);
  }
  return BorelIdeal(Kind::squarefree, nvars, minimize_bgens(std::move(gens)));
}

BorelIdeal BorelIdeal::zero(int nvars, Kind kind) {
  return BorelIdeal(kind, nvars, {});
}

BorelIdeal BorelIdeal::unit(int nvars, Kind kind) {
  return BorelIdeal(kind, nvars, {Monomial(nvars)});
}

int BorelIdeal::max_degree() const {
  int d = 0;
  for (const Monomial& m : bgens_) d = std::max(d, m.degree());
  return d;
}

bool BorelIdeal::contains(const Monomial& m) const {
  Monomial probe = m.nvars() == nvars_ ? m : m.with_nvars(nvars_);
  if (kind_ == Kind::squarefree) return sqf_contains(bgens_, probe);
  for (const Monomial& g : bgens_)
    if (borel_precedes(probe, g)) return true;
  return false;
}

const std::vector<Monomial>& BorelIdeal::min_gens() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (cache_->min_gens) return *cache_->min_gens;

  std::vector<Monomial> gens;
  if (is_zero()) {
    // nothing
  } else if (is_unit()) {
    gens.push_back(Monomial(nvars_));
  } else if (bgens_.size() == 1) {
    gens = expand_orbit(bgens_.front(), is_squarefree_kind());
  } else {
    std::set<Monomial, LexGreater> candidates;
    for (const Monomial& g : bgens_) {
      for (Monomial& m : expand_orbit(g, is_squarefree_kind()))
        candidates.insert(std::move(m));
    }
    // A candidate is a minimal generator unless a lower-degree element of
    // the ideal divides it, i.e. unless its (d-1)-truncation lies in B.
    for (const Monomial& m : candidates)
      if (!contains(m.truncated(m.degree() - 1))) gens.push_back(m);
  }
  cache_->min_gens = std::move(gens);
  return *cache_->min_gens;
}

const WTable& BorelIdeal::w_table() const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->w_table) return *cache_->w_table;
  }
  WTable w;
  if (!is_zero() && !is_unit()) {
    if (bgens_.size() == 1) {
      const Monomial& g = bgens_.front();
      w = is_squarefree_kind() ? w_sq_principal(g) : w_principal(g);
    } else {
      for (const Monomial& m : min_gens()) w.add(m.degree(), m.max_index(), 1);
    }
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->w_table) cache_->w_table = std::move(w);
  return *cache_->w_table;
}

// ------------------------------------------------------------ operations

namespace {

void require_compatible(const BorelIdeal& a, const BorelIdeal& b) {
  if (a.nvars() != b.nvars()) throw domain_error("ambient nvars mismatch");
  if (a.kind() != b.kind()) throw domain_error("cannot mix Borel and squarefree Borel ideals");
}

BorelIdeal rebuild(const BorelIdeal& like, std::vector<Monomial> gens) {
  return like.is_squarefree_kind() ? BorelIdeal::sqfree(std::move(gens), like.nvars())
                                   : BorelIdeal::borel(std::move(gens), like.nvars());
}

} // namespace

BorelIdeal sum(const BorelIdeal& a, const BorelIdeal& b) {
  require_compatible(a, b);
  std::vector<Monomial> gens = a.bgens();
  gens.insert(gens.end(), b.bgens().begin(), b.bgens().end());
  return rebuild(a, std::move(gens));
}

BorelIdeal intersect(const BorelIdeal& a, const BorelIdeal& b) {
  require_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return BorelIdeal::zero(a.nvars(), a.kind());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> gens;
  for (const Monomial& u : a.bgens())
    for (const Monomial& v : b.bgens()) gens.push_back(meet(u, v));
  return rebuild(a, std::move(gens));
}

BorelIdeal product(const BorelIdeal& a, const BorelIdeal& b) {
  require_compatible(a, b);
  if (a.is_squarefree_kind())
    throw domain_error("product is not defined for squarefree Borel ideals");
  if (a.is_zero() || b.is_zero()) return BorelIdeal::zero(a.nvars(), a.kind());
  std::vector<Monomial> gens;
  for (const Monomial& u : a.bgens())
    for (const Monomial& v : b.bgens()) gens.push_back(u * v);
  return rebuild(a, std::move(gens));
}

BorelIdeal colon_var(const BorelIdeal& b, int j) {
  if (b.is_squarefree_kind())
    throw domain_error("colon is implemented for the Borel kind only");
  if (j < 1 || j > b.nvars()) throw domain_error("variable index out of range");
  if (b.is_zero() || b.is_unit()) return b;
  std::vector<Monomial> gens;
  for (const Monomial& m : b.bgens()) {
    // With s minimal such that i_s >= j, (Borel(m):x_j) = Borel(m/x_{i_s});
    // when j exceeds every index (no such s), the colon is Borel(m) itself.
    // At j == max(m) the divided case applies.
    std::vector<int> f = m.factorization();
    auto it = std::find_if(f.begin(), f.end(), [j](int i) { return i >= j; });
    gens.push_back(it == f.end() ? m : m.divided_by_var(*it));
  }
  return rebuild(b, std::move(gens));
}

BorelIdeal saturate_var(const BorelIdeal& b, int j) {
  BorelIdeal current = b;
  for (;;) {
    BorelIdeal next = colon_var(current, j);
    if (next == current) return current;
    current = std::move(next);
  }
}

BorelIdeal truncate_ideal(const BorelIdeal& b, int d) {
  if (d < 1) throw domain_error("truncation degree must be at least 1");
  if (b.is_zero() || b.is_unit()) return b;
  std::vector<Monomial> gens;
  gens.reserve(b.bgens().size());
  for (const Monomial& m : b.bgens()) gens.push_back(m.truncated(d));
  return rebuild(b, std::move(gens));
}

CodimPdim codim_pdim(const BorelIdeal& b) {
  if (b.is_zero() || b.is_unit())
    throw domain_error("codim/pdim undefined for the zero and unit ideals");
  int codim = 0;
  int pdim = 0;
  for (const Monomial& m : b.bgens()) {
    codim = std::max(codim, m.min_index());
    if (b.is_squarefree_kind())
      pdim = std::max(pdim, m.max_index() - m.degree() + 1);
    else
      pdim = std::max(pdim, m.max_index());
  }
  return CodimPdim{codim, pdim};
}

BorelIdeal mmul(const BorelIdeal& b) {
  if (b.is_zero()) return b;
  std::vector<Monomial> gens;
  for (const Monomial& u : b.bgens()) {
    if (b.is_squarefree_kind()) {
      int s = 0;
      for (int i = b.nvars(); i >= 1; --i) {
        if (u.exponent(i) == 0) {
          s = i;
          break;
        }
      }
      if (s == 0)
        throw domain_error("squarefree m-multiple undefined: generator uses every variable");
      gens.push_back(u.times_var(s));
    } else {
      gens.push_back(u.times_var(b.nvars()));
    }
  }
  return rebuild(b, std::move(gens));
}

} // namespace borel
