#include "borel/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace borel {

namespace {

void check_nvars(int nvars) {
  if (nvars < 1) throw domain_error("nvars must be positive");
}

} // namespace

Monomial::Monomial(int nvars) : nvars_(nvars), degree_(0), exps_(nvars, 0) {
  check_nvars(nvars);
}

Monomial::Monomial(int nvars, std::vector<int> exponents)
    : nvars_(nvars), degree_(0), exps_(std::move(exponents)) {
  check_nvars(nvars);
  if (static_cast<int>(exps_.size()) != nvars)
    throw domain_error("exponent vector length does not match nvars");
  for (int e : exps_) {
    if (e < 0) throw domain_error("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(int nvars, int index) {
  check_nvars(nvars);
  if (index < 1 || index > nvars) throw domain_error("variable index out of range");
  std::vector<int> exps(nvars, 0);
  exps[static_cast<size_t>(index) - 1] = 1;
  return Monomial(nvars, std::move(exps));
}

Monomial Monomial::from_factorization(int nvars, std::span<const int> indices) {
  check_nvars(nvars);
  std::vector<int> exps(nvars, 0);
  int prev = 1;
  for (int i : indices) {
    if (i < prev) throw domain_error("factorization indices must be sorted ascending");
    if (i > nvars) throw domain_error("variable index out of range");
    ++exps[static_cast<size_t>(i) - 1];
    prev = i;
  }
  return Monomial(nvars, std::move(exps));
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::factorization() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(degree_));
  for (int i = 1; i <= nvars_; ++i)
    out.insert(out.end(), static_cast<size_t>(exponent(i)), i);
  return out;
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 1; i <= nvars_; ++i)
    if (exponent(i) > 0) out.push_back(i);
  return out;
}

int Monomial::min_index() const {
  for (int i = 1; i <= nvars_; ++i)
    if (exponent(i) > 0) return i;
  return 0;
}

int Monomial::max_index() const {
  for (int i = nvars_; i >= 1; --i)
    if (exponent(i) > 0) return i;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw domain_error("ambient nvars mismatch");
  std::vector<int> exps(exps_);
  for (int i = 0; i < nvars_; ++i) exps[static_cast<size_t>(i)] += other.exps_[static_cast<size_t>(i)];
  return Monomial(nvars_, std::move(exps));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw domain_error("ambient nvars mismatch");
  for (int i = 0; i < nvars_; ++i)
    if (exps_[static_cast<size_t>(i)] > other.exps_[static_cast<size_t>(i)]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) throw domain_error("quotient is not a monomial");
  std::vector<int> exps(exps_);
  for (int i = 0; i < nvars_; ++i) exps[static_cast<size_t>(i)] -= other.exps_[static_cast<size_t>(i)];
  return Monomial(nvars_, std::move(exps));
}

Monomial Monomial::times_var(int i) const {
  if (i < 1 || i > nvars_) throw domain_error("variable index out of range");
  std::vector<int> exps(exps_);
  ++exps[static_cast<size_t>(i) - 1];
  return Monomial(nvars_, std::move(exps));
}

Monomial Monomial::divided_by_var(int i) const {
  if (i < 1 || i > nvars_) throw domain_error("variable index out of range");
  if (exponent(i) == 0) throw domain_error("variable does not divide monomial");
  std::vector<int> exps(exps_);
  --exps[static_cast<size_t>(i) - 1];
  return Monomial(nvars_, std::move(exps));
}

Monomial Monomial::truncated(int d) const {
  if (d < 0) throw domain_error("truncation degree must be nonnegative");
  if (d >= degree_) return *this;
  std::vector<int> exps(static_cast<size_t>(nvars_), 0);
  int taken = 0;
  for (int i = 1; i <= nvars_ && taken < d; ++i) {
    int take = std::min(exponent(i), d - taken);
    exps[static_cast<size_t>(i) - 1] = take;
    taken += take;
  }
  return Monomial(nvars_, std::move(exps));
}

Monomial Monomial::with_nvars(int nvars) const {
  if (nvars < max_index() || nvars < 1)
    throw domain_error("cannot shrink ambient ring below max index");
  std::vector<int> exps(exps_);
  exps.resize(static_cast<size_t>(nvars), 0);
  return Monomial(nvars, std::move(exps));
}

Extremes extremes(const Monomial& m) {
  if (m.is_unit()) throw domain_error("extremes of the monomial 1 are undefined");
  return Extremes{m.min_index(), m.max_index(), m.degree()};
}

bool borel_precedes(const Monomial& m1, const Monomial& m2) {
  if (m1.nvars() != m2.nvars()) throw domain_error("ambient nvars mismatch");
  if (m1.degree() < m2.degree()) return false;
  // i_j <= k_j for all j <= deg(m2) is equivalent to prefix-count domination:
  // for every v, m1 has at least as many factors with index <= v as m2 does.
  int c1 = 0, c2 = 0;
  for (int v = 1; v <= m1.nvars(); ++v) {
    c1 += m1.exponent(v);
    c2 += m2.exponent(v);
    if (c1 < c2) return false;
  }
  return true;
}

Monomial meet(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars()) throw domain_error("ambient nvars mismatch");
  const Monomial& longer = u.degree() >= v.degree() ? u : v;
  const Monomial& shorter = u.degree() >= v.degree() ? v : u;
  std::vector<int> fl = longer.factorization();
  std::vector<int> fs = shorter.factorization();
  for (size_t t = 0; t < fs.size(); ++t) fl[t] = std::min(fl[t], fs[t]);
  return Monomial::from_factorization(u.nvars(), fl);
}

Monomial tau(const Monomial& m) {
  if (!m.is_squarefree()) throw domain_error("tau requires a squarefree monomial");
  std::vector<int> f = m.factorization();
  for (size_t j = 0; j < f.size(); ++j) f[j] -= static_cast<int>(j);
  return Monomial::from_factorization(m.nvars(), f);
}

Monomial tau_inverse(const Monomial& m) {
  std::vector<int> f = m.factorization();
  for (size_t j = 0; j < f.size(); ++j) {
    f[j] += static_cast<int>(j);
    if (f[j] > m.nvars())
      throw domain_error("tau_inverse output index exceeds ambient nvars");
  }
  return Monomial::from_factorization(m.nvars(), f);
}

int lex_compare(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw domain_error("ambient nvars mismatch");
  for (int i = 1; i <= a.nvars(); ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
  }
  return 0;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw domain_error("ambient nvars mismatch");
  std::vector<int> exps(static_cast<size_t>(a.nvars()));
  for (int i = 1; i <= a.nvars(); ++i)
    exps[static_cast<size_t>(i) - 1] = std::max(a.exponent(i), b.exponent(i));
  return Monomial(a.nvars(), std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw domain_error("ambient nvars mismatch");
  std::vector<int> exps(static_cast<size_t>(a.nvars()));
  for (int i = 1; i <= a.nvars(); ++i)
    exps[static_cast<size_t>(i) - 1] = std::min(a.exponent(i), b.exponent(i));
  return Monomial(a.nvars(), std::move(exps));
}

} // namespace borel
