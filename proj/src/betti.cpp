#include "borel/betti.hpp"

#include <algorithm>

#include "borel/catalan.hpp"

namespace borel {

// -------------------------------------------------------------- BettiTable

void BettiTable::add(int i, int j, BigInt count) {
  if (count == 0) return;
  auto key = std::make_pair(i, j);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, std::move(count));
  } else {
    it->second += count;
    if (it->second == 0) entries_.erase(it);
  }
}

const BigInt& BettiTable::entry(int i, int j) const {
  static const BigInt zero = 0;
  auto it = entries_.find({i, j});
  return it == entries_.end() ? zero : it->second;
}

BettiTable BettiTable::to_quotient() const {
  if (kind_ == Kind::quotient) return *this;
  BettiTable out(Kind::quotient);
  out.add(0, 0, 1);
  for (const auto& [key, c] : entries_) out.add(key.first + 1, key.second, c);
  return out;
}

BettiTable BettiTable::to_ideal() const {
  if (kind_ == Kind::ideal) return *this;
  BettiTable out(Kind::ideal);
  for (const auto& [key, c] : entries_)
    if (key.first >= 1) out.add(key.first - 1, key.second, c);
  return out;
}

std::vector<BigInt> BettiTable::totals() const {
  std::vector<BigInt> out(static_cast<size_t>(max_homological_index()) + 1, 0);
  for (const auto& [key, c] : entries_) out[static_cast<size_t>(key.first)] += c;
  return out;
}

int BettiTable::max_homological_index() const {
  int best = 0;
  for (const auto& [key, c] : entries_) best = std::max(best, key.first);
  return best;
}

int BettiTable::max_row() const {
  int best = 0;
  for (const auto& [key, c] : entries_) best = std::max(best, key.second - key.first);
  return best;
}

BettiTable BettiTable::operator+(const BettiTable& other) const {
  if (kind_ != other.kind_) throw domain_error("Betti table kind mismatch");
  BettiTable out = *this;
  for (const auto& [key, c] : other.entries_) out.add(key.first, key.second, c);
  return out;
}

BettiTable BettiTable::operator-(const BettiTable& other) const {
  if (kind_ != other.kind_) throw domain_error("Betti table kind mismatch");
  BettiTable out = *this;
  for (const auto& [key, c] : other.entries_) out.add(key.first, key.second, -c);
  return out;
}

UniPoly BettiTable::alternating_sum() const {
  std::vector<BigInt> coeffs;
  for (const auto& [key, c] : entries_) {
    if (key.second >= static_cast<int>(coeffs.size()))
      coeffs.resize(static_cast<size_t>(key.second) + 1);
    if (key.first % 2 == 0)
      coeffs[static_cast<size_t>(key.second)] += c;
    else
      coeffs[static_cast<size_t>(key.second)] -= c;
  }
  return UniPoly(std::move(coeffs));
}

// ------------------------------------------------------------ EK formulas

namespace {

void require_proper_ideal(const BorelIdeal& b) {
  if (b.is_zero() || b.is_unit())
    throw domain_error("Betti numbers undefined for the zero and unit ideals");
}

} // namespace

BettiTable betti_ek(const BorelIdeal& b) {
  require_proper_ideal(b);
  BettiTable table(BettiTable::Kind::ideal);
  const bool sqf = b.is_squarefree_kind();
  for (const auto& [key, w] : b.w_table().entries()) {
    const auto [d, k] = key;
    const int width = sqf ? k - d : k - 1;
    for (int i = 0; i <= width; ++i) table.add(i, d + i, w * binomial(width, i));
  }
  return table;
}

BettiTable betti_w(const WTable& w, bool squarefree) {
  std::vector<int> degrees = w.degrees();
  if (degrees.size() != 1)
    throw domain_error("betti_w requires a single-degree w-vector");
  const int d = degrees.front();
  BettiTable table(BettiTable::Kind::ideal);
  for (const auto& [key, count] : w.entries()) {
    const int width = squarefree ? key.second - d : key.second - 1;
    for (int i = 0; i <= width; ++i) table.add(i, d + i, count * binomial(width, i));
  }
  return table;
}

BettiTable betti_ie(const BorelIdeal& b) {
  require_proper_ideal(b);
  if (b.is_squarefree_kind())
    throw domain_error("inclusion-exclusion Betti path is implemented for the Borel kind");

  if (b.bgens().size() == 1)
    return betti_w(w_principal(b.bgens().front()));

  // Split off a generator of largest degree.
  std::vector<Monomial> gens = b.bgens();
  auto it = std::max_element(gens.begin(), gens.end(),
                             [](const Monomial& a, const Monomial& c) {
                               return a.degree() < c.degree();
                             });
  Monomial last = *it;
  gens.erase(it);

  BorelIdeal rest = BorelIdeal::borel(gens, b.nvars());
  BorelIdeal principal = BorelIdeal::borel({last}, b.nvars());
  BorelIdeal overlap = intersect(principal, rest);
  return betti_ie(rest) + betti_ie(principal) - betti_ie(overlap);
}

// -------------------------------------------------------- Poincare series

BiPoly poincare_ideal(const BorelIdeal& b) {
  require_proper_ideal(b);
  const bool sqf = b.is_squarefree_kind();
  BiPoly p;
  for (const auto& [key, w] : b.w_table().entries()) {
    const auto [d, k] = key;
    const int width = sqf ? k - d : k - 1;
    p = p + BiPoly::one_plus_tu_pow(width) * BiPoly::term(w, 0, d);
  }
  return p;
}

namespace {

// f(1+tu) for f(x) = sum_k w_k x^k over the single generating degree.
BiPoly f_at_one_plus_tu(const WTable& w, int d) {
  BiPoly out;
  for (const auto& [key, count] : w.entries()) {
    if (key.first != d) continue;
    out = out + BiPoly::one_plus_tu_pow(key.second) * count;
  }
  return out;
}

} // namespace

RationalBiSeries poincare_residue_field(const BorelIdeal& b) {
  require_proper_ideal(b);
  const std::vector<int> degrees = b.w_table().degrees();
  if (degrees.size() != 1)
    throw domain_error("residue-field series requires an equigenerated ideal");
  const int d = degrees.front();
  if (d < 2)
    throw domain_error("residue-field series requires generators of degree at least 2");

  BiPoly f = f_at_one_plus_tu(b.w_table(), d);
  BiPoly t2ud = BiPoly::term(1, 2, d);
  const int n = b.nvars();
  if (b.is_squarefree_kind()) {
    return RationalBiSeries{BiPoly::one_plus_tu_pow(n + d),
                            BiPoly::one_plus_tu_pow(d) - t2ud * f};
  }
  return RationalBiSeries{BiPoly::one_plus_tu_pow(n + 1),
                          BiPoly::one_plus_tu_pow(1) - t2ud * f};
}

RationalBiSeries poincare_exterior(const BorelIdeal& b) {
  require_proper_ideal(b);
  if (!b.is_squarefree_kind())
    throw domain_error("exterior-algebra series is defined for squarefree Borel ideals");
  int q = 0;
  for (const auto& [key, count] : b.w_table().entries()) q = std::max(q, key.second);
  BiPoly num;
  for (const auto& [key, count] : b.w_table().entries()) {
    const auto [d, k] = key;
    num = num + BiPoly::one_plus_tu_pow(q - k, -1) * BiPoly::term(count, 0, d);
  }
  return RationalBiSeries{num, BiPoly::one_plus_tu_pow(q, -1)};
}

// --------------------------------------------- closed forms and ppt numbers

BigInt closed_form_bi(int n, int i) {
  if (n < 1 || i < 0) throw domain_error("closed form requires n >= 1, i >= 0");
  BigInt num = binomial(2 * n, n - i - 1) * binomial(n + i - 1, i);
  if (num % n != 0) throw internal_error("closed-form Betti division is not exact");
  return num / n;
}

std::vector<std::vector<BigInt>> ppt_numbers(int ell) {
  if (ell < 1) throw domain_error("ppt_numbers requires ell >= 1");
  std::vector<std::vector<BigInt>> rows(static_cast<size_t>(ell) + 1);

  // Betti route: totals of Borel(x_1...x_{l+1}), shared per row.
  std::vector<std::vector<BigInt>> betti_totals(static_cast<size_t>(ell) + 1);
  for (int l = 1; l <= ell; ++l) {
    std::vector<int> run(static_cast<size_t>(l) + 1);
    for (int v = 0; v <= l; ++v) run[static_cast<size_t>(v)] = v + 1;
    Monomial m = Monomial::from_factorization(l + 1, run);
    betti_totals[static_cast<size_t>(l)] =
        betti_ek(BorelIdeal::borel({m}, l + 1)).totals();
  }

  for (int l = 1; l <= ell; ++l) {
    auto& row = rows[static_cast<size_t>(l)];
    row.resize(static_cast<size_t>(l) + 1);
    const BigInt cl = catalan_number(l);
    for (int i = 0; i <= l; ++i) {
      BigInt via_recursion;
      if (i == 0) {
        via_recursion = cl;
      } else if (i == 1) {
        via_recursion = (l + 1) * cl;
      } else {
        BigInt prev = 0;
        if (l >= 2 && i - 2 <= l - 1) prev = rows[static_cast<size_t>(l) - 1][static_cast<size_t>(i) - 2];
        via_recursion = binomial(l + 1, i) * cl - prev;
      }
      const BigInt& via_betti = betti_totals[static_cast<size_t>(l)][static_cast<size_t>(l - i)];
      BigInt via_closed = closed_form_bi(l + 1, l - i);
      if (via_recursion != via_betti || via_recursion != via_closed)
        throw internal_error("pseudo-triangulation counts disagree between routes");
      row[static_cast<size_t>(i)] = via_recursion;
    }
  }
  return rows;
}

} // namespace borel
