#include "borel/poly.hpp"

#include <algorithm>

namespace borel {

// ----------------------------------------------------------------- UniPoly

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::one_minus_t_pow(int k) {
  if (k < 0) throw domain_error("negative power of (1-t)");
  std::vector<BigInt> coeffs(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) coeffs[static_cast<size_t>(i)] = (i % 2 == 0 ? 1 : -1) * binomial(k, i);
  return UniPoly(std::move(coeffs));
}

const BigInt& UniPoly::coeff(int k) const {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<size_t>(k)];
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<BigInt> coeffs(std::max(coeffs_.size(), other.coeffs_.size()));
  for (size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = coeff(static_cast<int>(i)) + other.coeff(static_cast<int>(i));
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
  std::vector<BigInt> coeffs(std::max(coeffs_.size(), other.coeffs_.size()));
  for (size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = coeff(static_cast<int>(i)) - other.coeff(static_cast<int>(i));
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return UniPoly();
  std::vector<BigInt> coeffs(coeffs_.size() + other.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j) coeffs[i + j] += coeffs_[i] * other.coeffs_[j];
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::times_t_pow(int k) const {
  if (is_zero()) return UniPoly();
  std::vector<BigInt> coeffs(static_cast<size_t>(k), 0);
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(coeffs));
}

BigInt UniPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<BigInt> expand_series(const UniPoly& num, const UniPoly& den, int count) {
  const BigInt& c0 = den.coeff(0);
  if (c0 != 1 && c0 != -1)
    throw domain_error("series denominator must have unit constant term");
  std::vector<BigInt> out(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    BigInt acc = num.coeff(k);
    for (int j = 1; j <= k; ++j) acc -= den.coeff(j) * out[static_cast<size_t>(k - j)];
    out[static_cast<size_t>(k)] = c0 == 1 ? acc : -acc;
  }
  return out;
}

// ------------------------------------------------------------------ BiPoly

void BiPoly::add_term(int t_exp, int u_exp, const BigInt& c) {
  if (c == 0) return;
  auto key = std::make_pair(t_exp, u_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::constant(BigInt c) { return term(std::move(c), 0, 0); }

BiPoly BiPoly::term(BigInt c, int t_exp, int u_exp) {
  BiPoly p;
  p.add_term(t_exp, u_exp, c);
  return p;
}

BiPoly BiPoly::one_plus_tu_pow(int k, int sign) {
  if (k < 0) throw domain_error("negative power of (1 +/- tu)");
  BiPoly p;
  for (int i = 0; i <= k; ++i) {
    BigInt c = binomial(k, i);
    if (sign < 0 && i % 2 == 1) c = -c;
    p.add_term(i, i, c);
  }
  return p;
}

const BigInt& BiPoly::coeff(int t_exp, int u_exp) const {
  static const BigInt zero = 0;
  auto it = terms_.find({t_exp, u_exp});
  return it == terms_.end() ? zero : it->second;
}

BiPoly BiPoly::operator+(const BiPoly& other) const {
  BiPoly out = *this;
  for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, c);
  return out;
}

BiPoly BiPoly::operator-(const BiPoly& other) const {
  BiPoly out = *this;
  for (const auto& [key, c] : other.terms_) out.add_term(key.first, key.second, -c);
  return out;
}

BiPoly BiPoly::operator*(const BiPoly& other) const {
  BiPoly out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : other.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BiPoly BiPoly::operator*(const BigInt& scalar) const {
  BiPoly out;
  if (scalar == 0) return out;
  for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, c * scalar);
  return out;
}

BiPoly BiPoly::truncated(int total_degree) const {
  BiPoly out;
  for (const auto& [key, c] : terms_)
    if (key.first + key.second <= total_degree) out.add_term(key.first, key.second, c);
  return out;
}

UniPoly BiPoly::at_u1() const {
  std::vector<BigInt> coeffs;
  for (const auto& [key, c] : terms_) {
    if (key.first >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(key.first) + 1);
    coeffs[static_cast<size_t>(key.first)] += c;
  }
  return UniPoly(std::move(coeffs));
}

// ------------------------------------------------------------ Rational series

BiPoly RationalBiSeries::expand(int total_degree) const {
  const BigInt& c0 = denominator.coeff(0, 0);
  if (c0 != 1 && c0 != -1)
    throw domain_error("series denominator must have unit constant term");
  // Solve den * out = num slice by slice in total degree: the degree-d
  // slice of the residue divided by the unit constant term is the next
  // slice of the quotient.
  BiPoly out;
  BiPoly residue = numerator.truncated(total_degree);
  for (int deg = 0; deg <= total_degree; ++deg) {
    BiPoly slice;
    for (const auto& [key, c] : residue.terms())
      if (key.first + key.second == deg)
        slice = slice + BiPoly::term(c0 == 1 ? c : -c, key.first, key.second);
    if (slice.is_zero()) continue;
    out = out + slice;
    residue = (residue - slice * denominator).truncated(total_degree);
  }
  return out;
}

std::vector<BigInt> RationalBiSeries::expand_at_u1(int count) const {
  return expand_series(numerator.at_u1(), denominator.at_u1(), count);
}

bool same_series(const RationalBiSeries& a, const RationalBiSeries& b) {
  return a.numerator * b.denominator == b.numerator * a.denominator;
}

// -------------------------------------------------------------- HilbertSeries

std::vector<BigInt> HilbertSeries::values(int cutoff) const {
  std::vector<BigInt> out(static_cast<size_t>(cutoff) + 1, 0);
  for (const Term& term : terms) {
    if (term.pole == 0) {
      if (term.degree <= cutoff) out[static_cast<size_t>(term.degree)] += term.coeff;
      continue;
    }
    for (int k = term.degree; k <= cutoff; ++k)
      out[static_cast<size_t>(k)] += term.coeff * binomial(k - term.degree + term.pole - 1, term.pole - 1);
  }
  return out;
}

} // namespace borel
