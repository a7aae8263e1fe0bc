#pragma once

#include <map>
#include <utility>
#include <vector>

#include "borel/bigint.hpp"
#include "borel/errors.hpp"

namespace borel {

/// Univariate polynomial with exact integer coefficients, dense ascending.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  static UniPoly constant(BigInt c) { return UniPoly({std::move(c)}); }
  /// (1 - t)^k for k >= 0.
  static UniPoly one_minus_t_pow(int k);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  UniPoly times_t_pow(int k) const;
  bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

  BigInt eval(const BigInt& x) const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// First `count` coefficients of the power series num / den; den must have
/// constant term 1 or -1.
std::vector<BigInt> expand_series(const UniPoly& num, const UniPoly& den, int count);

/// Polynomial in t and u with exact integer coefficients, sparse.
class BiPoly {
public:
  BiPoly() = default;
  static BiPoly constant(BigInt c);
  static BiPoly term(BigInt c, int t_exp, int u_exp);
  /// (1 + s*t*u)^k with s = +1 or -1.
  static BiPoly one_plus_tu_pow(int k, int sign = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
  const BigInt& coeff(int t_exp, int u_exp) const;

  BiPoly operator+(const BiPoly& other) const;
  BiPoly operator-(const BiPoly& other) const;
  BiPoly operator*(const BiPoly& other) const;
  BiPoly operator*(const BigInt& scalar) const;
  bool operator==(const BiPoly& other) const { return terms_ == other.terms_; }

  /// Drop terms of total degree above the cutoff.
  BiPoly truncated(int total_degree) const;
  /// Collapse u: the univariate polynomial in t obtained at u = 1.
  UniPoly at_u1() const;

private:
  void add_term(int t_exp, int u_exp, const BigInt& c);
  std::map<std::pair<int, int>, BigInt> terms_;
};

/// Formal quotient of bivariate polynomials, expandable as a power series
/// (denominator constant term must be a unit).
struct RationalBiSeries {
  BiPoly numerator;
  BiPoly denominator;

  /// Power-series expansion up to and including the given total degree.
  BiPoly expand(int total_degree) const;
  /// Expansion coefficients in t after setting u = 1.
  std::vector<BigInt> expand_at_u1(int count) const;
};

/// Equality of the underlying rational functions, by cross-multiplication.
bool same_series(const RationalBiSeries& a, const RationalBiSeries& b);

/// Hilbert series of a quotient S/B: a sum of terms c * t^deg / (1-t)^pole
/// coming from a Stanley decomposition, plus the normal form
/// h(t) / (1-t)^dim.
struct HilbertSeries {
  struct Term {
    BigInt coeff;
    int degree;
    int pole;
    bool operator==(const Term&) const = default;
  };
  std::vector<Term> terms; // ordered by (degree, descending pole)
  UniPoly h;
  int dim = 0;

  /// Coefficients of the series expansion for t^0..t^cutoff.
  std::vector<BigInt> values(int cutoff) const;
};

} // namespace borel
