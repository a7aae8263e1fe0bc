#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "borel/errors.hpp"

namespace borel {

/// A monomial in x_1..x_n, stored as a dense exponent vector.  Variable
/// indices are 1-based throughout.  Degree 0 encodes the monomial 1.
/// Immutable after construction.
class Monomial {
public:
  /// The monomial 1 in n variables.
  explicit Monomial(int nvars);
  Monomial(int nvars, std::vector<int> exponents);

  static Monomial variable(int nvars, int index);
  /// Build from a sorted list of 1-based variable indices (the factorization
  /// x_{i_1}...x_{i_d}).  Throws if the list is unsorted or out of range.
  static Monomial from_factorization(int nvars, std::span<const int> indices);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_unit() const { return degree_ == 0; }
  bool is_squarefree() const;

  /// Exponent of x_i (1-based).
  int exponent(int i) const { return exps_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& exponents() const { return exps_; }

  /// Sorted index list i_1 <= ... <= i_d; empty for 1.
  std::vector<int> factorization() const;
  /// Distinct variable indices, ascending.
  std::vector<int> support() const;

  /// Smallest/largest index of a variable dividing the monomial; 0 for 1.
  int min_index() const;
  int max_index() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Exact quotient this / other; throws domain_error unless other divides.
  Monomial divided_by(const Monomial& other) const;
  Monomial times_var(int i) const;
  /// Quotient by x_i; throws if x_i does not divide.
  Monomial divided_by_var(int i) const;

  /// Product of the first min(d, degree) factorization variables.
  Monomial truncated(int d) const;

  /// Same monomial viewed in a wider ring (nvars' >= max_index()).
  Monomial with_nvars(int nvars) const;

  bool operator==(const Monomial& other) const {
    return nvars_ == other.nvars_ && exps_ == other.exps_;
  }

private:
  int nvars_;
  int degree_;
  std::vector<int> exps_;
};

struct Extremes {
  int min;
  int max;
  int degree;
};

/// (min index, max index, degree); throws domain_error for the monomial 1.
Extremes extremes(const Monomial& m);

/// True iff m1 precedes m2 in the Borel order: deg m1 >= deg m2 and the j-th
/// factorization index of m1 is <= that of m2 for all j <= deg m2.
bool borel_precedes(const Monomial& m1, const Monomial& m2);

/// Meet in the Borel order: entrywise min of the factorizations, the longer
/// argument's tail kept as-is.  Degree = max of the two degrees.
Monomial meet(const Monomial& u, const Monomial& v);

/// x_{i_1} x_{i_2-1} ... x_{i_d-d+1}; bijection from squarefree monomials
/// onto all monomials.  Throws on non-squarefree input.
Monomial tau(const Monomial& m);
/// Inverse of tau: j-th factor becomes i_j + j - 1.  Throws when an output
/// index exceeds the ambient nvars.
Monomial tau_inverse(const Monomial& m);

/// Ungraded lexicographic comparison with x_1 > x_2 > ...; returns <0, 0, >0
/// like strcmp, where >0 means a >_lex b.
int lex_compare(const Monomial& a, const Monomial& b);

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) > 0;
  }
};

/// Multiset union / intersection of the variable factors.
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

} // namespace borel
