#pragma once

#include <map>
#include <utility>
#include <vector>

#include "borel/ideal.hpp"
#include "borel/poly.hpp"

namespace borel {

/// Graded Betti numbers b_{i,j} (homological index i, internal degree j) of
/// either the ideal B or the quotient S/B.
class BettiTable {
public:
  enum class Kind { ideal, quotient };

  explicit BettiTable(Kind kind = Kind::ideal) : kind_(kind) {}

  Kind kind() const { return kind_; }
  void add(int i, int j, BigInt count);
  const BigInt& entry(int i, int j) const;
  const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }

  /// b_{0,0}(S/B) = 1 and b_{i,j}(S/B) = b_{i-1,j}(B) for i >= 1.
  BettiTable to_quotient() const;
  BettiTable to_ideal() const;

  /// Total Betti numbers b_0, b_1, ... (index 0..max homological index).
  std::vector<BigInt> totals() const;
  int max_homological_index() const;
  /// Largest j - i over nonzero entries (the regularity row).
  int max_row() const;

  BettiTable operator+(const BettiTable& other) const;
  BettiTable operator-(const BettiTable& other) const;
  bool operator==(const BettiTable& other) const {
    return kind_ == other.kind_ && entries_ == other.entries_;
  }

  /// Alternating sum over i of (-1)^i b_{i,j} t^j (the K-polynomial
  /// numerator when applied to a quotient table).
  UniPoly alternating_sum() const;

private:
  Kind kind_;
  std::map<std::pair<int, int>, BigInt> entries_;
};

/// Graded Betti numbers from the Eliahou-Kervaire resolution: each minimal
/// generator m contributes C(max(m)-1, i) in degree deg(m)+i; squarefree
/// generators contribute C(max(m)-deg(m), i).
BettiTable betti_ek(const BorelIdeal& b);

/// Betti numbers of an ideal generated in a single degree from its w-vector:
/// b_{i,i+d} = sum_j C(j-1, i) w_j (Borel), or C(j-d, i) (squarefree).
BettiTable betti_w(const WTable& w, bool squarefree = false);

/// Graded Betti numbers by inclusion-exclusion over Borel generators:
/// with m_r of largest degree and B' the ideal of the remaining generators,
/// b(B) = b(B') + b(Borel(m_r)) - b(Borel(m_r) meet B'), principal cases
/// evaluated from Catalan diagrams.  Never enumerates the generators of B.
BettiTable betti_ie(const BorelIdeal& b);

/// Graded Poincare series of B: coefficient of t^i u^j is b_{i,j}(B).
BiPoly poincare_ideal(const BorelIdeal& b);

/// Poincare series of the residue field over S/B for B generated in a
/// single degree d >= 2 (the quotient is Golod).
RationalBiSeries poincare_residue_field(const BorelIdeal& b);

/// Poincare series of a squarefree Borel ideal over the exterior algebra
/// (equivalently over S/(x_1^2, ..., x_n^2)).
RationalBiSeries poincare_exterior(const BorelIdeal& b);

/// Total Betti number b_i of Borel(x_1 x_2 ... x_n) in closed form:
/// C(2n, n-i-1) * C(n+i-1, i) / n.
BigInt closed_form_bi(int n, int i);

/// Rows 1..ell of the pointed pseudo-triangulation triangle: a(l, i) for
/// 0 <= i <= l counts pointed pseudo-triangulations of the single chain on
/// l+3 points with apex degree i.  Each cell is computed three ways (the
/// recursion a(l,i) = C(l+1,i) C_l - a(l-1,i-2), the Betti identity
/// a(l,i) = b_{l-i}(Borel(x_1...x_{l+1})), and the closed form); any
/// disagreement throws internal_error.
std::vector<std::vector<BigInt>> ppt_numbers(int ell);

} // namespace borel
