#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "borel/bigint.hpp"
#include "borel/monomial.hpp"

namespace borel {

/// Counts of minimal monomial generators keyed by (degree, max variable
/// index).
class WTable {
public:
  void add(int degree, int max_index, BigInt count);
  /// w_i^d: generators of degree d with max index i.
  const BigInt& w(int degree, int max_index) const;
  /// w_{<=i}^d: running sum over max indices 1..i.
  BigInt w_le(int degree, int max_index) const;
  /// Total number of generators of the given degree.
  BigInt degree_total(int degree) const;
  std::vector<int> degrees() const;
  /// Largest max-index with a nonzero count at the given degree (0 if none).
  int max_index(int degree) const;

  const std::map<std::pair<int, int>, BigInt>& entries() const { return entries_; }
  bool operator==(const WTable& other) const { return entries_ == other.entries_; }

private:
  std::map<std::pair<int, int>, BigInt> entries_;
};

/// A Borel (strongly stable) or squarefree Borel monomial ideal, represented
/// by its unique minimal Borel generators, kept in descending lex order.
///
/// The zero ideal has no Borel generators; the unit ideal has the single
/// Borel generator 1.  Values are immutable; the minimal-generator and
/// w-table caches are shared across copies and populated idempotently.
class BorelIdeal {
public:
  enum class Kind { borel, squarefree };

  /// Smallest (squarefree) Borel ideal containing the given monomials.
  static BorelIdeal borel(std::vector<Monomial> gens, int nvars);
  static BorelIdeal sqfree(std::vector<Monomial> gens, int nvars);
  static BorelIdeal zero(int nvars, Kind kind = Kind::borel);
  static BorelIdeal unit(int nvars, Kind kind = Kind::borel);

  int nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  bool is_squarefree_kind() const { return kind_ == Kind::squarefree; }
  const std::vector<Monomial>& bgens() const { return bgens_; }

  bool is_zero() const { return bgens_.empty(); }
  bool is_unit() const { return !bgens_.empty() && bgens_.front().is_unit(); }
  /// Largest degree of a Borel generator (0 for the zero and unit ideals).
  int max_degree() const;

  bool contains(const Monomial& m) const;

  /// Minimal monomial generators, descending lex.  Cached.
  const std::vector<Monomial>& min_gens() const;
  /// Generator counts by (degree, max index).  Cached.
  const WTable& w_table() const;

  bool operator==(const BorelIdeal& other) const {
    return kind_ == other.kind_ && nvars_ == other.nvars_ && bgens_ == other.bgens_;
  }

private:
  BorelIdeal(Kind kind, int nvars, std::vector<Monomial> bgens);

  Kind kind_;
  int nvars_;
  std::vector<Monomial> bgens_;

  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Monomial>> min_gens;
    std::optional<WTable> w_table;
  };
  std::shared_ptr<Cache> cache_;
};

BorelIdeal sum(const BorelIdeal& a, const BorelIdeal& b);
BorelIdeal intersect(const BorelIdeal& a, const BorelIdeal& b);
/// Product of Borel ideals (not defined for the squarefree kind).
BorelIdeal product(const BorelIdeal& a, const BorelIdeal& b);
/// Colon ideal (B : x_j).
BorelIdeal colon_var(const BorelIdeal& b, int j);
/// Saturation (B : x_j^inf), the fixed point of colon_var.
BorelIdeal saturate_var(const BorelIdeal& b, int j);
/// d-truncation: Borel ideal of the d-truncated Borel generators (d >= 1).
BorelIdeal truncate_ideal(const BorelIdeal& b, int d);

struct CodimPdim {
  int codim;
  int pdim; // of S/B
};

/// Codimension of B and projective dimension of S/B, read off the Borel
/// generators.  Throws for the zero and unit ideals.
CodimPdim codim_pdim(const BorelIdeal& b);

/// Multiplication by the homogeneous maximal ideal: each Borel generator u
/// becomes u*x_n; in the squarefree case u*x_s with s maximal such that x_s
/// does not divide u (the squarefree part of m*B).
BorelIdeal mmul(const BorelIdeal& b);

} // namespace borel
