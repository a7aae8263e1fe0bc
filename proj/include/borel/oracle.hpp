#pragma once

#include <vector>

#include "borel/bigint.hpp"
#include "borel/enumerate.hpp"
#include "borel/monomial.hpp"

namespace borel {
namespace oracle {

/// Brute-force reference implementations used only by tests and the CLI
/// --verify flag.  Everything here works on expanded generator lists and
/// dense monomial scans; none of it shares an algorithm with the fast path.
struct NaiveMonomialIdeal {
  int nvars;
  std::vector<Monomial> gens; // arbitrary monomial generators

  bool operator==(const NaiveMonomialIdeal& other) const;
};

/// True iff some generator divides mu.
bool naive_membership(const NaiveMonomialIdeal& ideal, const Monomial& mu);

/// Drop generators divisible by another generator; sort descending lex.
NaiveMonomialIdeal minimized(NaiveMonomialIdeal ideal);

/// Minimal monomial generators of the smallest Borel ideal containing T:
/// breadth-first closure under single Borel moves and multiplication by
/// variables up to degree dmax, then divisibility minimization.
NaiveMonomialIdeal naive_borel_closure(const std::vector<Monomial>& t, int nvars, int dmax);

/// Squarefree variant: scan all squarefree monomials of matching degree for
/// Borel-order predecessors of some element of T.
NaiveMonomialIdeal naive_sq_borel_closure(const std::vector<Monomial>& t, int nvars);

/// Ass(S/B) for the Borel ideal with the given expanded generators: scan
/// every monomial of degree <= dmax outside the ideal and test whether its
/// annihilator is (x_1..x_p) by direct membership probes.
std::vector<int> naive_ass(const NaiveMonomialIdeal& expanded, int dmax);

/// Number of degree-t monomials outside the ideal.
BigInt naive_std_count(const NaiveMonomialIdeal& ideal, int t, Exec exec = Exec::parallel);

enum class IdealOp { intersect, product, colon };

/// Reference intersection (pairwise lcm), product (pairwise product), and
/// colon by a variable (divide when divisible).
NaiveMonomialIdeal naive_ideal_op(const NaiveMonomialIdeal& a, const NaiveMonomialIdeal& b,
                                  IdealOp op, int colon_var_index = 0);

/// Alexander dual of a squarefree ideal by minimal vertex covers: supports
/// of the dual generators are the inclusion-minimal sets hitting every
/// generator's support.
NaiveMonomialIdeal naive_alexander_dual(const NaiveMonomialIdeal& sqf);

} // namespace oracle
} // namespace borel
