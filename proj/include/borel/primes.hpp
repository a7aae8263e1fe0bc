#pragma once

#include <vector>

#include "borel/ideal.hpp"
#include "borel/monomial.hpp"

namespace borel {

/// Associated primes of quotients by Borel ideals are always of the form
/// P_p = (x_1, ..., x_p); results are sorted lists of the p values.

/// True iff the annihilator of mu in S/B is exactly (x_1, ..., x_p): mu is
/// outside B, mu*x_p falls in B, and no power of x_{p+1} pushes mu into B
/// (testing the max-generator-degree power suffices).
bool is_p_socle(const BorelIdeal& b, const Monomial& mu, int p);

/// Ass(S/B) via socle tests on quotients of Borel generators.
std::vector<int> ass_socle(const BorelIdeal& b);

/// Ass(S/B) via Borel generators of the successive truncations, no socle
/// computations: every degree-i Borel generator m of the i-truncation
/// contributes P_{max(m)}.
std::vector<int> ass_trunc(const BorelIdeal& b);

/// The i-truncations of B for i = 1..max_degree (index 0 holds i=1).
std::vector<BorelIdeal> truncation_trace(const BorelIdeal& b);

/// Ass(S/Borel(m)) = { P_p : x_p divides m }.
std::vector<int> ass_principal(const Monomial& m);

/// Principal Borel ideal whose quotient has exactly the given associated
/// primes: Borel of the product of the x_p.
BorelIdeal principal_from_primes(const std::vector<int>& ps, int nvars);

/// Alexander dual of a principal squarefree Borel ideal sfBorel(m),
/// m = x_{i_1}...x_{i_s}: generated by the consecutive runs x_j...x_{i_j},
/// keeping only the non-redundant ones (those with i_j < i_{j+1} - 1, plus
/// the last).
BorelIdeal alexander_dual_principal(const Monomial& m, int nvars);

/// Alexander dual of a squarefree Borel ideal: intersection of the duals of
/// the principal pieces.
BorelIdeal alexander_dual(const BorelIdeal& b);

} // namespace borel
