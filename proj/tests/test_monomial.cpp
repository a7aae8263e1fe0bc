#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "borel/monomial.hpp"
#include "corpus.hpp"

using namespace borel;

namespace {

Monomial mono(int nvars, std::vector<int> indices) {
  return Monomial::from_factorization(nvars, indices);
}

} // namespace

// ======== factorization ========

TEST_CASE("factorization of a^2cd^3ef") {
  Monomial m(6, {2, 0, 1, 3, 1, 1});
  CHECK(m.factorization() == std::vector<int>{1, 1, 3, 4, 4, 4, 5, 6});
  // seventh position holds variable 5
  CHECK(m.factorization()[6] == 5);
  CHECK(m.degree() == 8);
}

TEST_CASE("factorization of 1 is empty") {
  CHECK(Monomial(3).factorization().empty());
  CHECK(Monomial(3).is_unit());
}

TEST_CASE("factorization of x2^3") {
  Monomial m(3, {0, 3, 0});
  CHECK(m.factorization() == std::vector<int>{2, 2, 2});
}

// ======== extremes ========

TEST_CASE("extremes") {
  Monomial m(6, {2, 0, 1, 3, 1, 1});
  auto e = extremes(m);
  CHECK(e.min == 1);
  CHECK(e.max == 6);
  CHECK(e.degree == 8);

  auto x3 = extremes(Monomial::variable(3, 3));
  CHECK(x3.min == 3);
  CHECK(x3.max == 3);
  CHECK(x3.degree == 1);

  auto ade = extremes(mono(5, {1, 4, 5}));
  CHECK(ade.min == 1);
  CHECK(ade.max == 5);
  CHECK(ade.degree == 3);

  CHECK_THROWS_AS(extremes(Monomial(4)), domain_error);
}

// ======== Borel order ========

TEST_CASE("precedes examples") {
  Monomial a2 = mono(2, {1, 1}), ab = mono(2, {1, 2}), b2 = mono(2, {2, 2});
  Monomial a = mono(2, {1}), a3 = mono(2, {1, 1, 1});
  CHECK(borel_precedes(a2, b2));
  CHECK(borel_precedes(ab, b2));
  CHECK(borel_precedes(a3, b2));
  CHECK_FALSE(borel_precedes(a, b2));
  CHECK_FALSE(borel_precedes(b2, a));
  CHECK(borel_precedes(b2, b2));
}

TEST_CASE("precedes is a partial order (exhaustive, deg <= 5, n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    auto all = testing::all_monomials_upto(n, 5);
    for (const Monomial& m : all) CHECK(borel_precedes(m, m));
    for (const Monomial& m1 : all) {
      for (const Monomial& m2 : all) {
        if (borel_precedes(m1, m2) && borel_precedes(m2, m1)) CHECK(m1 == m2);
        // divisibility implies precedence
        if (m2.divides(m1)) CHECK(borel_precedes(m1, m2));
        // precedence implies ungraded-lex largeness
        if (borel_precedes(m1, m2)) CHECK(lex_compare(m1, m2) >= 0);
        if (!borel_precedes(m1, m2)) continue;
        for (const Monomial& m3 : all)
          if (borel_precedes(m2, m3)) CHECK(borel_precedes(m1, m3));
      }
    }
  }
}

// ======== truncation ========

TEST_CASE("monomial truncation") {
  Monomial m(7, {2, 0, 1, 3, 0, 1, 1}); // x1^2 x3 x4^3 x6 x7
  CHECK(m.truncated(5) == Monomial(7, {2, 0, 1, 2, 0, 0, 0}));
  CHECK(m.truncated(8) == m);
  CHECK(m.truncated(100) == m);
  CHECK(mono(5, {1, 4, 5}).truncated(2) == mono(5, {1, 4}));
  CHECK(m.truncated(0) == Monomial(7));
}

// ======== meet ========

TEST_CASE("meet examples") {
  CHECK(meet(mono(3, {1}), mono(3, {3, 3, 3})) == mono(3, {1, 3, 3}));        // a, c^3 -> ac^2
  CHECK(meet(mono(3, {2, 2}), mono(3, {3, 3, 3})) == mono(3, {2, 2, 3}));     // b^2, c^3 -> b^2c
  CHECK(meet(mono(5, {1, 4, 5}), mono(5, {3, 3, 3, 3})) == mono(5, {1, 3, 3, 3})); // ade, c^4 -> ac^3
  Monomial m = mono(4, {2, 3, 3});
  CHECK(meet(m, m) == m);
}

TEST_CASE("meet is the degree-bounded greatest lower bound (exhaustive)") {
  for (int n = 1; n <= 4; ++n) {
    auto all = testing::all_monomials_upto(n, 4);
    for (const Monomial& u : all) {
      if (u.is_unit()) continue;
      for (const Monomial& v : all) {
        if (v.is_unit()) continue;
        Monomial w = meet(u, v);
        CHECK(w.degree() == std::max(u.degree(), v.degree()));
        CHECK(borel_precedes(w, u));
        CHECK(borel_precedes(w, v));
        for (const Monomial& z : testing::all_monomials(n, w.degree()))
          if (borel_precedes(z, u) && borel_precedes(z, v)) CHECK(borel_precedes(z, w));
      }
    }
  }
}

// ======== tau ========

TEST_CASE("tau examples") {
  CHECK(tau(mono(4, {1, 2, 3, 4})) == mono(4, {1, 1, 1, 1}));
  CHECK(tau(mono(4, {2, 3, 4})) == mono(4, {2, 2, 2}));
  CHECK(tau(mono(5, {1, 4, 5})) == mono(5, {1, 3, 3})); // ade -> ac^2
  CHECK_THROWS_AS(tau(mono(3, {1, 1})), domain_error);
}

TEST_CASE("tau_inverse examples") {
  CHECK(tau_inverse(mono(4, {1, 1, 1, 1})) == mono(4, {1, 2, 3, 4}));
  CHECK(tau_inverse(mono(4, {2, 2, 2})) == mono(4, {2, 3, 4}));
  CHECK(tau_inverse(mono(5, {1, 3, 3})) == mono(5, {1, 4, 5}));
  CHECK_THROWS_AS(tau_inverse(mono(3, {2, 3, 3})), domain_error); // 3+2 > 3
}

TEST_CASE("tau is a degree-preserving bijection (exhaustive, d <= 4, n <= 8)") {
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d <= std::min(4, n); ++d) {
      std::vector<Monomial> images;
      for (const Monomial& m : testing::all_monomials(n, d)) {
        if (!m.is_squarefree()) continue;
        Monomial t = tau(m);
        CHECK(t.degree() == d);
        CHECK(t.max_index() <= n - d + 1);
        CHECK(tau_inverse(t) == m);
        images.push_back(t);
      }
      // image set is exactly the monomials of degree d with max <= n-d+1
      size_t expected = 0;
      for (const Monomial& m : testing::all_monomials(n, d))
        if (m.max_index() <= n - d + 1) ++expected;
      CHECK(images.size() == expected);
      for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j) CHECK_FALSE(images[i] == images[j]);
    }
  }
}

// ======== round trip ========

TEST_CASE("exponents <-> factorization round trip (deg <= 12, n <= 8)") {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 0; d <= 12; ++d) {
      for (const Monomial& m : testing::all_monomials(n, d)) {
        REQUIRE(Monomial::from_factorization(n, m.factorization()) == m);
      }
    }
  }
}

// ======== arithmetic edge cases ========

TEST_CASE("division and support") {
  Monomial m = mono(4, {1, 2, 2, 4});
  CHECK(m.support() == std::vector<int>{1, 2, 4});
  CHECK(m.divided_by_var(2) == mono(4, {1, 2, 4}));
  CHECK_THROWS_AS(m.divided_by_var(3), domain_error);
  CHECK(m.divided_by(mono(4, {2, 4})) == mono(4, {1, 2}));
  CHECK_THROWS_AS(m.divided_by(mono(4, {3})), domain_error);
  CHECK(lcm(mono(4, {1, 1}), mono(4, {1, 2})) == mono(4, {1, 1, 2}));
  CHECK(gcd(mono(4, {1, 1}), mono(4, {1, 2})) == mono(4, {1}));
}
