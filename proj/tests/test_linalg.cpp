#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgq/linalg.hpp"
#include "pgq/rational.hpp"
#include "pgq/sampling.hpp"
#include "test_util.hpp"

using namespace pgq;
using namespace testutil;

TEST_CASE("rational arithmetic stays canonical") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(-4, -2).str() == "2");
  CHECK((Rational(2, 3) * Rational(3, 2)).str() == "1");
  CHECK((Rational(1) / Rational(7)).str() == "1/7");
  CHECK(Rational(0).is_zero());
  CHECK(Rational(5, 7).sign() == 1);
  CHECK(Rational(-5, 7).sign() == -1);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parsing accepts p and p/q and rejects junk") {
  CHECK(Rational::parse("5")->str() == "5");
  CHECK(Rational::parse("-5")->str() == "-5");
  CHECK(Rational::parse("3/4")->str() == "3/4");
  CHECK(Rational::parse("-6/8")->str() == "-3/4");
  CHECK(Rational::parse("+2/4")->str() == "1/2");
  CHECK(Rational::parse("0")->is_zero());
  CHECK_FALSE(Rational::parse(""));
  CHECK_FALSE(Rational::parse("1.5"));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("1/"));
  CHECK_FALSE(Rational::parse("/2"));
  CHECK_FALSE(Rational::parse("1/2/3"));
  CHECK_FALSE(Rational::parse("x"));
  CHECK_FALSE(Rational::parse("1/-2"));
}

TEST_CASE("rref on the stated examples") {
  CHECK(rref(mat({{2, 4}, {1, 2}})) == mat({{1, 2}, {0, 0}}));
  CHECK(rref(Matrix::identity(4)) == Matrix::identity(4));
  CHECK(rref(mat({{0, 1}, {1, 0}})) == Matrix::identity(2));
}

TEST_CASE("rref is idempotent on random matrices") {
  Sampler s(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + static_cast<std::size_t>(s.pick(0, 5));
    std::size_t c = 1 + static_cast<std::size_t>(s.pick(0, 5));
    Matrix m = random_matrix(s, r, c);
    Matrix once = rref(m);
    CHECK(rref(once) == once);
  }
}

TEST_CASE("nullspace dimensions and membership") {
  CHECK(nullspace(Matrix(2, 3)).dim() == 3);
  CHECK(nullspace(Matrix::identity(4)).dim() == 0);

  Matrix m = mat({{1, 1, 0}});
  Subspace ns = nullspace(m);
  CHECK(ns.dim() == 2);
  CHECK(ns.contains(vec({-1, 1, 0})));
  CHECK(ns.contains(vec({0, 0, 1})));
  for (const Vec& v : ns.basis()) CHECK(vec_is_zero(m.apply(v)));
}

TEST_CASE("nullspace basis solves m v = 0 and dim + rank = cols") {
  Sampler s(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + static_cast<std::size_t>(s.pick(0, 5));
    std::size_t c = 1 + static_cast<std::size_t>(s.pick(0, 5));
    Matrix m = random_matrix(s, r, c);
    Subspace ns = nullspace(m);
    CHECK(ns.dim() + rank(m) == c);
    for (const Vec& v : ns.basis()) CHECK(vec_is_zero(m.apply(v)));
  }
}

TEST_CASE("solve returns exact solutions or reports inconsistency") {
  Vec b = vec({3, -2, 7, 5});
  auto x = solve(Matrix::identity(4), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  auto under = solve(mat({{1, 1}}), vec({2}));
  REQUIRE(under.has_value());
  CHECK((*under)[0] + (*under)[1] == Rational(2));

  CHECK_FALSE(solve(mat({{1}, {1}}), vec({1, 2})).has_value());
}

TEST_CASE("solve satisfies m x = b on random consistent systems") {
  Sampler s(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + static_cast<std::size_t>(s.pick(0, 4));
    std::size_t c = 1 + static_cast<std::size_t>(s.pick(0, 4));
    Matrix m = random_matrix(s, r, c);
    Vec x0(c);
    for (std::size_t i = 0; i < c; ++i) x0[i] = Rational(s.pick(-3, 3));
    Vec b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("subspace equality ignores the choice of spanning set") {
  CHECK(Subspace::span(2, {vec({1, 0})}) == Subspace::span(2, {vec({2, 0})}));
  CHECK(Subspace::span(2, {vec({1, 0}), vec({0, 1})}).contains(vec({3, 5})));
  CHECK(Subspace::span(2, {vec({1, 0}), vec({0, 1})}).intersect(Subspace::span(2, {vec({1, 1})})) ==
        Subspace::span(2, {vec({1, 1})}));
}

TEST_CASE("canonical bases of equal spaces are identical after random row mixing") {
  Sampler s(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 4 + static_cast<std::size_t>(s.pick(0, 3));
    std::vector<Vec> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(random_matrix(s, 1, n).row(0));
    Subspace a = Subspace::span(n, gens);

    // same space from random integer combinations of the generators
    std::vector<Vec> mixed;
    for (int g = 0; g < 5; ++g) {
      Vec w(n);
      for (const Vec& v : gens) w = vec_add(w, vec_scale(Rational(s.pick(-3, 3)), v));
      mixed.push_back(w);
    }
    Subspace b = Subspace::span(n, mixed);
    CHECK(a.contains(b));
    if (a.dim() == b.dim()) {
      CHECK(a == b);
      CHECK(a.basis() == b.basis());
    }
  }
}

TEST_CASE("subspace intersection is contained in both operands") {
  Sampler s(19);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 5;
    std::vector<Vec> ga, gb;
    for (int g = 0; g < 3; ++g) ga.push_back(random_matrix(s, 1, n).row(0));
    for (int g = 0; g < 3; ++g) gb.push_back(random_matrix(s, 1, n).row(0));
    Subspace a = Subspace::span(n, ga), b = Subspace::span(n, gb);
    Subspace both = a.intersect(b);
    CHECK(a.contains(both));
    CHECK(b.contains(both));
    CHECK(both.dim() >= (a.dim() + b.dim() >= n ? a.dim() + b.dim() - n : 0));
  }
}

TEST_CASE("ambient dimension mismatches are contract violations") {
  Subspace a = Subspace::full(3), b = Subspace::full(4);
  CHECK_THROWS_AS((void)a.contains(b), std::invalid_argument);
  CHECK_THROWS_AS((void)a.intersect(b), std::invalid_argument);
  CHECK_THROWS_AS((void)a.contains(vec({1, 0})), std::invalid_argument);
}

TEST_CASE("zero and full subspaces") {
  CHECK(Subspace::zero(4).dim() == 0);
  CHECK(Subspace::full(4).dim() == 4);
  CHECK(Subspace::full(4).contains(vec({9, -3, 1, 7})));
  CHECK(Subspace::span(3, {}) == Subspace::zero(3));
}
